// Copyright 2026 The PORAC Filter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PORAC_OBSERVABLES_HPP
#define PORAC_OBSERVABLES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "porac/matrix.hpp"

namespace porac {

/// An n-bit input string. Bit y (1-based, as in x_y) is stored at index y-1.
class BitString {
   public:
    BitString() = default;
    BitString(int length, std::uint64_t bits) : length_(length), bits_(bits) {}
    /// Parses a string of '0'/'1' characters, leftmost character is x_1.
    static BitString parse(const std::string &text);

    int length() const { return length_; }
    /// x_y for 1 <= y <= length.
    int bit(int y) const { return static_cast<int>((bits_ >> (y - 1)) & 1U); }
    int weight() const;
    /// s.x mod 2.
    int dot(const BitString &other) const;
    BitString complement() const;
    std::uint64_t raw() const { return bits_; }
    std::string to_string() const;

    bool operator==(const BitString &) const = default;

   private:
    int length_ = 0;
    std::uint64_t bits_ = 0;
};

/// Bob's n mutually anti-commuting dichotomic observables B_{n,1}..B_{n,n}.
struct ObservableSet {
    int n = 0;
    std::size_t dim = 0;
    std::vector<ComplexMatrix> observables;
};

/// Alice's 2^{n-1} dichotomic observables, one per labelled input string.
struct AliceSet {
    int n = 0;
    std::size_t dim = 0;
    std::vector<BitString> inputs;
    std::vector<ComplexMatrix> observables;
};

/// The 2^{n-1} strings with x_1 = 0, ordered lexicographically in x_2..x_n.
/// Each complementary pair {x, not x} is represented once. Throws for n < 2.
std::vector<BitString> enumerate_inputs(int n);

/// Side dimension 2^{floor(n/2)} shared by Alice's and Bob's observables.
std::size_t local_dim(int n);

/// Recursive anti-commuting family:
///   n=2: (X, Y)   n=3: (X, Y, Z)
///   even n: X (x) B_{n-1,y} for y < n, then Y (x) I
///   odd n:  X (x) B_{n-2,y} for y < n-1, then Y (x) I, Z (x) I
ObservableSet bob_observables(int n);

/// A_{n,i} = (1/sqrt n) sum_y (-1)^{x^i_y} conj(B_{n,y}).
///
/// The entrywise conjugate makes <A (x) B> on sum_k |kk>/sqrt d equal to
/// Tr[B^dagger B]/d, so each Bob correlator contributes with a positive sign.
AliceSet alice_observables(int n, const ObservableSet &bob);

struct AnticommutationCheck {
    bool ok = false;
    double max_violation = 0.0;
};

/// Checks B_y B_y' + B_y' B_y = 0 for y != y' and B_y^2 = I.
AnticommutationCheck check_anticommuting(const ObservableSet &set, double tol = kDefaultTol);

struct ParityCheck {
    bool ok = false;
    double max_violation = 0.0;
    BitString worst_parity;
};

/// Parity-obliviousness of Alice's measurements.
///
/// For every s with Hamming weight >= 2 evaluates
///   sum_{x in {0,1}^n} (-1)^{s.x} E_x,   E_x = (I + A_x) / 2,
/// where A_{not x} = -A_x extends the labelled set to all 2^n strings (the two
/// outcomes of one measurement). On odd-weight s this is twice the labelled
/// sum sum_i (-1)^{s.x^i} A_{n,i}; on even-weight s the identity and
/// complementary terms cancel.
ParityCheck check_parity_oblivious(const AliceSet &alice, double tol = kDefaultTol);

/// sum_i (-1)^{x^i_y} A_{n,i} for the 1-based setting y.
ComplexMatrix alice_marginal_sum(const AliceSet &alice, int y);

}  // namespace porac

#endif  // PORAC_OBSERVABLES_HPP
