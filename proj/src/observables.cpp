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

#include "porac/observables.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace porac {

namespace {

constexpr int kMaxBits = 62;

void require_bits(int n, const char *what) {
    if (n < 2) {
        throw std::invalid_argument(std::string(what) + ": n must be >= 2, got " + std::to_string(n));
    }
    if (n > kMaxBits) {
        throw std::invalid_argument(std::string(what) + ": n too large");
    }
}

int sign_of(int bit) { return bit ? -1 : 1; }

}  // namespace

BitString BitString::parse(const std::string &text) {
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] == '1') {
            bits |= std::uint64_t{1} << k;
        } else if (text[k] != '0') {
            throw std::invalid_argument("BitString::parse: unexpected character in '" + text + "'");
        }
    }
    return {static_cast<int>(text.size()), bits};
}

int BitString::weight() const { return std::popcount(bits_); }

int BitString::dot(const BitString &other) const { return std::popcount(bits_ & other.bits_) & 1; }

BitString BitString::complement() const {
    const std::uint64_t mask = length_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length_) - 1;
    return {length_, ~bits_ & mask};
}

std::string BitString::to_string() const {
    std::string out(static_cast<std::size_t>(length_), '0');
    for (int y = 1; y <= length_; ++y) {
        if (bit(y)) {
            out[static_cast<std::size_t>(y - 1)] = '1';
        }
    }
    return out;
}

std::vector<BitString> enumerate_inputs(int n) {
    require_bits(n, "enumerate_inputs");
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    std::vector<BitString> out;
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        // x_2 is the most significant of the trailing n-1 bits.
        std::uint64_t bits = 0;
        for (int y = 2; y <= n; ++y) {
            if ((k >> (n - y)) & 1U) {
                bits |= std::uint64_t{1} << (y - 1);
            }
        }
        out.emplace_back(n, bits);
    }
    return out;
}

std::size_t local_dim(int n) {
    require_bits(n, "local_dim");
    return std::size_t{1} << (n / 2);
}

ObservableSet bob_observables(int n) {
    require_bits(n, "bob_observables");
    ObservableSet set;
    set.n = n;
    if (n == 2) {
        set.observables = {pauli::x(), pauli::y()};
    } else if (n == 3) {
        set.observables = {pauli::x(), pauli::y(), pauli::z()};
    } else {
        const ObservableSet inner = bob_observables(n % 2 == 0 ? n - 1 : n - 2);
        const ComplexMatrix id = ComplexMatrix::identity(inner.dim);
        for (const auto &b : inner.observables) {
            set.observables.push_back(kron(pauli::x(), b));
        }
        set.observables.push_back(kron(pauli::y(), id));
        if (n % 2 == 1) {
            set.observables.push_back(kron(pauli::z(), id));
        }
    }
    set.dim = set.observables.front().dim();
    return set;
}

AliceSet alice_observables(int n, const ObservableSet &bob) {
    if (bob.n != n || static_cast<int>(bob.observables.size()) != n) {
        throw std::invalid_argument("alice_observables: Bob's set does not match n");
    }
    AliceSet alice;
    alice.n = n;
    alice.dim = bob.dim;
    alice.inputs = enumerate_inputs(n);

    std::vector<ComplexMatrix> conjugated;
    conjugated.reserve(bob.observables.size());
    for (const auto &b : bob.observables) {
        conjugated.push_back(conj_entries(b));
    }

    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    alice.observables.reserve(alice.inputs.size());
    for (const auto &x : alice.inputs) {
        ComplexMatrix a(bob.dim);
        for (int y = 1; y <= n; ++y) {
            a += Complex(sign_of(x.bit(y)) * scale) * conjugated[static_cast<std::size_t>(y - 1)];
        }
        alice.observables.push_back(std::move(a));
    }
    return alice;
}

AnticommutationCheck check_anticommuting(const ObservableSet &set, double tol) {
    AnticommutationCheck result;
    const auto &obs = set.observables;
    for (std::size_t a = 0; a < obs.size(); ++a) {
        const ComplexMatrix id = ComplexMatrix::identity(obs[a].dim());
        result.max_violation = std::max(result.max_violation, max_abs_diff(matmul(obs[a], obs[a]), id));
        for (std::size_t b = a + 1; b < obs.size(); ++b) {
            const ComplexMatrix anti = matmul(obs[a], obs[b]) + matmul(obs[b], obs[a]);
            result.max_violation = std::max(result.max_violation, max_abs(anti));
        }
    }
    result.ok = result.max_violation <= tol;
    return result;
}

ParityCheck check_parity_oblivious(const AliceSet &alice, double tol) {
    ParityCheck result;
    const int n = alice.n;
    const std::uint64_t strings = std::uint64_t{1} << n;
    const ComplexMatrix id = ComplexMatrix::identity(alice.dim);
    for (std::uint64_t raw = 0; raw < strings; ++raw) {
        const BitString s(n, raw);
        if (s.weight() < 2) {
            continue;
        }
        // Each labelled measurement contributes both outcomes:
        // (-1)^{s.x} (I + A)/2 + (-1)^{s.xbar} (I - A)/2.
        ComplexMatrix total(alice.dim);
        double identity_weight = 0.0;
        for (std::size_t i = 0; i < alice.inputs.size(); ++i) {
            const double plus = sign_of(s.dot(alice.inputs[i]));
            const double minus = sign_of(s.dot(alice.inputs[i].complement()));
            identity_weight += 0.5 * (plus + minus);
            const double a_weight = 0.5 * (plus - minus);
            if (a_weight != 0.0) {
                total += Complex(a_weight) * alice.observables[i];
            }
        }
        total += Complex(identity_weight) * id;
        const double violation = max_abs(total);
        if (violation > result.max_violation || result.worst_parity.length() == 0) {
            result.max_violation = std::max(result.max_violation, violation);
            result.worst_parity = s;
        }
    }
    result.ok = result.max_violation <= tol;
    return result;
}

ComplexMatrix alice_marginal_sum(const AliceSet &alice, int y) {
    if (y < 1 || y > alice.n) {
        throw std::invalid_argument("alice_marginal_sum: setting out of range");
    }
    ComplexMatrix total(alice.dim);
    for (std::size_t i = 0; i < alice.inputs.size(); ++i) {
        total += Complex(sign_of(alice.inputs[i].bit(y))) * alice.observables[i];
    }
    return total;
}

}  // namespace porac
