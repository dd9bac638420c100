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

#ifndef PORAC_STATES_HPP
#define PORAC_STATES_HPP

#include <cstddef>
#include <vector>

#include "porac/matrix.hpp"

namespace porac {

/// Smallest mixing parameter accepted anywhere; delta = xi/sqrt(q) diverges at 0.
inline constexpr double kMinMixing = 1e-6;

/// Color-noise mixture q |phi><phi| + (1-q) |0><0| (x) I/2^m on 2^m (x) 2^m.
struct NoisyState {
    int n = 0;
    int m = 0;
    double q = 0.0;
    ComplexMatrix rho;
};

/// Diagonal local filters F_A = diag(xi, 1, ..., 1), F_B = diag(delta, 1, ..., 1)
/// with delta = xi / sqrt(q).
struct FilterPair {
    std::size_t dim = 0;
    double xi = 0.0;
    double delta = 0.0;
    /// delta > 1, i.e. ||F_B||_inf > 1 and the pair is not a physical filter.
    bool superunit = false;
    ComplexMatrix alice;
    ComplexMatrix bob;
};

struct FilteredState {
    ComplexMatrix rho_f;
    /// Trace of the unnormalised filtered operator (filtering success probability).
    double norm = 0.0;
    bool superunit = false;
};

/// Throws std::invalid_argument unless q is in [kMinMixing, 1].
void validate_mixing(double q);

/// (1/sqrt 2^m) sum_K |K>_A |K>_B as a vector of length 4^m; the composite
/// index of |K>|L> is K * 2^m + L.
std::vector<Complex> max_entangled(int m);

NoisyState mixed_state(int n, double q);

FilterPair make_filters(int n, double q, double xi);

/// Explicit conjugation (F_A (x) F_B) rho (F_A (x) F_B)^dagger followed by
/// normalisation. Throws std::runtime_error if the trace vanishes.
FilteredState apply_filters(const NoisyState &state, const FilterPair &filters);

/// N_d = [q + (1-q) xi^2](1 - 2^{-m}) + xi^4 / (q 2^m).
double filtered_norm(int n, double q, double xi);

/// Assembles the filtered state term by term from its closed form, without
/// performing the conjugation.
FilteredState filtered_state_closed_form(int n, double q, double xi);

/// |det F_A| |det F_B| / Tr[(F_A F_A^dagger (x) F_B F_B^dagger) rho], the
/// factor multiplying the concurrence under filtering.
double filter_gain_factor(const NoisyState &state, const FilterPair &filters);

}  // namespace porac

#endif  // PORAC_STATES_HPP
