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

#ifndef PORAC_BELL_HPP
#define PORAC_BELL_HPP

#include <optional>
#include <string_view>

#include "porac/matrix.hpp"
#include "porac/observables.hpp"

namespace porac {

enum class Classification { kNonlocal, kContextualOnly, kClassical };

enum class BoundKind { kLocal, kPnc };

std::string_view to_string(Classification c);
std::string_view to_string(BoundKind kind);
/// Accepts "local" or "pnc".
std::optional<BoundKind> parse_bound_kind(std::string_view text);

struct BellReport {
    int n = 0;
    double quantum_value = 0.0;
    double local_bound = 0.0;
    double pnc_bound = 0.0;
    double optimal_value = 0.0;
    double success_probability = 0.0;
    Classification classification = Classification::kClassical;
};

/// n * C(n-1, floor((n-1)/2)).
double local_bound(int n);
/// 2^{n-1}.
double pnc_bound(int n);
/// 2^{n-1} sqrt(n).
double optimal_value(int n);
double bound_value(int n, BoundKind kind);

/// sum_y sum_i (-1)^{x^i_y} Re Tr[rho (A_{n,i} (x) B_{n,y})], each trace
/// evaluated separately.
///
/// Throws std::invalid_argument on dimension mismatch or if rho is not unit
/// trace, and std::runtime_error if any single trace has an imaginary part
/// above kDefaultTol.
double bell_value_brute(const ComplexMatrix &rho, const AliceSet &alice, const ObservableSet &bob);

/// Closed-form value on the filtered color-noise state, delta = xi / sqrt(q).
///
/// With n = 2v (even) every Bob observable is off-diagonal and contributes
///   [q xi delta / 2^{v-1} + q (1 - 2^{1-v})] / N_d,
/// giving 2^{2v-1} sqrt(2v) times that bracket. With n = 2v+1 the last
/// observable (Z (x) I) is diagonal and contributes
///   [(xi^2 delta^2 - (1-q) xi^2) / 2^v + q (1 - 2^{-v})] / N_d
/// instead, the total being scaled by 2^{2v} / sqrt(2v+1).
double bell_value_closed(int n, double q, double xi);

/// 2^{n-1} sqrt(n) q on the unfiltered mixture.
double bell_value_unfiltered(int n, double q);

/// xi -> 0 limit of bell_value_closed at fixed q (independent of q).
double bell_value_vanishing_filter_limit(int n);

/// 1/2 + value / (2^n n).
double success_probability(double bell_value, int n);

/// Strict violations only; a value equal to a bound does not violate it.
Classification classify(int n, double bell_value);

BellReport make_report(int n, double bell_value);

}  // namespace porac

#endif  // PORAC_BELL_HPP
