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

#include "porac/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "porac/observables.hpp"

namespace porac {

namespace {

void validate_xi(double xi) {
    if (!(xi > 0.0) || xi > 1.0) {
        throw std::invalid_argument("filter parameter xi must lie in (0, 1], got " + std::to_string(xi));
    }
}

}  // namespace

void validate_mixing(double q) {
    if (!(q >= kMinMixing) || q > 1.0) {
        throw std::invalid_argument("mixing parameter q must lie in [1e-6, 1], got " + std::to_string(q));
    }
}

std::vector<Complex> max_entangled(int m) {
    if (m < 1) {
        throw std::invalid_argument("max_entangled: m must be >= 1");
    }
    const std::size_t d = std::size_t{1} << m;
    std::vector<Complex> v(d * d);
    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t k = 0; k < d; ++k) {
        v[k * d + k] = amp;
    }
    return v;
}

NoisyState mixed_state(int n, double q) {
    validate_mixing(q);
    NoisyState state;
    state.n = n;
    state.m = n / 2;
    state.q = q;
    const std::size_t d = local_dim(n);

    state.rho = Complex(q) * outer_projector(max_entangled(state.m));
    // |0><0|_A (x) I_B / d occupies the first d diagonal entries.
    for (std::size_t j = 0; j < d; ++j) {
        state.rho(j, j) += (1.0 - q) / static_cast<double>(d);
    }
    return state;
}

FilterPair make_filters(int n, double q, double xi) {
    validate_mixing(q);
    validate_xi(xi);
    FilterPair f;
    f.dim = local_dim(n);
    f.xi = xi;
    f.delta = xi / std::sqrt(q);
    f.superunit = f.delta > 1.0;
    f.alice = ComplexMatrix::identity(f.dim);
    f.bob = ComplexMatrix::identity(f.dim);
    f.alice(0, 0) = xi;
    f.bob(0, 0) = f.delta;
    return f;
}

FilteredState apply_filters(const NoisyState &state, const FilterPair &filters) {
    const ComplexMatrix local = kron(filters.alice, filters.bob);
    if (local.dim() != state.rho.dim()) {
        throw std::invalid_argument("apply_filters: filter and state dimensions differ");
    }
    FilteredState out;
    out.rho_f = matmul(matmul(local, state.rho), dagger(local));
    out.norm = trace(out.rho_f).real();
    if (!(out.norm > kDefaultTol)) {
        throw std::runtime_error("apply_filters: filtered state has vanishing trace");
    }
    out.rho_f *= 1.0 / out.norm;
    out.superunit = filters.superunit;
    return out;
}

double filtered_norm(int n, double q, double xi) {
    const double d = static_cast<double>(local_dim(n));
    return (q + (1.0 - q) * xi * xi) * (1.0 - 1.0 / d) + std::pow(xi, 4) / (q * d);
}

FilteredState filtered_state_closed_form(int n, double q, double xi) {
    validate_mixing(q);
    validate_xi(xi);
    const std::size_t d = local_dim(n);
    const double sq = std::sqrt(q);
    const double norm = filtered_norm(n, q, xi);
    const double cross = sq * (xi * xi - sq);
    const double corner = (1.0 - q) * std::pow(xi, 4) / q + (xi * xi - sq) * (xi * xi - sq);

    ComplexMatrix rho(d * d);
    // q (sum_j |jj>)(sum_k <kk|)
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            rho(j * d + j, k * d + k) += q;
        }
    }
    // cross terms with |00>
    for (std::size_t j = 0; j < d; ++j) {
        rho(j * d + j, 0) += cross;
        rho(0, j * d + j) += cross;
    }
    // (1-q) xi^2 |0><0| (x) sum_{j>=1} |j><j|
    for (std::size_t j = 1; j < d; ++j) {
        rho(j, j) += (1.0 - q) * xi * xi;
    }
    rho(0, 0) += corner;
    rho *= 1.0 / (norm * static_cast<double>(d));

    FilteredState out;
    out.rho_f = std::move(rho);
    out.norm = norm;
    out.superunit = xi / sq > 1.0;
    return out;
}

double filter_gain_factor(const NoisyState &state, const FilterPair &filters) {
    const double dets = std::abs(determinant(filters.alice)) * std::abs(determinant(filters.bob));
    const ComplexMatrix weights =
        kron(matmul(filters.alice, dagger(filters.alice)), matmul(filters.bob, dagger(filters.bob)));
    if (weights.dim() != state.rho.dim()) {
        throw std::invalid_argument("filter_gain_factor: filter and state dimensions differ");
    }
    const double denom = trace_product(weights, state.rho).real();
    if (!(std::abs(denom) > 0.0)) {
        throw std::runtime_error("filter_gain_factor: zero denominator");
    }
    return dets / denom;
}

}  // namespace porac
