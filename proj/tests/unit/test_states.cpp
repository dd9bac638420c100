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

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "porac/states.hpp"

using namespace porac;

namespace {

const double kQGrid[] = {0.2, 0.4, 0.6, 0.8, 1.0};
const double kXiGrid[] = {0.1, 0.3, 0.5, 0.7, 0.9};

// Filtered state assembled entry by entry from F rho F^dagger with diagonal filters.
ComplexMatrix conjugate_by_diagonal(const ComplexMatrix &rho, const FilterPair &f) {
    const std::size_t d = f.dim;
    ComplexMatrix out(rho.dim());
    double tr = 0.0;
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        const double kr = f.alice(r / d, r / d).real() * f.bob(r % d, r % d).real();
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            const double kc = f.alice(c / d, c / d).real() * f.bob(c % d, c % d).real();
            out(r, c) = kr * kc * rho(r, c);
        }
        tr += out(r, r).real();
    }
    out *= Complex(1.0 / tr);
    return out;
}

}  // namespace

TEST_CASE("max_entangled") {
    const auto phi = max_entangled(1);
    REQUIRE(phi.size() == 4);
    CHECK(phi[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(phi[1] == Complex(0.0));
    CHECK(phi[2] == Complex(0.0));
    CHECK(phi[3].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

    const auto phi3 = max_entangled(3);
    REQUIRE(phi3.size() == 64);
    double norm = 0.0;
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(phi3[k * 8 + k].real() == doctest::Approx(1.0 / std::sqrt(8.0)));
    }
    for (const auto &a : phi3) {
        norm += std::norm(a);
    }
    CHECK(norm == doctest::Approx(1.0));
    CHECK_THROWS_AS(max_entangled(0), std::invalid_argument);
}

TEST_CASE("mixed_state") {
    const NoisyState half = mixed_state(2, 0.5);
    CHECK(half.m == 1);
    CHECK(half.rho.dim() == 4);
    // q/2 from the entangled part plus (1 - q)/2 from the colour noise.
    CHECK(half.rho(0, 0).real() == doctest::Approx(0.5));
    CHECK(half.rho(0, 3).real() == doctest::Approx(0.25));
    CHECK(half.rho(1, 1).real() == doctest::Approx(0.25));
    CHECK(half.rho(2, 2).real() == doctest::Approx(0.0));
    CHECK(half.rho(3, 3).real() == doctest::Approx(0.25));

    CHECK(mixed_state(5, 0.3).rho.dim() == 16);
    CHECK(mixed_state(7, 0.3).rho.dim() == 64);
    CHECK(mixed_state(4, 1.0).rho == outer_projector(max_entangled(2)));

    CHECK_THROWS_AS(mixed_state(2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(mixed_state(2, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(mixed_state(2, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(mixed_state(1, 0.5), std::invalid_argument);
    CHECK_NOTHROW(mixed_state(2, kMinMixing));
}

TEST_CASE("make_filters") {
    const FilterPair f = make_filters(4, 0.64, 0.4);
    CHECK(f.dim == 4);
    CHECK(f.delta == doctest::Approx(0.5));
    CHECK_FALSE(f.superunit);
    CHECK(f.alice(0, 0).real() == doctest::Approx(0.4));
    CHECK(f.bob(0, 0).real() == doctest::Approx(0.5));
    for (std::size_t k = 1; k < 4; ++k) {
        CHECK(f.alice(k, k) == Complex(1.0));
        CHECK(f.bob(k, k) == Complex(1.0));
    }

    const FilterPair over = make_filters(2, 0.25, 0.9);
    CHECK(over.delta == doctest::Approx(1.8));
    CHECK(over.superunit);

    const FilterPair unity = make_filters(3, 1.0, 1.0);
    CHECK(unity.alice == ComplexMatrix::identity(2));
    CHECK(unity.bob == ComplexMatrix::identity(2));

    CHECK_THROWS_AS(make_filters(2, 0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_filters(2, 0.5, 1.2), std::invalid_argument);
    CHECK_THROWS_AS(make_filters(2, 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("identity filters leave the state unchanged") {
    for (int n : {2, 3, 4, 6}) {
        const NoisyState state = mixed_state(n, 1.0);
        const FilteredState f = apply_filters(state, make_filters(n, 1.0, 1.0));
        CHECK(max_abs_diff(f.rho_f, state.rho) < 1e-14);
        CHECK(f.norm == doctest::Approx(1.0));
    }
}

TEST_CASE("filtered_norm against the quoted two- and four-dimensional constants") {
    for (double q : kQGrid) {
        for (double xi : kXiGrid) {
            CAPTURE(q);
            CAPTURE(xi);
            CHECK(std::abs(filtered_norm(2, q, xi) - oracle::norm_two(q, xi)) <= 1e-12);
            CHECK(std::abs(filtered_norm(3, q, xi) - oracle::norm_two(q, xi)) <= 1e-12);
            CHECK(std::abs(filtered_norm(4, q, xi) - oracle::norm_four(q, xi)) <= 1e-12);
            CHECK(std::abs(filtered_norm(5, q, xi) - oracle::norm_four(q, xi)) <= 1e-12);
        }
    }
}

TEST_CASE("filtered_norm equals the trace of the unnormalised filtered state") {
    for (int n = 2; n <= 8; ++n) {
        for (double q : kQGrid) {
            for (double xi : kXiGrid) {
                const NoisyState state = mixed_state(n, q);
                const FilterPair f = make_filters(n, q, xi);
                const ComplexMatrix k = kron(f.alice, f.bob);
                const double tr = trace(matmul(matmul(k, state.rho), dagger(k))).real();
                CHECK(std::abs(filtered_norm(n, q, xi) - tr) <= 1e-12);
                CHECK(std::abs(apply_filters(state, f).norm - tr) <= 1e-12);
            }
        }
    }
}

TEST_CASE("closed-form filtered state matches explicit conjugation for n = 2..8") {
    double worst = 0.0;
    for (int n = 2; n <= 8; ++n) {
        for (double q : kQGrid) {
            for (double xi : kXiGrid) {
                const NoisyState state = mixed_state(n, q);
                const FilterPair f = make_filters(n, q, xi);
                const FilteredState applied = apply_filters(state, f);
                const FilteredState closed = filtered_state_closed_form(n, q, xi);
                worst = std::max(worst, max_abs_diff(applied.rho_f, closed.rho_f));
                worst = std::max(worst, max_abs_diff(applied.rho_f, conjugate_by_diagonal(state.rho, f)));
                CHECK(closed.superunit == f.superunit);
            }
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("filtered states are unit-trace positive semidefinite") {
    for (int n = 2; n <= 6; ++n) {
        for (double q : {0.05, 0.5, 1.0}) {
            for (double xi : {1e-3, 0.4, 1.0}) {
                const FilteredState f = apply_filters(mixed_state(n, q), make_filters(n, q, xi));
                CHECK(std::abs(trace(f.rho_f) - 1.0) <= 1e-10);
                CHECK(hermiticity_residual(f.rho_f) <= 1e-12);
                for (double ev : oracle::eigen_eigenvalues(f.rho_f)) {
                    CHECK(ev >= -1e-10);
                }
            }
        }
    }
}

TEST_CASE("filter_gain_factor") {
    const NoisyState two = mixed_state(2, 0.8);
    CHECK(filter_gain_factor(two, make_filters(2, 0.8, 1.0)) ==
          doctest::Approx(1.0 / std::sqrt(0.8) / (0.5 * (0.8 + 0.2 + 1.0 / 0.8))));
    CHECK(filter_gain_factor(mixed_state(4, 1.0), make_filters(4, 1.0, 1.0)) == doctest::Approx(1.0));

    for (double q : kQGrid) {
        for (double xi : kXiGrid) {
            const double expected = xi * oracle::delta_of(q, xi) / oracle::norm_two(q, xi);
            CHECK(filter_gain_factor(mixed_state(2, q), make_filters(2, q, xi)) == doctest::Approx(expected).epsilon(1e-12));
        }
    }

    CHECK(filter_gain_factor(two, make_filters(2, 0.8, 0.6)) == doctest::Approx(0.7785149631527314).epsilon(1e-12));
    // The gain peaks above one at xi = sqrt(q).
    CHECK(filter_gain_factor(two, make_filters(2, 0.8, std::sqrt(0.8))) ==
          doctest::Approx(1.0163945352271773).epsilon(1e-12));
    CHECK(filter_gain_factor(two, make_filters(2, 0.8, std::sqrt(0.8))) > 1.0);
}

TEST_CASE("apply_filters rejects mismatched dimensions") {
    CHECK_THROWS_AS(apply_filters(mixed_state(4, 0.5), make_filters(2, 0.5, 0.5)), std::invalid_argument);
}
