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

#include "porac/bell.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "porac/states.hpp"

namespace porac {

namespace {

void require_bits(int n) {
    if (n < 2 || n > 62) {
        throw std::invalid_argument("n must lie in [2, 62], got " + std::to_string(n));
    }
}

std::uint64_t binomial(int n, int k) {
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return c;
}

// M[a, a'] = sum_{b, b'} rho[(a, b), (a', b')] B[b', b], so that
// Tr[rho (A (x) B)] = sum_{a, a'} M[a, a'] A[a', a].
ComplexMatrix contract_bob(const ComplexMatrix &rho, const ComplexMatrix &bob, std::size_t alice_dim) {
    const std::size_t db = bob.dim();
    ComplexMatrix out(alice_dim);
    for (std::size_t a = 0; a < alice_dim; ++a) {
        for (std::size_t ap = 0; ap < alice_dim; ++ap) {
            Complex sum{};
            for (std::size_t b = 0; b < db; ++b) {
                for (std::size_t bp = 0; bp < db; ++bp) {
                    const Complex w = bob(bp, b);
                    if (w != Complex{}) {
                        sum += rho(a * db + b, ap * db + bp) * w;
                    }
                }
            }
            out(a, ap) = sum;
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::kNonlocal:
            return "nonlocal";
        case Classification::kContextualOnly:
            return "contextual_only";
        case Classification::kClassical:
            return "classical";
    }
    return "classical";
}

std::string_view to_string(BoundKind kind) { return kind == BoundKind::kLocal ? "local" : "pnc"; }

std::optional<BoundKind> parse_bound_kind(std::string_view text) {
    if (text == "local") {
        return BoundKind::kLocal;
    }
    if (text == "pnc") {
        return BoundKind::kPnc;
    }
    return std::nullopt;
}

double local_bound(int n) {
    require_bits(n);
    return static_cast<double>(n) * static_cast<double>(binomial(n - 1, (n - 1) / 2));
}

double pnc_bound(int n) {
    require_bits(n);
    return std::ldexp(1.0, n - 1);
}

double optimal_value(int n) {
    require_bits(n);
    return std::ldexp(1.0, n - 1) * std::sqrt(static_cast<double>(n));
}

double bound_value(int n, BoundKind kind) { return kind == BoundKind::kLocal ? local_bound(n) : pnc_bound(n); }

double bell_value_brute(const ComplexMatrix &rho, const AliceSet &alice, const ObservableSet &bob) {
    if (alice.n != bob.n || alice.observables.size() != alice.inputs.size()) {
        throw std::invalid_argument("bell_value_brute: Alice and Bob sets are inconsistent");
    }
    if (rho.dim() != alice.dim * bob.dim) {
        throw std::invalid_argument("bell_value_brute: state dimension " + std::to_string(rho.dim()) +
                                    " does not match observables " + std::to_string(alice.dim) + " x " +
                                    std::to_string(bob.dim));
    }
    if (std::abs(trace(rho) - 1.0) > 1e-8) {
        throw std::invalid_argument("bell_value_brute: state is not unit trace");
    }

    double total = 0.0;
    for (int y = 1; y <= bob.n; ++y) {
        const ComplexMatrix reduced = contract_bob(rho, bob.observables[static_cast<std::size_t>(y - 1)], alice.dim);
        for (std::size_t i = 0; i < alice.inputs.size(); ++i) {
            const Complex corr = trace_product(reduced, alice.observables[i]);
            if (std::abs(corr.imag()) > kDefaultTol) {
                throw std::runtime_error("bell_value_brute: correlator for y=" + std::to_string(y) + ", x=" +
                                         alice.inputs[i].to_string() + " has imaginary part " +
                                         std::to_string(corr.imag()));
            }
            total += (alice.inputs[i].bit(y) ? -1.0 : 1.0) * corr.real();
        }
    }
    return total;
}

double bell_value_closed(int n, double q, double xi) {
    require_bits(n);
    validate_mixing(q);
    if (!(xi > 0.0) || xi > 1.0) {
        throw std::invalid_argument("bell_value_closed: xi must lie in (0, 1]");
    }
    const int v = n / 2;
    const double delta = xi / std::sqrt(q);
    const double norm = filtered_norm(n, q, xi);
    const double offdiag = q * xi * delta / std::ldexp(1.0, v - 1) + q * (1.0 - std::ldexp(1.0, 1 - v));
    if (n % 2 == 0) {
        return std::ldexp(1.0, 2 * v - 1) * std::sqrt(2.0 * v) / norm * offdiag;
    }
    const double diag =
        (xi * xi * delta * delta - (1.0 - q) * xi * xi) / std::ldexp(1.0, v) + q * (1.0 - std::ldexp(1.0, -v));
    const double scale = std::ldexp(1.0, 2 * v) / (std::sqrt(2.0 * v + 1.0) * norm);
    return scale * (2.0 * v * offdiag + diag);
}

double bell_value_unfiltered(int n, double q) {
    validate_mixing(q);
    return optimal_value(n) * q;
}

double bell_value_vanishing_filter_limit(int n) {
    require_bits(n);
    const int v = n / 2;
    // N_d -> q (1 - 2^{-v}); the q's cancel.
    const double norm = 1.0 - std::ldexp(1.0, -v);
    const double offdiag = 1.0 - std::ldexp(1.0, 1 - v);
    if (n % 2 == 0) {
        return std::ldexp(1.0, 2 * v - 1) * std::sqrt(2.0 * v) * offdiag / norm;
    }
    const double diag = 1.0 - std::ldexp(1.0, -v);
    return std::ldexp(1.0, 2 * v) / std::sqrt(2.0 * v + 1.0) * (2.0 * v * offdiag + diag) / norm;
}

double success_probability(double bell_value, int n) {
    require_bits(n);
    return 0.5 + bell_value / (std::ldexp(1.0, n) * n);
}

Classification classify(int n, double bell_value) {
    if (bell_value > local_bound(n)) {
        return Classification::kNonlocal;
    }
    if (bell_value > pnc_bound(n)) {
        return Classification::kContextualOnly;
    }
    return Classification::kClassical;
}

BellReport make_report(int n, double bell_value) {
    BellReport r;
    r.n = n;
    r.quantum_value = bell_value;
    r.local_bound = local_bound(n);
    r.pnc_bound = pnc_bound(n);
    r.optimal_value = optimal_value(n);
    r.success_probability = success_probability(bell_value, n);
    r.classification = classify(n, bell_value);
    return r;
}

}  // namespace porac
