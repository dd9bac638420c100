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

#include "porac/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "porac/analysis.hpp"
#include "porac/bell.hpp"
#include "porac/states.hpp"

namespace porac {

namespace {

constexpr std::size_t kMaxDiagonalisedDim = 64;
constexpr int kRandomProbes = 100;
constexpr double kStructureTol = 1e-12;
constexpr double kOperatorTol = 1e-10;
constexpr double kValueTol = 1e-9;
constexpr double kThresholdTol = 0.01;

constexpr double kGridQ[] = {0.2, 0.4, 0.6, 0.8, 1.0};
constexpr double kGridXi[] = {0.1, 0.3, 0.5, 0.7, 0.9};
constexpr double kNoisyQ[] = {0.25, 0.5, 0.75};

struct Threshold {
    const char *label;
    int n;
    BoundKind kind;
    enum class Mode { kUnfiltered, kAtXi, kMinOverXi } mode;
    double xi;
    double expected;
};

constexpr Threshold kPublishedThresholds[] = {
    {"unfiltered_local_n2", 2, BoundKind::kLocal, Threshold::Mode::kUnfiltered, 0.0, 0.707},
    {"unfiltered_local_n3", 3, BoundKind::kLocal, Threshold::Mode::kUnfiltered, 0.0, 0.87},
    {"unfiltered_local_n4", 4, BoundKind::kLocal, Threshold::Mode::kUnfiltered, 0.0, 0.75},
    {"unfiltered_local_n5", 5, BoundKind::kLocal, Threshold::Mode::kUnfiltered, 0.0, 0.84},
    {"unfiltered_pnc_n3", 3, BoundKind::kPnc, Threshold::Mode::kUnfiltered, 0.0, 0.57},
    {"unfiltered_pnc_n4", 4, BoundKind::kPnc, Threshold::Mode::kUnfiltered, 0.0, 0.5},
    {"unfiltered_pnc_n5", 5, BoundKind::kPnc, Threshold::Mode::kUnfiltered, 0.0, 0.45},
    {"filtered_local_n2_xi0.79", 2, BoundKind::kLocal, Threshold::Mode::kAtXi, 0.79, 0.665},
    {"filtered_local_n3_xi0.90", 3, BoundKind::kLocal, Threshold::Mode::kAtXi, 0.90, 0.86},
    {"filtered_pnc_n3_xi0.70", 3, BoundKind::kPnc, Threshold::Mode::kAtXi, 0.70, 0.50},
    {"filtered_local_n4_min_xi", 4, BoundKind::kLocal, Threshold::Mode::kMinOverXi, 0.0, 0.66},
    {"filtered_local_n5_xi0.72", 5, BoundKind::kLocal, Threshold::Mode::kAtXi, 0.72, 0.80},
};

CheckResult make_check(std::string name, std::optional<int> n, double error, double tol, std::string detail = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.n = n;
    c.max_error = error;
    c.tolerance = tol;
    c.passed = std::isfinite(error) && error <= tol;
    c.detail = std::move(detail);
    return c;
}

// Runs `body` and converts exceptions into a failed check with infinite error.
template <typename Body>
CheckResult guarded(const std::string &name, std::optional<int> n, double tol, Body body) {
    try {
        return body();
    } catch (const std::exception &e) {
        return make_check(name, n, INFINITY, tol, e.what());
    }
}

}  // namespace

bool VerifyReport::all_passed() const { return failures() == 0; }

int VerifyReport::failures() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult &c) { return !c.passed; }));
}

DensityCheck check_density_matrix(const ComplexMatrix &rho) {
    DensityCheck out;
    out.trace_error = std::abs(trace(rho) - 1.0);
    out.hermiticity = hermiticity_residual(rho);
    if (rho.dim() <= kMaxDiagonalisedDim) {
        out.diagonalised = true;
        out.min_eigen_or_probe = hermitian_eigenvalues(rho, kOperatorTol).eigenvalues.front();
        return out;
    }
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> gauss;
    std::vector<Complex> v(rho.dim());
    out.min_eigen_or_probe = INFINITY;
    for (int probe = 0; probe < kRandomProbes; ++probe) {
        double norm2 = 0.0;
        for (auto &c : v) {
            c = {gauss(rng), gauss(rng)};
            norm2 += std::norm(c);
        }
        const double scale = 1.0 / std::sqrt(norm2);
        for (auto &c : v) {
            c *= scale;
        }
        out.min_eigen_or_probe = std::min(out.min_eigen_or_probe, expectation(rho, v).real());
    }
    return out;
}

VerifyReport run_verification(int max_n, const BobProvider &bob_provider) {
    if (max_n < 2) {
        throw std::invalid_argument("run_verification: max_n must be >= 2");
    }
    VerifyReport report;
    auto &checks = report.checks;

    for (int n = 2; n <= max_n; ++n) {
        const ObservableSet bob = bob_provider(n);
        const AliceSet alice = alice_observables(n, bob_observables(n));

        const auto anti = check_anticommuting(bob, kStructureTol);
        checks.push_back(make_check("anticommutation", n, anti.max_violation, kStructureTol));

        const auto parity = check_parity_oblivious(alice, kOperatorTol);
        checks.push_back(make_check("parity_oblivious", n, parity.max_violation, kOperatorTol,
                                    "worst s=" + parity.worst_parity.to_string()));

        checks.push_back(guarded("optimal_value_brute", n, kValueTol, [&] {
            const NoisyState pure = mixed_state(n, 1.0);
            const double value = bell_value_brute(pure.rho, alice, bob);
            return make_check("optimal_value_brute", n, std::abs(value - optimal_value(n)), kValueTol);
        }));

        checks.push_back(guarded("noisy_scaling", n, kValueTol, [&] {
            double worst = 0.0;
            for (double q : kNoisyQ) {
                const NoisyState state = mixed_state(n, q);
                worst = std::max(worst, std::abs(bell_value_brute(state.rho, alice, bob) - bell_value_unfiltered(n, q)));
            }
            return make_check("noisy_scaling", n, worst, kValueTol);
        }));

        double oracle = 0.0;
        double state_form = 0.0;
        double norm_form = 0.0;
        double min_eigen = INFINITY;
        double trace_err = 0.0;
        std::string failure;
        try {
            for (double q : kGridQ) {
                const NoisyState state = mixed_state(n, q);
                for (double xi : kGridXi) {
                    const FilteredState explicit_f = apply_filters(state, make_filters(n, q, xi));
                    const FilteredState closed_f = filtered_state_closed_form(n, q, xi);
                    oracle = std::max(oracle, std::abs(bell_value_brute(explicit_f.rho_f, alice, bob) -
                                                       bell_value_closed(n, q, xi)));
                    state_form = std::max(state_form, max_abs_diff(explicit_f.rho_f, closed_f.rho_f));
                    norm_form = std::max(norm_form, std::abs(explicit_f.norm - filtered_norm(n, q, xi)));
                    const DensityCheck density = check_density_matrix(explicit_f.rho_f);
                    min_eigen = std::min(min_eigen, density.min_eigen_or_probe);
                    trace_err = std::max(trace_err, density.trace_error);
                }
            }
        } catch (const std::exception &e) {
            oracle = INFINITY;
            failure = e.what();
        }
        checks.push_back(make_check("oracle_equivalence", n, oracle, kValueTol, failure));
        checks.push_back(make_check("filtered_state_closed_form", n, state_form, kOperatorTol));
        checks.push_back(make_check("filtered_norm", n, norm_form, kStructureTol));
        checks.push_back(make_check("filtered_psd_trace", n, std::max(std::max(0.0, -min_eigen), trace_err),
                                    kOperatorTol));
    }

    for (const Threshold &t : kPublishedThresholds) {
        if (t.n > max_n) {
            continue;
        }
        CriticalResult r;
        switch (t.mode) {
            case Threshold::Mode::kUnfiltered:
                r = critical_q_unfiltered(t.n, t.kind);
                break;
            case Threshold::Mode::kAtXi:
                r = critical_q_at_xi(t.n, t.xi, t.kind);
                break;
            case Threshold::Mode::kMinOverXi:
                r = min_critical_q(t.n, t.kind, 200);
                break;
        }
        std::ostringstream detail;
        detail << "q_critical=" << format_number(r.q_critical) << " expected=" << t.expected;
        checks.push_back(make_check(std::string("threshold:") + t.label, t.n,
                                    r.converged ? std::abs(r.q_critical - t.expected) : INFINITY, kThresholdTol,
                                    detail.str()));
    }

    // Vanishing-filter activation: margin is how far the value sits on the
    // wrong side of the bound (0 when the claim holds).
    struct Claim {
        int n;
        BoundKind kind;
        bool violated;
    };
    constexpr Claim kClaims[] = {{4, BoundKind::kPnc, true},   {5, BoundKind::kPnc, true},
                                 {6, BoundKind::kLocal, true}, {7, BoundKind::kLocal, true},
                                 {4, BoundKind::kLocal, false}, {5, BoundKind::kLocal, false}};
    for (const Claim &c : kClaims) {
        if (c.n > max_n) {
            continue;
        }
        double margin = 0.0;
        for (double q : {1e-3, 1e-6}) {
            const double value = bell_value_closed(c.n, q, kVanishingXi);
            const bool violated = value > bound_value(c.n, c.kind);
            if (violated != c.violated) {
                margin = std::max(margin, std::abs(value - bound_value(c.n, c.kind)) + 1.0);
            }
        }
        checks.push_back(make_check("activation:" + std::string(to_string(c.kind)) +
                                        (c.violated ? "_violated" : "_not_violated"),
                                    c.n, margin, 0.0));
    }
    return report;
}

std::string format_report(const VerifyReport &report) {
    std::ostringstream out;
    for (const auto &c : report.checks) {
        out << "check=" << c.name;
        if (c.n) {
            out << " n=" << *c.n;
        }
        out << " status=" << (c.passed ? "PASS" : "FAIL") << " max_error=" << format_number(c.max_error)
            << " tol=" << format_number(c.tolerance);
        if (!c.detail.empty()) {
            out << " detail=\"" << c.detail << '"';
        }
        out << '\n';
    }
    out << "summary checks=" << report.checks.size() << " passed=" << report.checks.size() - report.failures()
        << " failed=" << report.failures() << '\n';
    return out.str();
}

}  // namespace porac
