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

// Acceptance runner: one PASS/FAIL line per criterion, details indented below.
// Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "porac/analysis.hpp"
#include "porac/bell.hpp"
#include "porac/observables.hpp"
#include "porac/states.hpp"
#include "porac/verify.hpp"

using namespace porac;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    bool passed = true;
    std::vector<std::string> details;

    void expect(bool ok, const char *fmt, auto... args) {
        char buf[256];
        std::snprintf(buf, sizeof buf, fmt, args...);
        details.push_back(std::string(ok ? "ok   " : "FAIL ") + buf);
        passed = passed && ok;
    }
};

double brute_value(int n, const ComplexMatrix &rho) {
    const ObservableSet bob = bob_observables(n);
    return bell_value_brute(rho, alice_observables(n, bob), bob);
}

Criterion optimal_values() {
    Criterion c;
    const auto start = Clock::now();
    for (int n = 2; n <= 8; ++n) {
        const double err = std::abs(brute_value(n, mixed_state(n, 1.0).rho) - std::ldexp(1.0, n - 1) * std::sqrt(n));
        c.expect(err <= 1e-9, "n=%d |B - 2^(n-1) sqrt n| = %.3e (tol 1e-9)", n, err);
    }
    const double elapsed = seconds_since(start);
    c.expect(elapsed < 60.0, "runtime %.2f s (limit 60 s)", elapsed);
    return c;
}

Criterion noisy_scaling() {
    Criterion c;
    for (int n = 2; n <= 8; ++n) {
        double worst = 0.0;
        for (double q : {0.25, 0.5, 0.75}) {
            const double expected = std::ldexp(1.0, n - 1) * std::sqrt(n) * q;
            worst = std::max(worst, std::abs(brute_value(n, mixed_state(n, q).rho) - expected));
        }
        c.expect(worst <= 1e-9, "n=%d max error over q in {0.25,0.5,0.75} = %.3e (tol 1e-9)", n, worst);
    }
    return c;
}

Criterion oracle_equivalence() {
    Criterion c;
    for (int n = 2; n <= 8; ++n) {
        double worst = 0.0;
        for (double q : {0.2, 0.4, 0.6, 0.8, 1.0}) {
            for (double xi : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                const FilteredState f = apply_filters(mixed_state(n, q), make_filters(n, q, xi));
                worst = std::max(worst, std::abs(bell_value_closed(n, q, xi) - brute_value(n, f.rho_f)));
            }
        }
        c.expect(worst <= 1e-9, "n=%d closed vs brute on 5x5 grid: %.3e (tol 1e-9)", n, worst);
    }
    const double q = 0.8;
    const double xi = 0.5;
    const std::function<double(double, double)> literal[] = {oracle::value_n2, oracle::value_n3, oracle::value_n4,
                                                             oracle::value_n5};
    for (int n = 2; n <= 5; ++n) {
        const double expected = literal[n - 2](q, xi);
        const double got = bell_value_closed(n, q, xi);
        const double err = std::abs(got - expected);
        c.expect(err <= 1e-9 * std::max(1.0, expected), "n=%d special case at (0.8, 0.5): %.12g vs %.12g", n, got,
                 expected);
    }
    return c;
}

Criterion published_thresholds() {
    Criterion c;
    const double tol = 0.01;
    const auto check = [&](const char *label, double got, double quoted) {
        c.expect(std::abs(got - quoted) <= tol, "%-34s computed %.6f quoted %.3f (tol 0.01)", label, got, quoted);
    };
    check("unfiltered local n=2", critical_q_unfiltered(2, BoundKind::kLocal).q_critical, 0.707);
    check("unfiltered local n=3", critical_q_unfiltered(3, BoundKind::kLocal).q_critical, 0.87);
    check("unfiltered local n=4", critical_q_unfiltered(4, BoundKind::kLocal).q_critical, 0.75);
    check("unfiltered local n=5", critical_q_unfiltered(5, BoundKind::kLocal).q_critical, 0.84);
    check("unfiltered pnc n=3", critical_q_unfiltered(3, BoundKind::kPnc).q_critical, 0.57);
    check("unfiltered pnc n=4", critical_q_unfiltered(4, BoundKind::kPnc).q_critical, 0.5);
    check("unfiltered pnc n=5", critical_q_unfiltered(5, BoundKind::kPnc).q_critical, 0.45);
    check("filtered local n=2 xi=0.79", critical_q_at_xi(2, 0.79, BoundKind::kLocal).q_critical, 0.665);
    check("filtered local n=3 xi=0.90", critical_q_at_xi(3, 0.90, BoundKind::kLocal).q_critical, 0.86);
    check("filtered pnc n=3 xi=0.70", critical_q_at_xi(3, 0.70, BoundKind::kPnc).q_critical, 0.50);
    const CriticalResult four = min_critical_q(4, BoundKind::kLocal, 200);
    check("filtered local n=4 min over xi", four.q_critical, 0.66);
    c.details.push_back("     n=4 minimising xi = " + format_number(four.xi.value_or(0.0)));
    check("filtered local n=5 xi=0.72", critical_q_at_xi(5, 0.72, BoundKind::kLocal).q_critical, 0.80);
    return c;
}

Criterion activation() {
    Criterion c;
    const double xi = 1e-4;
    const double q = 1e-3;
    for (int n : {4, 5}) {
        const double v = bell_value_closed(n, q, xi);
        c.expect(v > pnc_bound(n), "n=%d B=%.6f > pnc bound %.0f", n, v, pnc_bound(n));
    }
    for (int n : {6, 7}) {
        const double v = bell_value_closed(n, q, xi);
        c.expect(v > local_bound(n), "n=%d B=%.6f > local bound %.0f", n, v, local_bound(n));
    }
    for (int n : {4, 5}) {
        const double v = bell_value_closed(n, q, xi);
        c.expect(v <= local_bound(n), "n=%d B=%.6f <= local bound %.0f (limit %.6f)", n, v, local_bound(n),
                 bell_value_vanishing_filter_limit(n));
    }
    return c;
}

Criterion difference_positivity() {
    Criterion c;
    const double qs[] = {0.01, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    for (int n : {4, 5}) {
        double lowest = INFINITY;
        for (double q : qs) {
            lowest = std::min(lowest, quantum_minus_pnc(n, q, 1e-4));
        }
        c.expect(lowest > 0.0, "n=%d min D over q in {0.01,0.1..1.0} at xi=1e-4: %.6f > 0", n, lowest);
    }
    const DifferenceTable table = difference_table({2, 3}, 101, 101);
    for (std::size_t k = 0; k < table.ns.size(); ++k) {
        const auto [lo, hi] = std::minmax_element(table.values[k].begin(), table.values[k].end());
        c.expect(*lo < 0.0 && *hi > 0.0, "n=%d D spans [%.4f, %.4f] on the 101x101 grid (sign change)", table.ns[k], *lo,
                 *hi);
    }
    return c;
}

Criterion structural() {
    Criterion c;
    for (int n = 2; n <= 8; ++n) {
        const ObservableSet bob = bob_observables(n);
        const AliceSet alice = alice_observables(n, bob);
        const auto ac = check_anticommuting(bob, 1e-12);
        const auto po = check_parity_oblivious(alice, 1e-10);

        double psd = 0.0;
        double tr = 0.0;
        double norm_err = 0.0;
        double closed_err = 0.0;
        const double d = std::ldexp(1.0, n / 2);
        for (double q : {0.2, 0.5, 0.8, 1.0}) {
            for (double xi : {0.1, 0.5, 0.9}) {
                const FilteredState f = apply_filters(mixed_state(n, q), make_filters(n, q, xi));
                const auto ev = oracle::eigen_eigenvalues(f.rho_f);
                psd = std::min(psd, ev.front());
                tr = std::max(tr, std::abs(trace(f.rho_f) - 1.0));
                const double nd = (q + (1 - q) * xi * xi) * (1 - 1 / d) + std::pow(xi, 4) / (q * d);
                norm_err = std::max(norm_err, std::abs(filtered_norm(n, q, xi) - nd));
                norm_err = std::max(norm_err, std::abs(f.norm - nd));
                closed_err = std::max(closed_err, max_abs_diff(f.rho_f, filtered_state_closed_form(n, q, xi).rho_f));
            }
        }
        c.expect(ac.ok, "n=%d anticommutation residual %.3e (tol 1e-12)", n, ac.max_violation);
        c.expect(po.ok, "n=%d parity-oblivious residual %.3e (tol 1e-10)", n, po.max_violation);
        c.expect(psd >= -1e-10 && tr <= 1e-10, "n=%d filtered state min eigenvalue %.3e, trace error %.3e (tol 1e-10)",
                 n, psd, tr);
        c.expect(norm_err <= 1e-12, "n=%d N_d error %.3e (tol 1e-12)", n, norm_err);
        c.expect(closed_err <= 1e-10, "n=%d filtered state vs closed form %.3e (tol 1e-10)", n, closed_err);
    }
    return c;
}

Criterion scaling_and_verify() {
    Criterion c;
    const auto start = Clock::now();
    const VerifyReport report = run_verification(8);
    const double elapsed = seconds_since(start);
    c.expect(elapsed < 300.0, "verify --max-n 8 finished in %.2f s (limit 300 s), %d of %zu checks failing", elapsed,
             report.failures(), report.checks.size());

    const auto first = format_grid(scan_region(9, BoundKind::kLocal, 101, 101), ExportFormat::kCsv);
    const auto second = format_grid(scan_region(9, BoundKind::kLocal, 101, 101), ExportFormat::kCsv);
    c.expect(first == second, "n=9 101x101 region export reproducible byte for byte (%zu bytes)", first.size());

    for (int n : {20, 40, 62}) {
        const double v = bell_value_closed(n, 0.9, 0.8);
        c.expect(std::isfinite(v) && v > 0.0 && v < optimal_value(n), "n=%d closed-form value %.6e finite and below optimal",
                 n, v);
    }
    return c;
}

}  // namespace

int main() {
    struct Entry {
        const char *name;
        Criterion (*run)();
    };
    const Entry entries[] = {
        {"optimal_values", optimal_values},
        {"noisy_scaling", noisy_scaling},
        {"oracle_equivalence", oracle_equivalence},
        {"published_thresholds", published_thresholds},
        {"activation_claims", activation},
        {"difference_positivity", difference_positivity},
        {"structural_properties", structural},
        {"scaling_and_verify_runtime", scaling_and_verify},
    };

    int failed = 0;
    int index = 1;
    for (const Entry &e : entries) {
        const auto start = Clock::now();
        const Criterion c = e.run();
        std::printf("%s criterion %d %s (%.2f s)\n", c.passed ? "PASS" : "FAIL", index, e.name, seconds_since(start));
        for (const auto &line : c.details) {
            std::printf("    %s\n", line.c_str());
        }
        failed += c.passed ? 0 : 1;
        ++index;
    }
    std::printf("acceptance: %d of %d criteria passed\n", index - 1 - failed, index - 1);
    return failed == 0 ? 0 : 1;
}
