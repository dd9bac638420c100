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

#ifndef PORAC_VERIFY_HPP
#define PORAC_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "porac/matrix.hpp"
#include "porac/observables.hpp"

namespace porac {

struct CheckResult {
    std::string name;
    std::optional<int> n;
    bool passed = false;
    /// Largest observed error against the check's tolerance.
    double max_error = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    int failures() const;
};

/// Produces Bob's observables for a given n. The verification suite always
/// builds Alice's side from bob_observables, so a provider that departs from
/// it shows up as an oracle disagreement.
using BobProvider = std::function<ObservableSet(int)>;

/// Smallest eigenvalue bound and trace error of a density matrix. Matrices of
/// dimension <= 64 are diagonalised; larger ones are probed with 100 seeded
/// random unit vectors.
struct DensityCheck {
    double min_eigen_or_probe = 0.0;
    double trace_error = 0.0;
    double hermiticity = 0.0;
    bool diagonalised = false;
};

DensityCheck check_density_matrix(const ComplexMatrix &rho);

/// Structural, oracle-equivalence and threshold checks for n = 2..max_n.
VerifyReport run_verification(int max_n, const BobProvider &bob = bob_observables);

/// One line per check plus a trailing summary line.
std::string format_report(const VerifyReport &report);

}  // namespace porac

#endif  // PORAC_VERIFY_HPP
