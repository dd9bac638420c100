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

#ifndef PORAC_ANALYSIS_HPP
#define PORAC_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "porac/bell.hpp"

namespace porac {

inline constexpr double kBisectionTol = 1e-6;
inline constexpr int kBisectionMaxIter = 200;
/// Smallest filter parameter used when probing the vanishing-filter regime.
inline constexpr double kVanishingXi = 1e-4;

struct CriticalResult {
    int n = 0;
    BoundKind bound_kind = BoundKind::kLocal;
    /// Empty for the unfiltered threshold.
    std::optional<double> xi;
    double q_critical = 1.0;
    /// False when the bound is not violated anywhere in the searched range.
    bool converged = false;
    /// delta = xi / sqrt(q_critical) exceeds one.
    bool superunit = false;
};

/// Local bound / optimal value, or 1/sqrt(n), for the unfiltered mixture.
CriticalResult critical_q_unfiltered(int n, BoundKind kind);

/// Smallest q in [1e-6, 1] at which bell_value_closed(n, q, xi) strictly
/// exceeds the bound. A coarse scan brackets the first crossing, then
/// bisection refines it to `tol`. If the bound is violated already at
/// q = 1e-6 that value is returned.
CriticalResult critical_q_at_xi(int n, double xi, BoundKind kind, double tol = kBisectionTol);

/// Filter-parameter grid used by min_critical_q: `resolution` log-spaced
/// points on [1e-4, 1] plus the pinned values 0.70, 0.72, 0.79, 0.90,
/// sorted. Grids with resolution r and 2r-1 are nested.
std::vector<double> xi_search_grid(int resolution);

/// Minimum of critical_q_at_xi over xi_search_grid(resolution); `xi` holds
/// the minimiser. Throws std::invalid_argument for resolution < 10.
CriticalResult min_critical_q(int n, BoundKind kind, int resolution);

enum class CellState { kViolating, kNonViolating, kSuperunit };

struct RegionCell {
    double bell_value = 0.0;
    bool violating = false;
    bool superunit = false;
};

struct RegionGrid {
    int n = 0;
    BoundKind bound_kind = BoundKind::kLocal;
    double bound = 0.0;
    std::vector<double> q_axis;
    std::vector<double> xi_axis;
    /// Row-major, q outer and xi inner.
    std::vector<RegionCell> cells;

    const RegionCell &at(std::size_t qi, std::size_t xi) const { return cells[qi * xi_axis.size() + xi]; }
};

/// Superunit cells report kSuperunit regardless of violation.
CellState cell_state(const RegionCell &cell);

/// `steps` uniform points on [1e-6, 1], endpoints included.
std::vector<double> uniform_axis(int steps);

/// Evaluates every cell of a uniform (q, xi) grid. Rows are computed in
/// parallel; the result does not depend on scheduling.
RegionGrid scan_region(int n, BoundKind kind, int q_steps, int xi_steps);

/// bell_value_closed - 2^{n-1}.
double quantum_minus_pnc(int n, double q, double xi);

enum class ExportFormat { kCsv, kJson };

std::optional<ExportFormat> parse_export_format(std::string_view text);

/// Columns q, xi, bell_value, bound, violating, superunit at 12 significant
/// digits, one row per cell in grid order.
std::string format_grid(const RegionGrid &grid, ExportFormat format);

/// Writes format_grid to `path`; throws std::runtime_error on I/O failure.
void export_grid(const RegionGrid &grid, ExportFormat format, const std::string &path);

/// Grid of D = value - 2^{n-1} for several n sharing the same (q, xi) axes.
struct DifferenceTable {
    std::vector<int> ns;
    std::vector<double> q_axis;
    std::vector<double> xi_axis;
    /// values[k] is row-major over (q, xi) for ns[k].
    std::vector<std::vector<double>> values;
};

DifferenceTable difference_table(const std::vector<int> &ns, int q_steps, int xi_steps);

/// Columns q, xi, D_<n>... as CSV or JSON.
std::string format_difference_table(const DifferenceTable &table, ExportFormat format);

/// Panels of the region figures: figure 1 uses the local bound, figure 2 the
/// PNC bound; even panel n = 2, 4, 6, 8 and odd panel n = 3, 5, 7, 9.
struct FigurePanel {
    std::string name;  // e.g. "figure1_even_n6"
    RegionGrid grid;
};

std::vector<FigurePanel> region_figure(int figure, int steps);

/// Formats a double with 12 significant digits.
std::string format_number(double value);

}  // namespace porac

#endif  // PORAC_ANALYSIS_HPP
