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

#include "porac/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "porac/states.hpp"

namespace porac {

namespace {

constexpr int kCoarseScanPoints = 256;
constexpr double kXiGridLow = 1e-4;
constexpr double kPinnedXi[] = {0.70, 0.72, 0.79, 0.90};

bool violates(int n, double q, double xi, double bound) { return bell_value_closed(n, q, xi) > bound; }

// Runs body(k) for k in [0, count) on a small worker pool. Each index is
// handled exactly once; callers write into preallocated slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body) {
    const std::size_t workers =
        std::min<std::size_t>(count, std::max(1U, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t k = 0; k < count; ++k) {
            body(k);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < count; k = next++) {
                body(k);
            }
        });
    }
}

// Round-trips through the 12-digit text form so JSON dumps stay short.
double rounded(double value) { return std::stod(format_number(value)); }

}  // namespace

CriticalResult critical_q_unfiltered(int n, BoundKind kind) {
    CriticalResult r;
    r.n = n;
    r.bound_kind = kind;
    r.q_critical = kind == BoundKind::kLocal ? local_bound(n) / optimal_value(n) : 1.0 / std::sqrt(static_cast<double>(n));
    r.converged = r.q_critical < 1.0;
    if (!r.converged) {
        r.q_critical = 1.0;
    }
    return r;
}

CriticalResult critical_q_at_xi(int n, double xi, BoundKind kind, double tol) {
    CriticalResult r;
    r.n = n;
    r.bound_kind = kind;
    r.xi = xi;
    const double bound = bound_value(n, kind);

    double prev = kMinMixing;
    if (violates(n, prev, xi, bound)) {
        r.q_critical = prev;
        r.converged = true;
        r.superunit = xi / std::sqrt(prev) > 1.0;
        return r;
    }
    for (int k = 1; k < kCoarseScanPoints; ++k) {
        const double q = kMinMixing + (1.0 - kMinMixing) * k / (kCoarseScanPoints - 1);
        if (!violates(n, q, xi, bound)) {
            prev = q;
            continue;
        }
        double lo = prev;
        double hi = q;
        for (int iter = 0; iter < kBisectionMaxIter && hi - lo > tol; ++iter) {
            const double mid = 0.5 * (lo + hi);
            (violates(n, mid, xi, bound) ? hi : lo) = mid;
        }
        r.q_critical = hi;
        r.converged = true;
        r.superunit = xi / std::sqrt(hi) > 1.0;
        return r;
    }
    r.q_critical = 1.0;
    r.converged = false;
    return r;
}

std::vector<double> xi_search_grid(int resolution) {
    if (resolution < 10) {
        throw std::invalid_argument("xi grid resolution must be >= 10");
    }
    std::vector<double> grid;
    const double span = -std::log10(kXiGridLow);
    for (int k = 0; k < resolution; ++k) {
        grid.push_back(std::pow(10.0, -span + span * k / (resolution - 1)));
    }
    grid.back() = 1.0;
    grid.insert(grid.end(), std::begin(kPinnedXi), std::end(kPinnedXi));
    std::sort(grid.begin(), grid.end());
    return grid;
}

CriticalResult min_critical_q(int n, BoundKind kind, int resolution) {
    const std::vector<double> grid = xi_search_grid(resolution);
    std::vector<CriticalResult> results(grid.size());
    parallel_for(grid.size(), [&](std::size_t k) { results[k] = critical_q_at_xi(n, grid[k], kind); });

    CriticalResult best;
    best.n = n;
    best.bound_kind = kind;
    for (const auto &r : results) {
        if (r.converged && (!best.converged || r.q_critical < best.q_critical)) {
            best = r;
        }
    }
    return best;
}

CellState cell_state(const RegionCell &cell) {
    if (cell.superunit) {
        return CellState::kSuperunit;
    }
    return cell.violating ? CellState::kViolating : CellState::kNonViolating;
}

std::vector<double> uniform_axis(int steps) {
    if (steps < 2) {
        throw std::invalid_argument("grid needs at least 2 steps per axis");
    }
    std::vector<double> axis(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        axis[static_cast<std::size_t>(k)] = kMinMixing + (1.0 - kMinMixing) * k / (steps - 1);
    }
    axis.back() = 1.0;
    return axis;
}

RegionGrid scan_region(int n, BoundKind kind, int q_steps, int xi_steps) {
    RegionGrid grid;
    grid.n = n;
    grid.bound_kind = kind;
    grid.bound = bound_value(n, kind);
    grid.q_axis = uniform_axis(q_steps);
    grid.xi_axis = uniform_axis(xi_steps);
    grid.cells.resize(grid.q_axis.size() * grid.xi_axis.size());
    parallel_for(grid.q_axis.size(), [&](std::size_t qi) {
        const double q = grid.q_axis[qi];
        for (std::size_t xi = 0; xi < grid.xi_axis.size(); ++xi) {
            RegionCell &cell = grid.cells[qi * grid.xi_axis.size() + xi];
            cell.bell_value = bell_value_closed(n, q, grid.xi_axis[xi]);
            cell.violating = cell.bell_value > grid.bound;
            cell.superunit = grid.xi_axis[xi] / std::sqrt(q) > 1.0;
        }
    });
    return grid;
}

double quantum_minus_pnc(int n, double q, double xi) { return bell_value_closed(n, q, xi) - pnc_bound(n); }

std::optional<ExportFormat> parse_export_format(std::string_view text) {
    if (text == "csv") {
        return ExportFormat::kCsv;
    }
    if (text == "json") {
        return ExportFormat::kJson;
    }
    return std::nullopt;
}

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string format_grid(const RegionGrid &grid, ExportFormat format) {
    if (format == ExportFormat::kCsv) {
        std::ostringstream out;
        out << "q,xi,bell_value,bound,violating,superunit\n";
        for (std::size_t qi = 0; qi < grid.q_axis.size(); ++qi) {
            for (std::size_t xi = 0; xi < grid.xi_axis.size(); ++xi) {
                const RegionCell &cell = grid.at(qi, xi);
                out << format_number(grid.q_axis[qi]) << ',' << format_number(grid.xi_axis[xi]) << ','
                    << format_number(cell.bell_value) << ',' << format_number(grid.bound) << ','
                    << (cell.violating ? 1 : 0) << ',' << (cell.superunit ? 1 : 0) << '\n';
            }
        }
        return out.str();
    }

    nlohmann::ordered_json doc;
    doc["n"] = grid.n;
    doc["bound_kind"] = std::string(to_string(grid.bound_kind));
    doc["columns"] = {"q", "xi", "bell_value", "bound", "violating", "superunit"};
    auto &rows = doc["rows"] = nlohmann::ordered_json::array();
    for (std::size_t qi = 0; qi < grid.q_axis.size(); ++qi) {
        for (std::size_t xi = 0; xi < grid.xi_axis.size(); ++xi) {
            const RegionCell &cell = grid.at(qi, xi);
            rows.push_back({rounded(grid.q_axis[qi]), rounded(grid.xi_axis[xi]), rounded(cell.bell_value),
                            rounded(grid.bound), cell.violating, cell.superunit});
        }
    }
    return doc.dump(1) + "\n";
}

void export_grid(const RegionGrid &grid, ExportFormat format, const std::string &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << format_grid(grid, format);
    if (!out.flush()) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

DifferenceTable difference_table(const std::vector<int> &ns, int q_steps, int xi_steps) {
    DifferenceTable table;
    table.ns = ns;
    table.q_axis = uniform_axis(q_steps);
    table.xi_axis = uniform_axis(xi_steps);
    table.values.resize(ns.size());
    for (std::size_t k = 0; k < ns.size(); ++k) {
        auto &values = table.values[k];
        values.resize(table.q_axis.size() * table.xi_axis.size());
        parallel_for(table.q_axis.size(), [&](std::size_t qi) {
            for (std::size_t xi = 0; xi < table.xi_axis.size(); ++xi) {
                values[qi * table.xi_axis.size() + xi] = quantum_minus_pnc(ns[k], table.q_axis[qi], table.xi_axis[xi]);
            }
        });
    }
    return table;
}

std::string format_difference_table(const DifferenceTable &table, ExportFormat format) {
    const std::size_t cols = table.xi_axis.size();
    if (format == ExportFormat::kCsv) {
        std::ostringstream out;
        out << "q,xi";
        for (int n : table.ns) {
            out << ",D_" << n;
        }
        out << '\n';
        for (std::size_t qi = 0; qi < table.q_axis.size(); ++qi) {
            for (std::size_t xi = 0; xi < cols; ++xi) {
                out << format_number(table.q_axis[qi]) << ',' << format_number(table.xi_axis[xi]);
                for (const auto &values : table.values) {
                    out << ',' << format_number(values[qi * cols + xi]);
                }
                out << '\n';
            }
        }
        return out.str();
    }

    nlohmann::ordered_json doc;
    auto &columns = doc["columns"] = nlohmann::ordered_json::array({"q", "xi"});
    for (int n : table.ns) {
        columns.push_back("D_" + std::to_string(n));
    }
    auto &rows = doc["rows"] = nlohmann::ordered_json::array();
    for (std::size_t qi = 0; qi < table.q_axis.size(); ++qi) {
        for (std::size_t xi = 0; xi < cols; ++xi) {
            auto row = nlohmann::ordered_json::array({rounded(table.q_axis[qi]), rounded(table.xi_axis[xi])});
            for (const auto &values : table.values) {
                row.push_back(rounded(values[qi * cols + xi]));
            }
            rows.push_back(std::move(row));
        }
    }
    return doc.dump(1) + "\n";
}

std::vector<FigurePanel> region_figure(int figure, int steps) {
    if (figure != 1 && figure != 2) {
        throw std::invalid_argument("region figures are 1 (local bound) and 2 (PNC bound)");
    }
    const BoundKind kind = figure == 1 ? BoundKind::kLocal : BoundKind::kPnc;
    std::vector<FigurePanel> panels;
    for (const char *parity : {"even", "odd"}) {
        const int first = parity[0] == 'e' ? 2 : 3;
        for (int n = first; n <= first + 6; n += 2) {
            panels.push_back({"figure" + std::to_string(figure) + "_" + parity + "_n" + std::to_string(n),
                              scan_region(n, kind, steps, steps)});
        }
    }
    return panels;
}

}  // namespace porac
