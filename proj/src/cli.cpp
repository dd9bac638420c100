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

#include "porac/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "porac/analysis.hpp"
#include "porac/bell.hpp"
#include "porac/observables.hpp"
#include "porac/states.hpp"
#include "porac/verify.hpp"

namespace porac::cli {

namespace {

enum class Command { kNone, kBounds, kValue, kScan, kCritical, kFigure, kVerify };

enum class ValueMode { kClosed, kBrute, kBoth };

struct RunConfig {
    Command command = Command::kNone;
    int n = 0;
    std::optional<double> q;
    std::optional<double> xi;
    int steps = 51;
    int resolution = 200;
    int figure = 0;
    int max_n = 8;
    std::string out;
    std::string format = "csv";
    std::string bound = "local";
    double tol = 1e-8;
    bool brute = false;
    bool closed = false;
    bool both = false;
    bool min_over_xi = false;
    bool allow_superunit = false;
    bool force = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string &message) {
    if (!condition) {
        throw UsageError(message);
    }
}

void validate_n(int n) { require(n >= 2 && n <= 62, "--n must lie in [2, 62]"); }

void validate_q(double q) { require(q >= kMinMixing && q <= 1.0, "--q must lie in [1e-6, 1]"); }

void validate_xi(double xi) { require(xi > 0.0 && xi <= 1.0, "--xi must lie in (0, 1]"); }

BoundKind bound_of(const RunConfig &cfg) {
    const auto kind = parse_bound_kind(cfg.bound);
    require(kind.has_value(), "--bound must be 'local' or 'pnc'");
    return *kind;
}

ExportFormat format_of(const RunConfig &cfg) {
    const auto fmt = parse_export_format(cfg.format);
    require(fmt.has_value(), "--format must be 'csv' or 'json'");
    return *fmt;
}

void warn_superunit(const RunConfig &cfg, bool superunit, std::ostream &err) {
    if (superunit && !cfg.allow_superunit) {
        err << "warning: xi > sqrt(q) makes delta > 1; the filter pair exceeds unit norm"
               " (pass --allow-superunit to silence)\n";
    }
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << content).flush()) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
}

int cmd_bounds(const RunConfig &cfg, std::ostream &out) {
    validate_n(cfg.n);
    out << "local=" << format_number(local_bound(cfg.n)) << " pnc=" << format_number(pnc_bound(cfg.n))
        << " optimal=" << format_number(optimal_value(cfg.n))
        << " q_nl=" << format_number(critical_q_unfiltered(cfg.n, BoundKind::kLocal).q_critical)
        << " q_pc=" << format_number(critical_q_unfiltered(cfg.n, BoundKind::kPnc).q_critical) << '\n';
    return kOk;
}

int cmd_value(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    validate_n(cfg.n);
    require(cfg.q.has_value(), "value requires --q");
    validate_q(*cfg.q);
    if (cfg.xi) {
        validate_xi(*cfg.xi);
    }
    require(static_cast<int>(cfg.brute) + static_cast<int>(cfg.closed) + static_cast<int>(cfg.both) <= 1,
            "choose at most one of --brute, --closed, --both");
    const ValueMode mode = cfg.both ? ValueMode::kBoth : cfg.brute ? ValueMode::kBrute : ValueMode::kClosed;
    require(mode == ValueMode::kClosed || cfg.n <= kBruteForceMaxN || cfg.force,
            "brute-force evaluation is limited to n <= 10; pass --force to override");
    const ExportFormat fmt = format_of(cfg);

    const int n = cfg.n;
    const double q = *cfg.q;
    std::optional<double> closed;
    std::optional<double> brute;
    bool superunit = false;
    double delta = 0.0;

    if (cfg.xi) {
        const FilterPair filters = make_filters(n, q, *cfg.xi);
        superunit = filters.superunit;
        delta = filters.delta;
        if (mode != ValueMode::kBrute) {
            closed = bell_value_closed(n, q, *cfg.xi);
        }
        if (mode != ValueMode::kClosed) {
            const ObservableSet bob = bob_observables(n);
            const FilteredState filtered = apply_filters(mixed_state(n, q), filters);
            brute = bell_value_brute(filtered.rho_f, alice_observables(n, bob), bob);
        }
    } else {
        if (mode != ValueMode::kBrute) {
            closed = bell_value_unfiltered(n, q);
        }
        if (mode != ValueMode::kClosed) {
            const ObservableSet bob = bob_observables(n);
            brute = bell_value_brute(mixed_state(n, q).rho, alice_observables(n, bob), bob);
        }
    }
    warn_superunit(cfg, superunit, err);

    const double value = closed ? *closed : *brute;
    const BellReport report = make_report(n, value);
    std::optional<double> agreement;
    if (closed && brute) {
        agreement = std::abs(*closed - *brute);
    }

    if (fmt == ExportFormat::kJson || !cfg.out.empty()) {
        nlohmann::ordered_json doc;
        doc["n"] = n;
        doc["q"] = q;
        doc["xi"] = cfg.xi ? nlohmann::ordered_json(*cfg.xi) : nlohmann::ordered_json(nullptr);
        doc["delta"] = cfg.xi ? nlohmann::ordered_json(delta) : nlohmann::ordered_json(nullptr);
        doc["superunit"] = superunit;
        doc["closed"] = closed ? nlohmann::ordered_json(*closed) : nlohmann::ordered_json(nullptr);
        doc["brute"] = brute ? nlohmann::ordered_json(*brute) : nlohmann::ordered_json(nullptr);
        doc["agreement"] = agreement ? nlohmann::ordered_json(*agreement) : nlohmann::ordered_json(nullptr);
        doc["local_bound"] = report.local_bound;
        doc["pnc_bound"] = report.pnc_bound;
        doc["optimal_value"] = report.optimal_value;
        doc["success_probability"] = report.success_probability;
        doc["classification"] = std::string(to_string(report.classification));
        const std::string text = doc.dump(2) + "\n";
        if (!cfg.out.empty()) {
            write_file(cfg.out, text);
        } else {
            out << text;
        }
    }
    if (fmt == ExportFormat::kCsv) {
        out << "n=" << n << " q=" << format_number(q);
        if (cfg.xi) {
            out << " xi=" << format_number(*cfg.xi) << " delta=" << format_number(delta);
        } else {
            out << " unfiltered";
        }
        out << '\n';
        if (closed) {
            out << "closed=" << format_number(*closed) << '\n';
        }
        if (brute) {
            out << "brute=" << format_number(*brute) << '\n';
        }
        if (agreement) {
            out << "agreement=" << format_number(*agreement) << '\n';
        }
        out << "classification=" << to_string(report.classification)
            << " success_probability=" << format_number(report.success_probability) << '\n';
    }

    if (agreement && *agreement > cfg.tol) {
        err << "error: brute-force and closed-form values differ by " << format_number(*agreement) << '\n';
        return kOracleDisagreement;
    }
    return kOk;
}

int cmd_scan(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    validate_n(cfg.n);
    require(cfg.steps >= 2, "--steps must be >= 2");
    require(!cfg.out.empty(), "scan requires --out");
    const RegionGrid grid = scan_region(cfg.n, bound_of(cfg), cfg.steps, cfg.steps);
    const bool any_superunit =
        std::any_of(grid.cells.begin(), grid.cells.end(), [](const RegionCell &c) { return c.superunit; });
    warn_superunit(cfg, any_superunit, err);
    export_grid(grid, format_of(cfg), cfg.out);
    const auto violating =
        std::count_if(grid.cells.begin(), grid.cells.end(), [](const RegionCell &c) { return c.violating; });
    out << "wrote " << grid.cells.size() << " cells (" << violating << " violating) to " << cfg.out << '\n';
    return kOk;
}

int cmd_critical(const RunConfig &cfg, std::ostream &out) {
    validate_n(cfg.n);
    const BoundKind kind = bound_of(cfg);
    require(!(cfg.min_over_xi && cfg.xi), "--xi and --min-over-xi are exclusive");
    require(cfg.tol > 0.0, "--tol must be positive");
    require(cfg.resolution >= 10, "--resolution must be >= 10");
    CriticalResult r;
    if (cfg.min_over_xi) {
        r = min_critical_q(cfg.n, kind, cfg.resolution);
    } else if (cfg.xi) {
        validate_xi(*cfg.xi);
        r = critical_q_at_xi(cfg.n, *cfg.xi, kind, cfg.tol);
    } else {
        r = critical_q_unfiltered(cfg.n, kind);
    }
    out << "n=" << r.n << " bound=" << to_string(r.bound_kind)
        << " xi=" << (r.xi ? format_number(*r.xi) : std::string("unfiltered"))
        << " q_critical=" << format_number(r.q_critical) << " converged=" << (r.converged ? "true" : "false")
        << " superunit=" << (r.superunit ? "true" : "false") << '\n';
    if (cfg.min_over_xi) {
        out << "vanishing_xi_limit=" << format_number(bell_value_vanishing_filter_limit(cfg.n))
            << " bound_value=" << format_number(bound_value(cfg.n, kind)) << '\n';
    }
    return kOk;
}

int cmd_figure(const RunConfig &cfg, std::ostream &out) {
    require(cfg.figure >= 1 && cfg.figure <= 3, "figure must be 1, 2 or 3");
    require(cfg.steps >= 2, "--steps must be >= 2");
    require(!cfg.out.empty(), "figure requires --out <directory>");
    const ExportFormat fmt = format_of(cfg);
    const std::string ext = fmt == ExportFormat::kCsv ? ".csv" : ".json";
    std::filesystem::create_directories(cfg.out);
    const std::filesystem::path dir(cfg.out);

    if (cfg.figure == 3) {
        const DifferenceTable table = difference_table({2, 3, 4, 5}, cfg.steps, cfg.steps);
        const auto path = (dir / ("figure3" + ext)).string();
        write_file(path, format_difference_table(table, fmt));
        out << "wrote " << path << '\n';
        return kOk;
    }
    for (const auto &panel : region_figure(cfg.figure, cfg.steps)) {
        const auto path = (dir / (panel.name + ext)).string();
        export_grid(panel.grid, fmt, path);
        out << "wrote " << path << '\n';
    }
    return kOk;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    require(cfg.max_n >= 2 && cfg.max_n <= kBruteForceMaxN, "--max-n must lie in [2, 10]");
    const VerifyReport report = run_verification(cfg.max_n);
    out << format_report(report);
    return report.all_passed() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Filtered PORAC Bell values, bounds and activation regions", "porac"};
    app.require_subcommand(1);

    auto add_n = [&cfg](CLI::App *sub) { sub->add_option("--n", cfg.n, "number of input bits (>= 2)")->required(); };

    auto *bounds = app.add_subcommand("bounds", "local, PNC and optimal values with unfiltered critical q");
    add_n(bounds);
    bounds->callback([&] { cfg.command = Command::kBounds; });

    auto *value = app.add_subcommand("value", "quantum Bell value on the (filtered) noisy state");
    add_n(value);
    value->add_option("--q", cfg.q, "mixing parameter in [1e-6, 1]")->required();
    value->add_option("--xi", cfg.xi, "filter parameter in (0, 1]; omit for the unfiltered state");
    value->add_flag("--brute", cfg.brute, "density-matrix evaluation");
    value->add_flag("--closed", cfg.closed, "closed-form evaluation (default)");
    value->add_flag("--both", cfg.both, "evaluate both and report their agreement");
    value->add_option("--tol", cfg.tol, "agreement tolerance for --both");
    value->add_option("--format", cfg.format, "csv (plain text) or json");
    value->add_option("--out", cfg.out, "write the JSON report to this file");
    value->add_flag("--allow-superunit", cfg.allow_superunit, "silence the delta > 1 warning");
    value->add_flag("--force", cfg.force, "allow brute force above n = 10");
    value->callback([&] { cfg.command = Command::kValue; });

    auto *scan = app.add_subcommand("scan", "classify a uniform (q, xi) grid");
    add_n(scan);
    scan->add_option("--bound", cfg.bound, "local or pnc");
    scan->add_option("--steps", cfg.steps, "points per axis");
    scan->add_option("--out", cfg.out, "output file")->required();
    scan->add_option("--format", cfg.format, "csv or json");
    scan->add_flag("--allow-superunit", cfg.allow_superunit, "silence the delta > 1 warning");
    scan->callback([&] { cfg.command = Command::kScan; });

    auto *critical = app.add_subcommand("critical", "critical mixing parameter for a bound");
    add_n(critical);
    critical->add_option("--bound", cfg.bound, "local or pnc");
    critical->add_option("--xi", cfg.xi, "filter parameter; omit for the unfiltered threshold");
    critical->add_flag("--min-over-xi", cfg.min_over_xi, "minimise the threshold over a xi grid");
    critical->add_option("--resolution", cfg.resolution, "xi grid points for --min-over-xi");
    critical->add_option("--tol", cfg.tol, "bisection tolerance on q");
    critical->callback([&] {
        cfg.command = Command::kCritical;
        if (critical->count("--tol") == 0) {
            cfg.tol = kBisectionTol;
        }
    });

    auto *figure = app.add_subcommand("figure", "data for the region (1, 2) and difference (3) figures");
    figure->add_option("figure", cfg.figure, "1, 2 or 3")->required();
    figure->add_option("--out", cfg.out, "output directory")->required();
    figure->add_option("--steps", cfg.steps, "points per axis")->default_val(101);
    figure->add_option("--format", cfg.format, "csv or json");
    figure->callback([&] { cfg.command = Command::kFigure; });

    auto *verify = app.add_subcommand("verify", "run the self-verification suite");
    verify->add_option("--max-n", cfg.max_n, "largest n to check");
    verify->callback([&] { cfg.command = Command::kVerify; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        switch (cfg.command) {
            case Command::kBounds:
                return cmd_bounds(cfg, out);
            case Command::kValue:
                return cmd_value(cfg, out, err);
            case Command::kScan:
                return cmd_scan(cfg, out, err);
            case Command::kCritical:
                return cmd_critical(cfg, out);
            case Command::kFigure:
                return cmd_figure(cfg, out);
            case Command::kVerify:
                return cmd_verify(cfg, out);
            case Command::kNone:
                break;
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    err << app.help();
    return kUsage;
}

}  // namespace porac::cli
