#include "primesum/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "primesum/cipolla.hpp"
#include "primesum/coeff_engine.hpp"
#include "primesum/convert.hpp"
#include "primesum/evaluator.hpp"
#include "primesum/expansion.hpp"
#include "primesum/sieve.hpp"
#include "primesum/sieve_reference.hpp"

namespace primesum {

namespace {

std::unique_ptr<CLI::App> build_app(CliConfig& cfg) {
    auto app = std::make_unique<CLI::App>("prime-sum asymptotics toolkit", "primesum");
    app->require_subcommand(1);

    auto* coeffs = app->add_subcommand("coeffs", "Dump the b(s,i,j,r) coefficient table as CSV");
    coeffs->add_option("--s-max", cfg.s_max, "Largest s index")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    coeffs->add_option("--i-max", cfg.i_max, "Largest i index")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    coeffs->add_option("--j-max", cfg.j_max, "Largest j index (r ranges over 0..j)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    auto* expand = app->add_subcommand("expand", "Assemble and print the symbolic expansion");
    expand->add_option("--order", cfg.order, "Truncation order m")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    expand->add_option("--cipolla-file", cfg.cipolla_file,
                       "Cipolla coefficient file for orders beyond the built-in 1 and 2");
    expand->add_flag("--emit-coeffs", cfg.emit_coeffs,
                     "Print term polynomials as CSV rows k,c0,c1,... instead of prose");

    auto* eval = app->add_subcommand("eval", "Evaluate the approximation S_m(n) with breakdown");
    eval->add_option("--order", cfg.order, "Truncation order m")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    eval->add_option("--n", cfg.n, "Evaluation point n (>= 3)")->required();
    eval->add_option("--cipolla-file", cfg.cipolla_file,
                     "Cipolla coefficient file for orders beyond the built-in 1 and 2");

    auto* sieve = app->add_subcommand("sieve", "Exact prime-sum checkpoints (CSV: n,p_n,sum)");
    sieve->add_option("--upto-count", cfg.upto_count, "Single checkpoint at the n-th prime")
        ->check(CLI::PositiveNumber);
    sieve->add_option("--grid", cfg.grid, "Comma-separated checkpoint counts, ascending")
        ->delimiter(',');

    auto* sweep = app->add_subcommand("sweep", "Empirical error sweep against exact prime sums");
    sweep->add_option("--orders", cfg.orders, "Comma-separated truncation orders")
        ->delimiter(',')
        ->capture_default_str();
    sweep->add_option("--grid", cfg.grid, "Comma-separated n grid, ascending, each >= 3")
        ->delimiter(',');
    sweep->add_flag("--grid-default", cfg.grid_default,
                    "Use the default log-spaced grid 10^4..10^7 (also the fallback)");
    sweep->add_option("--out", cfg.out_path, "Write the report to this file instead of stdout");
    const std::map<std::string, ReportFormat> formats{{"csv", ReportFormat::csv},
                                                      {"table", ReportFormat::aligned_table}};
    sweep->add_option("--format", cfg.format, "Report format: csv | table")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    auto* check = app->add_subcommand("check", "Run the embedded self-tests");
    check->add_option("--cipolla-file", cfg.cipolla_file,
                      "Also validate this coefficient file");
    check->add_option("--order", cfg.order, "Order at which to validate the coefficient file")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    return app;
}

void require_increasing(const std::vector<long long>& grid, long long minimum,
                        const std::string& who) {
    long long prev = minimum - 1;
    for (long long v : grid) {
        if (v <= prev)
            throw std::invalid_argument(who + ": grid not increasing (values must be strictly "
                                              "ascending, each >= " +
                                        std::to_string(minimum) + ")");
        prev = v;
    }
}

void validate_config(CliConfig& cfg) {
    if (cfg.subcommand == "sieve") {
        if ((cfg.upto_count > 0) == !cfg.grid.empty())
            throw std::invalid_argument("sieve: provide exactly one of --upto-count or --grid");
        require_increasing(cfg.grid, 1, "sieve");
    } else if (cfg.subcommand == "sweep") {
        if (cfg.grid_default && !cfg.grid.empty())
            throw std::invalid_argument("sweep: --grid-default and --grid are mutually exclusive");
        require_increasing(cfg.grid, 3, "sweep");
        if (cfg.orders.empty()) throw std::invalid_argument("sweep: --orders must not be empty");
        std::sort(cfg.orders.begin(), cfg.orders.end());
        cfg.orders.erase(std::unique(cfg.orders.begin(), cfg.orders.end()), cfg.orders.end());
        if (cfg.orders.front() < 1)
            throw std::invalid_argument("sweep: every order must be >= 1");
        cfg.order = cfg.orders.back();
    } else if (cfg.subcommand == "eval") {
        if (cfg.n < 3) throw std::invalid_argument("eval: --n must be >= 3");
    }
}

CipollaCoeffs resolve_coeffs(const CliConfig& cfg, int m) {
    if (!cfg.cipolla_file.empty()) return load_coeffs_file(cfg.cipolla_file, m);
    return builtin_coeffs(m);
}

int cmd_coeffs(const CliConfig& cfg, std::ostream& out) {
    CoeffTable table;
    out << "s,i,j,r,b\n";
    for (const auto& [key, value] : table.dump(cfg.s_max, cfg.i_max, cfg.j_max))
        out << key.s << "," << key.i << "," << key.j << "," << key.r << "," << value.get_str()
            << "\n";
    return 0;
}

int cmd_expand(const CliConfig& cfg, std::ostream& out) {
    CipollaCoeffs coeffs = resolve_coeffs(cfg, cfg.order);
    Expansion e = assemble_expansion(coeffs, cfg.order);
    if (cfg.emit_coeffs) {
        out << emit_term_csv(e);
        return 0;
    }
    out << render_expansion(e) << "\n";
    TsFamily ts = extract_ts(e);
    for (int s = 1; s <= ts.order; ++s) out << "T_" << s << " = " << ts.t(s).pretty_x() << "\n";
    return 0;
}

int cmd_eval(const CliConfig& cfg, std::ostream& out) {
    CipollaCoeffs coeffs = resolve_coeffs(cfg, cfg.order);
    Expansion e = assemble_expansion(coeffs, cfg.order);
    EvalContext ctx;
    SumApproxParts parts = eval_sum_approx_parts(e, cfg.n, ctx);
    Real rn = static_cast<Real>(cfg.n);
    out << "S_" << cfg.order << "(" << cfg.n << ") = " << format_real(parts.value) << "\n";
    out << "  log n    = " << format_real(parts.log_n) << "\n";
    out << "  loglog n = " << format_real(parts.loglog_n) << "\n";
    out << "  g(n)     = " << format_real(eval_g(rn, ctx)) << "\n";
    out << "  h_m(n)   = " << format_real(eval_h(rn, cfg.order, ctx)) << "\n";
    for (const auto& [k, value] : parts.term_values)
        out << "  term k=" << k << " = " << format_real(value)
            << (k > 0 ? "  (polynomial value / log^k n)" : "") << "\n";
    out << "  bracket  = " << format_real(parts.bracket) << "\n";
    return 0;
}

int cmd_sieve(const CliConfig& cfg, std::ostream& out) {
    std::vector<long long> grid =
        cfg.grid.empty() ? std::vector<long long>{cfg.upto_count} : cfg.grid;
    out << "n,p_n,sum\n";
    for (const PrimeSumCheckpoint& cp : checkpoint_stream(grid))
        out << cp.count << "," << cp.last_prime << "," << cp.sum.get_str() << "\n";
    return 0;
}

int cmd_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    CipollaCoeffs coeffs = resolve_coeffs(cfg, cfg.order);
    std::vector<long long> grid = cfg.grid.empty() ? default_sweep_grid() : cfg.grid;
    std::vector<ErrorRecord> records = run_error_sweep(grid, cfg.orders, coeffs, {});
    std::string report = emit_report(records, cfg.format);
    if (cfg.out_path.empty()) {
        out << report;
        return 0;
    }
    std::ofstream file(cfg.out_path);
    if (!file) throw std::runtime_error("sweep: cannot open output file " + cfg.out_path);
    file << report;
    err << "wrote " << cfg.out_path << "\n";
    return 0;
}

}  // namespace

int run_check(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    int failures = 0;
    auto report = [&](bool ok, const std::string& label, const std::string& detail = "") {
        if (ok) {
            out << "ok: " << label << "\n";
        } else {
            out << "FAIL: " << label << (detail.empty() ? "" : " -- " + detail) << "\n";
            ++failures;
        }
    };

    try {
        {
            CoeffTable raw(/*use_vanishing_shortcut=*/false);
            bool all_zero = true;
            for (int s = 0; s <= 8 && all_zero; ++s)
                for (int i = 0; i <= 8 && all_zero; ++i)
                    for (int j = 0; j <= 8 && all_zero; ++j)
                        for (int r = std::max(i + 1, 0); r <= j; ++r)
                            if (raw.b_coeff(s, i, j, r) != 0) {
                                all_zero = false;
                                break;
                            }
            report(all_zero, "coefficient recurrence: b(s,i,j,r) = 0 whenever r > i "
                             "(raw recursion, grid s,i,j <= 8)");
        }
        {
            TsFamily ts = extract_ts(assemble_expansion(builtin_coeffs(2), 2));
            bool ok = ts.t(1) == LogLogPoly::deserialize("-5/2,1") &&
                      ts.t(2) == LogLogPoly::deserialize("29/2,-7,1");
            report(ok, "T_1 = x - 5/2 and T_2 = x^2 - 7x + 29/2 (closed-form reference)");
        }
        {
            EvalContext ctx;
            Real d1 = check_li_identity(2, 100, ctx);
            Real d2 = check_li_identity(10, 10000, ctx);
            report(d1 < 1e-9 && d2 < 1e-9,
                   "integral of t/log t equals li(x^2) - li(a^2) to relative 1e-9",
                   "discrepancies " + format_real(d1) + ", " + format_real(d2));
        }
        {
            PrimeSumCheckpoint fast = sum_first_n_primes(10000);
            PrimeSumCheckpoint naive = sum_first_n_primes_naive(10000);
            bool ok = fast == naive && sum_first_n_primes(5).sum == 28 &&
                      sum_first_n_primes(10).sum == 129;
            report(ok, "segmented sieve matches trial division through the 10000th prime");
        }
        if (!cfg.cipolla_file.empty()) {
            try {
                CipollaCoeffs coeffs = load_coeffs_file(cfg.cipolla_file, cfg.order);
                extract_ts(assemble_expansion(coeffs, cfg.order));
                report(true, "coefficient file " + cfg.cipolla_file + " valid through order " +
                                 std::to_string(cfg.order) + " (monic T_s)");
            } catch (const std::exception& e) {
                report(false, "coefficient file " + cfg.cipolla_file, e.what());
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (failures == 0) {
        out << "all checks passed\n";
        return 0;
    }
    err << failures << " check(s) failed\n";
    return 2;
}

CliConfig parse_args(const std::vector<std::string>& args) {
    CliConfig cfg;
    auto app = build_app(cfg);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app->parse(reversed);
    for (const CLI::App* sub : app->get_subcommands()) cfg.subcommand = sub->get_name();
    validate_config(cfg);
    return cfg;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    auto app = build_app(cfg);
    try {
        app->parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app->exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    for (const CLI::App* sub : app->get_subcommands()) cfg.subcommand = sub->get_name();

    try {
        validate_config(cfg);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (cfg.subcommand == "coeffs") return cmd_coeffs(cfg, out);
        if (cfg.subcommand == "expand") return cmd_expand(cfg, out);
        if (cfg.subcommand == "eval") return cmd_eval(cfg, out);
        if (cfg.subcommand == "sieve") return cmd_sieve(cfg, out);
        if (cfg.subcommand == "sweep") return cmd_sweep(cfg, out, err);
        if (cfg.subcommand == "check") return run_check(cfg, out, err);
        err << "error: no subcommand selected\n";
        return 1;
    } catch (const UnsupportedOrder& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace primesum
