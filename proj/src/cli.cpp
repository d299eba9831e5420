#include "stirconv/cli.hpp"

#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stirconv/combinatorics.hpp"
#include "stirconv/identities.hpp"
#include "stirconv/sequences.hpp"
#include "stirconv/series.hpp"

namespace stirconv {

namespace {

using nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(const std::string &s) {
    if (s == "text")
        return Format::Text;
    if (s == "json")
        return Format::Json;
    if (s == "csv")
        return Format::Csv;
    return std::nullopt;
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

int emit_rows(const std::vector<std::vector<BigInt>> &rows, const std::string &kind, int n_max,
              Format format, std::ostream &out) {
    if (format == Format::Json) {
        ordered_json j;
        j["kind"] = kind;
        j["n_max"] = n_max;
        ordered_json jrows = ordered_json::array();
        for (const auto &row : rows) {
            ordered_json jrow = ordered_json::array();
            for (const auto &v : row)
                jrow.push_back(v.str());
            jrows.push_back(std::move(jrow));
        }
        j["rows"] = std::move(jrows);
        out << j.dump(2) << "\n";
        return 0;
    }
    const char *sep = format == Format::Csv ? "," : " ";
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? sep : "") << row[i].str();
        out << "\n";
    }
    return 0;
}

int cmd_table(const std::string &kind, int n_max, Format format, std::ostream &out,
              std::ostream &err) {
    std::vector<std::vector<BigInt>> rows;
    if (kind == "first" || kind == "second") {
        for (int n = 0; n <= n_max; ++n) {
            std::vector<BigInt> row;
            for (int k = 0; k <= n; ++k)
                row.push_back(kind == "first" ? stirling1(n, k) : stirling2(n, k));
            rows.push_back(std::move(row));
        }
    } else if (kind == "lah") {
        for (int n = 1; n <= n_max; ++n) {
            std::vector<BigInt> row;
            for (int m = 1; m <= n; ++m)
                row.push_back(lah(n, m));
            rows.push_back(std::move(row));
        }
    } else {
        err << "error: unknown table kind '" << kind << "' (expected first, second or lah)\n";
        return 2;
    }
    return emit_rows(rows, kind, n_max, format, out);
}

int cmd_qpoly(int n, Route route, Format format, bool ascii, std::ostream &out,
              std::ostream &err) {
    if (format == Format::Csv) {
        err << "error: csv format not supported for qpoly\n";
        return 2;
    }
    Sequences seq;
    MultiPoly q = seq.q_by_route(route, n);
    if (format == Format::Json) {
        ordered_json j;
        j["n"] = n;
        j["route"] = route_name(route);
        j["polynomial"] = q.to_string(ascii);
        out << j.dump(2) << "\n";
    } else {
        out << q.to_string(ascii) << "\n";
    }
    return 0;
}

int cmd_ppoly(int n, const std::string &route, Format format, bool ascii, std::ostream &out,
              std::ostream &err) {
    if (format == Format::Csv) {
        err << "error: csv format not supported for ppoly\n";
        return 2;
    }
    Sequences seq;
    MultiPoly p;
    if (route == "recurrence") {
        p = seq.p_recurrence(n);
    } else if (route == "double-sum") {
        p = seq.p_double_sum(n);
    } else {
        err << "error: unknown route '" << route << "' (expected recurrence or double-sum)\n";
        return 2;
    }
    if (format == Format::Json) {
        ordered_json j;
        j["n"] = n;
        j["route"] = route;
        j["polynomial"] = p.to_string(ascii);
        out << j.dump(2) << "\n";
    } else {
        out << p.to_string(ascii) << "\n";
    }
    return 0;
}

int cmd_series(int order, Format format, bool ascii, std::ostream &out, std::ostream &err) {
    if (format == Format::Csv) {
        err << "error: csv format not supported for series\n";
        return 2;
    }
    PowerSeries s = q_generating_series(order);
    if (format == Format::Json) {
        ordered_json j;
        j["order"] = order;
        ordered_json coeffs = ordered_json::array();
        for (int nn = 0; nn <= order; ++nn)
            coeffs.push_back(s.coeff(nn).to_string(ascii));
        j["coefficients"] = std::move(coeffs);
        out << j.dump(2) << "\n";
    } else {
        for (int nn = 0; nn <= order; ++nn)
            out << s.coeff(nn).to_string(ascii) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string &name, int n_max, bool sample, int jobs, Format format,
               bool ascii, std::ostream &out, std::ostream &err) {
    if (format == Format::Csv) {
        err << "error: csv format not supported for verify\n";
        return 2;
    }
    auto id = identity_from_name(name);
    if (!id) {
        err << "error: unknown identity '" << name << "'; known identities:";
        for (IdentityId known : all_identities())
            err << " " << identity_name(known);
        err << "\n";
        return 2;
    }
    SweepOptions opts;
    opts.jobs = jobs;
    opts.sample = sample;
    VerificationReport report = verify_range(*id, n_max, opts);
    if (format == Format::Json)
        out << report.to_json(ascii).dump(2) << "\n";
    else
        out << report.to_text(ascii);
    return report.passed() ? 0 : 1;
}

int cmd_eval_single_sum(int n, const std::string &xs, const std::string &ys,
                        const std::string &ls, double tol, int max_terms, Format format,
                        std::ostream &out, std::ostream &err) {
    if (format == Format::Csv) {
        err << "error: csv format not supported for eval-single-sum\n";
        return 2;
    }
    Rational x = Rational::from_string(xs);
    Rational y = Rational::from_string(ys);
    Rational lambda = Rational::from_string(ls);

    Sequences seq;
    Rational exact = seq.q_recurrence(n).eval(
        {{Var::X, x}, {Var::Y, y}, {Var::Lambda, lambda}});
    double exact_d = exact.to_double();

    SingleSumResult res{0.0, 0};
    try {
        res = q_single_sum_numeric(n, x, y, lambda, tol, max_terms);
    } catch (const ConvergenceError &e) {
        err << "error: " << e.what() << " (partial sum " << fmt_double(e.partial_sum) << ")\n";
        return 1;
    }
    double abs_dev = std::abs(res.value - exact_d);
    double rel_dev = abs_dev / std::max(1.0, std::abs(exact_d));

    if (format == Format::Json) {
        ordered_json j;
        j["n"] = n;
        j["x"] = x.to_string();
        j["y"] = y.to_string();
        j["lambda"] = lambda.to_string();
        j["value"] = res.value;
        j["terms"] = res.terms_used;
        j["exact"] = exact.to_string();
        j["exact_double"] = exact_d;
        j["abs_deviation"] = abs_dev;
        j["rel_deviation"] = rel_dev;
        out << j.dump(2) << "\n";
    } else {
        out << "value: " << fmt_double(res.value) << "\n";
        out << "terms: " << res.terms_used << "\n";
        out << "exact: " << exact.to_string() << " (" << fmt_double(exact_d) << ")\n";
        out << "abs deviation: " << fmt_double(abs_dev) << "\n";
        out << "rel deviation: " << fmt_double(rel_dev) << "\n";
    }
    return 0;
}

int cmd_bench(int n_max, Format format, std::ostream &out) {
    struct Row {
        const char *route;
        int n;
        long long micros;
    };
    std::vector<Row> rows;
    for (Route route : {Route::Recurrence, Route::DoubleSum, Route::TripleSum, Route::Series}) {
        for (int n = 0; n <= n_max; ++n) {
            Sequences seq; // fresh caches: timings are per-route, per-n
            auto start = std::chrono::steady_clock::now();
            MultiPoly q = seq.q_by_route(route, n);
            auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            (void)q;
            rows.push_back({route_name(route), n, us});
        }
    }
    if (format == Format::Json) {
        ordered_json j = ordered_json::array();
        for (const auto &r : rows) {
            ordered_json entry;
            entry["route"] = r.route;
            entry["n"] = r.n;
            entry["micros"] = r.micros;
            j.push_back(std::move(entry));
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    const char *sep = format == Format::Csv ? "," : " ";
    out << "route" << sep << "n" << sep << "micros\n";
    for (const auto &r : rows)
        out << r.route << sep << r.n << sep << r.micros << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact Stirling-number sequence construction and identity verification"};
    app.name("stirconv");
    app.require_subcommand(1);

    std::string format_name = "text";
    bool ascii = false;
    int jobs = 1;
    app.add_option("--format", format_name, "Output format: text, json or csv")
        ->capture_default_str();
    app.add_flag("--ascii", ascii, "Render lambda as 'L' instead of the Greek letter");
    app.add_option("--jobs", jobs, "Worker threads for verify sweeps")
        ->check(CLI::PositiveNumber);

    auto *table = app.add_subcommand("table", "Emit a number triangle (first, second, lah)");
    std::string table_kind = "second";
    int table_n_max = 8;
    table->add_option("--kind", table_kind, "Triangle kind: first, second or lah")
        ->capture_default_str();
    table->add_option("--n-max", table_n_max, "Largest row index")
        ->check(CLI::NonNegativeNumber);

    auto *qpoly = app.add_subcommand("qpoly", "Print Q_n in canonical form");
    int qpoly_n = 0;
    std::string qpoly_route = "recurrence";
    qpoly->add_option("--n", qpoly_n, "Sequence index")->required()->check(
        CLI::NonNegativeNumber);
    qpoly->add_option("--route", qpoly_route,
                      "Route: recurrence, double-sum, triple-sum or series")
        ->capture_default_str();

    auto *ppoly = app.add_subcommand("ppoly", "Print P_n in canonical form");
    int ppoly_n = 1;
    std::string ppoly_route = "recurrence";
    ppoly->add_option("--n", ppoly_n, "Sequence index (starts at 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    ppoly->add_option("--route", ppoly_route, "Route: recurrence or double-sum")
        ->capture_default_str();

    auto *series = app.add_subcommand("series", "Print generating-series coefficients 0..N");
    int series_order = kDefaultSeriesOrder;
    series->add_option("--order", series_order, "Truncation order")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);

    auto *verify = app.add_subcommand("verify", "Verify an identity over a range");
    std::string verify_identity;
    int verify_n_max = 8;
    bool verify_sample = false;
    verify->add_option("--identity", verify_identity, "Identity name (see list on error)")
        ->required();
    verify->add_option("--n-max", verify_n_max, "Sweep bound")->check(CLI::PositiveNumber);
    verify->add_flag("--sample", verify_sample,
                     "Also compare both sides at random rational points");

    auto *evalss = app.add_subcommand("eval-single-sum",
                                      "Numerically sum the infinite single-sum formula");
    int evalss_n = 0;
    std::string evalss_x, evalss_y = "1", evalss_lambda = "0";
    double evalss_tol = 1e-12;
    int evalss_max_terms = 100000;
    evalss->add_option("--n", evalss_n, "Sequence index")->required()->check(
        CLI::NonNegativeNumber);
    evalss->add_option("--x", evalss_x, "Rational p/q with x < 1/2")->required();
    evalss->add_option("--y", evalss_y, "Rational p/q")->capture_default_str();
    evalss->add_option("--lambda", evalss_lambda, "Rational p/q")->capture_default_str();
    evalss->add_option("--tol", evalss_tol, "Relative convergence tolerance")
        ->capture_default_str();
    evalss->add_option("--max-terms", evalss_max_terms, "Term budget")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto *bench = app.add_subcommand("bench", "Per-route wall-clock timings for Q_n");
    int bench_n_max = 10;
    bench->add_option("--n-max", bench_n_max, "Largest index timed")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);

    // Let global flags (--format, --ascii, --jobs) appear after the subcommand too.
    for (CLI::App *sub : app.get_subcommands({}))
        sub->fallthrough();

    std::vector<const char *> argv;
    argv.push_back("stirconv");
    for (const auto &a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err); // prints the right (sub)command help, returns 0
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    auto format = parse_format(format_name);
    if (!format) {
        err << "error: unknown format '" << format_name << "'\n";
        return 2;
    }

    try {
        if (table->parsed())
            return cmd_table(table_kind, table_n_max, *format, out, err);
        if (qpoly->parsed()) {
            auto route = route_from_name(qpoly_route);
            if (!route) {
                err << "error: unknown route '" << qpoly_route << "'\n";
                return 2;
            }
            return cmd_qpoly(qpoly_n, *route, *format, ascii, out, err);
        }
        if (ppoly->parsed())
            return cmd_ppoly(ppoly_n, ppoly_route, *format, ascii, out, err);
        if (series->parsed())
            return cmd_series(series_order, *format, ascii, out, err);
        if (verify->parsed())
            return cmd_verify(verify_identity, verify_n_max, verify_sample, jobs, *format,
                              ascii, out, err);
        if (evalss->parsed())
            return cmd_eval_single_sum(evalss_n, evalss_x, evalss_y, evalss_lambda, evalss_tol,
                                       evalss_max_terms, *format, out, err);
        if (bench->parsed())
            return cmd_bench(bench_n_max, *format, out);
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand given\n";
    return 2;
}

} // namespace stirconv
