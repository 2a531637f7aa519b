#include "domblab/pcf.hpp"
#include "domblab/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using domblab::Rat;
using domblab::Real;
using ordered_json = nlohmann::ordered_json;

struct CommonOpts {
    long n_max = 500;
    unsigned precision_bits = 256;
    unsigned tol_digits = 25;
    std::string format;
    std::string out_path;
};

void emit(const CommonOpts& opts, const std::string& payload) {
    if (opts.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + opts.out_path);
    out << payload;
}

int cmd_sequences(const CommonOpts& opts) {
    auto table = domblab::build_table(opts.n_max);
    domblab::PrecisionGuard guard(opts.precision_bits);

    struct Row {
        long n;
        std::string d, b, ratio;
        bool wronskian_ok;
    };
    std::vector<Row> rows;
    rows.reserve(static_cast<size_t>(opts.n_max) + 1);
    bool all_ok = true;
    for (long n = 0; n <= opts.n_max; ++n) {
        Row row;
        row.n = n;
        row.d = domblab::rat_str(Rat(table.d[static_cast<size_t>(n)]));
        row.b = domblab::rat_str(table.b[static_cast<size_t>(n)]);
        Rat ratio = n == 0 ? Rat(0) : domblab::apery_ratio(table, n);
        row.ratio = domblab::real_str(Real(ratio), opts.tol_digits);
        row.wronskian_ok =
            n == 0 || domblab::wronskian(table, n).value ==
                          domblab::wronskian_closed_form(n);
        all_ok = all_ok && row.wronskian_ok;
        rows.push_back(std::move(row));
    }

    std::ostringstream os;
    if (opts.format == "csv") {
        os << "n,domb,companion,ratio,wronskian_ok\n";
        for (const auto& r : rows)
            os << r.n << "," << r.d << "," << r.b << "," << r.ratio << ","
               << (r.wronskian_ok ? "1" : "0") << "\n";
    } else if (opts.format == "text") {
        for (const auto& r : rows)
            os << "n=" << r.n << " D=" << r.d << " B=" << r.b
               << " B/D=" << r.ratio
               << " wronskian=" << (r.wronskian_ok ? "ok" : "FAIL") << "\n";
    } else {
        ordered_json j;
        j["n_max"] = opts.n_max;
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["n"] = r.n;
            row["domb"] = r.d;
            row["companion"] = r.b;
            row["ratio"] = r.ratio;
            row["wronskian_ok"] = r.wronskian_ok;
            arr.push_back(row);
        }
        j["rows"] = arr;
        os << j.dump(2) << "\n";
    }
    emit(opts, os.str());
    return all_ok ? 0 : 2;
}

int cmd_constants(const CommonOpts& opts) {
    domblab::PrecisionContext ctx{opts.precision_bits, opts.tol_digits, 400};
    domblab::PrecisionGuard guard(ctx);
    Real z3 = domblab::zeta3(ctx);
    auto table = domblab::build_table(opts.n_max);

    struct Entry {
        std::string name;
        Real reference;
        Real estimate;
    };
    std::vector<Entry> entries;
    entries.push_back({"apery_limit", Real(7) / 24 * z3,
                       Real(domblab::apery_ratio(table, opts.n_max))});
    {
        auto t = domblab::telescoped_sum(table, opts.n_max);
        entries.push_back({"telescoped_sum", Real(56) / 3 * z3, Real(t.closed)});
    }
    {
        long depth = std::min<long>(opts.n_max, 400);
        auto est = domblab::value_estimate(domblab::domb_pcf(), depth, ctx);
        entries.push_back({"pcf_value", Real(12) / (7 * z3), est.value});
    }

    auto digits_agree = [&](const Entry& e) -> long {
        Real diff = abs(e.reference - e.estimate);
        if (diff == 0) return static_cast<long>(opts.tol_digits);
        long d = static_cast<long>(-log10(diff).convert_to<double>());
        if (d < 0) d = 0;
        if (d > static_cast<long>(opts.tol_digits))
            d = static_cast<long>(opts.tol_digits);
        return d;
    };

    std::ostringstream os;
    if (opts.format == "json") {
        ordered_json j;
        j["n_max"] = opts.n_max;
        j["precision_bits"] = opts.precision_bits;
        ordered_json arr = ordered_json::array();
        for (const auto& e : entries) {
            ordered_json row;
            row["name"] = e.name;
            row["reference"] = domblab::real_str(e.reference, opts.tol_digits);
            row["estimate"] = domblab::real_str(e.estimate, opts.tol_digits);
            row["digits_agree"] = digits_agree(e);
            arr.push_back(row);
        }
        j["constants"] = arr;
        os << j.dump(2) << "\n";
    } else {
        for (const auto& e : entries)
            os << e.name << "\n  reference "
               << domblab::real_str(e.reference, opts.tol_digits)
               << "\n  estimate  "
               << domblab::real_str(e.estimate, opts.tol_digits)
               << "\n  digits_agree " << digits_agree(e) << "\n";
    }
    emit(opts, os.str());
    return 0;
}

int cmd_verify(const CommonOpts& opts, const std::string& suite,
               long trunc_exact, long trunc_analytic) {
    domblab::RunConfig cfg;
    cfg.n_max = opts.n_max;
    cfg.trunc_exact = trunc_exact;
    cfg.trunc_analytic = trunc_analytic;
    cfg.precision_bits = opts.precision_bits;
    cfg.tol_digits = opts.tol_digits;
    cfg.run_exact = suite == "exact" || suite == "all";
    cfg.run_analytic = suite == "analytic" || suite == "all";
    auto rep = domblab::run_suite(cfg);

    std::ostringstream os;
    domblab::write_report(os, rep, opts.format.empty() ? "json" : opts.format);
    emit(opts, os.str());
    if (rep.failed_exact > 0) return 2;
    return rep.failed > 0 ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified identity checks for the Domb sequence, its "
                 "companion, and the associated modular objects"};
    app.require_subcommand(1);

    CommonOpts seq_opts, ver_opts, con_opts;
    std::string suite = "all";
    long trunc_both = 0;
    long trunc_exact = 50;
    long trunc_analytic = 400;

    auto add_common = [](CLI::App* cmd, CommonOpts& o,
                         const std::string& default_format) {
        o.format = default_format;
        cmd->add_option("--n-max", o.n_max, "Deepest index to tabulate")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--precision-bits", o.precision_bits,
                        "Working precision in bits");
        cmd->add_option("--tol-digits", o.tol_digits,
                        "Decimal digits for tolerances and display");
        cmd->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", o.out_path, "Write the report to a file");
    };

    auto* seq = app.add_subcommand(
        "sequences", "Tabulate the sequences with per-row Wronskian status");
    add_common(seq, seq_opts, "json");

    auto* ver = app.add_subcommand("verify", "Run the identity check suite");
    add_common(ver, ver_opts, "json");
    ver->add_option("--suite", suite, "Which checks to run")
        ->check(CLI::IsMember({"exact", "analytic", "all"}));
    ver->add_option("--trunc", trunc_both,
                    "Truncation order for both suites (defaults: 50 exact, "
                    "400 analytic)")
        ->check(CLI::PositiveNumber);
    auto* opt_te =
        ver->add_option("--trunc-exact", trunc_exact,
                        "Truncation order for exact series identities");
    auto* opt_ta = ver->add_option("--trunc-analytic", trunc_analytic,
                                   "Truncation order for analytic evaluation");

    auto* con = app.add_subcommand(
        "constants", "Reference constants next to their artifact estimates");
    add_common(con, con_opts, "text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    if (trunc_both > 0) {
        if (opt_te->count() == 0) trunc_exact = trunc_both;
        if (opt_ta->count() == 0) trunc_analytic = trunc_both;
    }

    try {
        if (seq->parsed()) return cmd_sequences(seq_opts);
        if (ver->parsed())
            return cmd_verify(ver_opts, suite, trunc_exact, trunc_analytic);
        if (con->parsed()) return cmd_constants(con_opts);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 64;
}
