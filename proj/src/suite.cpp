#include "domblab/suite.hpp"

#include "domblab/pcf.hpp"

#include <json.hpp>

#include <ostream>

namespace domblab {

namespace {

using ordered_json = nlohmann::ordered_json;

CheckResult exact_count(std::string id, long failures, std::string params) {
    return make_check(std::move(id), Real(failures), Real(0), true,
                      std::move(params));
}

long count_diffs(const QSeries& a, const QSeries& b, long through) {
    long bad = 0;
    for (long n = std::min(a.valuation(), b.valuation()); n <= through; ++n)
        if (a.coeff(n) != b.coeff(n)) ++bad;
    return bad;
}

void append_sequence_checks(std::vector<CheckResult>& out,
                            const SequenceTable& table, const RunConfig& cfg) {
    {
        long top = std::min<long>(30, cfg.n_max);
        long bad = 0;
        for (long n = 0; n <= top; ++n)
            if (domb_direct(n) != table.d[static_cast<size_t>(n)]) ++bad;
        out.push_back(exact_count("seq_recurrence_vs_direct", bad,
                                  "n<=" + std::to_string(top)));
    }
    {
        long bad = 0;
        for (long n = 1; n <= cfg.n_max; ++n)
            if (wronskian(table, n).value != wronskian_closed_form(n)) ++bad;
        out.push_back(exact_count("seq_wronskian_closed_form", bad,
                                  "n<=" + std::to_string(cfg.n_max)));
    }
    {
        long bad = 0;
        for (const auto& row : telescoped_sweep(table, cfg.n_max))
            if (row.direct != row.closed) ++bad;
        out.push_back(exact_count("seq_telescoping", bad,
                                  "N<=" + std::to_string(cfg.n_max)));
    }
    {
        // Ratio increments are the telescoping terms: positive and O(4^-n).
        long bad = 0;
        Rat prev = apery_ratio(table, 1);
        for (long n = 2; n <= cfg.n_max; ++n) {
            Rat cur = apery_ratio(table, n);
            Rat inc = cur - prev;
            Int four_n = 1;
            mpz_mul_2exp(four_n.backend().data(), four_n.backend().data(),
                         static_cast<mp_bitcnt_t>(2 * n));
            if (!(inc > 0 && inc < Rat(Int(1000), four_n))) ++bad;
            prev = cur;
        }
        out.push_back(exact_count("seq_ratio_monotone", bad,
                                  "2<=n<=" + std::to_string(cfg.n_max)));
    }
}

void append_pcf_checks(std::vector<CheckResult>& out,
                       const SequenceTable& table, const RunConfig& cfg) {
    long depth = std::min<long>(200, cfg.n_max - 1);
    PCFSpec spec = domb_pcf();
    auto conv = convergents(spec, depth);
    {
        long bad = 0;
        Int prod = 1;  // prod_{k<=n} 16 k^6
        for (long n = 1; n <= depth; ++n) {
            Int k6 = int_pow(Int(n), 6);
            prod *= 16 * k6;
            Int neg = -prod;
            Rat expected(neg);
            if (cross_difference(spec, conv, n) != expected) ++bad;
        }
        out.push_back(exact_count("pcf_determinant", bad,
                                  "n<=" + std::to_string(depth)));
    }
    {
        auto rep = verify_normalization(table, depth);
        out.push_back(exact_count(
            "pcf_normalization", rep.ok ? 0 : 1,
            rep.ok ? "n<=" + std::to_string(depth)
                   : "first failure at n=" + std::to_string(rep.first_failure)));
    }
    {
        long bad = 0;
        for (long n = 0; n <= depth; ++n) {
            Rat lhs = Rat(conv[static_cast<size_t>(n)].p) /
                      Rat(conv[static_cast<size_t>(n)].q);
            Rat rhs = Rat(table.d[static_cast<size_t>(n + 1)]) /
                      (Rat(2) * table.b[static_cast<size_t>(n + 1)]);
            if (lhs != rhs) ++bad;
        }
        out.push_back(exact_count("pcf_ratio_law", bad,
                                  "n<=" + std::to_string(depth)));
    }
    {
        long bad = 0;
        for (long n = 2; n <= depth; ++n) {
            Rat cur = Rat(conv[static_cast<size_t>(n)].p) /
                      Rat(conv[static_cast<size_t>(n)].q);
            Rat before = Rat(conv[static_cast<size_t>(n - 1)].p) /
                         Rat(conv[static_cast<size_t>(n - 1)].q);
            Rat delta = cur - before;
            if (delta < 0) delta = -delta;
            Int four_n = 1;
            mpz_mul_2exp(four_n.backend().data(), four_n.backend().data(),
                         static_cast<mp_bitcnt_t>(2 * n));
            if (!(delta < Rat(Int(1000), four_n))) ++bad;
        }
        out.push_back(exact_count("pcf_convergence_rate", bad,
                                  "2<=n<=" + std::to_string(depth)));
    }
}

void append_series_checks(std::vector<CheckResult>& out,
                          const RunConfig& cfg) {
    long t = cfg.trunc_exact;
    SequenceTable table = build_table(t + 1);
    QSeries xi = hauptmodul_series(t);
    QSeries a2 = weight2_series(t);
    QSeries g4 = weight4_series(t);

    {
        QSeries lhs = QSeries::compose(domb_z_series(table, t), xi);
        long through = std::min(lhs.trunc(), a2.trunc());
        out.push_back(exact_count("series_parametrization",
                                  count_diffs(lhs, a2, through),
                                  "through q^" + std::to_string(through)));
    }
    {
        QSeries phi = d3_eichler_series(t);
        long through = std::min(phi.trunc(), g4.trunc());
        long bad = count_diffs(phi, g4.neg(), through);
        if (through < 5) bad += 1;  // must cover the Sturm bound of 4
        out.push_back(exact_count("series_sturm_phi", bad,
                                  "through q^" + std::to_string(through) +
                                      " sturm_bound=4"));
    }
    {
        QSeries direct = eichler_series(t, 0);
        QSeries pulled = QSeries::compose(companion_z_series(table, t), xi) / a2;
        long through = std::min(direct.trunc(), pulled.trunc());
        out.push_back(exact_count("series_eichler_expansion",
                                  count_diffs(direct, pulled, through),
                                  "through q^" + std::to_string(through)));
    }
    {
        QSeries e = eichler_series(t, 0);
        QSeries lhs =
            e.q_derivative().q_derivative().q_derivative() + g4;
        long bad = lhs.is_zero() ? 0 : 1;
        out.push_back(exact_count("series_d3_eichler", bad,
                                  "through q^" + std::to_string(lhs.trunc())));
    }
    {
        auto check = theta_ode_check(domb_z_series(table, t),
                                     QSeries::zero(QSeries::kExactTrunc));
        out.push_back(exact_count(
            "ode_domb_homogeneous", check.ok ? 0 : 1,
            "through z^" + std::to_string(check.checked_through)));
    }
    {
        auto check =
            theta_ode_check(companion_z_series(table, t),
                            QSeries::monomial(1, 1, QSeries::kExactTrunc));
        out.push_back(exact_count(
            "ode_companion_inhomogeneous", check.ok ? 0 : 1,
            "through z^" + std::to_string(check.checked_through)));
    }
    {
        QSeries res = ordinary_ode_apply(domb_z_series(table, t));
        out.push_back(exact_count("ode_ordinary_form", res.is_zero() ? 0 : 1,
                                  "through z^" + std::to_string(res.trunc())));
    }
    {
        auto data = indicial_data();
        Poly<Rat> expected(
            std::vector<Rat>{Rat(0), Rat(-6), Rat(18), Rat(-12)});
        long bad = 0;
        if (!(data.polynomial == expected)) ++bad;
        if (!(data.roots[0] == 0 && data.roots[1] == Rat(1, 2) &&
              data.roots[2] == 1))
            ++bad;
        out.push_back(exact_count("indicial_roots", bad, "roots={0,1/2,1}"));
    }
    out.push_back(l_coefficient_check(10000));
}

void append_analytic_checks(std::vector<CheckResult>& out,
                            const RunConfig& cfg) {
    PrecisionContext ctx{cfg.precision_bits, cfg.tol_digits,
                         cfg.trunc_analytic};
    {
        // Demanding more digits than the precision budget carries is an
        // explicit failure, not a silent one.
        long supported =
            static_cast<long>(bits_to_digits10(cfg.precision_bits)) - 8;
        bool feasible = static_cast<long>(cfg.tol_digits) <= supported;
        out.push_back(make_check(
            "precision_feasibility", Real(feasible ? 0 : 1), Real(0), false,
            feasible ? "tol_digits within precision budget"
                     : "increase precision_bits or lower tol_digits"));
    }
    auto taus = default_tau_samples(ctx);
    for (auto& c : check_slash_identities(taus, ctx)) out.push_back(c);
    for (auto& c : check_e_transform(taus, ctx)) out.push_back(c);
    std::vector<Rat> ys{Rat(1, 2), Rat(4, 5), Rat(1), Rat(3, 2), Rat(2)};
    for (auto& c : check_line_functional(ys, ctx)) out.push_back(c);
    for (auto& c : check_fixed_point(ctx)) out.push_back(c);
    for (auto& c : l_special_values(ctx)) out.push_back(c);
    out.push_back(l_numeric_check(6, 100000, ctx));
}

} // namespace

SuiteReport run_suite(const RunConfig& config) {
    if (config.n_max < 2)
        throw std::invalid_argument("run_suite: n_max must be >= 2");
    if (config.trunc_exact < 6)
        throw std::invalid_argument("run_suite: trunc_exact must be >= 6");
    if (config.trunc_analytic < 10)
        throw std::invalid_argument("run_suite: trunc_analytic must be >= 10");
    SuiteReport rep;
    rep.config = config;
    if (config.run_exact) {
        SequenceTable table = build_table(config.n_max);
        append_sequence_checks(rep.checks, table, config);
        append_pcf_checks(rep.checks, table, config);
        append_series_checks(rep.checks, config);
    }
    if (config.run_analytic) {
        try {
            append_analytic_checks(rep.checks, config);
        } catch (const TailBoundError& err) {
            rep.checks.push_back(make_check("analytic_evaluation", Real(1),
                                            Real(0), false, err.what()));
        }
    }
    for (const auto& c : rep.checks) {
        if (c.pass) {
            ++rep.passed;
        } else {
            ++rep.failed;
            if (c.exact) ++rep.failed_exact;
        }
    }
    return rep;
}

std::string report_json(const SuiteReport& rep) {
    ordered_json j;
    j["version"] = "0.1.0";
    j["config"] = {{"n_max", rep.config.n_max},
                   {"trunc_exact", rep.config.trunc_exact},
                   {"trunc_analytic", rep.config.trunc_analytic},
                   {"precision_bits", rep.config.precision_bits},
                   {"tol_digits", rep.config.tol_digits},
                   {"run_exact", rep.config.run_exact},
                   {"run_analytic", rep.config.run_analytic}};
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json row;
        row["id"] = c.id;
        row["kind"] = c.exact ? "exact" : "analytic";
        row["pass"] = c.pass;
        row["residual"] = real_str(c.residual, c.residual.precision());
        row["tolerance"] = real_str(c.tolerance, c.tolerance.precision());
        row["params"] = c.params;
        checks.push_back(row);
    }
    j["checks"] = checks;
    j["summary"] = {{"pass", rep.passed},
                    {"fail", rep.failed},
                    {"fail_exact", rep.failed_exact}};
    return j.dump(2) + "\n";
}

void write_report(std::ostream& os, const SuiteReport& rep,
                  const std::string& format) {
    if (format == "json") {
        os << report_json(rep);
        return;
    }
    if (format == "csv") {
        os << "id,kind,pass,residual,tolerance,params\n";
        for (const auto& c : rep.checks)
            os << c.id << "," << (c.exact ? "exact" : "analytic") << ","
               << (c.pass ? "1" : "0") << "," << real_str(c.residual, 20)
               << "," << real_str(c.tolerance, 20) << ",\"" << c.params
               << "\"\n";
        return;
    }
    if (format == "text") {
        for (const auto& c : rep.checks)
            os << (c.pass ? "PASS" : "FAIL") << " " << c.id
               << " residual=" << real_str(c.residual, 8)
               << " tol=" << real_str(c.tolerance, 8) << " [" << c.params
               << "]\n";
        os << rep.passed << " passed, " << rep.failed << " failed ("
           << rep.failed_exact << " exact)\n";
        return;
    }
    throw std::invalid_argument("unknown report format: " + format);
}

} // namespace domblab
