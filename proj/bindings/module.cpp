#include "domblab/pcf.hpp"
#include "domblab/suite.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

using namespace domblab;

std::vector<std::string> series_coeff_strings(const QSeries& s) {
    std::vector<std::string> out;
    long lo = std::min<long>(s.valuation(), 0);
    for (long n = lo; n <= s.trunc(); ++n) out.push_back(rat_str(s.coeff(n)));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact and high-precision building blocks for the Domb "
              "sequence laboratory; big numbers cross the boundary as "
              "strings to keep them exact.";

    m.def("domb_direct",
          [](long n) { return Rat(domb_direct(n)).str(); },
          py::arg("n"), "D_n from the defining binomial sum");

    m.def(
        "sequence_table",
        [](long n_max) {
            auto t = build_table(n_max);
            py::dict out;
            std::vector<std::string> d, b;
            for (const auto& x : t.d) d.push_back(Rat(x).str());
            for (const auto& x : t.b) b.push_back(rat_str(x));
            out["n_max"] = t.n_max;
            out["domb"] = d;
            out["companion"] = b;
            return out;
        },
        py::arg("n_max"), "Both sequences through n_max, as strings");

    m.def(
        "apery_ratio",
        [](long n) {
            auto t = build_table(n);
            return rat_str(apery_ratio(t, n));
        },
        py::arg("n"), "B_n / D_n as an exact rational string");

    m.def(
        "wronskian",
        [](long n) {
            auto t = build_table(n);
            return rat_str(wronskian(t, n).value);
        },
        py::arg("n"));

    m.def(
        "telescoped_sum",
        [](long n_terms) {
            auto t = build_table(n_terms);
            auto s = telescoped_sum(t, n_terms);
            return py::make_tuple(rat_str(s.direct), rat_str(s.closed));
        },
        py::arg("n_terms"),
        "Direct partial sum and its closed form, as rational strings");

    m.def(
        "convergents",
        [](long depth) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& c : convergents(domb_pcf(), depth))
                out.emplace_back(Rat(c.p).str(), Rat(c.q).str());
            return out;
        },
        py::arg("depth"), "Continued fraction convergents (P_n, Q_n)");

    m.def(
        "hauptmodul_coeffs",
        [](long trunc) {
            return series_coeff_strings(hauptmodul_series(trunc).truncated(trunc));
        },
        py::arg("trunc"), "xi coefficients from q^0 through q^trunc");

    m.def(
        "weight2_coeffs",
        [](long trunc) {
            return series_coeff_strings(weight2_series(trunc).truncated(trunc));
        },
        py::arg("trunc"));

    m.def(
        "eichler_coeffs",
        [](long trunc) {
            return series_coeff_strings(eichler_series(trunc).truncated(trunc));
        },
        py::arg("trunc"));

    m.def("indicial_roots", []() {
        auto data = indicial_data();
        std::vector<std::string> out;
        for (const auto& r : data.roots) out.push_back(rat_str(r));
        return out;
    });

    m.def(
        "zeta3",
        [](unsigned digits) {
            PrecisionContext ctx;
            ctx.precision_bits = static_cast<unsigned>(digits * 3.33) + 64;
            ctx.tol_digits = digits;
            Real z = zeta3(ctx);
            return real_str(z, digits);
        },
        py::arg("digits") = 30, "Reference zeta(3) to the given digit count");

    m.def(
        "apery_limit_estimate",
        [](long n, unsigned digits) {
            auto t = build_table(n);
            PrecisionGuard guard(static_cast<unsigned>(digits * 3.33) + 64);
            return real_str(Real(apery_ratio(t, n)), digits);
        },
        py::arg("n"), py::arg("digits") = 30,
        "B_n / D_n as a decimal string");

    m.def(
        "run_suite",
        [](long n_max, long trunc_exact, long trunc_analytic,
           unsigned precision_bits, unsigned tol_digits, bool exact,
           bool analytic) {
            RunConfig cfg;
            cfg.n_max = n_max;
            cfg.trunc_exact = trunc_exact;
            cfg.trunc_analytic = trunc_analytic;
            cfg.precision_bits = precision_bits;
            cfg.tol_digits = tol_digits;
            cfg.run_exact = exact;
            cfg.run_analytic = analytic;
            return report_json(run_suite(cfg));
        },
        py::arg("n_max") = 500, py::arg("trunc_exact") = 50,
        py::arg("trunc_analytic") = 400, py::arg("precision_bits") = 256,
        py::arg("tol_digits") = 25, py::arg("exact") = true,
        py::arg("analytic") = true,
        "Full identity-check suite; returns the JSON report");
}
