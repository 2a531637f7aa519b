#include "domblab/pcf.hpp"

namespace domblab {

ZeroDenominatorError::ZeroDenominatorError(long idx)
    : std::runtime_error("continuant denominator vanished at index " +
                         std::to_string(idx)),
      index(idx) {}

PCFSpec domb_pcf() {
    PCFSpec spec;
    spec.a = Poly<Int>({Int(2), Int(9), Int(15), Int(10)});
    spec.b = Poly<Int>({Int(0), Int(0), Int(0), Int(0), Int(0), Int(0), Int(-16)});
    return spec;
}

std::vector<ConvergentPair> convergents(const PCFSpec& spec, long n_max) {
    if (n_max < 0) throw std::out_of_range("convergents: negative depth");
    std::vector<ConvergentPair> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    Int p_prev = 1, q_prev = 0;  // index -1
    Int p = spec.a.eval(Int(0)), q = 1;
    out.push_back({0, p, q});
    for (long n = 1; n <= n_max; ++n) {
        Int an = spec.a.eval(Int(n));
        Int bn = spec.b.eval(Int(n));
        Int p_next = an * p + bn * p_prev;
        Int q_next = an * q + bn * q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
        out.push_back({n, p, q});
    }
    return out;
}

Rat cross_difference(const PCFSpec& spec,
                     const std::vector<ConvergentPair>& c, long n) {
    if (n < 1 || n >= static_cast<long>(c.size()))
        throw std::out_of_range("cross_difference: index outside convergents");
    (void)spec;
    Int v = c[static_cast<size_t>(n)].p * c[static_cast<size_t>(n - 1)].q -
            c[static_cast<size_t>(n - 1)].p * c[static_cast<size_t>(n)].q;
    return Rat(v);
}

NormalizationReport verify_normalization(const SequenceTable& table,
                                         long n_check) {
    if (n_check + 1 > table.n_max)
        throw std::invalid_argument("verify_normalization: table too short");
    NormalizationReport rep;
    auto conv = convergents(domb_pcf(), n_check);
    Int fact = 1;   // (n+1)!
    Int two = 2;    // 2^{n+1}
    for (long n = 0; n <= n_check; ++n) {
        fact *= n + 1;
        Int f3 = fact * fact * fact;
        bool ok_p = conv[static_cast<size_t>(n)].p * two ==
                    f3 * table.d[static_cast<size_t>(n + 1)];
        Int pow_n = two / 2;  // 2^n
        Rat lhs_q = Rat(conv[static_cast<size_t>(n)].q) * Rat(pow_n);
        bool ok_q = lhs_q == Rat(f3) * table.b[static_cast<size_t>(n + 1)];
        if (!(ok_p && ok_q)) {
            rep.ok = false;
            rep.first_failure = n;
            return rep;
        }
        two *= 2;
    }
    return rep;
}

ValueEstimate value_estimate(const PCFSpec& spec, long n_max,
                             const PrecisionContext& ctx) {
    if (n_max < 1) throw std::out_of_range("value_estimate: depth must be >= 1");
    auto conv = convergents(spec, n_max);
    const auto& last = conv[static_cast<size_t>(n_max)];
    const auto& prev = conv[static_cast<size_t>(n_max - 1)];
    if (last.q == 0) throw ZeroDenominatorError(n_max);
    if (prev.q == 0) throw ZeroDenominatorError(n_max - 1);
    PrecisionGuard guard(ctx);
    ValueEstimate est;
    est.value = Real(last.p) / Real(last.q);
    Real before = Real(prev.p) / Real(prev.q);
    est.step_bound = abs(est.value - before);
    return est;
}

} // namespace domblab
