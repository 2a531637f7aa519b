#include "domblab/modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace domblab {

namespace {

// (1 - q^k) * c in place; descending index keeps the old values live.
void mul_binomial(std::vector<Rat>& c, long k) {
    for (long i = static_cast<long>(c.size()) - 1; i >= k; --i)
        c[static_cast<size_t>(i)] -= c[static_cast<size_t>(i - k)];
}

QSeries termwise(const QSeries& y, const Poly<Rat>& p) {
    long lo = y.valuation();
    if (y.is_zero()) return QSeries::zero(y.trunc());
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(y.trunc() - lo + 1));
    for (long m = lo; m <= y.trunc(); ++m)
        c.push_back(p.eval(Rat(m)) * y.coeff(m));
    return QSeries(lo, std::move(c), y.trunc());
}

std::vector<Int> int_divisors(const Int& value) {
    Int v = value < 0 ? Int(-value) : value;
    if (v == 0) throw std::logic_error("divisors of zero requested");
    std::vector<Int> out;
    for (Int d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            Int other = v / d;
            if (other != d) out.push_back(other);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All rational roots with multiplicity, via the rational root test plus
// deflation. Meant for the small polynomials showing up in indicial data.
std::vector<Rat> rational_roots(Poly<Rat> p) {
    std::vector<Rat> roots;
    if (p.degree() < 1) return roots;
    // Clear denominators.
    Int scale = 1;
    for (long k = 0; k <= p.degree(); ++k) {
        Int den = denominator(p.coeff(k));
        scale = scale / gcd(scale, den) * den;
    }
    std::vector<Rat> work;
    for (long k = 0; k <= p.degree(); ++k) work.push_back(p.coeff(k) * Rat(scale));

    auto deflate = [&](const Rat& r) {
        // Synthetic division by (x - r); remainder is known to vanish.
        std::vector<Rat> q(work.size() - 1, Rat(0));
        Rat carry = work.back();
        for (long k = static_cast<long>(work.size()) - 2; k >= 0; --k) {
            q[static_cast<size_t>(k)] = carry;
            carry = work[static_cast<size_t>(k)] + r * carry;
        }
        work = std::move(q);
    };

    while (work.size() > 1 && work.front() == 0) {
        roots.emplace_back(0);
        work.erase(work.begin());
    }
    while (work.size() > 1) {
        Poly<Rat> cur(work);
        Int a0 = numerator(cur.coeff(0));
        Int alead = numerator(cur.coeff(cur.degree()));
        bool found = false;
        for (const Int& num : int_divisors(a0)) {
            for (const Int& den : int_divisors(alead)) {
                for (int sign : {1, -1}) {
                    Int signed_num = sign < 0 ? Int(-num) : num;
                    Rat cand(signed_num, den);
                    if (cur.eval(cand) == 0) {
                        roots.push_back(cand);
                        deflate(cand);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
        while (work.size() > 1 && work.front() == 0) {
            roots.emplace_back(0);
            work.erase(work.begin());
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Poly<Rat> falling_factorial(long k) {
    Poly<Rat> x({Rat(0), Rat(1)});
    Poly<Rat> acc(Rat(1));
    for (long i = 0; i < k; ++i) acc = acc * (x - Poly<Rat>(Rat(i)));
    return acc;
}

} // namespace

std::vector<long long> sigma3_table(long n_max) {
    if (n_max < 0 || n_max > 1000000)
        throw std::out_of_range("sigma3_table: supported range is 0..10^6");
    std::vector<long long> s(static_cast<size_t>(n_max) + 1, 0);
    for (long d = 1; d <= n_max; ++d) {
        long long cube = static_cast<long long>(d) * d * d;
        for (long m = d; m <= n_max; m += d) s[static_cast<size_t>(m)] += cube;
    }
    return s;
}

long long weight4_coeff(const std::vector<long long>& sigma3, long n) {
    if (n < 1 || n >= static_cast<long>(sigma3.size()))
        throw std::out_of_range("weight4_coeff: index outside table");
    auto at = [&](long m) { return sigma3[static_cast<size_t>(m)]; };
    long long v = at(n);
    if (n % 2 == 0) v -= at(n / 2);
    if (n % 3 == 0) v -= 9 * at(n / 3);
    if (n % 6 == 0) v += 9 * at(n / 6);
    return v;
}

EtaSeries eta_series(int multiplier, long trunc) {
    if (multiplier < 1) throw std::invalid_argument("eta multiplier must be >= 1");
    if (trunc < 0) throw std::invalid_argument("eta truncation must be >= 0");
    std::vector<Rat> c(static_cast<size_t>(trunc) + 1, Rat(0));
    c[0] = 1;
    for (long n = 1; n * multiplier <= trunc; ++n)
        mul_binomial(c, n * multiplier);
    EtaSeries out;
    out.series = QSeries(0, std::move(c), trunc);
    out.offset24 = multiplier;
    return out;
}

QSeries eta_quotient(const EtaQuotientSpec& spec, long trunc) {
    if (spec.sign != 1 && spec.sign != -1)
        throw std::invalid_argument("eta quotient sign must be +-1");
    long offset24 = 0;
    QSeries num = QSeries::constant(1, trunc);
    QSeries den = QSeries::constant(1, trunc);
    for (const auto& f : spec.factors) {
        if (f.exponent == 0) continue;
        EtaSeries e = eta_series(f.multiplier, trunc);
        offset24 += static_cast<long>(f.multiplier) * f.exponent;
        long p = f.exponent > 0 ? f.exponent : -static_cast<long>(f.exponent);
        QSeries powed = e.series.pow_int(p);
        if (f.exponent > 0)
            num = num * powed;
        else
            den = den * powed;
    }
    if (offset24 % 24 != 0)
        throw std::invalid_argument("eta quotient offset " +
                                    std::to_string(offset24) +
                                    "/24 is not integral");
    QSeries out = num / den;
    if (spec.sign < 0) out = out.neg();
    return out.shift(offset24 / 24);
}

EtaQuotientSpec hauptmodul_spec() {
    return {{{2, 6}, {6, 6}, {1, -6}, {3, -6}}, -1};
}

QSeries hauptmodul_series(long trunc) {
    return eta_quotient(hauptmodul_spec(), trunc);
}

EtaQuotientSpec weight2_spec() {
    return {{{1, 4}, {3, 4}, {2, -2}, {6, -2}}, 1};
}

QSeries weight2_series(long trunc) {
    return eta_quotient(weight2_spec(), trunc);
}

QSeries eisenstein_e4(int multiplier, long trunc) {
    if (multiplier < 1) throw std::invalid_argument("E4 multiplier must be >= 1");
    auto s3 = sigma3_table(trunc / multiplier);
    std::vector<Rat> c(static_cast<size_t>(trunc) + 1, Rat(0));
    c[0] = 1;
    for (long n = 1; n * multiplier <= trunc; ++n)
        c[static_cast<size_t>(n * multiplier)] =
            Rat(240) * Rat(s3[static_cast<size_t>(n)]);
    return QSeries(0, std::move(c), trunc);
}

QSeries weight4_series(long trunc) {
    QSeries g = eisenstein_e4(1, trunc) - eisenstein_e4(2, trunc) -
                eisenstein_e4(3, trunc).scale(9) +
                eisenstein_e4(6, trunc).scale(9);
    g = g.scale(Rat(1, 240));
    auto s3 = sigma3_table(trunc);
    for (long n = 1; n <= trunc; ++n)
        if (g.coeff(n) != Rat(weight4_coeff(s3, n)))
            throw std::logic_error(
                "weight-4 coefficient mismatch between the Eisenstein "
                "combination and the divisor-sum formula at n = " +
                std::to_string(n));
    return g;
}

QSeries d3_eichler_series(long trunc) {
    QSeries xi = hauptmodul_series(trunc);
    QSeries a = weight2_series(trunc);
    QSeries one = QSeries::constant(1, trunc);
    QSeries ratio = xi.q_derivative() / xi;
    QSeries cube = ratio * ratio * ratio;
    QSeries den = a * (one - xi.scale(4)) * (one - xi.scale(16));
    return cube * (xi / den);
}

QSeries eichler_series(long trunc, long crosscheck_trunc) {
    auto s3 = sigma3_table(trunc);
    std::vector<Rat> c(static_cast<size_t>(trunc) + 1, Rat(0));
    for (long n = 1; n <= trunc; ++n) {
        Int n3 = Int(n) * Int(n) * Int(n);
        Int num = Int(-weight4_coeff(s3, n));
        c[static_cast<size_t>(n)] = Rat(num, n3);
    }
    QSeries direct(0, std::move(c), trunc);

    if (crosscheck_trunc > 0) {
        long ct = std::min(crosscheck_trunc, trunc);
        SequenceTable table = build_table(ct + 1);
        QSeries xi = hauptmodul_series(ct);
        QSeries a = weight2_series(ct);
        QSeries bz = companion_z_series(table, ct);
        QSeries composed = QSeries::compose(bz, xi) / a;
        long through = std::min(ct, composed.trunc());
        auto diff = QSeries::first_difference(direct.truncated(through),
                                              composed.truncated(through),
                                              through);
        if (diff)
            throw std::logic_error(
                "Eichler expansion disagrees with the hauptmodul pullback "
                "at order " + std::to_string(*diff));
    }
    return direct;
}

QSeries eichler_series(long trunc) {
    return eichler_series(trunc, std::min<long>(trunc, 50));
}

QSeries companion_z_series(const SequenceTable& table, long trunc) {
    long top = std::min(trunc, table.n_max);
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(top) + 1);
    for (long n = 0; n <= top; ++n) c.push_back(table.b[static_cast<size_t>(n)]);
    return QSeries(0, std::move(c), top);
}

QSeries domb_z_series(const SequenceTable& table, long trunc) {
    long top = std::min(trunc, table.n_max);
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(top) + 1);
    for (long n = 0; n <= top; ++n)
        c.push_back(Rat(table.d[static_cast<size_t>(n)]));
    return QSeries(0, std::move(c), top);
}

QSeries theta_ode_apply(const QSeries& y) {
    Poly<Rat> cube({Rat(0), Rat(0), Rat(0), Rat(1)});
    Poly<Rat> mid = Rat(2) * (Poly<Rat>({Rat(1), Rat(2)}) *
                              Poly<Rat>({Rat(2), Rat(5), Rat(5)}));
    Poly<Rat> shifted_cube =
        Rat(64) * (Poly<Rat>({Rat(1), Rat(1)}) * Poly<Rat>({Rat(1), Rat(1)}) *
                   Poly<Rat>({Rat(1), Rat(1)}));
    return termwise(y, cube) - termwise(y, mid).shift(1) +
           termwise(y, shifted_cube).shift(2);
}

OdeCheck theta_ode_check(const QSeries& y, const QSeries& rhs) {
    QSeries diff = theta_ode_apply(y) - rhs;
    OdeCheck out;
    out.checked_through = diff.trunc();
    if (!diff.is_zero()) {
        out.ok = false;
        out.first_mismatch = diff.valuation();
    }
    return out;
}

std::array<Poly<Rat>, 4> ordinary_ode_coeffs() {
    return {Poly<Rat>({Rat(-4), Rat(64)}),
            Poly<Rat>({Rat(1), Rat(-68), Rat(448)}),
            Poly<Rat>({Rat(0), Rat(3), Rat(-90), Rat(384)}),
            Poly<Rat>({Rat(0), Rat(0), Rat(1), Rat(-20), Rat(64)})};
}

namespace {

QSeries poly_to_series(const Poly<Rat>& p) {
    std::vector<Rat> c;
    for (long k = 0; k <= p.degree(); ++k) c.push_back(p.coeff(k));
    return QSeries(0, std::move(c), QSeries::kExactTrunc);
}

} // namespace

QSeries ordinary_ode_apply(const QSeries& y) {
    auto c = ordinary_ode_coeffs();
    QSeries d1 = y.z_derivative();
    QSeries d2 = d1.z_derivative();
    QSeries d3 = d2.z_derivative();
    return poly_to_series(c[0]) * y + poly_to_series(c[1]) * d1 +
           poly_to_series(c[2]) * d2 + poly_to_series(c[3]) * d3;
}

IndicialData indicial_data() {
    auto c = ordinary_ode_coeffs();
    // Local coordinate eps = 1 - 16z, so z = (1 - eps)/16 and each
    // derivative d/dz contributes a factor -16.
    Poly<Rat> sub({Rat(1, 16), Rat(-1, 16)});
    std::array<Poly<Rat>, 4> gamma;
    Rat pw(1);
    for (int k = 0; k < 4; ++k) {
        gamma[static_cast<size_t>(k)] = pw * c[static_cast<size_t>(k)].eval(sub);
        pw *= -16;
    }
    // A Frobenius candidate eps^r turns term k into
    // gamma_k(eps) r(r-1)...(r-k+1) eps^{r-k}; the indicial polynomial
    // collects the lowest eps exponent delta over all terms.
    long delta = 1000;
    for (int k = 0; k < 4; ++k) {
        const auto& g = gamma[static_cast<size_t>(k)];
        for (long j = 0; j <= g.degree(); ++j)
            if (g.coeff(j) != 0) delta = std::min(delta, j - k);
    }
    Poly<Rat> indicial;
    for (int k = 0; k < 4; ++k) {
        Rat coef = gamma[static_cast<size_t>(k)].coeff(k + delta);
        if (coef != 0) indicial = indicial + coef * falling_factorial(k);
    }
    IndicialData data;
    data.polynomial = indicial;
    auto roots = rational_roots(indicial);
    if (roots.size() != 3)
        throw std::logic_error("indicial polynomial does not split rationally");
    std::copy(roots.begin(), roots.end(), data.roots.begin());
    return data;
}

} // namespace domblab
