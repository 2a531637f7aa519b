#pragma once

#include "domblab/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace domblab {

struct SeriesDivisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated Laurent-style power series over the rationals.
//
// A QSeries represents f = sum_{n = valuation}^{trunc} c_n q^n + O(q^{trunc+1}).
// Coefficients are certified exactly for every exponent <= trunc(); asking for
// a coefficient beyond that throws instead of silently returning garbage.
// Arithmetic propagates the certified order with the usual rules:
//
//   add:  trunc = min(T1, T2)
//   mul:  trunc = min(v1 + T2, v2 + T1)
//   div:  trunc = (v1 - v2) + min(T1 - v1, T2 - v2)
//   compose (inner valuation w >= 1): capped at (T_outer + 1) * w - 1
//
// A series that is zero through its truncation order reports
// valuation() == trunc() + 1, which makes the rules above come out right
// without special cases. Exactly known polynomials (eta factors, constants)
// carry the sentinel order kExactTrunc.
class QSeries {
public:
    static constexpr long kExactTrunc = 1L << 40;

    QSeries() : lo_(0), trunc_(-1) {}
    QSeries(long lo, std::vector<Rat> coeffs, long trunc);

    static QSeries zero(long trunc) { return QSeries(0, {}, trunc); }
    static QSeries constant(const Rat& c, long trunc = kExactTrunc) {
        return QSeries(0, {c}, trunc);
    }
    static QSeries monomial(const Rat& c, long n, long trunc) {
        return QSeries(n, {c}, trunc);
    }

    long trunc() const { return trunc_; }
    long valuation() const {
        return coeffs_.empty() ? trunc_ + 1 : lo_;
    }
    // Highest exponent with a stored coefficient; valuation() - 1 when the
    // series is zero. Never exceeds trunc(), so it bounds loops safely even
    // for exactly known polynomials.
    long degree() const {
        return coeffs_.empty() ? valuation() - 1
                               : lo_ + static_cast<long>(coeffs_.size()) - 1;
    }
    bool is_zero() const { return coeffs_.empty(); }

    // Exact coefficient of q^n; zero in gaps and below the valuation.
    const Rat& coeff(long n) const;

    QSeries neg() const;
    QSeries scale(const Rat& s) const;
    QSeries shift(long k) const;             // multiply by q^k
    QSeries truncated(long new_trunc) const; // drop knowledge above new_trunc

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator/(const QSeries& a, const QSeries& b);

    QSeries inverse() const;
    QSeries pow_int(long e) const;

    // theta = q d/dq, acting termwise; certified order is unchanged.
    QSeries q_derivative() const;
    // d/dq; certified order drops by one.
    QSeries z_derivative() const;

    // outer(inner) with inner.valuation() >= 1 required.
    static QSeries compose(const QSeries& outer, const QSeries& inner);

    static bool agree_through(const QSeries& a, const QSeries& b, long n);
    static std::optional<long> first_difference(const QSeries& a,
                                                const QSeries& b, long n);

    std::string str(long max_terms = 12) const;

private:
    void normalize();
    long lo_;                  // exponent of coeffs_[0] when nonempty
    std::vector<Rat> coeffs_;  // front() != 0 and back() != 0 when nonempty
    long trunc_;
};

} // namespace domblab
