#include "domblab/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace domblab {

namespace {

const Rat kZero = Rat(0);

long min3(long a, long b, long c) { return std::min(a, std::min(b, c)); }

} // namespace

QSeries::QSeries(long lo, std::vector<Rat> coeffs, long trunc)
    : lo_(lo), coeffs_(std::move(coeffs)), trunc_(trunc) {
    normalize();
}

void QSeries::normalize() {
    if (trunc_ > kExactTrunc) trunc_ = kExactTrunc;
    // Drop anything claimed beyond the certified order.
    if (!coeffs_.empty() && lo_ + static_cast<long>(coeffs_.size()) - 1 > trunc_) {
        long keep = trunc_ - lo_ + 1;
        if (keep <= 0)
            coeffs_.clear();
        else
            coeffs_.resize(static_cast<size_t>(keep));
    }
    size_t front = 0;
    while (front < coeffs_.size() && coeffs_[front] == 0) ++front;
    if (front > 0) {
        coeffs_.erase(coeffs_.begin(),
                      coeffs_.begin() + static_cast<std::ptrdiff_t>(front));
        lo_ += static_cast<long>(front);
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) lo_ = 0;
}

const Rat& QSeries::coeff(long n) const {
    if (n > trunc_)
        throw std::out_of_range("coefficient beyond certified order");
    if (coeffs_.empty() || n < lo_ ||
        n >= lo_ + static_cast<long>(coeffs_.size()))
        return kZero;
    return coeffs_[static_cast<size_t>(n - lo_)];
}

QSeries QSeries::neg() const {
    std::vector<Rat> c = coeffs_;
    for (auto& x : c) x = -x;
    return QSeries(lo_, std::move(c), trunc_);
}

QSeries QSeries::scale(const Rat& s) const {
    if (s == 0) return zero(trunc_);
    std::vector<Rat> c = coeffs_;
    for (auto& x : c) x *= s;
    return QSeries(lo_, std::move(c), trunc_);
}

QSeries QSeries::shift(long k) const {
    return QSeries(lo_ + k, coeffs_,
                   trunc_ >= kExactTrunc ? kExactTrunc : trunc_ + k);
}

QSeries QSeries::truncated(long new_trunc) const {
    if (new_trunc > trunc_)
        throw std::logic_error("truncated() cannot extend certified order");
    return QSeries(lo_, coeffs_, new_trunc);
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    long trunc = std::min(a.trunc_, b.trunc_);
    if (a.is_zero() && b.is_zero()) return QSeries::zero(trunc);
    long lo = std::min(a.is_zero() ? b.lo_ : a.lo_, b.is_zero() ? a.lo_ : b.lo_);
    long hi_data = std::max(a.lo_ + static_cast<long>(a.coeffs_.size()),
                            b.lo_ + static_cast<long>(b.coeffs_.size())) -
                   1;
    long hi = std::min(trunc, hi_data);
    if (lo > hi) return QSeries::zero(trunc);
    std::vector<Rat> c(static_cast<size_t>(hi - lo + 1), Rat(0));
    auto mix = [&](const QSeries& s) {
        for (size_t i = 0; i < s.coeffs_.size(); ++i) {
            long n = s.lo_ + static_cast<long>(i);
            if (n > hi) break;
            c[static_cast<size_t>(n - lo)] += s.coeffs_[i];
        }
    };
    mix(a);
    mix(b);
    return QSeries(lo, std::move(c), trunc);
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + b.neg(); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    long trunc = min3(a.valuation() + b.trunc_, b.valuation() + a.trunc_,
                      QSeries::kExactTrunc);
    if (a.is_zero() || b.is_zero()) return QSeries::zero(trunc);
    long lo = a.lo_ + b.lo_;
    if (lo > trunc) return QSeries::zero(trunc);
    long hi_data = a.lo_ + static_cast<long>(a.coeffs_.size()) + b.lo_ +
                   static_cast<long>(b.coeffs_.size()) - 2;
    long hi = std::min(trunc, hi_data);
    std::vector<Rat> c(static_cast<size_t>(hi - lo + 1), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        long base = a.lo_ + static_cast<long>(i) + b.lo_;
        if (base > trunc) break;
        size_t jmax = std::min(b.coeffs_.size(),
                               static_cast<size_t>(trunc - base + 1));
        for (size_t j = 0; j < jmax; ++j) {
            if (b.coeffs_[j] == 0) continue;
            c[static_cast<size_t>(base - lo) + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return QSeries(lo, std::move(c), trunc);
}

QSeries QSeries::inverse() const {
    if (is_zero())
        throw SeriesDivisionError("inverse of a series that vanishes through "
                                  "its certified order");
    long v = lo_;
    if (coeffs_.size() == 1) {
        // A monomial inverts exactly.
        return monomial(Rat(1) / coeffs_.front(), -v,
                        trunc_ >= kExactTrunc ? kExactTrunc : trunc_ - 2 * v);
    }
    if (trunc_ >= kExactTrunc)
        throw std::logic_error(
            "inverse of an exactly known polynomial: truncate first");
    long rel = trunc_ - v;  // relative certified order, >= 0
    const Rat& lead = coeffs_.front();
    // Normalized tail h with h_0 = 1: invert by u_0 = 1,
    // u_k = -sum_{j=1..k} h_j u_{k-j}.
    std::vector<Rat> h(coeffs_.size());
    for (size_t j = 0; j < coeffs_.size(); ++j) h[j] = coeffs_[j] / lead;
    std::vector<Rat> u(static_cast<size_t>(rel + 1), Rat(0));
    u[0] = 1;
    for (long k = 1; k <= rel; ++k) {
        Rat s = 0;
        long jmax = std::min<long>(k, static_cast<long>(h.size()) - 1);
        for (long j = 1; j <= jmax; ++j)
            s += h[static_cast<size_t>(j)] * u[static_cast<size_t>(k - j)];
        u[static_cast<size_t>(k)] = -s;
    }
    for (auto& x : u) x /= lead;
    return QSeries(-v, std::move(u), rel - v);
}

QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

QSeries QSeries::pow_int(long e) const {
    if (e == 0) return constant(1, trunc_);
    if (e < 0) return inverse().pow_int(-e);
    QSeries acc = constant(1);
    QSeries base = *this;
    for (long k = e; k; k >>= 1) {
        if (k & 1) acc = acc * base;
        if (k > 1) base = base * base;
    }
    return acc;
}

QSeries QSeries::q_derivative() const {
    std::vector<Rat> c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i)
        c[i] *= lo_ + static_cast<long>(i);
    return QSeries(lo_, std::move(c), trunc_);
}

QSeries QSeries::z_derivative() const {
    std::vector<Rat> c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i)
        c[i] *= lo_ + static_cast<long>(i);
    return QSeries(lo_ - 1, std::move(c),
                   trunc_ >= kExactTrunc ? kExactTrunc : trunc_ - 1);
}

QSeries QSeries::compose(const QSeries& outer, const QSeries& inner) {
    if (inner.valuation() < 1)
        throw std::invalid_argument("compose needs inner valuation >= 1");
    long top = outer.is_zero()
                   ? -1
                   : outer.lo_ + static_cast<long>(outer.coeffs_.size()) - 1;
    QSeries acc = zero(kExactTrunc);
    for (long n = top; n >= 0; --n)
        acc = acc * inner + constant(outer.coeff(n));
    // Unknown outer coefficients beyond T_outer first matter at exponent
    // (T_outer + 1) * w of the inner variable.
    long w = inner.valuation();
    long cap = (outer.trunc_ >= kExactTrunc || w >= kExactTrunc)
                   ? kExactTrunc
                   : (outer.trunc_ + 1) * w - 1;
    return acc.truncated(std::min(acc.trunc_, cap));
}

bool QSeries::agree_through(const QSeries& a, const QSeries& b, long n) {
    return !first_difference(a, b, n).has_value();
}

std::optional<long> QSeries::first_difference(const QSeries& a,
                                              const QSeries& b, long n) {
    if (n > a.trunc_ || n > b.trunc_)
        throw std::out_of_range("comparison beyond certified order");
    long lo = std::min(a.valuation(), b.valuation());
    for (long k = lo; k <= n; ++k)
        if (a.coeff(k) != b.coeff(k)) return k;
    return std::nullopt;
}

std::string QSeries::str(long max_terms) const {
    std::ostringstream os;
    long shown = 0;
    for (size_t i = 0; i < coeffs_.size() && shown < max_terms; ++i) {
        if (coeffs_[i] == 0) continue;
        if (shown) os << " + ";
        os << "(" << coeffs_[i].str() << ")*q^" << lo_ + static_cast<long>(i);
        ++shown;
    }
    if (!shown) os << "0";
    if (trunc_ < kExactTrunc) os << " + O(q^" << trunc_ + 1 << ")";
    return os.str();
}

} // namespace domblab
