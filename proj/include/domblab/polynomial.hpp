#pragma once

#include <vector>

namespace domblab {

// Dense univariate polynomial, coefficient of x^k at index k.
// Trailing zeros are trimmed, so the zero polynomial has degree -1.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(const T& c) : c_{c} { trim(); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    T coeff(long k) const {
        if (k < 0 || k > degree()) return T(0);
        return c_[static_cast<size_t>(k)];
    }

    template <class U>
    U eval(const U& x) const {
        U acc(0);
        for (long k = degree(); k >= 0; --k) acc = acc * x + U(c_[static_cast<size_t>(k)]);
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (T(-1) * b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const T& s, const Poly& a) {
        std::vector<T> c = a.c_;
        for (auto& x : c) x = s * x;
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

} // namespace domblab
