#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace domblab {

namespace mp = boost::multiprecision;

using Int = mp::mpz_int;
using Rat = mp::mpq_rational;

// Arbitrary-precision real. Precision is per-value; fresh values pick up the
// thread-wide default installed by PrecisionGuard.
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

// Working precision in bits plus the tolerance and truncation order that
// govern every inexact evaluation.
struct PrecisionContext {
    unsigned precision_bits = 256;
    unsigned tol_digits = 25;
    long trunc = 400;
};

inline unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30103) + 3;
}

// Scoped default-precision switch. Computation inside the scope runs at the
// context precision plus guard digits; values keep their precision afterwards.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned precision_bits)
        : saved_(Real::default_precision()) {
        if (precision_bits < 64)
            throw std::invalid_argument("precision context below 64 bits");
        Real::default_precision(bits_to_digits10(precision_bits) + 20);
    }
    explicit PrecisionGuard(const PrecisionContext& ctx)
        : PrecisionGuard(ctx.precision_bits) {}
    ~PrecisionGuard() { Real::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

// pi and sqrt(3) at the current default precision.
Real pi_value();
Real sqrt3_value();

struct Complex {
    Real re{0}, im{0};
    Complex() = default;
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Real& r) : re(r), im(0) {}
};

inline Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
}
inline Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
}
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Real& s, const Complex& a) {
    return {s * a.re, s * a.im};
}
inline Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline Complex conj(const Complex& a) { return {a.re, -a.im}; }
inline Real abs(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }

inline Complex cpow(const Complex& a, unsigned e) {
    Complex acc(Real(1));
    Complex base = a;
    for (; e; e >>= 1) {
        if (e & 1) acc = acc * base;
        if (e > 1) base = base * base;
    }
    return acc;
}

// 64^n as an exact integer.
inline Int pow64(long n) {
    Int r = 1;
    mpz_mul_2exp(r.backend().data(), r.backend().data(),
                 static_cast<mp_bitcnt_t>(6 * n));
    return r;
}

inline Int int_pow(const Int& base, unsigned e) {
    return mp::pow(base, e);
}

std::string rat_str(const Rat& r);
// Decimal string with the given number of significant digits (scientific
// notation), deterministic for a fixed precision and digit count.
std::string real_str(const Real& x, unsigned digits);

} // namespace domblab
