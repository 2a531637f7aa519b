#pragma once

#include "domblab/polynomial.hpp"
#include "domblab/qseries.hpp"
#include "domblab/sequences.hpp"

#include <array>
#include <vector>

namespace domblab {

// sigma_3 partial sums via a divisor sieve; s[0] = 0, s[n] = sigma_3(n).
// Values stay below 2^63 for n_max <= 10^6, which the function enforces.
std::vector<long long> sigma3_table(long n_max);

// Coefficient a_n of the weight-4 form:
// a_n = sigma_3(n) - sigma_3(n/2) - 9 sigma_3(n/3) + 9 sigma_3(n/6),
// terms dropped when the divisibility fails.
long long weight4_coeff(const std::vector<long long>& sigma3, long n);

struct EtaFactor {
    int multiplier = 1;  // eta(multiplier * tau)
    int exponent = 1;
};

struct EtaQuotientSpec {
    std::vector<EtaFactor> factors;
    int sign = 1;
};

// The product part of eta(m tau) = q^{m/24} prod (1 - q^{mn}); offset24
// records the 24th-root prefactor exponent m.
struct EtaSeries {
    QSeries series;
    int offset24 = 0;
};

EtaSeries eta_series(int multiplier, long trunc);

// Expands sign * prod eta(m_i tau)^{e_i}. The total 24th-root offset
// sum m_i e_i must vanish mod 24 so the result is a plain q-series;
// otherwise the spec is rejected.
QSeries eta_quotient(const EtaQuotientSpec& spec, long trunc);

// xi = - eta(2)^6 eta(6)^6 / (eta(1)^6 eta(3)^6), the level-6 hauptmodul
// with xi = -q - 6q^2 - 21q^3 - ...
EtaQuotientSpec hauptmodul_spec();
QSeries hauptmodul_series(long trunc);

// A = eta(1)^4 eta(3)^4 / (eta(2)^2 eta(6)^2) = 1 - 4q + 4q^2 - ...,
// the weight-2 form whose xi-expansion generates D_n.
EtaQuotientSpec weight2_spec();
QSeries weight2_series(long trunc);

// E_4(multiplier * tau) = 1 + 240 sum sigma_3(n) q^{mn}.
QSeries eisenstein_e4(int multiplier, long trunc);

// g = (E_4(1) - E_4(2) - 9 E_4(3) + 9 E_4(6)) / 240, cross-checked
// against weight4_coeff termwise.
QSeries weight4_series(long trunc);

// Phi = (theta xi / xi)^3 * xi / (A (1-4xi)(1-16xi)); equals -g.
QSeries d3_eichler_series(long trunc);

// E = - sum_{n>=1} a_n n^{-3} q^n, built from the coefficient formula and
// cross-checked against B(xi)/A through crosscheck_trunc (expensive, so the
// cross-check order may sit below trunc).
QSeries eichler_series(long trunc, long crosscheck_trunc);
QSeries eichler_series(long trunc);

// Coefficients of B(z) = sum B_n z^n as a series in z, from the table.
QSeries companion_z_series(const SequenceTable& table, long trunc);
QSeries domb_z_series(const SequenceTable& table, long trunc);

// L = theta^3 - 2z(2 theta + 1)(5 theta^2 + 5 theta + 2) + 64 z^2 (theta+1)^3
// acting on z-series; termwise
//   L(y)[m] = m^3 y_m - 2(2m-1)(5m^2-5m+2) y_{m-1} + 64 (m-1)^3 y_{m-2}.
QSeries theta_ode_apply(const QSeries& y);

struct OdeCheck {
    bool ok = true;
    long checked_through = -1;
    long first_mismatch = -1;
};

OdeCheck theta_ode_check(const QSeries& y, const QSeries& rhs);

// Coefficients c_0..c_3 of the expanded ordinary form
// c_3 y''' + c_2 y'' + c_1 y' + c_0 y with
//   c_3 = z^2 (4z-1)(16z-1), c_2 = 3z(128z^2 - 30z + 1),
//   c_1 = 448z^2 - 68z + 1,  c_0 = 4(16z - 1).
std::array<Poly<Rat>, 4> ordinary_ode_coeffs();

QSeries ordinary_ode_apply(const QSeries& y);

struct IndicialData {
    Poly<Rat> polynomial;     // indicial polynomial at z = 1/16 in the local
                              // variable eps = 1 - 16z
    std::array<Rat, 3> roots; // sorted ascending
};

// Frobenius data at the singular point z = 1/16: substitute
// z = (1 - eps)/16, expand, and read off the indicial polynomial
// -6 r (2r - 1)(r - 1) with roots {0, 1/2, 1}.
IndicialData indicial_data();

} // namespace domblab
