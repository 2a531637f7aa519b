#pragma once

#include "domblab/modular.hpp"
#include "domblab/numeric.hpp"
#include "domblab/qseries.hpp"

#include <string>
#include <vector>

namespace domblab {

struct TailBoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// zeta(3) from the central-binomial series
//   zeta(3) = (5/2) sum_{k>=1} (-1)^{k-1} / (k^3 binom(2k,k)),
// terms shrink by at least 4x, so the tail is bounded by (4/3) of the first
// omitted term. Serves as the reference value everything else is tested
// against; it shares no machinery with the modular or sequence code.
Real zeta3(const PrecisionContext& ctx);

// Point tau in the upper half plane together with q = exp(2 pi i tau).
struct HalfPlanePoint {
    Complex tau;
    Complex q;
    Real abs_q;
};

// Throws std::domain_error unless Im(tau) > 0.
HalfPlanePoint make_point(const Complex& tau);

struct EvalResult {
    Complex value;
    Real tail_bound;
};

// Evaluates a q-series at a point with a certified tail estimate. The
// coefficients are majorized by K n^3 with K taken 10x above the observed
// prefix maximum of |c_n| / n^3; the tail of sum K n^3 r^n is then summed
// by a geometric comparison. Throws TailBoundError when the bound cannot
// be pushed below 10^-(tol_digits + 5).
EvalResult eval_qseries(const QSeries& f, const HalfPlanePoint& pt,
                        const PrecisionContext& ctx);

// d/dtau of the series at the point: 2 pi i sum n c_n q^n, same tail policy.
EvalResult eval_qseries_deriv(const QSeries& f, const HalfPlanePoint& pt,
                              const PrecisionContext& ctx);

// The level-6 involution W tau = (3 tau - 2) / (6 tau - 3).
Complex atkin_lehner(const Complex& tau);

struct CheckResult {
    std::string id;
    bool pass = false;
    bool exact = false;  // exact-arithmetic check; failures exit differently
    Real residual;       // for exact checks, the failure count
    Real tolerance;
    std::string params;
};

CheckResult make_check(std::string id, const Real& residual,
                       const Real& tolerance, bool exact, std::string params);

// Default sample points 1/2 + i, 2/3 + i, 1/2 + i/2 plus the W fixed point
// 1/2 + i/(2 sqrt 3).
std::vector<Complex> default_tau_samples(const PrecisionContext& ctx);
Complex fixed_point_tau();

/// Slash-action checks at the samples: xi is W-invariant, A picks up the
// weight-2 factor -(6 tau - 3)^2 / 3, the four rescaled E_4's permute in
// pairs, and g is an eigenform with eigenvalue -1.
std::vector<CheckResult> check_slash_identities(
    const std::vector<Complex>& taus, const PrecisionContext& ctx);

// (E|W + E)(tau) = (7/6) zeta(3) (3 tau^2 - 3 tau + 1) with
// (E|W)(tau) = ((6 tau - 3)^2 / 3) E(W tau).
std::vector<CheckResult> check_e_transform(const std::vector<Complex>& taus,
                                           const PrecisionContext& ctx);

// Real-line form of the transformation along tau = (1 + i y / sqrt 3)/2:
// F(y) - y^2 F(1/y) = (7/24) zeta(3) (1 - y^2) where
// F(y) = - sum (-1)^n a_n n^-3 exp(-pi n y / sqrt 3).
std::vector<CheckResult> check_line_functional(const std::vector<Rat>& ys,
                                               const PrecisionContext& ctx);

// At the fixed point tau_* = 1/2 + i/(2 sqrt 3):
//   (i) xi(tau_*) = 1/16, (ii) xi'(tau_*) = 0,
//   (iii) A'(tau_*) = 2 i sqrt(3) A(tau_*),
//   (iv) E(tau_*) + E'(tau_*) / (2 i sqrt 3) = (7/24) zeta(3).
std::vector<CheckResult> check_fixed_point(const PrecisionContext& ctx);

// Exact Dirichlet-factorization check on the coefficients: convolving
// sigma_3 with (1 - 2^-s) and (1 - 3^(2-s)) reproduces a_n, the extra
// factor (1 - 2^(4-s)) flips the sign pattern to (-1)^(n+1) a_n, and
// a_{2^r m} = 8^r a_m for odd m.
CheckResult l_coefficient_check(long n_max);

// Special values from the factorization, as exact rational multiples:
//   L(g, 3) = -(7/24) zeta(3)   [uses zeta(0) = -1/2]
//   L*(3)   = -(7/24) zeta(3),  L*(2) = 0,
//   L*(1)   = -7 zeta'(-2) = 7 zeta(3) / (4 pi^2).
std::vector<CheckResult> l_special_values(const PrecisionContext& ctx);

// Numeric check of L*(s) = -zeta(s) zeta(s-3) (1-2^-s)(1-2^(4-s))(1-3^(2-s))
// by direct summation through n_terms, with an explicit tail allowance
// 2 (N^(4-s)/(s-4) + N^(3-s)) from |a_n| < 2 n^3. Requires s >= 6 and
// n_terms >= 10^5.
CheckResult l_numeric_check(long s, long n_terms, const PrecisionContext& ctx);

} // namespace domblab
