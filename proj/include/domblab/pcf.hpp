#pragma once

#include "domblab/numeric.hpp"
#include "domblab/polynomial.hpp"
#include "domblab/sequences.hpp"

#include <vector>

namespace domblab {

struct ZeroDenominatorError : std::runtime_error {
    explicit ZeroDenominatorError(long index);
    long index;
};

// Polynomial continued fraction a_0 + b_1/(a_1 + b_2/(a_2 + ...)) with
// partial quotients a(n) and partial numerators b(n) given by polynomials
// in n. Convergents P_n/Q_n follow the standard three-term recurrence
//   U_n = a(n) U_{n-1} + b(n) U_{n-2},
// seeded by P_{-1} = 1, P_0 = a(0), Q_{-1} = 0, Q_0 = 1.
struct PCFSpec {
    Poly<Int> a;
    Poly<Int> b;
};

// a(n) = (2n+1)(5n^2+5n+2) = 10n^3 + 15n^2 + 9n + 2, b(n) = -16 n^6.
// Note a(0) = 2, so the head term is part of the same polynomial.
PCFSpec domb_pcf();

struct ConvergentPair {
    long n = 0;
    Int p;
    Int q;
};

std::vector<ConvergentPair> convergents(const PCFSpec& spec, long n_max);

// P_n Q_{n-1} - P_{n-1} Q_n, which the recurrence forces to equal
// (-1)^? prod_{k<=n} (-b(k)) times the seed value; for the Domb fraction
// the seed is -1, so X_n = -prod_{k=1}^{n} 16 k^6.
Rat cross_difference(const PCFSpec& spec, const std::vector<ConvergentPair>& c,
                     long n);

struct NormalizationReport {
    bool ok = true;
    long first_failure = -1;
};

// Checks P_n = (n+1)!^3 D_{n+1} / 2^{n+1} and Q_n = (n+1)!^3 B_{n+1} / 2^n
// for 0 <= n <= n_check. The table must extend to n_check + 1.
NormalizationReport verify_normalization(const SequenceTable& table,
                                         long n_check);

struct ValueEstimate {
    Real value;       // P_N / Q_N
    Real step_bound;  // |P_N/Q_N - P_{N-1}/Q_{N-1}|
};

ValueEstimate value_estimate(const PCFSpec& spec, long n_max,
                             const PrecisionContext& ctx);

} // namespace domblab
