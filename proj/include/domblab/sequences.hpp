#pragma once

#include "domblab/numeric.hpp"

#include <vector>

namespace domblab {

// Integer sequence D_n and rational companion B_n, both satisfying
//
//   (n+1)^3 u_{n+1} = 2(2n+1)(5n^2+5n+2) u_n - 64 n^3 u_{n-1}
//
// with D_0 = 1, D_1 = 4 and B_0 = 0, B_1 = 1. The recurrence has leading
// coefficient (n+1)^3, so D_n staying integral is a nontrivial fact that
// build_table asserts at every step.
struct SequenceTable {
    long n_max = 0;
    std::vector<Int> d;  // d[n] = D_n, 0 <= n <= n_max
    std::vector<Rat> b;  // b[n] = B_n
};

// D_n straight from the defining binomial sum; independent of the recurrence.
Int domb_direct(long n);

SequenceTable build_table(long n_max);

struct WronskianRecord {
    long n = 0;
    Rat value;  // D_n B_{n-1} - D_{n-1} B_n
};

WronskianRecord wronskian(const SequenceTable& table, long n);
// -64^{n-1} / n^3, the closed form the record must match.
Rat wronskian_closed_form(long n);

struct TelescopedSum {
    long n_terms = 0;
    Rat direct;  // sum_{n=1}^{N} 64^n / (n^3 D_n D_{n-1})
    Rat closed;  // 64 B_N / D_N
};

TelescopedSum telescoped_sum(const SequenceTable& table, long n_terms);
// All prefixes 1..n_terms in one pass.
std::vector<TelescopedSum> telescoped_sweep(const SequenceTable& table,
                                            long n_terms);

// B_n / D_n as an exact rational, n >= 1.
Rat apery_ratio(const SequenceTable& table, long n);

enum class SequenceKind { domb, companion };

struct AsymptoticEstimate {
    long n = 0;
    Real constant;    // u_n * 16^{-n} * n^{3/2}
    Real tail_delta;  // |constant(n) - constant(n/2)|, a convergence proxy
};

AsymptoticEstimate asymptotic_constant(const SequenceTable& table,
                                       SequenceKind kind, long n,
                                       const PrecisionContext& ctx);

} // namespace domblab
