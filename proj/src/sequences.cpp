#include "domblab/sequences.hpp"

#include <stdexcept>

namespace domblab {

namespace {

// Pascal triangle rows 0..n_top.
std::vector<std::vector<Int>> binomial_rows(long n_top) {
    std::vector<std::vector<Int>> rows(static_cast<size_t>(n_top) + 1);
    for (long n = 0; n <= n_top; ++n) {
        auto& row = rows[static_cast<size_t>(n)];
        row.assign(static_cast<size_t>(n) + 1, Int(1));
        for (long k = 1; k < n; ++k)
            row[static_cast<size_t>(k)] =
                rows[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] +
                rows[static_cast<size_t>(n - 1)][static_cast<size_t>(k)];
    }
    return rows;
}

Int recurrence_u_coeff(long n) {
    Int m(n);
    return 2 * (2 * m + 1) * (5 * m * m + 5 * m + 2);
}

} // namespace

Int domb_direct(long n) {
    if (n < 0) throw std::out_of_range("domb_direct: negative index");
    auto rows = binomial_rows(2 * n);
    const auto& mid = rows[static_cast<size_t>(n)];
    Int total = 0;
    for (long k = 0; k <= n; ++k) {
        const Int& cnk = mid[static_cast<size_t>(k)];
        const Int& c2k = rows[static_cast<size_t>(2 * k)][static_cast<size_t>(k)];
        const Int& c2nk = rows[static_cast<size_t>(2 * (n - k))]
                              [static_cast<size_t>(n - k)];
        total += cnk * cnk * c2k * c2nk;
    }
    return total;
}

SequenceTable build_table(long n_max) {
    if (n_max < 1) throw std::out_of_range("build_table: n_max must be >= 1");
    SequenceTable t;
    t.n_max = n_max;
    t.d.resize(static_cast<size_t>(n_max) + 1);
    t.b.resize(static_cast<size_t>(n_max) + 1);
    t.d[0] = 1;
    t.d[1] = 4;
    t.b[0] = 0;
    t.b[1] = 1;
    for (long n = 1; n < n_max; ++n) {
        Int mid = recurrence_u_coeff(n);
        Int back = 64 * Int(n) * Int(n) * Int(n);
        Int den = Int(n + 1) * Int(n + 1) * Int(n + 1);

        Int num = mid * t.d[static_cast<size_t>(n)] -
                  back * t.d[static_cast<size_t>(n - 1)];
        Int quot = num / den;
        if (quot * den != num)
            throw std::logic_error("recurrence left the integers at n = " +
                                   std::to_string(n + 1));
        t.d[static_cast<size_t>(n + 1)] = quot;

        t.b[static_cast<size_t>(n + 1)] =
            (Rat(mid) * t.b[static_cast<size_t>(n)] -
             Rat(back) * t.b[static_cast<size_t>(n - 1)]) /
            Rat(den);
    }
    return t;
}

WronskianRecord wronskian(const SequenceTable& table, long n) {
    if (n < 1 || n > table.n_max)
        throw std::out_of_range("wronskian: index outside table");
    WronskianRecord r;
    r.n = n;
    r.value = Rat(table.d[static_cast<size_t>(n)]) *
                  table.b[static_cast<size_t>(n - 1)] -
              Rat(table.d[static_cast<size_t>(n - 1)]) *
                  table.b[static_cast<size_t>(n)];
    return r;
}

Rat wronskian_closed_form(long n) {
    if (n < 1) throw std::out_of_range("wronskian_closed_form: n must be >= 1");
    Int n3 = Int(n) * Int(n) * Int(n);
    Int num = -pow64(n - 1);
    return Rat(num, n3);
}

TelescopedSum telescoped_sum(const SequenceTable& table, long n_terms) {
    if (n_terms < 1 || n_terms > table.n_max)
        throw std::out_of_range("telescoped_sum: N outside table");
    TelescopedSum out;
    out.n_terms = n_terms;
    Rat acc = 0;
    Int p64 = 1;
    for (long n = 1; n <= n_terms; ++n) {
        p64 *= 64;
        Int den = Int(n) * Int(n) * Int(n) * table.d[static_cast<size_t>(n)] *
                  table.d[static_cast<size_t>(n - 1)];
        acc += Rat(p64, den);
    }
    out.direct = acc;
    out.closed = Rat(64) * table.b[static_cast<size_t>(n_terms)] /
                 Rat(table.d[static_cast<size_t>(n_terms)]);
    return out;
}

std::vector<TelescopedSum> telescoped_sweep(const SequenceTable& table,
                                            long n_terms) {
    if (n_terms < 1 || n_terms > table.n_max)
        throw std::out_of_range("telescoped_sweep: N outside table");
    std::vector<TelescopedSum> out;
    out.reserve(static_cast<size_t>(n_terms));
    Rat acc = 0;
    Int p64 = 1;
    for (long n = 1; n <= n_terms; ++n) {
        p64 *= 64;
        Int den = Int(n) * Int(n) * Int(n) * table.d[static_cast<size_t>(n)] *
                  table.d[static_cast<size_t>(n - 1)];
        acc += Rat(p64, den);
        TelescopedSum s;
        s.n_terms = n;
        s.direct = acc;
        s.closed = Rat(64) * table.b[static_cast<size_t>(n)] /
                   Rat(table.d[static_cast<size_t>(n)]);
        out.push_back(std::move(s));
    }
    return out;
}

Rat apery_ratio(const SequenceTable& table, long n) {
    if (n < 1 || n > table.n_max)
        throw std::out_of_range("apery_ratio: index outside table");
    return table.b[static_cast<size_t>(n)] /
           Rat(table.d[static_cast<size_t>(n)]);
}

AsymptoticEstimate asymptotic_constant(const SequenceTable& table,
                                       SequenceKind kind, long n,
                                       const PrecisionContext& ctx) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("asymptotic_constant: n must be even, >= 4");
    if (n > table.n_max)
        throw std::out_of_range("asymptotic_constant: index outside table");
    PrecisionGuard guard(ctx);
    auto at = [&](long m) {
        Real u = kind == SequenceKind::domb
                     ? Real(table.d[static_cast<size_t>(m)])
                     : Real(table.b[static_cast<size_t>(m)]);
        Real scale = pow(Real(16), -static_cast<int>(m));
        Real m3 = Real(m) * Real(m) * Real(m);
        return u * scale * sqrt(m3);
    };
    AsymptoticEstimate est;
    est.n = n;
    est.constant = at(n);
    est.tail_delta = abs(est.constant - at(n / 2));
    return est;
}

} // namespace domblab
