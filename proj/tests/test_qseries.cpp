#include "domblab/qseries.hpp"

#include <doctest.h>

#include <random>

using domblab::QSeries;
using domblab::Rat;

namespace {

QSeries from_list(long lo, std::initializer_list<long> cs, long trunc) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return QSeries(lo, std::move(v), trunc);
}

struct SeriesGen {
    std::mt19937_64 rng{20240817};

    QSeries next() {
        std::uniform_int_distribution<long> val(0, 3), len(1, 8), num(-9, 9),
            den(1, 5), slack(0, 4);
        long lo = val(rng);
        long n = len(rng);
        std::vector<Rat> c;
        for (long i = 0; i < n; ++i) c.emplace_back(num(rng), den(rng));
        return QSeries(lo, std::move(c), lo + n - 1 + slack(rng));
    }

    QSeries next_unit() {
        // Valuation 0 with a nonzero constant term, safe to invert.
        QSeries s = next();
        std::uniform_int_distribution<long> num(1, 9);
        return QSeries::constant(Rat(num(rng)), s.trunc()) + s.shift(1 - std::min<long>(s.valuation(), 1)).truncated(s.trunc());
    }
};

long min_trunc(const QSeries& a, const QSeries& b) {
    return std::min(a.trunc(), b.trunc());
}

} // namespace

TEST_CASE("construction normalizes and tracks the certified order") {
    QSeries s = from_list(0, {0, 0, 3, 0, 5, 0}, 9);
    CHECK(s.valuation() == 2);
    CHECK(s.trunc() == 9);
    CHECK(s.coeff(2) == 3);
    CHECK(s.coeff(3) == 0);
    CHECK(s.coeff(4) == 5);
    CHECK(s.coeff(9) == 0);
    CHECK_THROWS_AS((void)s.coeff(10), std::out_of_range);

    QSeries z = QSeries::zero(7);
    CHECK(z.is_zero());
    CHECK(z.valuation() == 8);

    QSeries clipped = from_list(0, {1, 1, 1, 1, 1}, 2);
    CHECK(clipped.trunc() == 2);
    CHECK_THROWS_AS((void)clipped.coeff(3), std::out_of_range);
}

TEST_CASE("addition and multiplication follow the truncation rules") {
    QSeries a = from_list(1, {1, 2, 3}, 5);   // val 1, trunc 5
    QSeries b = from_list(2, {4, 5}, 4);      // val 2, trunc 4
    CHECK((a + b).trunc() == 4);
    QSeries p = a * b;
    CHECK(p.trunc() == std::min(1 + 4, 2 + 5));
    CHECK(p.valuation() == 3);
    CHECK(p.coeff(3) == 4);
    CHECK(p.coeff(4) == 5 + 8);
}

TEST_CASE("zero series participate in the min rules without special cases") {
    QSeries z = QSeries::zero(6);
    QSeries b = from_list(2, {1, 1}, 8);
    QSeries p = z * b;
    CHECK(p.is_zero());
    // O(q^7) * (q^2 + ...) is O(q^9), so knowledge reaches q^8.
    CHECK(p.trunc() == 8);
}

TEST_CASE("geometric series inverse") {
    QSeries g = from_list(0, {1, -1}, 12);
    QSeries inv = g.inverse();
    for (long n = 0; n <= inv.trunc(); ++n) CHECK(inv.coeff(n) == 1);
    CHECK(inv.trunc() == 12);
}

TEST_CASE("monomials invert exactly") {
    QSeries m = QSeries::monomial(Rat(3, 2), 2, QSeries::kExactTrunc);
    QSeries inv = m.inverse();
    CHECK(inv.valuation() == -2);
    CHECK(inv.coeff(-2) == Rat(2, 3));
    CHECK(inv.trunc() == QSeries::kExactTrunc);
}

TEST_CASE("inverting a vanished or exact multi-term series is rejected") {
    CHECK_THROWS_AS(QSeries::zero(5).inverse(), domblab::SeriesDivisionError);
    QSeries poly = from_list(0, {1, 1}, QSeries::kExactTrunc);
    CHECK_THROWS_AS(poly.inverse(), std::logic_error);
}

TEST_CASE("division tracks valuations") {
    QSeries a = from_list(3, {2, 4, 6, 8}, 8);  // val 3, trunc 8
    QSeries b = from_list(1, {2, 2}, 6);        // val 1, trunc 6
    QSeries q = a / b;
    CHECK(q.valuation() == 2);
    CHECK(q.trunc() == (3 - 1) + std::min(8 - 3, 6 - 1));
    CHECK(q.coeff(2) == 1);
    // (2q^3 + 4q^4) / (2q + 2q^2) = q^2 + q^3 - ...
    CHECK(q.coeff(3) == 1);
}

TEST_CASE("derivations") {
    QSeries s = from_list(0, {7, 1, 5}, 6);
    QSeries qd = s.q_derivative();
    CHECK(qd.trunc() == 6);
    CHECK(qd.coeff(0) == 0);
    CHECK(qd.coeff(1) == 1);
    CHECK(qd.coeff(2) == 10);

    QSeries zd = s.z_derivative();
    CHECK(zd.trunc() == 5);
    CHECK(zd.coeff(0) == 1);
    CHECK(zd.coeff(1) == 10);
}

TEST_CASE("composition matches a hand expansion and caps the order") {
    QSeries outer = from_list(0, {1, 1, 1}, 2);
    QSeries inner = from_list(1, {1, 1}, 5);
    QSeries c = QSeries::compose(outer, inner);
    CHECK(c.trunc() == 2);  // (T_outer + 1) * w - 1
    CHECK(c.coeff(0) == 1);
    CHECK(c.coeff(1) == 1);
    CHECK(c.coeff(2) == 2);
    CHECK_THROWS_AS(QSeries::compose(outer, outer), std::invalid_argument);
}

TEST_CASE("pow_int") {
    QSeries s = from_list(0, {1, 1}, 10);
    QSeries cube = s.pow_int(3);
    CHECK(cube.coeff(0) == 1);
    CHECK(cube.coeff(1) == 3);
    CHECK(cube.coeff(2) == 3);
    CHECK(cube.coeff(3) == 1);
    QSeries neg = s.pow_int(-2);
    CHECK(neg.coeff(0) == 1);
    CHECK(neg.coeff(1) == -2);
    CHECK(neg.coeff(2) == 3);
}

TEST_CASE("algebra laws on random series") {
    SeriesGen gen;
    for (int it = 0; it < 200; ++it) {
        QSeries a = gen.next(), b = gen.next(), c = gen.next();
        {
            QSeries lhs = a * b, rhs = b * a;
            CHECK(QSeries::agree_through(lhs, rhs, min_trunc(lhs, rhs)));
        }
        {
            QSeries lhs = (a * b) * c, rhs = a * (b * c);
            CHECK(QSeries::agree_through(lhs, rhs, min_trunc(lhs, rhs)));
        }
        {
            QSeries lhs = a * (b + c), rhs = a * b + a * c;
            CHECK(QSeries::agree_through(lhs, rhs, min_trunc(lhs, rhs)));
        }
        {
            // Leibniz rule for theta = q d/dq.
            QSeries lhs = (a * b).q_derivative();
            QSeries rhs = a.q_derivative() * b + a * b.q_derivative();
            CHECK(QSeries::agree_through(lhs, rhs, min_trunc(lhs, rhs)));
        }
    }
}

TEST_CASE("multiply then divide returns the start") {
    SeriesGen gen;
    for (int it = 0; it < 100; ++it) {
        QSeries a = gen.next();
        QSeries u = gen.next_unit();
        QSeries round = (a * u) / u;
        long through = std::min(round.trunc(), a.trunc());
        CHECK(QSeries::agree_through(round, a, through));
    }
}

TEST_CASE("comparison beyond the certified order is refused") {
    QSeries a = from_list(0, {1}, 3);
    QSeries b = from_list(0, {1}, 9);
    CHECK_THROWS_AS(QSeries::agree_through(a, b, 5), std::out_of_range);
    CHECK(QSeries::agree_through(a, b, 3));
    QSeries c = from_list(0, {1, 0, 2}, 9);
    auto diff = QSeries::first_difference(b, c, 3);
    REQUIRE(diff.has_value());
    CHECK(*diff == 2);
}
