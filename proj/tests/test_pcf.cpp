#include "domblab/analytic.hpp"
#include "domblab/pcf.hpp"

#include <doctest.h>

using namespace domblab;

TEST_CASE("convergent seeds and early values") {
    auto conv = convergents(domb_pcf(), 3);
    CHECK(conv[0].p == 2);
    CHECK(conv[0].q == 1);
    CHECK(conv[1].p == 56);
    CHECK(conv[1].q == 36);
    CHECK(conv[2].p == 6912);
    CHECK(conv[2].q == 4736);
}

TEST_CASE("cross difference collapses to the numerator product") {
    auto spec = domb_pcf();
    auto conv = convergents(spec, 40);
    CHECK(cross_difference(spec, conv, 1) == -16);
    CHECK(cross_difference(spec, conv, 2) == -16384);
    Int prod = 1;
    for (long n = 1; n <= 40; ++n) {
        prod *= 16 * int_pow(Int(n), 6);
        Int expected = -prod;
        CHECK(cross_difference(spec, conv, n) == Rat(expected));
    }
    CHECK_THROWS_AS(cross_difference(spec, conv, 0), std::out_of_range);
    CHECK_THROWS_AS(cross_difference(spec, conv, 41), std::out_of_range);
}

TEST_CASE("normalization against the sequence table") {
    auto table = build_table(61);
    auto rep = verify_normalization(table, 60);
    CHECK(rep.ok);
    CHECK(rep.first_failure == -1);
    CHECK_THROWS_AS(verify_normalization(table, 61), std::invalid_argument);
}

TEST_CASE("convergent ratio equals the table ratio") {
    auto table = build_table(41);
    auto conv = convergents(domb_pcf(), 40);
    for (long n = 0; n <= 40; ++n) {
        Rat lhs = Rat(conv[static_cast<size_t>(n)].p) /
                  Rat(conv[static_cast<size_t>(n)].q);
        Rat rhs = Rat(table.d[static_cast<size_t>(n + 1)]) /
                  (Rat(2) * table.b[static_cast<size_t>(n + 1)]);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("backward evaluation agrees with the forward recurrence") {
    // Evaluating the fraction from the bottom up is an independent route to
    // P_N / Q_N.
    PrecisionGuard guard(256u);
    auto spec = domb_pcf();
    const long depth = 15;
    auto conv = convergents(spec, depth);
    Real tail = Real(spec.a.eval(Int(depth)));
    for (long k = depth - 1; k >= 0; --k) {
        Real ak(spec.a.eval(Int(k)));
        Real bk1(spec.b.eval(Int(k + 1)));
        tail = ak + bk1 / tail;
    }
    const auto& last = conv[static_cast<size_t>(depth)];
    Real forward = Real(last.p) / Real(last.q);
    CHECK(abs(tail - forward) < pow(Real(10), -40));
}

TEST_CASE("value estimate approaches the reference constant") {
    PrecisionContext ctx;
    ctx.precision_bits = 384;
    ctx.tol_digits = 60;
    PrecisionGuard guard(ctx);
    auto est = value_estimate(domb_pcf(), 100, ctx);
    Real z3 = zeta3(ctx);
    Real reference = Real(12) / (7 * z3);
    CHECK(abs(est.value - reference) < pow(Real(10), -50));
    CHECK(est.step_bound < pow(Real(10), -55));
    CHECK(est.step_bound > 0);
}

TEST_CASE("toy specs run through the same engine") {
    PCFSpec products;
    products.a = Poly<Int>({Int(1), Int(1)});
    products.b = Poly<Int>();
    auto conv = convergents(products, 6);
    Int fact = 1;  // with b = 0 both continuants are pure products
    for (long n = 0; n <= 6; ++n) {
        fact *= n + 1;
        CHECK(conv[static_cast<size_t>(n)].p == fact);
        CHECK(conv[static_cast<size_t>(n)].q == fact);
    }

    PCFSpec degenerate;
    degenerate.a = Poly<Int>();
    degenerate.b = Poly<Int>({Int(1)});
    PrecisionContext ctx;
    try {
        value_estimate(degenerate, 1, ctx);
        FAIL("expected ZeroDenominatorError");
    } catch (const ZeroDenominatorError& err) {
        CHECK(err.index == 1);
    }
}
