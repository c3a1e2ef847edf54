#include "doctest.h"

#include <random>

#include "oddzeta/errors.hpp"
#include "oddzeta/zeta_ref.hpp"
#include "reference_digits.hpp"

using namespace oddzeta;

namespace {

Real ref(const char* digits, const PrecisionContext& ctx) {
    return ctx.real(std::string(digits));
}

Real tol(long e, const PrecisionContext& ctx) {
    return ctx.real("1e" + std::to_string(e));
}

} // namespace

TEST_CASE("even-argument closed forms") {
    PrecisionContext ctx = make_context(60);
    CHECK(zeta_even_coefficient(0) == BigRational(-1, 2));
    CHECK(zeta_even_coefficient(1) == BigRational(1, 6));
    CHECK(zeta_even_coefficient(2) == BigRational(1, 90));
    CHECK(zeta_even_coefficient(3) == BigRational(1, 945));
    CHECK(zeta_even_coefficient(4) == BigRational(1, 9450));
    ZetaEvenValue z2 = zeta_even(1, ctx);
    CHECK(abs(z2.value - ctx.pi() * ctx.pi() / 6) < tol(-58, ctx));
    // The oracle walks a completely different route; the two must meet.
    for (unsigned n = 1; n <= 20; ++n) {
        ZetaEvenValue closed = zeta_even(n, ctx);
        Real via_eta = zeta_oracle(ctx.real(2L * n), ctx);
        CHECK(abs(closed.value - via_eta) < tol(-57, ctx));
    }
}

TEST_CASE("nonpositive integers: rational values and trivial zeros") {
    CHECK(zeta_nonpositive(0) == BigRational(-1, 2));
    CHECK(zeta_nonpositive(1) == BigRational(-1, 12));
    CHECK(zeta_nonpositive(3) == BigRational(1, 120));
    CHECK(zeta_nonpositive(5) == BigRational(-1, 252));
    for (unsigned k = 1; k <= 10; ++k) CHECK(zeta_nonpositive(2 * k).is_zero());

    PrecisionContext ctx = make_context(40);
    for (unsigned n = 0; n <= 15; ++n) {
        Real via_reflection = zeta_oracle(ctx.real(-static_cast<long>(n)), ctx);
        Real exact = ctx.real(zeta_nonpositive(n));
        CHECK(abs(via_reflection - exact) < tol(-38, ctx));
    }
}

TEST_CASE("oracle matches the frozen digits") {
    PrecisionContext ctx = make_context(65);
    struct Row {
        long two_r_plus_1;
        const char* digits;
    };
    const Row rows[] = {{3, refdigits::ZETA_3},   {5, refdigits::ZETA_5},
                        {7, refdigits::ZETA_7},   {9, refdigits::ZETA_9},
                        {11, refdigits::ZETA_11}, {13, refdigits::ZETA_13},
                        {15, refdigits::ZETA_15}, {17, refdigits::ZETA_17},
                        {19, refdigits::ZETA_19}, {21, refdigits::ZETA_21}};
    for (const Row& row : rows)
        CHECK(abs(zeta_oracle(ctx.real(row.two_r_plus_1), ctx) - ref(row.digits, ctx)) <
              tol(-63, ctx));
    CHECK(abs(zeta_oracle(ctx.real("0.25"), ctx) - ref(refdigits::ZETA_QUARTER, ctx)) <
          tol(-63, ctx));
    CHECK(abs(zeta_oracle(ctx.real("-2.5"), ctx) - ref(refdigits::ZETA_MINUS_2P5, ctx)) <
          tol(-63, ctx));
    CHECK(abs(zeta_oracle(ctx.real("-9.5"), ctx) - ref(refdigits::ZETA_MINUS_9P5, ctx)) <
          tol(-60, ctx));
}

TEST_CASE("oracle at complex arguments") {
    PrecisionContext ctx = make_context(60);
    Cplx z1 = zeta_oracle(Cplx(ctx.real("2.5"), ctx.real("1.5")), ctx);
    CHECK(abs(z1.re - ref(refdigits::ZETA_C1_RE, ctx)) < tol(-58, ctx));
    CHECK(abs(z1.im - ref(refdigits::ZETA_C1_IM, ctx)) < tol(-58, ctx));
    Cplx z2 = zeta_oracle(Cplx(ctx.real("0.75"), ctx.real("2.0")), ctx);
    CHECK(abs(z2.re - ref(refdigits::ZETA_C2_RE, ctx)) < tol(-57, ctx));
    CHECK(abs(z2.im - ref(refdigits::ZETA_C2_IM, ctx)) < tol(-57, ctx));
    // A real argument through the complex entry point lands on the real line.
    Cplx z3 = zeta_oracle(Cplx(ctx.real(3)), ctx);
    CHECK(z3.im.is_zero());
    CHECK(abs(z3.re - ref(refdigits::ZETA_3, ctx)) < tol(-58, ctx));
}

TEST_CASE("pole handling at s = 1") {
    PrecisionContext ctx = make_context(50);
    CHECK_THROWS_AS(zeta_oracle(ctx.real(1), ctx), PoleError);
    CHECK_THROWS_AS(zeta_oracle(ctx.real("1.0005"), ctx), PoleError);
    CHECK_THROWS_AS(zeta_oracle(Cplx(ctx.real(1)), ctx), PoleError);
    // Near-pole values are reachable on request and match the frozen digits.
    Real above = zeta_oracle(ctx.real("1.000001"), ctx, true);
    CHECK(abs(above - ref(refdigits::ZETA_NEAR_POLE_ABOVE, ctx)) < tol(-40, ctx));
    Real below = zeta_oracle(ctx.real("0.999999"), ctx, true);
    CHECK(abs(below - ref(refdigits::ZETA_NEAR_POLE_BELOW, ctx)) < tol(-40, ctx));
    // (s-1) zeta(s) -> 1, so the residue slopes on the two sides straddle
    // the pole: 1e-6 (above - below) = 2 + O(1e-12).
    CHECK(abs(ctx.real("1e-6") * (above - below) - 2) < ctx.real("1e-9"));
}

TEST_CASE("gamma: frozen digits, recurrence, and poles") {
    PrecisionContext ctx = make_context(60);
    CHECK(abs(gamma_fn(ctx.real(BigRational(1, 2)), ctx) - ref(refdigits::SQRT_PI, ctx)) <
          tol(-58, ctx));
    CHECK(abs(gamma_fn(ctx.real(BigRational(1, 3)), ctx) - ref(refdigits::GAMMA_THIRD, ctx)) <
          tol(-58, ctx));
    CHECK(abs(gamma_fn(ctx.real(6), ctx) - ctx.real(120)) < tol(-55, ctx));
    Cplx g = gamma_fn(Cplx(ctx.real("2.5"), ctx.real("1.5")), ctx);
    CHECK(abs(g.re - ref(refdigits::GAMMA_C_RE, ctx)) < tol(-58, ctx));
    CHECK(abs(g.im - ref(refdigits::GAMMA_C_IM, ctx)) < tol(-58, ctx));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-3000, 3000);
    for (int i = 0; i < 25; ++i) {
        long n = num(rng);
        if (n % 1000 == 0) continue;
        Real z = ctx.real(BigRational(n, 1000));
        if (z.is_integer() && z.sgn() <= 0) continue;
        Real lhs = gamma_fn(z + 1, ctx);
        Real rhs = z * gamma_fn(z, ctx);
        CHECK(abs(lhs - rhs) <= abs(rhs) * tol(-55, ctx));
    }

    CHECK_THROWS_AS(gamma_fn(ctx.real(0), ctx), PoleError);
    CHECK_THROWS_AS(gamma_fn(ctx.real(-4), ctx), PoleError);
    CHECK_THROWS_AS(gamma_fn(Cplx(ctx.real(-2)), ctx), PoleError);
}

TEST_CASE("rational-angle trig: exact special values") {
    mpfr_prec_t prec = 200;
    CHECK(sinpi(BigRational(0), prec).is_zero());
    CHECK(sinpi(BigRational(1), prec).is_zero());
    CHECK(sinpi(BigRational(7), prec).is_zero());
    CHECK(cospi(BigRational(1, 2), prec).is_zero());
    CHECK(cospi(BigRational(-3, 2), prec).is_zero());
    CHECK(sinpi(BigRational(1, 2), prec) == Real::from_long(1, prec));
    CHECK(sinpi(BigRational(-1, 2), prec) == Real::from_long(-1, prec));
    CHECK(cospi(BigRational(0), prec) == Real::from_long(1, prec));
    CHECK(cospi(BigRational(1), prec) == Real::from_long(-1, prec));
    CHECK(sinpi(BigRational(1, 6), prec) == Real::from_rational(BigRational(1, 2), prec));
    CHECK(sinpi(BigRational(5, 6), prec) == Real::from_rational(BigRational(1, 2), prec));
    CHECK(cospi(BigRational(1, 3), prec) == Real::from_rational(BigRational(1, 2), prec));
    CHECK(cospi(BigRational(2, 3), prec) == Real::from_rational(BigRational(-1, 2), prec));
    // And one irrational one against its square.
    Real c = cospi(BigRational(1, 4), prec);
    CHECK(abs(c * c - Real::from_rational(BigRational(1, 2), prec)) < Real::pow2(-190, prec));
}

TEST_CASE("trig sums: closed-form spot checks") {
    PrecisionContext ctx = make_context(40);
    // sum cos(n pi)/n^2 = -eta(2) = -pi^2/12.
    TrigSumResult alt = trig_dirichlet(trig_spec(TrigKind::Cos, BigRational(1), 2L, 200000, ctx), ctx);
    CHECK(abs(alt.value.re + ctx.pi() * ctx.pi() / 12) < ctx.real("1e-10"));
    CHECK(alt.value.im.is_zero());
    REQUIRE(alt.tail_bound.has_value());
    CHECK(*alt.tail_bound >= abs(alt.value.re + ctx.pi() * ctx.pi() / 12));

    // Full-period sine at integer angles vanishes term by term.
    TrigSumResult zero = trig_dirichlet(trig_spec(TrigKind::Sin, BigRational(2), 3L, 500, ctx), ctx);
    CHECK(zero.value.re.is_zero());

    // Alternating weight-3 cosine sum against the frozen eta digits.
    TrigSumResult eta3 = trig_dirichlet(trig_spec(TrigKind::Cos, BigRational(1), 3L, 100000, ctx), ctx);
    CHECK(abs(eta3.value.re + ref(refdigits::ETA_3, ctx)) < ctx.real("1e-9"));

    // No tail bound at or below the convergence bar.
    TrigSumResult slow = trig_dirichlet(trig_spec(TrigKind::Sin, BigRational(1, 3), 1L, 100, ctx), ctx);
    CHECK_FALSE(slow.tail_bound.has_value());

    CHECK_THROWS_AS(trig_dirichlet(trig_spec(TrigKind::Cos, BigRational(1, 2), 0L, -5, ctx), ctx),
                    DomainError);
}

TEST_CASE("closed forms for the weight-1 sums") {
    PrecisionContext ctx = make_context(40);
    CHECK(abs(sawtooth_closed(BigRational(1, 2), ctx)) < tol(-38, ctx));
    CHECK(abs(sawtooth_closed(BigRational(1, 4), ctx) - ctx.pi() / 4) < tol(-38, ctx));
    CHECK(log_sin_closed(BigRational(1, 6), ctx).is_zero());
    CHECK(abs(log_sin_closed(BigRational(1, 4), ctx) + ctx.ln2() / 2) < tol(-38, ctx));
    CHECK(abs(log_sin_closed(BigRational(1, 2), ctx) + ctx.ln2()) < tol(-38, ctx));
    CHECK_THROWS_AS(log_sin_closed(BigRational(0), ctx), DomainError);
    CHECK_THROWS_AS(log_sin_closed(BigRational(1), ctx), DomainError);
    CHECK_THROWS_AS(sawtooth_closed(BigRational(-1, 4), ctx), DomainError);
}
