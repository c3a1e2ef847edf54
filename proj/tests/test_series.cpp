#include "doctest.h"

#include <random>
#include <vector>

#include "oddzeta/errors.hpp"
#include "oddzeta/series.hpp"
#include "oddzeta/zeta_ref.hpp"
#include "reference_digits.hpp"

using namespace oddzeta;

namespace {

Real ref(const char* digits, const PrecisionContext& ctx) {
    return ctx.real(std::string(digits));
}

const char* odd_ref(unsigned r) {
    switch (r) {
        case 1: return refdigits::ZETA_3;
        case 2: return refdigits::ZETA_5;
        case 3: return refdigits::ZETA_7;
        case 4: return refdigits::ZETA_9;
        case 5: return refdigits::ZETA_11;
        default: return nullptr;
    }
}

} // namespace

TEST_CASE("family parsing and naming") {
    CHECK(SeriesFamily::parse("ewell").tag == FamilyTag::Ewell);
    CHECK(SeriesFamily::parse("ck").m == 2);
    CHECK(SeriesFamily::parse("m3").m == 3);
    CHECK(SeriesFamily::parse("m4").name() == "m4");
    CHECK(SeriesFamily::parse("m6").m == 6);
    CHECK_FALSE(SeriesFamily::ewell().multi_level());
    CHECK(SeriesFamily::ck().multi_level());
    CHECK_THROWS_AS(SeriesFamily::parse("m9"), ConfigError);
    CHECK_THROWS_AS(SeriesFamily::parse(""), ConfigError);
}

TEST_CASE("printed coefficient specializations, exact") {
    {
        RecurrenceCoefficients c = recurrence_coefficients(2, 3);
        CHECK(c.combined_coeff(1) == BigRational(41, 363));
        CHECK(c.tail_scale == BigRational(8, 363));
    }
    {
        RecurrenceCoefficients c = recurrence_coefficients(3, 3);
        CHECK(c.combined_coeff(1) == BigRational(2188, 16395));
        CHECK(c.combined_coeff(2) == BigRational(-18, 5465));
        CHECK(c.tail_scale == BigRational(-64, 16395));
    }
    {
        RecurrenceCoefficients c = recurrence_coefficients(2, 4);
        CHECK(c.combined_coeff(1) == BigRational(157, 1581));
        CHECK(c.tail_scale == BigRational(16, 1581));
    }
    {
        RecurrenceCoefficients c = recurrence_coefficients(2, 6);
        CHECK(c.combined_coeff(1) == BigRational(8, 87));
        CHECK(c.tail_scale == BigRational(1, 261));
    }
    {
        RecurrenceCoefficients c = recurrence_coefficients(3, 6);
        CHECK(c.combined_coeff(1) == BigRational(3124, 29655));
        CHECK(c.combined_coeff(2) == BigRational(-2, 3295));
        CHECK(c.tail_scale == BigRational(-16, 88965));
    }
}

TEST_CASE("m = 2 recurrence coefficients line up with the zeta(3) series") {
    RecurrenceCoefficients c1 = ck_coefficients(1);
    CHECK(c1.log_coeff.is_zero());
    CHECK(c1.lead_zeta_coeffs.empty());
    CHECK(c1.tail_scale == BigRational(-4, 7));
    CHECK(c1.kernel(0) == BigRational(1, 2));   // 1/((1)(2))
    CHECK(c1.kernel(1) == BigRational(1, 12));  // 1/((3)(4))
    CHECK(c1.kernel(10) == BigRational(1, 22 * 21));

    RecurrenceCoefficients c2 = ck_coefficients(2);
    CHECK(c2.tail_scale == BigRational(8, 31));

    // Same kernel arithmetic on the m-base side.
    RecurrenceCoefficients m3r2 = recurrence_coefficients(2, 3);
    CHECK(m3r2.kernel(1) == BigRational(1, 40));
    CHECK(m3r2.kernel(2) == BigRational(11, 1680));
}

TEST_CASE("zeta(3): all five routes agree with the frozen digits") {
    PrecisionContext ctx = make_context(50);
    Real truth = ref(refdigits::ZETA_3, ctx);
    Real eps = ctx.real("1e-49");

    EvalReport ew = ewell_zeta3(ctx);
    CHECK(abs(ew.value - truth) < eps);
    CHECK(ew.terms_used <= 90);
    CHECK(ew.certified_digits >= 50);

    EvalReport ck = ck_recurrence(1, {}, ctx);
    CHECK(ck.value == ew.value); // same coefficients, same sum, same bits

    const struct { int m; long max_terms; } caps[] = {{3, 60}, {4, 45}, {6, 35}};
    for (auto cap : caps) {
        EvalReport e = zeta3_family(cap.m, ctx);
        CHECK(abs(e.value - truth) < eps);
        CHECK(e.terms_used <= cap.max_terms);
        CHECK(e.certified_digits >= 50);
    }
}

TEST_CASE("evaluation reports keep the certified-digits contract") {
    PrecisionContext ctx = make_context(40);
    SeriesFamily fams[] = {SeriesFamily::ewell(), SeriesFamily::ck(), SeriesFamily::m3(),
                           SeriesFamily::m4(), SeriesFamily::m6()};
    for (const SeriesFamily& f : fams) {
        unsigned r_max = f.multi_level() ? 3 : 1;
        for (const EvalReport& e : zeta_odd_ladder(r_max, f, ctx)) {
            Real cap = abs(e.value) *
                       Real::from_string("1e-" + std::to_string(e.certified_digits),
                                         ctx.working_bits);
            CHECK(e.tail_bound < cap);
            CHECK(e.tail_bound.sgn() > 0);
            CHECK(e.certified_digits >= ctx.target_digits);
        }
    }
}

TEST_CASE("ladders agree across families and with the frozen digits") {
    PrecisionContext ctx = make_context(50);
    Real eps = ctx.real("1e-45");
    std::vector<EvalReport> ck = zeta_odd_ladder(5, SeriesFamily::ck(), ctx);
    std::vector<EvalReport> m3 = zeta_odd_ladder(5, SeriesFamily::m3(), ctx);
    std::vector<EvalReport> m4 = zeta_odd_ladder(5, SeriesFamily::m4(), ctx);
    std::vector<EvalReport> m6 = zeta_odd_ladder(5, SeriesFamily::m6(), ctx);
    REQUIRE(ck.size() == 5);
    REQUIRE(m3.size() == 5);
    for (unsigned r = 1; r <= 5; ++r) {
        Real truth = ref(odd_ref(r), ctx);
        CHECK(abs(ck[r - 1].value - truth) < eps);
        CHECK(abs(m3[r - 1].value - truth) < eps);
        CHECK(abs(m4[r - 1].value - truth) < eps);
        CHECK(abs(m6[r - 1].value - truth) < eps);
        CHECK(ck[r - 1].r == r);
    }
    // terms_used counts the whole chain, so the column never decreases.
    for (unsigned i = 1; i < 5; ++i) {
        CHECK(m6[i].terms_used >= m6[i - 1].terms_used);
        CHECK(ck[i].terms_used >= ck[i - 1].terms_used);
    }
    // Single-level entry point and the ladder bottom are the same computation.
    CHECK(zeta_odd_ladder(1, SeriesFamily::m6(), ctx)[0].value == zeta3_family(6, ctx).value);
    CHECK(zeta_odd_ladder(1, SeriesFamily::ewell(), ctx)[0].value == ewell_zeta3(ctx).value);
}

TEST_CASE("terms-to-target ordering follows the decay base") {
    PrecisionContext ctx = make_context(50);
    long t_ck = ck_recurrence(1, {}, ctx).terms_used;
    long t_m3 = zeta3_family(3, ctx).terms_used;
    long t_m4 = zeta3_family(4, ctx).terms_used;
    long t_m6 = zeta3_family(6, ctx).terms_used;
    CHECK(t_m6 <= t_m4);
    CHECK(t_m4 <= t_m3);
    CHECK(t_m3 <= t_ck);
}

TEST_CASE("tail bounds majorize the doubled-precision window sums") {
    PrecisionContext ctx = make_context(30);
    PrecisionContext wide = make_context(60);
    std::mt19937_64 rng(20240818);
    std::uniform_int_distribution<int> pick_fam(0, 3);
    std::uniform_int_distribution<unsigned> pick_r(1, 4);
    std::uniform_int_distribution<long> pick_k(1, 30);
    SeriesFamily fams[] = {SeriesFamily::ck(), SeriesFamily::m3(), SeriesFamily::m4(),
                           SeriesFamily::m6()};
    for (int trial = 0; trial < 12; ++trial) {
        SeriesFamily f = fams[pick_fam(rng)];
        unsigned r = pick_r(rng);
        long k = pick_k(rng);
        Real bound = tail_bound(f, r, k, ctx);
        // The window catches all but a 4^-40 sliver of the true tail.
        ConvergenceTrace tr = convergence_trace(f, r, k, k + 40, wide);
        Real window = Real::from_long(0, wide.working_bits);
        for (const Real& t : tr.term_magnitudes) window += t;
        CHECK(bound >= window);
        CHECK(tail_bound(f, r, k + 5, ctx) <= bound);
    }
    // Ewell has the same guarantee on its one level.
    Real b = tail_bound(SeriesFamily::ewell(), 1, 3, ctx);
    ConvergenceTrace tr = convergence_trace(SeriesFamily::ewell(), 1, 3, 43, wide);
    Real window = Real::from_long(0, wide.working_bits);
    for (const Real& t : tr.term_magnitudes) window += t;
    CHECK(b >= window);
}

TEST_CASE("term decay matches the geometric base after compensation") {
    PrecisionContext ctx = make_context(40);
    struct Probe {
        SeriesFamily fam;
        unsigned r;
    };
    const Probe probes[] = {{SeriesFamily::ewell(), 1}, {SeriesFamily::ck(), 1},
                            {SeriesFamily::ck(), 2},    {SeriesFamily::m3(), 1},
                            {SeriesFamily::m3(), 3},    {SeriesFamily::m4(), 2},
                            {SeriesFamily::m6(), 1},    {SeriesFamily::m6(), 4}};
    for (const Probe& p : probes) {
        ConvergenceTrace tr = convergence_trace(p.fam, p.r, 20, 40, ctx);
        REQUIRE(tr.term_magnitudes.size() == 21);
        Real expected = Real::from_rational(
            BigRational(1, static_cast<long>(p.fam.m) * p.fam.m), ctx.working_bits);
        CHECK(tr.expected_ratio == expected);
        Real rel = abs(tr.fitted_ratio / expected - 1);
        CHECK(rel < ctx.real("0.05"));
        // Raw ratio sits below the base: the polynomial factor still decays.
        CHECK(tr.raw_ratio < expected);
        for (size_t i = 1; i < tr.term_magnitudes.size(); ++i)
            CHECK(tr.term_magnitudes[i] < tr.term_magnitudes[i - 1]);
    }
}

TEST_CASE("recurrence needs its lower levels") {
    PrecisionContext ctx = make_context(30);
    std::vector<EvalReport> ladder = zeta_odd_ladder(3, SeriesFamily::ck(), ctx);
    // Feeding the exact lower values reproduces the ladder's top level.
    std::vector<Real> lower = {ladder[0].value, ladder[1].value};
    EvalReport top = ck_recurrence(3, lower, ctx);
    CHECK(top.value == ladder[2].value);

    CHECK_THROWS_AS(ck_recurrence(0, {}, ctx), DomainError);
    CHECK_THROWS_AS(ck_recurrence(2, {}, ctx), DomainError);
    CHECK_THROWS_AS(ck_recurrence(3, {ladder[0].value}, ctx), DomainError);
}

TEST_CASE("argument validation") {
    PrecisionContext ctx = make_context(30);
    CHECK_THROWS_AS(zeta3_family(5, ctx), ConfigError);
    CHECK_THROWS_AS(recurrence_coefficients(1, 3), DomainError);
    CHECK_THROWS_AS(recurrence_coefficients(2, 5), ConfigError);
    CHECK_THROWS_AS(zeta_odd_ladder(0, SeriesFamily::m3(), ctx), DomainError);
    CHECK_THROWS_AS(zeta_odd_ladder(2, SeriesFamily::ewell(), ctx), DomainError);
    CHECK_THROWS_AS(tail_bound(SeriesFamily::m3(), 0, 1, ctx), DomainError);
    CHECK_THROWS_AS(tail_bound(SeriesFamily::m3(), 1, 0, ctx), DomainError);
    CHECK_THROWS_AS(tail_bound(SeriesFamily::ewell(), 2, 1, ctx), DomainError);
    CHECK_THROWS_AS(convergence_trace(SeriesFamily::m4(), 1, 0, 10, ctx), DomainError);
    CHECK_THROWS_AS(convergence_trace(SeriesFamily::m4(), 1, 10, 10, ctx), DomainError);
    CHECK_THROWS_AS(convergence_trace(SeriesFamily::ewell(), 3, 1, 10, ctx), DomainError);
}
