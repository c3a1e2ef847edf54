#include "oddzeta/zeta_ref.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <type_traits>
#include <vector>

#include "oddzeta/bernoulli.hpp"
#include "oddzeta/errors.hpp"

namespace oddzeta {

namespace {

Real expm1(const Real& x) {
    Real r(x.prec());
    mpfr_expm1(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

// exp(z) - 1 with full relative accuracy near z = 0.
Cplx cplx_expm1(const Cplx& z) {
    if (z.im.is_zero()) return Cplx(expm1(z.re), Real(z.prec()));
    Real half_im = z.im / 2;
    Real sh = sin(half_im);
    Real re = expm1(z.re) * cos(z.im) - 2 * (sh * sh);
    Real im = exp(z.re) * sin(z.im);
    return {std::move(re), std::move(im)};
}

// cos(pi p / q), sin(pi p / q). Exact wherever the value is exactly
// representable (0, +-1/2, +-1) so that trivially vanishing sums and
// closed forms like -ln(2 sin(pi/6)) come out as true zeros.
Real cospi_rat(long p, long q, mpfr_prec_t prec) {
    Real x = Real::from_rational(BigRational(p, q), prec);
    Real r(prec);
#if MPFR_VERSION_MAJOR > 4 || (MPFR_VERSION_MAJOR == 4 && MPFR_VERSION_MINOR >= 2)
    mpfr_cospi(r.raw(), x.raw(), MPFR_RNDN);
#else
    long pm = ((p % (2 * q)) + 2 * q) % (2 * q); // pm/q in [0,2)
    if (pm * 2 == q || pm * 2 == 3 * q) return r;
    if (pm == 0) return Real::from_long(1, prec);
    if (pm == q) return Real::from_long(-1, prec);
    if (pm * 3 == q || pm * 3 == 5 * q) return Real::from_rational(BigRational(1, 2), prec);
    if (pm * 3 == 2 * q || pm * 3 == 4 * q)
        return Real::from_rational(BigRational(-1, 2), prec);
    mpfr_cos(r.raw(), (const_pi(prec) * x).raw(), MPFR_RNDN);
#endif
    return r;
}

Real sinpi_rat(long p, long q, mpfr_prec_t prec) {
    Real x = Real::from_rational(BigRational(p, q), prec);
    Real r(prec);
#if MPFR_VERSION_MAJOR > 4 || (MPFR_VERSION_MAJOR == 4 && MPFR_VERSION_MINOR >= 2)
    mpfr_sinpi(r.raw(), x.raw(), MPFR_RNDN);
#else
    long pm = ((p % (2 * q)) + 2 * q) % (2 * q); // pm/q in [0,2)
    if (pm == 0 || pm == q) return r;
    if (pm * 2 == q) return Real::from_long(1, prec);
    if (pm * 2 == 3 * q) return Real::from_long(-1, prec);
    if (pm * 6 == q || pm * 6 == 5 * q) return Real::from_rational(BigRational(1, 2), prec);
    if (pm * 6 == 7 * q || pm * 6 == 11 * q)
        return Real::from_rational(BigRational(-1, 2), prec);
    mpfr_sin(r.raw(), (const_pi(prec) * x).raw(), MPFR_RNDN);
#endif
    return r;
}

} // namespace

BigRational zeta_even_coefficient(unsigned n) {
    if (n == 0) return BigRational(-1, 2);
    // (-1)^(n-1) 2^(2n-1) B_2n / (2n)!
    BigRational c = BigRational(BigInt::pow(2, 2 * n - 1), BigInt::factorial(2 * n)) *
                    bernoulli_number(2 * n);
    return n % 2 == 1 ? c : -c;
}

ZetaEvenValue zeta_even(unsigned n, const PrecisionContext& ctx) {
    if (n == 0) throw DomainError("zeta_even needs n >= 1");
    BigRational c = zeta_even_coefficient(n);
    Real value = ctx.real(c) * pow(ctx.pi(), 2 * static_cast<long>(n));
    return ZetaEvenValue{n, std::move(c), std::move(value)};
}

BigRational zeta_nonpositive(unsigned n) {
    // -B_(n+1)(1) / (n+1)
    return -bernoulli_polynomial(n + 1, BigRational(1)) / BigRational(static_cast<long>(n) + 1);
}

// --- gamma ---------------------------------------------------------------

namespace {

struct SpougeSet {
    long a;
    std::vector<Real> c; // c[0] = sqrt(2 pi), then the pole residues
};

// Coefficients per working precision. a is sized so the expansion's
// relative error sits below 2^-(bits), with slack for the evaluation.
const SpougeSet& spouge_set(mpfr_prec_t bits) {
    static std::mutex mu;
    static std::map<mpfr_prec_t, std::unique_ptr<SpougeSet>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(bits);
    if (it != cache.end()) return *it->second;

    auto set = std::make_unique<SpougeSet>();
    // error ~ (2 pi)^-(a + 1/2): log2(2 pi) = 2.6515
    set->a = static_cast<long>(static_cast<double>(bits) / 2.6515) + 6;
    mpfr_prec_t wp = bits + 32;
    Real two_pi = 2 * const_pi(wp);
    set->c.push_back(sqrt(two_pi));
    Real half = Real::from_rational(BigRational(1, 2), wp);
    for (long k = 1; k < set->a; ++k) {
        Real ak = Real::from_long(set->a - k, wp);
        Real ck = pow(ak, Real::from_long(k, wp) - half) * exp(ak) /
                  Real::from_bigint(BigInt::factorial(static_cast<unsigned long>(k - 1)), wp);
        if (k % 2 == 0) ck = -ck;
        set->c.push_back(std::move(ck));
    }
    it = cache.emplace(bits, std::move(set)).first;
    return *it->second;
}

Real spouge_core(const Real& z, const SpougeSet& set, mpfr_prec_t wp) {
    Real sum = set.c[0];
    for (long k = 1; k < set.a; ++k) sum += set.c[k] / (z + (k - 1));
    Real base = z + (set.a - 1);
    Real half = Real::from_rational(BigRational(1, 2), wp);
    return pow(base, z - half) * exp(-base) * sum;
}

Cplx spouge_core(const Cplx& z, const SpougeSet& set, mpfr_prec_t wp) {
    Cplx sum(set.c[0]);
    for (long k = 1; k < set.a; ++k) sum += Cplx(set.c[k]) / (z + (k - 1));
    Cplx base = z + (set.a - 1);
    Real half = Real::from_rational(BigRational(1, 2), wp);
    return exp((z - half) * log(base)) * exp(-base) * sum;
}

} // namespace

Real gamma_fn(const Real& z, const PrecisionContext& ctx) {
    if (z.is_integer() && z.sgn() <= 0) throw PoleError("gamma pole at a non-positive integer");
    mpfr_prec_t wp = std::max(ctx.working_bits, z.prec());
    const SpougeSet& set = spouge_set(wp);
    Real half = Real::from_rational(BigRational(1, 2), wp);
    if (z < half) {
        // gamma(z) gamma(1-z) = pi / sin(pi z)
        Real pi = const_pi(wp);
        return pi / (sin(pi * z) * gamma_fn(1 - z, ctx));
    }
    return spouge_core(z, set, wp);
}

Cplx gamma_fn(const Cplx& z, const PrecisionContext& ctx) {
    if (z.im.is_zero()) return Cplx(gamma_fn(z.re, ctx));
    mpfr_prec_t wp = std::max(ctx.working_bits, z.prec());
    const SpougeSet& set = spouge_set(wp);
    Real half = Real::from_rational(BigRational(1, 2), wp);
    if (z.re < half) {
        Real pi = const_pi(wp);
        return Cplx(pi) / (sin(Cplx(pi) * z) * gamma_fn(1 - z, ctx));
    }
    return spouge_core(z, set, wp);
}

// --- zeta oracle ---------------------------------------------------------

namespace {

// Term count for the accelerated alternating series; the error shrinks
// like (3 + sqrt 8)^-n, one extra allowance per unit of |Im s|.
long eta_terms(const PrecisionContext& ctx, double abs_im) {
    double digits = static_cast<double>(ctx.target_digits) + 8.0;
    long n = static_cast<long>(std::ceil(digits * 1.30625 * 1.1)) + 8;
    n += static_cast<long>(std::ceil(std::abs(abs_im) * 0.91)) + 4;
    return n;
}

void check_capacity(const PrecisionContext& ctx) {
    // working precision must cover the digit request or the two
    // certification runs would agree on noise
    auto needed = static_cast<mpfr_prec_t>(std::ceil(ctx.target_digits * 3.3220)) + 8;
    if (ctx.working_bits < needed)
        throw PrecisionShortfall("working_bits " + std::to_string(ctx.working_bits) +
                                 " cannot certify " + std::to_string(ctx.target_digits) +
                                 " digits");
}

// Chebyshev-weighted acceleration of sum(k>=0) (-1)^k term(k); the error
// decays like (3 + sqrt 8)^-n. The weights are real even for complex terms.
template <typename Num, typename TermFn>
Num accelerated_alternating(long n, mpfr_prec_t wp, TermFn&& term) {
    Real big = pow(3 + sqrt(Real::from_long(8, wp)), n);
    Real d = (big + 1 / big) / 2;
    Real b = Real::from_long(-1, wp);
    Real c = -d;
    Num acc = [&] {
        if constexpr (std::is_same_v<Num, Real>)
            return Real(wp);
        else
            return Cplx::zero(wp);
    }();
    for (long k = 0; k < n; ++k) {
        c = b - c;
        acc += c * term(k);
        b *= 2 * ((k + n) * (k - n));
        b /= (2 * k + 1) * (k + 1);
    }
    return acc / d;
}

Real eta_real(const Real& s, const PrecisionContext& ctx) {
    mpfr_prec_t wp = std::max(ctx.working_bits, s.prec());
    long n = eta_terms(ctx, 0.0);
    if (s.is_integer() && s.sgn() > 0) {
        long si = s.to_long();
        return accelerated_alternating<Real>(
            n, wp, [&](long k) { return pow(Real::from_long(k + 1, wp), -si); });
    }
    return accelerated_alternating<Real>(
        n, wp, [&](long k) { return pow(Real::from_long(k + 1, wp), -s); });
}

Cplx eta_cplx(const Cplx& s, long n, mpfr_prec_t wp) {
    return accelerated_alternating<Cplx>(n, wp, [&](long k) {
        Real ln = log(Real::from_long(k + 1, wp));
        return exp(Cplx(-(s.re * ln), -(s.im * ln)));
    });
}

} // namespace

Real zeta_oracle(const Real& s, const PrecisionContext& ctx, bool near_pole_ok) {
    check_capacity(ctx);
    mpfr_prec_t wp = ctx.working_bits;
    Real one = Real::from_long(1, wp);
    if (s == one) throw PoleError("zeta has a pole at s = 1");
    Real dist = abs(s - one);
    if (!near_pole_ok && dist < Real::from_rational(BigRational(1, 1000), wp))
        throw PoleError("s within 1e-3 of the pole at 1; pass near_pole_ok to proceed");

    Real half = Real::from_rational(BigRational(1, 2), wp);
    Real ln2 = const_ln2(wp);
    if (s >= half) {
        Real eta = eta_real(s, ctx);
        Real denom = -expm1((1 - s) * ln2); // 1 - 2^(1-s)
        return eta / denom;
    }
    // functional equation, with the sin/(1 - 2^s) ratio kept as a unit so
    // the s -> 0 cancellation against zeta(1-s)'s pole never materializes
    Real pi = const_pi(wp);
    Real ratio(wp);
    if (s.is_zero()) {
        ratio = -pi / (2 * ln2); // limit value
    } else {
        ratio = sin(pi * s / 2) / (-expm1(s * ln2));
    }
    Real eta_ref = eta_real(1 - s, ctx);
    return exp(s * ln2) * pow(pi, s - 1) * gamma_fn(1 - s, ctx) * eta_ref * ratio;
}

Cplx zeta_oracle(const Cplx& s, const PrecisionContext& ctx, bool near_pole_ok) {
    if (s.im.is_zero()) return Cplx(zeta_oracle(s.re, ctx, near_pole_ok));
    check_capacity(ctx);
    mpfr_prec_t wp = std::max(ctx.working_bits, s.prec());
    Real dist = abs(s - Real::from_long(1, wp));
    if (!near_pole_ok && dist < Real::from_rational(BigRational(1, 1000), wp))
        throw PoleError("s within 1e-3 of the pole at 1; pass near_pole_ok to proceed");

    long n = eta_terms(ctx, s.im.to_double());
    Real half = Real::from_rational(BigRational(1, 2), wp);
    Real ln2 = const_ln2(wp);
    if (s.re >= half) {
        Cplx eta = eta_cplx(s, n, wp);
        Cplx denom = -cplx_expm1((1 - s) * ln2);
        return eta / denom;
    }
    Real pi = const_pi(wp);
    Cplx s_half = s * half;
    Cplx ratio = sin(Cplx(pi) * s_half) / (-cplx_expm1(s * ln2));
    Cplx eta_ref = eta_cplx(1 - s, n, wp);
    return exp(s * ln2) * exp((s - 1) * log(Cplx(pi))) * gamma_fn(1 - s, ctx) * eta_ref * ratio;
}

// --- trigonometric partial sums ------------------------------------------

Real cospi(const BigRational& t, mpfr_prec_t prec) {
    BigInt num = t.numerator();
    BigInt den = t.denominator();
    if (!num.fits_long() || !den.fits_long()) throw DomainError("t out of range");
    return cospi_rat(num.to_long(), den.to_long(), prec);
}

Real sinpi(const BigRational& t, mpfr_prec_t prec) {
    BigInt num = t.numerator();
    BigInt den = t.denominator();
    if (!num.fits_long() || !den.fits_long()) throw DomainError("t out of range");
    return sinpi_rat(num.to_long(), den.to_long(), prec);
}

TrigSumSpec trig_spec(TrigKind kind, const BigRational& theta_over_pi, long s, long N,
                      const PrecisionContext& ctx) {
    return TrigSumSpec{kind, theta_over_pi, Cplx(ctx.real(s)), N};
}
TrigSumSpec trig_spec(TrigKind kind, const BigRational& theta_over_pi, Real s, long N) {
    return TrigSumSpec{kind, theta_over_pi, Cplx(std::move(s)), N};
}
TrigSumSpec trig_spec(TrigKind kind, const BigRational& theta_over_pi, Cplx s, long N) {
    return TrigSumSpec{kind, theta_over_pi, std::move(s), N};
}

TrigSumResult trig_dirichlet(const TrigSumSpec& spec, const PrecisionContext& ctx) {
    if (spec.N < 0) throw DomainError("trig_dirichlet needs N >= 0");
    mpfr_prec_t wp = std::max(ctx.working_bits, spec.s.prec());
    BigInt nump = spec.theta_over_pi.numerator();
    BigInt denq = spec.theta_over_pi.denominator();
    if (!nump.fits_long() || !denq.fits_long())
        throw DomainError("angle numerator/denominator out of range");
    long p = nump.to_long();
    long q = denq.to_long();
    long period = 2 * q;
    long pm = ((p % period) + period) % period;

    // trig values repeat with period 2q in n
    std::vector<Real> table;
    table.reserve(static_cast<size_t>(period));
    for (long j = 0; j < period; ++j)
        table.push_back(spec.kind == TrigKind::Cos ? cospi_rat(j, q, wp)
                                                   : sinpi_rat(j, q, wp));

    const Real& sigma = spec.s.re;
    bool s_real = spec.s.im.is_zero();
    bool s_int = s_real && sigma.is_integer();
    long si = s_int ? sigma.to_long() : 0;

    Cplx acc = Cplx::zero(wp);
    long idx = 0;
    for (long n = 1; n <= spec.N; ++n) {
        idx += pm;
        if (idx >= period) idx -= period;
        const Real& t = table[static_cast<size_t>(idx)];
        if (t.is_zero()) continue;
        if (s_int) {
            acc.re += t * pow(Real::from_long(n, wp), -si);
        } else if (s_real) {
            acc.re += t * pow(Real::from_long(n, wp), -sigma);
        } else {
            Real ln = log(Real::from_long(n, wp));
            acc += t * exp(Cplx(-(sigma * ln), -(spec.s.im * ln)));
        }
    }

    std::optional<Real> tail;
    Real one = Real::from_long(1, wp);
    if (sigma > one && spec.N >= 1) {
        // integral comparison: sum(n > N) n^-sigma <= N^(1-sigma)/(sigma-1)
        tail = pow(Real::from_long(spec.N, wp), 1 - sigma) / (sigma - 1);
    }
    return TrigSumResult{std::move(acc), std::move(tail)};
}

// --- weight-1 closed forms -----------------------------------------------

Real log_sin_closed(const BigRational& t, const PrecisionContext& ctx) {
    if (t <= BigRational(0) || BigRational(1) <= t)
        throw DomainError("log-sine closed form needs t in (0,1); singular at the endpoints");
    BigInt num = t.numerator();
    BigInt den = t.denominator();
    if (!num.fits_long() || !den.fits_long()) throw DomainError("t out of range");
    Real s = sinpi_rat(num.to_long(), den.to_long(), ctx.working_bits);
    return -log(2 * s);
}

Real sawtooth_closed(const BigRational& t, const PrecisionContext& ctx) {
    if (t <= BigRational(0) || BigRational(1) <= t)
        throw DomainError("sawtooth closed form needs t in (0,1)");
    return ctx.pi() * ctx.real(BigRational(1) - BigRational(2) * t) / 2;
}

} // namespace oddzeta
