#include "oddzeta/identities.hpp"

#include <sstream>
#include <vector>

#include "oddzeta/bernoulli.hpp"
#include "oddzeta/errors.hpp"

namespace oddzeta {

namespace {

// All truncation budgets below majorize |remainder| with no cancellation
// credit: Fourier tails by the integral comparison of sum n^-sigma, power
// tails by first-omitted-term geometric or polynomial closure with
// zeta(2k) <= zeta(2) < 823/500. The assembled bound multiplies by 10 and
// adds a rounding floor, so a pass is meaningful and a miss is a defect.

const BigRational& zeta2_pad() {
    static const BigRational pad(823, 500);
    return pad;
}

Real plus_inf(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_inf(r.raw(), 1);
    return r;
}

// Two independently computed sides agree at best to the context's digit
// target; the guard bits absorb evaluator rounding but are not promised to
// survive it. The floor keeps truncation bounds from claiming more than the
// arithmetic can deliver.
Real rounding_floor(const Cplx& lhs, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.working_bits;
    Real one = Real::from_long(1, wp);
    Real scale = max(abs(lhs), one);
    return scale * pow(Real::from_long(10, wp), -static_cast<long>(ctx.target_digits));
}

Residual make_residual(std::string id, std::string params, Cplx lhs, Cplx rhs,
                       const Real& n_side, const Real& k_side, bool endpoint,
                       const PrecisionContext& ctx) {
    Real res = abs(lhs - rhs);
    Real bound = 10 * (n_side + k_side) + rounding_floor(lhs, ctx);
    bool ok = res <= bound;
    return Residual{std::move(id), std::move(params), std::move(lhs), std::move(rhs),
                    std::move(res),  std::move(bound), ok,
                    endpoint,        std::nullopt};
}

Real zeta_at(long n, const PrecisionContext& ctx) {
    return zeta_oracle(Real::from_long(n, ctx.working_bits), ctx);
}

// sum(k > K) (2k)^-p <= 2^-p (K^-p + K^(1-p)/(p-1)), p >= 2.
Real poly_closure(unsigned p, long K, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.working_bits;
    long pl = static_cast<long>(p);
    Real k = Real::from_long(K, wp);
    return (pow(k, -pl) + pow(k, 1 - pl) / (pl - 1)) * Real::pow2(-pl, wp);
}

// sum(k > K) g_k z_k rho^k with g non-increasing and z_k <= zeta(2):
// g_(K+1) pad rho^(K+1) / (1 - rho).
Real geometric_tail(const BigRational& g_next, const BigRational& rho, long K,
                    const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.working_bits;
    Real r = ctx.real(rho);
    Real denom = 1 - r;
    if (!(denom > Real(wp))) return plus_inf(wp);
    return ctx.real(g_next * zeta2_pad()) * pow(r, K + 1) / denom;
}

std::string cplx_str(const Cplx& z) {
    if (z.im.is_zero()) return z.re.to_string(17);
    std::string im = z.im.to_string(17);
    if (!im.empty() && im[0] == '-') return z.re.to_string(17) + im + "i";
    return z.re.to_string(17) + "+" + im + "i";
}

} // namespace

// --- registry -------------------------------------------------------------

const std::vector<IdentityInfo>& identity_registry() {
    static const std::vector<IdentityInfo> table = {
        {"T3.5-cos", "r >= 1; x/c in (0,2]", "N, K",
         "weight-(2r+1) cosine sum vs zeta head, harmonic-log term, zeta(2k) tail"},
        {"T3.5-sin", "r >= 1; x/c in [0,2]", "N, K",
         "weight-2r sine sum vs zeta head, harmonic-log term, zeta(2k) tail"},
        {"L4.2", "r >= 1; x/c in [-2,2]", "N, K",
         "r*cos(2r+1) + (pi x/2c)*sin(2r) vs zeta head plus zeta(2k) tail; even in x"},
        {"T4.1", "r >= 2: x/c in [-2,2]; r = 1: x/c in (-2,2)", "N, K",
         "r(2r-1)*cos(2r+1) + (theta^2/2)*cos(2r-1) vs zeta head plus zeta(2k) tail"},
        {"T4.2", "x/c in (0,2)", "N, K",
         "cos(3) sum with log-sine correction vs zeta(3) plus zeta(2k) tail"},
        {"L4.1-a", "Re(s) > 1; angle 2pi/3", "N", "cosine sum vs (3^(1-s)-1)/2 zeta(s)"},
        {"L4.1-b", "Re(s) > 1; angle pi/2", "N", "cosine sum vs 2^-s (2^(1-s)-1) zeta(s)"},
        {"L4.1-c", "Re(s) > 1; angle pi/3", "N",
         "cosine sum vs (6^(1-s)-3^(1-s)-2^(1-s)+1)/2 zeta(s)"},
        {"Ex2.17", "wt/pi in (-1/3,1/3)", "N",
         "cos(wt) vs its alternating third-harmonic expansion"},
        {"L3.2-sin", "x/2c in (0,1)", "N",
         "weight-1 sine sum vs sawtooth pi(1-2t)/2; Cesaro residual attached"},
        {"L3.2-cos", "x/2c in (0,1)", "N",
         "weight-1 cosine sum vs -ln(2 sin(pi t)); Cesaro residual attached"},
        {"L3.4", "x in (0,pi)", "K", "ln(sin x / x) vs -sum zeta(2k)/(k pi^2k) x^2k"},
        {"T4.7", "Re(s) > 1; x/c in [-2,2], endpoints informational", "N, K",
         "s*cos(s+1) + theta*sin(s) vs sum (-1)^k (s-2k)/(2k)! theta^2k zeta(s+1-2k)"},
        {"T4.8", "Re(s) > 2; x/c in [-2,2], endpoints informational", "N, K",
         "s(s-1)*cos(s+1) + theta^2*cos(s-1) vs sum with weight (s-2k)(s+2k-1)"},
        {"T4.9-a", "s off {0,2}; x/c = 2/3 fixed", "K",
         "closed two-zeta left side at angle 2pi/3 vs the T4.8 right side"},
        {"T4.9-b", "s off {0,2}; x/c = 1/2 fixed", "K",
         "closed two-zeta left side at angle pi/2 vs the T4.8 right side"},
        {"T4.9-c", "s off {0,2}; x/c = 1/3 fixed", "K",
         "closed two-zeta left side at angle pi/3 vs the T4.8 right side"},
    };
    return table;
}

bool known_identity(const std::string& id) {
    for (const auto& row : identity_registry())
        if (row.id == id) return true;
    return false;
}

// --- odd-weight expansions with the harmonic-log term ---------------------

Residual verify_theorem_3_5(TrigKind form, unsigned r, const BigRational& x_over_c,
                            long N, long K, const PrecisionContext& ctx) {
    if (r < 1) throw DomainError("verify_theorem_3_5 needs r >= 1");
    if (N < 1 || K < 1) throw DomainError("verify_theorem_3_5 needs N, K >= 1");
    const BigRational zero(0), one(1), two(2);
    bool is_cos = form == TrigKind::Cos;
    if (x_over_c < zero || two < x_over_c)
        throw DomainError("x/c outside [0,2]");
    if (is_cos && x_over_c == zero)
        throw DomainError("cosine form has a log singularity at x = 0");

    mpfr_prec_t wp = ctx.working_bits;
    std::string id = is_cos ? "T3.5-cos" : "T3.5-sin";
    std::ostringstream ps;
    ps << "r=" << r << " x/c=" << x_over_c << " N=" << N << " K=" << K;

    long rl = static_cast<long>(r);
    long w = is_cos ? 2 * rl + 1 : 2 * rl;
    TrigSumResult lhs_sum = trig_dirichlet(trig_spec(form, x_over_c, w, N, ctx), ctx);

    if (!is_cos && x_over_c == zero) {
        // sin(0) = 0 termwise on the left; every power of theta vanishes on
        // the right. Both sides are exact zeros, only the floor remains.
        Real z(wp);
        return make_residual(id, ps.str(), lhs_sum.value, Cplx::zero(wp), z, z, false, ctx);
    }

    BigRational t = x_over_c / two;
    Real theta = ctx.pi() * ctx.real(x_over_c);
    Real u = theta * theta;

    // head: finite zeta sum
    Real acc(wp);
    Real pw = is_cos ? Real::from_long(1, wp) : theta;
    unsigned k0 = is_cos ? 0 : 1;
    for (unsigned k = k0; k < r; ++k) {
        unsigned f = is_cos ? 2 * k : 2 * k - 1;
        int sg = (is_cos ? k : k - 1) % 2 == 0 ? 1 : -1;
        BigRational c(BigInt(sg), BigInt::factorial(f));
        acc += ctx.real(c) * pw * zeta_at(2 * (rl - static_cast<long>(k)) + 1, ctx);
        pw *= u;
    }
    // pw is now theta^2r (cos) or theta^(2r-1) (sin)

    // harmonic-log closed term, sign (-1)^r resp. (-1)^(r-1)
    unsigned hidx = is_cos ? 2 * r : 2 * r - 1;
    int sgm = (is_cos ? r : r - 1) % 2 == 0 ? 1 : -1;
    BigRational midc(BigInt(sgm), BigInt::factorial(hidx));
    acc += ctx.real(midc) * pw * (ctx.real(harmonic(hidx)) - log(theta));

    // zeta(2k) tail: 2 sgm theta^h sum(k=1..K) (2k-1)!/(2r+2k-d)! zeta(2k) t^2k
    // with d = 0 (cos) or 1 (sin); zeta(2k) t^2k = c_k (theta/2)^2k exactly.
    long d = is_cos ? 0 : 1;
    Real half_theta = theta / 2;
    Real v = half_theta * half_theta;
    Real vp = v;
    Real tacc(wp);
    for (long k = 1; k <= K; ++k) {
        BigRational kern(BigInt::factorial(2 * k - 1),
                         BigInt::factorial(2 * rl + 2 * k - d));
        tacc += ctx.real(kern * zeta_even_coefficient(static_cast<unsigned>(k))) * vp;
        vp *= v;
    }
    acc += ctx.real(BigRational(2 * sgm)) * pw * tacc;

    Real n_side = *lhs_sum.tail_bound;
    Real k_side(wp);
    bool endpoint = t == one;
    unsigned p = is_cos ? 2 * r + 1 : 2 * r;
    if (endpoint) {
        k_side = 2 * ctx.real(zeta2_pad()) * abs(pw) * poly_closure(p, K, ctx);
    } else {
        BigRational g_next(BigInt::factorial(2 * K + 1),
                           BigInt::factorial(2 * rl + 2 * K + 2 - d));
        k_side = 2 * abs(pw) * geometric_tail(g_next, t * t, K, ctx);
    }
    return make_residual(id, ps.str(), lhs_sum.value, Cplx(std::move(acc)), n_side,
                         k_side, endpoint, ctx);
}

// --- combined cosine/sine arrangement -------------------------------------

Residual verify_lemma_4_2(unsigned r, const BigRational& x_over_c, long N, long K,
                          const PrecisionContext& ctx) {
    if (r < 1) throw DomainError("verify_lemma_4_2 needs r >= 1");
    if (N < 1 || K < 1) throw DomainError("verify_lemma_4_2 needs N, K >= 1");
    const BigRational one(1), two(2);
    if (two < x_over_c.abs()) throw DomainError("x/c outside [-2,2]");

    mpfr_prec_t wp = ctx.working_bits;
    std::ostringstream ps;
    ps << "r=" << r << " x/c=" << x_over_c << " N=" << N << " K=" << K;

    long rl = static_cast<long>(r);
    TrigSumResult cs = trig_dirichlet(trig_spec(TrigKind::Cos, x_over_c, 2 * rl + 1, N, ctx), ctx);
    TrigSumResult sn = trig_dirichlet(trig_spec(TrigKind::Sin, x_over_c, 2 * rl, N, ctx), ctx);

    Real theta = ctx.pi() * ctx.real(x_over_c);
    Real u = theta * theta;
    Real lhs = rl * cs.value.re + (theta / 2) * sn.value.re;

    Real acc(wp);
    Real pw = Real::from_long(1, wp);
    for (unsigned k = 0; k < r; ++k) {
        int sg = k % 2 == 0 ? 1 : -1;
        BigRational c(BigInt(sg) * BigInt(rl - static_cast<long>(k)), BigInt::factorial(2 * k));
        acc += ctx.real(c) * pw * zeta_at(2 * (rl - static_cast<long>(k)) + 1, ctx);
        pw *= u;
    }
    // pw = theta^2r

    BigRational t = x_over_c / two;
    Real half_theta = theta / 2;
    Real v = half_theta * half_theta;
    Real vp = Real::from_long(1, wp);
    Real tacc(wp);
    for (long k = 0; k <= K; ++k) {
        BigRational kern(BigInt::factorial(2 * k), BigInt::factorial(2 * rl + 2 * k));
        tacc += ctx.real(kern * zeta_even_coefficient(static_cast<unsigned>(k))) * vp;
        vp *= v;
    }
    int sgt = (r - 1) % 2 == 0 ? 1 : -1;
    acc += ctx.real(BigRational(sgt)) * pw * tacc;

    Real n_side = rl * *cs.tail_bound + abs(half_theta) * *sn.tail_bound;
    Real k_side(wp);
    bool endpoint = t.abs() == one;
    if (endpoint) {
        k_side = ctx.real(zeta2_pad()) * abs(pw) * poly_closure(2 * r, K, ctx);
    } else {
        BigRational g_next(BigInt::factorial(2 * K + 2),
                           BigInt::factorial(2 * rl + 2 * K + 2));
        k_side = abs(pw) * geometric_tail(g_next, t * t, K, ctx);
    }
    return make_residual("L4.2", ps.str(), Cplx(std::move(lhs)), Cplx(std::move(acc)),
                         n_side, k_side, endpoint, ctx);
}

// --- sine-free arrangement ------------------------------------------------

Residual verify_theorem_4_1(unsigned r, const BigRational& x_over_c, long N, long K,
                            const PrecisionContext& ctx) {
    if (r < 1) throw DomainError("verify_theorem_4_1 needs r >= 1");
    if (N < 1 || K < 1) throw DomainError("verify_theorem_4_1 needs N, K >= 1");
    const BigRational zero(0), one(1), two(2);
    if (r == 1) {
        // second sum has weight 1: conditionally convergent only strictly
        // inside the period
        if (!(x_over_c.abs() < two)) throw DomainError("r = 1 needs |x/c| < 2");
    } else if (two < x_over_c.abs()) {
        throw DomainError("x/c outside [-2,2]");
    }

    mpfr_prec_t wp = ctx.working_bits;
    std::ostringstream ps;
    ps << "r=" << r << " x/c=" << x_over_c << " N=" << N << " K=" << K;

    long rl = static_cast<long>(r);
    BigRational t = x_over_c / two;
    Real theta = ctx.pi() * ctx.real(x_over_c);
    Real u = theta * theta;

    TrigSumResult cs1 = trig_dirichlet(trig_spec(TrigKind::Cos, x_over_c, 2 * rl + 1, N, ctx), ctx);
    Real lhs = (rl * (2 * rl - 1)) * cs1.value.re;
    Real n_side = (rl * (2 * rl - 1)) * *cs1.tail_bound;
    if (!(x_over_c == zero)) {
        TrigSumResult cs2 =
            trig_dirichlet(trig_spec(TrigKind::Cos, x_over_c, 2 * rl - 1, N, ctx), ctx);
        lhs += (u / 2) * cs2.value.re;
        if (r >= 2) {
            n_side += (u / 2) * *cs2.tail_bound;
        } else {
            // weight 1: summation by parts against the bounded cosine
            // partial sums, |D_M| <= 1/sin(pi |t|)
            Real sp = sinpi(t.abs(), wp);
            n_side += (u / 2) * (2 / (sp * (N + 1)));
        }
    }

    Real acc(wp);
    Real pw = Real::from_long(1, wp);
    for (unsigned k = 0; k < r; ++k) {
        int sg = k % 2 == 0 ? 1 : -1;
        long kk = static_cast<long>(k);
        BigRational c(BigInt(sg) * BigInt((rl - kk) * (2 * rl + 2 * kk - 1)),
                      BigInt::factorial(2 * k));
        acc += ctx.real(c) * pw * zeta_at(2 * (rl - kk) + 1, ctx);
        pw *= u;
    }

    Real half_theta = theta / 2;
    Real v = half_theta * half_theta;
    Real vp = Real::from_long(1, wp);
    Real tacc(wp);
    for (long k = 0; k <= K; ++k) {
        BigRational kern(BigInt::factorial(2 * k) * BigInt(4 * rl + 2 * k - 1),
                         BigInt::factorial(2 * rl + 2 * k));
        tacc += ctx.real(kern * zeta_even_coefficient(static_cast<unsigned>(k))) * vp;
        vp *= v;
    }
    int sgt = (r - 1) % 2 == 0 ? 1 : -1;
    acc += ctx.real(BigRational(sgt)) * pw * tacc;

    Real k_side(wp);
    bool endpoint = t.abs() == one;
    if (endpoint) {
        // kernel <= (4r-1)(2k)^-(2r-1); needs r >= 2, enforced above
        k_side = ctx.real(zeta2_pad() * BigRational(4 * rl - 1)) * abs(pw) *
                 poly_closure(2 * r - 1, K, ctx);
    } else {
        BigRational g_next(BigInt::factorial(2 * K + 2) * BigInt(4 * rl + 2 * K + 1),
                           BigInt::factorial(2 * rl + 2 * K + 2));
        k_side = abs(pw) * geometric_tail(g_next, t * t, K, ctx);
    }
    return make_residual("T4.1", ps.str(), Cplx(std::move(lhs)), Cplx(std::move(acc)),
                         n_side, k_side, endpoint, ctx);
}

// --- weight-3 cosine sum with log-sine correction -------------------------

Residual verify_theorem_4_2(const BigRational& x_over_c, long N, long K,
                            const PrecisionContext& ctx) {
    if (N < 1 || K < 1) throw DomainError("verify_theorem_4_2 needs N, K >= 1");
    const BigRational zero(0), two(2);
    if (x_over_c <= zero || !(x_over_c < two))
        throw DomainError("x/c outside (0,2)");

    mpfr_prec_t wp = ctx.working_bits;
    std::ostringstream ps;
    ps << "x/c=" << x_over_c << " N=" << N << " K=" << K;

    BigRational t = x_over_c / two;
    Real theta = ctx.pi() * ctx.real(x_over_c);
    Real u = theta * theta;

    TrigSumResult cs = trig_dirichlet(trig_spec(TrigKind::Cos, x_over_c, 3, N, ctx), ctx);
    // log_sin_closed is -ln(2 sin(pi t)), so the correction adds
    Real lhs = cs.value.re + (u / 2) * log_sin_closed(t, ctx);

    Real half_theta = theta / 2;
    Real v = half_theta * half_theta;
    Real vp = Real::from_long(1, wp);
    Real tacc(wp);
    for (long k = 0; k <= K; ++k) {
        BigRational kern(BigInt(2 * k + 3), BigInt((2 * k + 1) * (2 * k + 2)));
        tacc += ctx.real(kern * zeta_even_coefficient(static_cast<unsigned>(k))) * vp;
        vp *= v;
    }
    Real rhs = zeta_at(3, ctx) + u * tacc;

    Real n_side = *cs.tail_bound;
    BigRational g_next(BigInt(2 * K + 5), BigInt((2 * K + 3) * (2 * K + 4)));
    Real k_side = u * geometric_tail(g_next, t * t, K, ctx);
    return make_residual("T4.2", ps.str(), Cplx(std::move(lhs)), Cplx(std::move(rhs)),
                         n_side, k_side, false, ctx);
}

// --- character-twisted cosine sums ----------------------------------------

Residual verify_lemma_4_1(const Cplx& s, char variant, long N,
                          const PrecisionContext& ctx) {
    if (variant != 'a' && variant != 'b' && variant != 'c')
        throw ConfigError("variant must be one of a (2pi/3), b (pi/2), c (pi/3)");
    if (N < 1) throw DomainError("verify_lemma_4_1 needs N >= 1");
    mpfr_prec_t wp = ctx.working_bits;
    Real one = Real::from_long(1, wp);
    if (!(s.re > one)) throw DomainError("verify_lemma_4_1 needs Re(s) > 1");

    BigRational angle = variant == 'a'   ? BigRational(2, 3)
                        : variant == 'b' ? BigRational(1, 2)
                                         : BigRational(1, 3);
    std::ostringstream ps;
    ps << "s=" << cplx_str(s) << " variant=" << variant << " N=" << N;

    TrigSumResult cs = trig_dirichlet(trig_spec(TrigKind::Cos, angle, s, N), ctx);

    auto mp = [&](long m, const Cplx& e) { return exp(e * log(Real::from_long(m, wp))); };
    Cplx z = s.im.is_zero() ? Cplx(zeta_oracle(s.re, ctx)) : zeta_oracle(s, ctx);
    Cplx one_minus_s = 1 - s;
    Cplx rhs = Cplx::zero(wp);
    if (variant == 'a') {
        rhs = (mp(3, one_minus_s) - 1) / 2 * z;
    } else if (variant == 'b') {
        rhs = mp(2, -s) * (mp(2, one_minus_s) - 1) * z;
    } else {
        rhs = (mp(6, one_minus_s) - mp(3, one_minus_s) - mp(2, one_minus_s) + 1) / 2 * z;
    }

    Real k_side(wp);
    return make_residual(std::string("L4.1-") + variant, ps.str(), cs.value,
                         std::move(rhs), *cs.tail_bound, k_side, false, ctx);
}

// --- third-harmonic cosine expansion --------------------------------------

Residual verify_example_2_17(const BigRational& wt_over_pi, long N,
                             const PrecisionContext& ctx) {
    if (N < 1) throw DomainError("verify_example_2_17 needs N >= 1");
    if (N > 100000000) throw DomainError("N too large");
    if (!(wt_over_pi.abs() < BigRational(1, 3)))
        throw DomainError("wt/pi must lie strictly inside (-1/3, 1/3)");

    mpfr_prec_t wp = ctx.working_bits;
    std::ostringstream ps;
    ps << "wt/pi=" << wt_over_pi << " N=" << N;

    BigInt num = wt_over_pi.numerator();
    BigInt den = wt_over_pi.denominator();
    if (!num.fits_long() || !den.fits_long()) throw DomainError("wt/pi out of range");
    long p = num.to_long();
    long q = den.to_long();
    long period = 2 * q;
    if (period > 4000000) throw DomainError("wt/pi denominator too large");

    Cplx lhs(cospi(wt_over_pi, wp));

    std::vector<Real> tab;
    tab.reserve(static_cast<size_t>(period));
    for (long j = 0; j < period; ++j) tab.push_back(cospi(BigRational(j, q), wp));

    long step = ((3 * p) % period + period) % period;
    Real ssum(wp);
    long idx = 0;
    for (long n = 1; n <= N; ++n) {
        idx += step;
        if (idx >= period) idx -= period;
        const Real& cv = tab[static_cast<size_t>(idx)];
        if (cv.is_zero()) continue;
        Real term = cv / ((3 * n - 1) * (3 * n + 1));
        if (n % 2 == 0)
            ssum -= term;
        else
            ssum += term;
    }
    Real fac = 3 * sqrt(Real::from_long(3, wp)) / ctx.pi();
    Real rhs = fac * (Real::from_rational(BigRational(1, 2), wp) + ssum);

    // sum(n > N) 1/(9n^2-1) <= sum 1/((3n-2)(3n+1)) = 1/(3(3N+1)) telescoped
    Real n_side = fac / (3 * (3 * N + 1));
    Real k_side(wp);
    return make_residual("Ex2.17", ps.str(), std::move(lhs), Cplx(std::move(rhs)),
                         n_side, k_side, false, ctx);
}

// --- weight-1 closed forms ------------------------------------------------

std::pair<Residual, Residual> verify_lemma_3_2(const BigRational& x_over_2c, long N,
                                               const PrecisionContext& ctx) {
    if (N < 1) throw DomainError("verify_lemma_3_2 needs N >= 1");
    const BigRational zero(0), one(1);
    if (x_over_2c <= zero || one <= x_over_2c)
        throw DomainError("x/2c outside (0,1); the closed forms are singular or "
                          "divergent at the endpoints");

    mpfr_prec_t wp = ctx.working_bits;
    std::ostringstream ps;
    ps << "x/2c=" << x_over_2c << " N=" << N;

    BigRational two_t = BigRational(2) * x_over_2c;
    BigInt num = two_t.numerator();
    BigInt den = two_t.denominator();
    if (!num.fits_long() || !den.fits_long()) throw DomainError("x/2c out of range");
    long p = num.to_long();
    long q = den.to_long();
    long period = 2 * q;
    if (period > 4000000) throw DomainError("x/2c denominator too large");

    std::vector<Real> ctab, stab;
    ctab.reserve(static_cast<size_t>(period));
    stab.reserve(static_cast<size_t>(period));
    for (long j = 0; j < period; ++j) {
        ctab.push_back(cospi(BigRational(j, q), wp));
        stab.push_back(sinpi(BigRational(j, q), wp));
    }

    long step = (p % period + period) % period;
    Real s_sin(wp), t_sin(wp), s_cos(wp), t_cos(wp);
    long idx = 0;
    for (long n = 1; n <= N; ++n) {
        idx += step;
        if (idx >= period) idx -= period;
        const Real& sv = stab[static_cast<size_t>(idx)];
        const Real& cv = ctab[static_cast<size_t>(idx)];
        if (!sv.is_zero()) {
            s_sin += sv / n;
            t_sin += sv;
        }
        if (!cv.is_zero()) {
            s_cos += cv / n;
            t_cos += cv;
        }
    }
    // Cesaro mean of the partial sums: S_N - (1/(N+1)) sum n a_n
    Real ces_sin = s_sin - t_sin / (N + 1);
    Real ces_cos = s_cos - t_cos / (N + 1);

    Real rhs_sin = sawtooth_closed(x_over_2c, ctx);
    Real rhs_cos = log_sin_closed(x_over_2c, ctx);

    // summation by parts: partial trig sums are bounded by 1/sin(pi t)
    Real sp = sinpi(x_over_2c, wp);
    Real abel = 2 / (sp * (N + 1));
    Real k_side(wp);

    Residual rs = make_residual("L3.2-sin", ps.str(), Cplx(std::move(s_sin)),
                                Cplx(rhs_sin), abel, k_side, false, ctx);
    rs.cesaro_residual = abs(ces_sin - rhs_sin);
    Residual rc = make_residual("L3.2-cos", ps.str(), Cplx(std::move(s_cos)),
                                Cplx(rhs_cos), abel, k_side, false, ctx);
    rc.cesaro_residual = abs(ces_cos - rhs_cos);
    return {std::move(rs), std::move(rc)};
}

// --- log-sinc power series ------------------------------------------------

Residual verify_lemma_3_4(const Real& x, long K, const PrecisionContext& ctx) {
    if (K < 1) throw DomainError("verify_lemma_3_4 needs K >= 1");
    mpfr_prec_t wp = ctx.working_bits;
    if (!(x.sgn() > 0) || !(x < ctx.pi()))
        throw DomainError("x must lie strictly inside (0, pi)");

    std::ostringstream ps;
    ps << "x=" << x.to_string(17) << " K=" << K;

    Cplx lhs(log(sin(x) / x));

    // zeta(2k)/pi^2k is exactly the rational coefficient of zeta(2k)
    Real u = x * x;
    Real up = u;
    Real acc(wp);
    for (long k = 1; k <= K; ++k) {
        acc += ctx.real(zeta_even_coefficient(static_cast<unsigned>(k)) / BigRational(k)) * up;
        up *= u;
    }
    Cplx rhs(-acc);

    Real rho = (x / ctx.pi());
    rho *= rho;
    Real n_side(wp);
    Real k_side(wp);
    Real denom = 1 - rho;
    if (!(denom > Real(wp))) {
        k_side = plus_inf(wp);
    } else {
        k_side = ctx.real(zeta2_pad()) * pow(rho, K + 1) / ((K + 1) * denom);
    }
    return make_residual("L3.4", ps.str(), std::move(lhs), std::move(rhs), n_side,
                         k_side, false, ctx);
}

// --- complex-exponent family ----------------------------------------------

namespace {

enum class CxId { T47, T48, T49a, T49b, T49c };

CxId parse_cx(const std::string& id) {
    if (id == "T4.7") return CxId::T47;
    if (id == "T4.8") return CxId::T48;
    if (id == "T4.9-a") return CxId::T49a;
    if (id == "T4.9-b") return CxId::T49b;
    if (id == "T4.9-c") return CxId::T49c;
    throw ConfigError("unknown complex identity id '" + id +
                      "' (one of T4.7, T4.8, T4.9-a, T4.9-b, T4.9-c)");
}

} // namespace

Residual verify_complex(const std::string& id, const Cplx& s,
                        const BigRational& x_over_c, long N, long K,
                        const PrecisionContext& ctx) {
    CxId which = parse_cx(id);
    if (K < 1) throw DomainError("verify_complex needs K >= 1");
    mpfr_prec_t wp = ctx.working_bits;
    const Real& sigma = s.re;
    Real one = Real::from_long(1, wp);
    const BigRational two(2);
    bool closed_lhs = which == CxId::T49a || which == CxId::T49b || which == CxId::T49c;

    if (which == CxId::T47) {
        if (!(sigma > one)) throw DomainError("T4.7 needs Re(s) > 1");
        if (two < x_over_c.abs()) throw DomainError("x/c outside [-2,2]");
        if (N < 1) throw DomainError("T4.7 needs N >= 1");
    } else if (which == CxId::T48) {
        if (!(sigma > Real::from_long(2, wp))) throw DomainError("T4.8 needs Re(s) > 2");
        if (two < x_over_c.abs()) throw DomainError("x/c outside [-2,2]");
        if (N < 1) throw DomainError("T4.8 needs N >= 1");
    } else {
        BigRational fixed = which == CxId::T49a   ? BigRational(2, 3)
                            : which == CxId::T49b ? BigRational(1, 2)
                                                  : BigRational(1, 3);
        if (!(x_over_c == fixed))
            throw DomainError("x/c is fixed to " + fixed.to_string() + " for " + id);
    }

    // Pole screen: the k-term carries zeta(s+1-2k), which has its pole at
    // s = 2k. Exact even integer s takes the continuation limit
    // (s-2k) zeta(s+1-2k) -> 1; anything merely close is refused. The
    // closed left sides additionally need s off {0, 2} where zeta(s+1) or
    // zeta(s-1) itself blows up.
    bool s_int = s.im.is_zero() && sigma.is_integer();
    long col_k = -1;
    if (s_int) {
        long sv = sigma.to_long();
        if (closed_lhs && (sv == 0 || sv == 2))
            throw PoleError("the closed side has a zeta pole at s = " + std::to_string(sv));
        if (sv >= 0 && sv % 2 == 0 && sv / 2 <= K) col_k = sv / 2;
    } else {
        Real eps = Real::from_rational(BigRational(1, 1000), wp);
        long chk = closed_lhs ? std::max(K, 1L) : K;
        for (long k = 0; k <= chk; ++k) {
            if (abs(s - Real::from_long(2 * k, wp)) < eps)
                throw PoleError("s within 1e-3 of " + std::to_string(2 * k) +
                                "; the k-term collides with the zeta pole");
        }
    }

    std::ostringstream ps;
    ps << "s=" << cplx_str(s) << " x/c=" << x_over_c << " K=" << K;
    if (closed_lhs)
        ps << " (closed lhs, N unused)";
    else
        ps << " N=" << N;

    BigRational t = x_over_c / two;
    BigRational rho_q = t * t;
    Real theta = ctx.pi() * ctx.real(x_over_c);
    Real u = theta * theta;

    auto zeta_cx = [&](const Cplx& w) {
        if (w.im.is_zero()) return Cplx(zeta_oracle(w.re, ctx));
        return zeta_oracle(w, ctx);
    };

    // right side
    Cplx rhs = Cplx::zero(wp);
    Real pw_fact = Real::from_long(1, wp); // theta^2k / (2k)!
    for (long k = 0; k <= K; ++k) {
        if (k > 0) pw_fact *= u / ((2 * k - 1) * (2 * k));
        Cplx term = Cplx::zero(wp);
        if (k == col_k) {
            if (which == CxId::T47)
                term = Cplx(pw_fact);
            else
                term = (s + (2 * k - 1)) * pw_fact;
        } else {
            Cplx zv = zeta_cx(s + (1 - 2 * k));
            Cplx coef = which == CxId::T47 ? (s - 2 * k) : (s - 2 * k) * (s + (2 * k - 1));
            term = coef * zv * pw_fact;
        }
        if (k % 2 == 1)
            rhs -= term;
        else
            rhs += term;
    }

    // left side
    Cplx lhs = Cplx::zero(wp);
    Real n_side(wp);
    if (which == CxId::T47) {
        TrigSumResult cs = trig_dirichlet(trig_spec(TrigKind::Cos, x_over_c, s + 1, N), ctx);
        TrigSumResult sn = trig_dirichlet(trig_spec(TrigKind::Sin, x_over_c, s, N), ctx);
        lhs = s * cs.value + theta * sn.value;
        n_side = abs(s) * *cs.tail_bound + abs(theta) * *sn.tail_bound;
    } else if (which == CxId::T48) {
        TrigSumResult c1 = trig_dirichlet(trig_spec(TrigKind::Cos, x_over_c, s + 1, N), ctx);
        TrigSumResult c2 = trig_dirichlet(trig_spec(TrigKind::Cos, x_over_c, s - 1, N), ctx);
        lhs = s * (s - 1) * c1.value + u * c2.value;
        n_side = abs(s * (s - 1)) * *c1.tail_bound + u * *c2.tail_bound;
    } else {
        auto mp = [&](long m, const Cplx& e) { return exp(e * log(Real::from_long(m, wp))); };
        Cplx z1 = zeta_cx(s + 1);
        Cplx z2 = zeta_cx(s - 1);
        Cplx two_minus_s = 2 - s;
        Real ang(wp);
        Cplx f1 = Cplx::zero(wp), f2 = Cplx::zero(wp);
        if (which == CxId::T49a) {
            f1 = (mp(3, -s) - 1) / 2;
            f2 = (mp(3, two_minus_s) - 1) / 2;
            ang = 2 * ctx.pi() / 3;
        } else if (which == CxId::T49b) {
            f1 = (mp(2, -s) - 1) * mp(2, -(s + 1));
            f2 = (mp(2, two_minus_s) - 1) * mp(2, 1 - s);
            ang = ctx.pi() / 2;
        } else {
            f1 = (mp(6, -s) - mp(3, -s) - mp(2, -s) + 1) / 2;
            f2 = (mp(6, two_minus_s) - mp(3, two_minus_s) - mp(2, two_minus_s) + 1) / 2;
            ang = ctx.pi() / 3;
        }
        lhs = s * (s - 1) * f1 * z1 + (ang * ang) * f2 * z2;
    }

    // Power-side budget. For k past the truncation the zeta argument has
    // negative real part; pushing it through the functional equation gives
    //   |term_k| <= 2 (2pi)^sigma cosh(pi Im(s)/2) zeta(2)
    //               (2k+|s|+1)^2 (2k-fl)^-(fl+1) rho^k,  fl = floor(sigma),
    // using |sin(pi w/2)| <= cosh(pi Im(s)/2), |Gamma(2k-s)| <= Gamma(2k-fl),
    // and (2k-fl-1)!/(2k)! <= (2k-fl)^-(fl+1) (valid for either sign of fl).
    // The polynomial factor decreases for fl >= 1; otherwise it grows slower
    // than (6/5)^k once 2k > 10(|s|+2), absorbed into the ratio.
    Real k_side(wp);
    bool endpoint = false;
    if (!(rho_q < BigRational(49, 50))) {
        endpoint = true;
        k_side = plus_inf(wp);
    } else {
        long fl = floor(sigma).to_long();
        if (2 * K < fl + 2)
            throw DomainError("K too small against Re(s) for the tail budget");
        Real as = abs(s);
        Real g1 = 2 * (K + 1) + as + 1;
        g1 *= g1;
        Real gq = pow(Real::from_long(2 * (K + 1) - fl, wp), -(fl + 1));
        Real pref = 2 * pow(2 * ctx.pi(), sigma) * cosh(ctx.pi() * abs(s.im) / 2) *
                    ctx.real(zeta2_pad());
        Real rho = ctx.real(rho_q);
        Real denom = fl >= 1 ? 1 - rho : 1 - rho * 6 / 5;
        if (!(denom > Real(wp))) {
            endpoint = true;
            k_side = plus_inf(wp);
        } else {
            k_side = pref * g1 * gq * pow(rho, K + 1) / denom;
        }
    }
    return make_residual(id, ps.str(), std::move(lhs), std::move(rhs), n_side, k_side,
                         endpoint, ctx);
}

} // namespace oddzeta
