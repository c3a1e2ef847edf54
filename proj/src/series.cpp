#include "oddzeta/series.hpp"

#include <utility>

#include "oddzeta/errors.hpp"
#include "oddzeta/zeta_ref.hpp"

namespace oddzeta {

namespace {

// zeta(2) < 823/500; used by every tail majorant.
const BigRational& zeta2_pad() {
    static const BigRational pad(823, 500);
    return pad;
}

Real nth_root(const Real& x, unsigned long n) {
    Real r(x.prec());
    mpfr_rootn_ui(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

// Positive, non-increasing kernel of the level-r tail series.
BigRational kernel_value(const SeriesFamily& fam, unsigned r, long k) {
    unsigned long uk = static_cast<unsigned long>(k);
    if (fam.m == 2)
        return BigRational(BigInt::factorial(2 * uk), BigInt::factorial(2 * r + 2 * uk));
    if (r == 1) return BigRational(2 * k + 3, (2 * k + 1) * (2 * k + 2));
    return BigRational(BigInt::factorial(2 * uk) * BigInt(4 * static_cast<long>(r) + 2 * k - 1),
                       BigInt::factorial(2 * r + 2 * uk));
}

BigRational tail_scale_of(const SeriesFamily& fam, unsigned r) {
    if (fam.m == 2) return ck_coefficients(r).tail_scale;
    if (r == 1) {
        switch (fam.m) {
            case 3: return BigRational(-4, 13);
            case 4: return BigRational(-8, 35);
            default: return BigRational(-1, 6);
        }
    }
    return recurrence_coefficients(r, fam.m).tail_scale;
}

// Exact rational part of the tail majorant from k_start on; the caller
// multiplies by pi^2r. Bounds zeta(2k) by zeta(2) and the kernel by its
// value at k_start, leaving a geometric series in m^-2.
BigRational tail_majorant_rational(const SeriesFamily& fam, unsigned r,
                                   const BigRational& scale, long k_start) {
    long m2 = static_cast<long>(fam.m) * fam.m;
    return scale.abs() * kernel_value(fam, r, k_start) *
           BigRational::pow(BigRational(1, m2), k_start) * BigRational(m2, m2 - 1) *
           zeta2_pad();
}

unsigned certified_from(const Real& err, const Real& value, unsigned target) {
    if (value.is_zero()) return 0;
    if (err.is_zero()) return target;
    Real ratio = err / abs(value);
    if (ratio >= Real::from_long(1, ratio.prec())) return 0;
    long d = (-(log(ratio) / log(Real::from_long(10, ratio.prec())))).to_long() + 1;
    if (d > static_cast<long>(target)) d = target;
    while (d > 0 &&
           !(ratio < Real::from_rational(BigRational(BigInt(1), BigInt::pow(10, d)), ratio.prec())))
        --d;
    return static_cast<unsigned>(d);
}

struct TailSum {
    Real sum;
    long terms;
    Real bound; // majorant of what was left off
};

// Sums scale * pi^2r * sum_k kernel(k) zeta(2k) m^-2k term by term, each
// term an exact rational times a power of pi, until the remaining tail is
// below 10^-(digits+2) of the running total (baseline included).
TailSum evaluate_tail(const SeriesFamily& fam, unsigned r, const BigRational& scale,
                      const Real& baseline, const PrecisionContext& ctx) {
    mpfr_prec_t wp = ctx.working_bits;
    Real pi = const_pi(wp);
    Real pi2 = pi * pi;
    Real pipow = pow(pi, 2 * static_cast<long>(r)); // pi^(2k+2r), advanced per term
    Real pi2r = pipow;
    Real acc(wp);
    Real thresh = Real::from_rational(
        BigRational(BigInt(1), BigInt::pow(10, ctx.target_digits + 2)), wp);

    long cap = 10L * static_cast<long>(ctx.target_digits);
    BigRational m2_pow(1);
    const BigRational m2_step(1, static_cast<long>(fam.m) * fam.m);
    for (long k = 0; k <= cap; ++k) {
        BigRational ek = scale * kernel_value(fam, r, k) * zeta_even_coefficient(k) * m2_pow;
        acc += Real::from_rational(ek, wp) * pipow;
        pipow *= pi2;
        m2_pow *= m2_step;

        Real bound = Real::from_rational(tail_majorant_rational(fam, r, scale, k + 1), wp) * pi2r;
        if (bound < thresh * abs(baseline + acc))
            return TailSum{std::move(acc), k + 1, std::move(bound)};
    }
    throw PrecisionShortfall(fam.name() + " series did not reach " +
                             std::to_string(ctx.target_digits) + " digits within " +
                             std::to_string(cap + 1) + " terms");
}

Real rounding_slack(const Real& value, long terms, mpfr_prec_t wp) {
    return abs(value) * Real::pow2(4, wp) * terms * Real::pow2(-static_cast<long>(wp), wp);
}

EvalReport assemble(SeriesFamily fam, unsigned r, Real value, long terms, Real err,
                    const PrecisionContext& ctx) {
    unsigned certified = certified_from(err, value, ctx.target_digits);
    return EvalReport{fam, r, std::move(value), terms, std::move(err), certified};
}

} // namespace

SeriesFamily SeriesFamily::parse(const std::string& name) {
    if (name == "ewell") return ewell();
    if (name == "ck") return ck();
    if (name == "m3") return m3();
    if (name == "m4") return m4();
    if (name == "m6") return m6();
    throw ConfigError("unknown series family '" + name + "' (ewell, ck, m3, m4, m6)");
}

std::string SeriesFamily::name() const {
    switch (tag) {
        case FamilyTag::Ewell: return "ewell";
        case FamilyTag::CK: return "ck";
        case FamilyTag::M3: return "m3";
        case FamilyTag::M4: return "m4";
        default: return "m6";
    }
}

BigRational RecurrenceCoefficients::kernel(long k) const {
    SeriesFamily fam = m == 2 ? SeriesFamily::ck()
                              : (m == 3 ? SeriesFamily::m3()
                                        : (m == 4 ? SeriesFamily::m4() : SeriesFamily::m6()));
    return kernel_value(fam, r, k);
}

BigRational RecurrenceCoefficients::combined_coeff(unsigned j) const {
    BigRational c(0);
    auto it = lead_zeta_coeffs.find(j);
    if (it != lead_zeta_coeffs.end()) c = it->second;
    if (j == 1) c += log_coeff;
    return c;
}

RecurrenceCoefficients ck_coefficients(unsigned r) {
    if (r == 0) throw DomainError("recurrence level r must be >= 1");
    long lr = static_cast<long>(r);
    // 4^r / (r (2^(2r+1) - 1))
    BigRational pref(BigInt::pow(4, r), BigInt(lr) * (BigInt::pow(2, 2 * r + 1) - BigInt(1)));
    RecurrenceCoefficients rc;
    rc.r = r;
    rc.m = 2;
    rc.log_coeff = BigRational(0);
    for (unsigned j = 1; j < r; ++j) {
        BigRational c = pref * BigRational(BigInt(lr - static_cast<long>(j)),
                                           BigInt::factorial(2 * j));
        rc.lead_zeta_coeffs[j] = (j % 2 == 1) ? c : -c;
    }
    rc.tail_scale = (r % 2 == 0) ? pref : -pref;
    rc.tail_kernel = "(2k)!/(2k+" + std::to_string(2 * r) + ")!";
    return rc;
}

RecurrenceCoefficients recurrence_coefficients(unsigned r, int m) {
    if (r < 2) throw DomainError("recurrence_coefficients needs r >= 2");
    if (m != 3 && m != 4 && m != 6) throw ConfigError("recurrence base m must be 3, 4 or 6");

    long lr = static_cast<long>(r);
    BigInt core(0), l_num(0), p_num(0);
    if (m == 3) {
        core = BigInt::pow(3, 2 * r + 1) - BigInt(1);
        l_num = BigInt(-2) * (BigInt::pow(3, 2 * r - 2) - BigInt(1));
        p_num = BigInt(2) * BigInt::pow(3, 2 * r);
    } else if (m == 4) {
        core = BigInt::pow(2, 4 * r + 1) + BigInt::pow(2, 2 * r) - BigInt(1);
        l_num = -(BigInt::pow(2, 2 * r - 1) - BigInt(2));
        p_num = BigInt::pow(2, 4 * r + 1);
    } else {
        core = BigInt::pow(3, 2 * r) * (BigInt::pow(2, 2 * r) + BigInt(1)) +
               BigInt::pow(2, 2 * r) - BigInt(1);
        l_num = BigInt(2) * (BigInt::pow(6, 2 * r - 2) - BigInt::pow(3, 2 * r - 2) -
                             BigInt::pow(2, 2 * r - 2) + BigInt(1));
        p_num = BigInt(2) * BigInt::pow(6, 2 * r);
    }
    BigInt denom = BigInt(lr) * BigInt(2 * lr - 1) * core;
    BigRational L(l_num, denom);
    BigRational P(p_num, denom);
    BigRational q(2, m); // the series sits at theta = q pi

    RecurrenceCoefficients rc;
    rc.r = r;
    rc.m = m;
    rc.log_coeff = L;
    for (unsigned j = 1; j < r; ++j) {
        BigRational c = P *
                        BigRational(BigInt(lr - static_cast<long>(j)) *
                                        BigInt(2 * lr + 2 * static_cast<long>(j) - 1),
                                    BigInt::factorial(2 * j)) *
                        BigRational::pow(q, 2 * static_cast<long>(j));
        rc.lead_zeta_coeffs[j] = (j % 2 == 1) ? c : -c;
    }
    BigRational t = P * BigRational::pow(q, 2 * lr);
    rc.tail_scale = (r % 2 == 0) ? t : -t;
    rc.tail_kernel = "(2k)!(2k+" + std::to_string(4 * r - 1) + ")/(2k+" +
                     std::to_string(2 * r) + ")!";
    return rc;
}

EvalReport ewell_zeta3(const PrecisionContext& ctx) {
    SeriesFamily fam = SeriesFamily::ewell();
    Real baseline(ctx.working_bits);
    TailSum t = evaluate_tail(fam, 1, tail_scale_of(fam, 1), baseline, ctx);
    Real err = t.bound + rounding_slack(t.sum, t.terms, ctx.working_bits);
    return assemble(fam, 1, std::move(t.sum), t.terms, std::move(err), ctx);
}

EvalReport ck_recurrence(unsigned r, const std::vector<Real>& lower_values,
                         const PrecisionContext& ctx) {
    if (r == 0) throw DomainError("ck_recurrence needs r >= 1");
    if (lower_values.size() + 1 < r)
        throw DomainError("ck_recurrence level " + std::to_string(r) + " needs " +
                          std::to_string(r - 1) + " lower odd zeta values");
    SeriesFamily fam = SeriesFamily::ck();
    RecurrenceCoefficients rc = ck_coefficients(r);
    mpfr_prec_t wp = ctx.working_bits;
    Real pi = const_pi(wp);
    Real baseline(wp);
    for (unsigned j = 1; j < r; ++j)
        baseline += Real::from_rational(rc.combined_coeff(j), wp) *
                    pow(pi, 2 * static_cast<long>(j)) * lower_values[r - j - 1];
    TailSum t = evaluate_tail(fam, r, rc.tail_scale, baseline, ctx);
    Real value = baseline + t.sum;
    Real err = t.bound + rounding_slack(value, t.terms, wp);
    return assemble(fam, r, std::move(value), t.terms, std::move(err), ctx);
}

EvalReport zeta3_family(int m, const PrecisionContext& ctx) {
    if (m != 3 && m != 4 && m != 6) throw ConfigError("zeta3_family base m must be 3, 4 or 6");
    SeriesFamily fam = m == 3 ? SeriesFamily::m3()
                              : (m == 4 ? SeriesFamily::m4() : SeriesFamily::m6());
    mpfr_prec_t wp = ctx.working_bits;
    Real pi2 = const_pi(wp) * const_pi(wp);
    Real baseline(wp);
    if (m == 3)
        baseline = Real::from_rational(BigRational(-1, 13), wp) * pi2 *
                   log(Real::from_long(3, wp));
    else if (m == 4)
        baseline = Real::from_rational(BigRational(-2, 35), wp) * pi2 * const_ln2(wp);
    TailSum t = evaluate_tail(fam, 1, tail_scale_of(fam, 1), baseline, ctx);
    Real value = baseline + t.sum;
    Real err = t.bound + rounding_slack(value, t.terms, wp);
    return assemble(fam, 1, std::move(value), t.terms, std::move(err), ctx);
}

std::vector<EvalReport> zeta_odd_ladder(unsigned r_max, SeriesFamily family,
                                        const PrecisionContext& ctx) {
    if (r_max == 0) throw DomainError("zeta_odd_ladder needs r_max >= 1");
    if (family.tag == FamilyTag::Ewell && r_max > 1)
        throw DomainError("the ewell series is the r = 1 case only; family ck climbs further");

    mpfr_prec_t wp = ctx.working_bits;
    Real pi = const_pi(wp);
    std::vector<EvalReport> out;
    out.reserve(r_max);

    EvalReport base = family.m == 2 ? ewell_zeta3(ctx) : zeta3_family(family.m, ctx);
    base.family = family;
    out.push_back(std::move(base));

    for (unsigned r = 2; r <= r_max; ++r) {
        RecurrenceCoefficients rc =
            family.m == 2 ? ck_coefficients(r) : recurrence_coefficients(r, family.m);
        Real baseline(wp);
        Real propagated(wp);
        for (unsigned j = 1; j < r; ++j) {
            Real cj = Real::from_rational(rc.combined_coeff(j), wp);
            Real pij = pow(pi, 2 * static_cast<long>(j));
            baseline += cj * pij * out[r - j - 1].value;
            propagated += abs(cj) * pij * out[r - j - 1].tail_bound;
        }
        TailSum t = evaluate_tail(family, r, rc.tail_scale, baseline, ctx);
        Real value = baseline + t.sum;
        Real err = t.bound + propagated + rounding_slack(value, t.terms, wp);
        // A level consumes every level below it, so its terms_used counts
        // the whole chain; the column is non-decreasing in r.
        long total = out.back().terms_used + t.terms;
        out.push_back(assemble(family, r, std::move(value), total, std::move(err), ctx));
    }
    return out;
}

Real tail_bound(SeriesFamily family, unsigned r, long k_start, const PrecisionContext& ctx) {
    if (r == 0) throw DomainError("tail_bound needs r >= 1");
    if (k_start < 1) throw DomainError("tail_bound needs k_start >= 1");
    if (family.tag == FamilyTag::Ewell && r != 1)
        throw DomainError("the ewell series exists at r = 1 only");
    BigRational scale = tail_scale_of(family, r);
    return Real::from_rational(tail_majorant_rational(family, r, scale, k_start),
                               ctx.working_bits) *
           pow(const_pi(ctx.working_bits), 2 * static_cast<long>(r));
}

ConvergenceTrace convergence_trace(SeriesFamily family, unsigned r, long k_lo, long k_hi,
                                   const PrecisionContext& ctx) {
    if (r == 0) throw DomainError("convergence_trace needs r >= 1");
    if (k_lo < 1 || k_hi <= k_lo) throw DomainError("convergence_trace needs 1 <= k_lo < k_hi");
    if (family.tag == FamilyTag::Ewell && r != 1)
        throw DomainError("the ewell series exists at r = 1 only");

    mpfr_prec_t wp = ctx.working_bits;
    Real pi2 = const_pi(wp) * const_pi(wp);
    BigRational scale = tail_scale_of(family, r).abs();
    const BigRational m2_step(1, static_cast<long>(family.m) * family.m);
    BigRational m2_pow = BigRational::pow(m2_step, k_lo);

    ConvergenceTrace tr{family, r, k_lo, k_hi, {}, Real(wp), Real(wp), Real(wp)};
    Real pipow = pow(const_pi(wp), 2 * (k_lo + static_cast<long>(r)));
    for (long k = k_lo; k <= k_hi; ++k) {
        BigRational ek = scale * kernel_value(family, r, k) *
                         zeta_even_coefficient(static_cast<unsigned>(k)).abs() * m2_pow;
        tr.term_magnitudes.push_back(Real::from_rational(ek, wp) * pipow);
        pipow *= pi2;
        m2_pow *= m2_step;
    }

    // The terms behave like C m^-2k k^-p; the fitted ratio removes the
    // polynomial factor before taking the geometric mean of the decay.
    long span = k_hi - k_lo;
    long p = family.m == 2 ? 2 * static_cast<long>(r) : 2 * static_cast<long>(r) - 1;
    Real drop = tr.term_magnitudes.back() / tr.term_magnitudes.front();
    Real comp = pow(Real::from_long(k_hi, wp) / Real::from_long(k_lo, wp), p);
    tr.raw_ratio = nth_root(drop, static_cast<unsigned long>(span));
    tr.fitted_ratio = nth_root(drop * comp, static_cast<unsigned long>(span));
    tr.expected_ratio = Real::from_rational(m2_step, wp);
    return tr;
}

} // namespace oddzeta
