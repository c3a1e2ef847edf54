#pragma once

#include <map>
#include <string>
#include <vector>

#include "oddzeta/precision.hpp"
#include "oddzeta/rational.hpp"

namespace oddzeta {

// The five series routes to zeta(2r+1). ewell and ck share their expansion
// base m = 2 (and identical coefficients at r = 1); m3/m4/m6 trade larger
// coefficient sets for faster geometric decay.
enum class FamilyTag { Ewell, CK, M3, M4, M6 };

struct SeriesFamily {
    FamilyTag tag;
    int m; // terms decay like m^-2k

    static SeriesFamily ewell() { return {FamilyTag::Ewell, 2}; }
    static SeriesFamily ck() { return {FamilyTag::CK, 2}; }
    static SeriesFamily m3() { return {FamilyTag::M3, 3}; }
    static SeriesFamily m4() { return {FamilyTag::M4, 4}; }
    static SeriesFamily m6() { return {FamilyTag::M6, 6}; }
    // "ewell" | "ck" | "m3" | "m4" | "m6"; throws ConfigError otherwise.
    static SeriesFamily parse(const std::string& name);
    std::string name() const;
    bool multi_level() const { return tag != FamilyTag::Ewell; }
};

// One computed zeta(2r+1).
// tail_bound is a full error majorant: the rigorous bound on the truncated
// series tail, plus rounding slack, plus (in a ladder) the propagated
// uncertainty of the lower levels. It always satisfies
// tail_bound < 10^-certified_digits * |value|.
struct EvalReport {
    SeriesFamily family;
    unsigned r;
    Real value;
    long terms_used;
    Real tail_bound;
    unsigned certified_digits;
};

// Exact coefficient set of one recurrence level:
//   zeta(2r+1) = log_coeff * pi^2 zeta(2r-1)
//              + sum_j lead_zeta_coeffs[j] * pi^2j * zeta(2r+1-2j)
//              + tail_scale * pi^2r * sum_k kernel(k) * zeta(2k) / m^2k.
// log_coeff is the standalone pi^2 zeta(2r-1) contribution that the m-base
// families pick up from eliminating the logarithmic term; it collects with
// lead_zeta_coeffs[1] (combined_coeff) in the printed forms.
struct RecurrenceCoefficients {
    unsigned r;
    int m;
    BigRational log_coeff;
    std::map<unsigned, BigRational> lead_zeta_coeffs; // j in [1, r-1]
    BigRational tail_scale;
    std::string tail_kernel; // display form of kernel(k)

    BigRational kernel(long k) const;
    BigRational combined_coeff(unsigned j) const;
};

// Term magnitudes |t_k| for k in [k_lo, k_hi] and the empirical decay ratio
// against the expected m^-2. fitted_ratio compensates for the polynomial
// factor k^-p riding on the geometric decay (p = 2r for the m = 2 families,
// 2r - 1 otherwise); raw_ratio is the uncompensated geometric mean.
struct ConvergenceTrace {
    SeriesFamily family;
    unsigned r;
    long k_lo;
    long k_hi;
    std::vector<Real> term_magnitudes;
    Real fitted_ratio;
    Real raw_ratio;
    Real expected_ratio;
};

// zeta(3) by the alternating-free m = 2 series; about 3.3 terms for every
// 2 digits.
EvalReport ewell_zeta3(const PrecisionContext& ctx);

// zeta(2r+1) from the m = 2 recurrence. lower_values[i] must hold
// zeta(2i+3) for i in [0, r-2]; r = 1 needs none and reproduces
// ewell_zeta3 exactly. Throws DomainError for r = 0.
EvalReport ck_recurrence(unsigned r, const std::vector<Real>& lower_values,
                         const PrecisionContext& ctx);

// zeta(3) from the base-m series, m in {3, 4, 6}.
EvalReport zeta3_family(int m, const PrecisionContext& ctx);

// Exact level-r coefficients for m in {3, 4, 6}, r >= 2.
RecurrenceCoefficients recurrence_coefficients(unsigned r, int m);
// Same shape for the m = 2 recurrence (log_coeff = 0), any r >= 1.
RecurrenceCoefficients ck_coefficients(unsigned r);

// zeta(3), zeta(5), ..., zeta(2 r_max + 1) climbed within one family.
// Ewell stops at r_max = 1 (the m = 2 recurrence continues as "ck").
// Each entry's terms_used counts the whole chain below it, since a level
// consumes every lower level; each tail_bound folds in the propagated
// uncertainty of its inputs.
std::vector<EvalReport> zeta_odd_ladder(unsigned r_max, SeriesFamily family,
                                        const PrecisionContext& ctx);

// Rigorous majorant of the absolute value of the series tail from k_start
// on (k_start >= 1), for the level-r series of the family. Uses only
// monotonicity of the kernel and zeta(2k) <= zeta(2); no cancellation
// credit.
Real tail_bound(SeriesFamily family, unsigned r, long k_start, const PrecisionContext& ctx);

// Decay diagnostics over k in [k_lo, k_hi], 1 <= k_lo < k_hi.
ConvergenceTrace convergence_trace(SeriesFamily family, unsigned r, long k_lo, long k_hi,
                                   const PrecisionContext& ctx);

} // namespace oddzeta
