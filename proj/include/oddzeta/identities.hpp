#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddzeta/cplx.hpp"
#include "oddzeta/precision.hpp"
#include "oddzeta/rational.hpp"
#include "oddzeta/zeta_ref.hpp"

namespace oddzeta {

// One numerically checked summation identity: both sides evaluated
// independently, the gap compared against a proven truncation budget.
struct Residual {
    std::string id;
    std::string params;      // echo of the instantiation, e.g. "r=2 x/c=1/2 N=10000 K=60"
    Cplx lhs;
    Cplx rhs;
    Real abs_residual;       // |lhs - rhs|
    // Truncation majorant (no cancellation credit) times a safety factor of
    // 10, plus a rounding floor of 10^-target_digits * max(1, |lhs|): the
    // evaluators certify digits, not working bits.
    Real expected_bound;
    bool pass = false;       // abs_residual <= expected_bound
    // Set at closed endpoints where the power side decays polynomially
    // instead of geometrically (and, for the complex family, where the
    // geometric budget does not apply at all; the bound is then +inf and
    // the case is informational).
    bool endpoint_warning = false;
    std::optional<Real> cesaro_residual; // weight-1 pair only
};

// Registry row: drives the verification grid, the CLI table verb, and the
// report schema's validity-interval listing.
struct IdentityInfo {
    std::string id;
    std::string parameter;   // free parameter and its validity interval
    std::string truncations; // which of N, K apply
    std::string statement;   // one-line description of the two sides
};

const std::vector<IdentityInfo>& identity_registry();
bool known_identity(const std::string& id);

// Odd-weight cosine / even-weight sine expansion with the harmonic-log
// closed term. form selects the variant: Cos checks the weight-(2r+1)
// cosine sum on x/c in (0,2], Sin the weight-2r sine sum on [0,2].
Residual verify_theorem_3_5(TrigKind form, unsigned r, const BigRational& x_over_c,
                            long N, long K, const PrecisionContext& ctx);

// Combined r*cos + (pi x/2c)*sin arrangement; even in x on [-2,2].
Residual verify_lemma_4_2(unsigned r, const BigRational& x_over_c, long N, long K,
                          const PrecisionContext& ctx);

// Sine-free arrangement r(2r-1)*cos(2r+1) + (theta^2/2)*cos(2r-1).
// Closed interval [-2,2] for r >= 2; open (-2,2) for r = 1, where the
// second sum has weight 1.
Residual verify_theorem_4_1(unsigned r, const BigRational& x_over_c, long N, long K,
                            const PrecisionContext& ctx);

// Weight-3 cosine sum against zeta(3) plus the log-sine correction,
// x/c in (0,2).
Residual verify_theorem_4_2(const BigRational& x_over_c, long N, long K,
                            const PrecisionContext& ctx);

// Character-twisted cosine sums with closed zeta(s) right-hand sides.
// variant 'a' fixes the angle 2pi/3, 'b' pi/2, 'c' pi/3. Needs Re(s) > 1.
Residual verify_lemma_4_1(const Cplx& s, char variant, long N,
                          const PrecisionContext& ctx);

// cos(wt) against its third-harmonic expansion, |wt| < pi/3; the argument
// is wt/pi as an exact rational.
Residual verify_example_2_17(const BigRational& wt_over_pi, long N,
                             const PrecisionContext& ctx);

// Weight-1 sine and cosine sums against sawtooth and log-sine closed forms,
// t = x/2c in (0,1). These converge like 1/N, so each Residual also carries
// the Cesaro-averaged residual for the convergence-acceleration check.
std::pair<Residual, Residual> verify_lemma_3_2(const BigRational& x_over_2c, long N,
                                               const PrecisionContext& ctx);

// ln(sin x / x) against its zeta(2k) power series, x in (0, pi).
Residual verify_lemma_3_4(const Real& x, long K, const PrecisionContext& ctx);

// Complex-exponent family, selected by id:
//   T4.7    s*cos(s+1) + theta*sin(s)            Re(s) > 1, |x/c| <= 2
//   T4.8    s(s-1)*cos(s+1) + theta^2*cos(s-1)   Re(s) > 2, |x/c| <= 2
//   T4.9-a  closed two-zeta left side, x/c = 2/3 fixed, any s off {0, 2}
//   T4.9-b  same at x/c = 1/2
//   T4.9-c  same at x/c = 1/3
// The shared right side is sum(k) (-1)^k w_k(s)/(2k)! theta^2k zeta(s+1-2k).
// At even integer s the k = s/2 term is the analytic-continuation limit:
// (s-2k) zeta(s+1-2k) -> 1 exactly, and the code substitutes that limit.
// Non-integer s within 1e-3 of an even integer <= 2K raises PoleError.
// N applies to the T4.7/T4.8 Fourier sides only and is ignored by T4.9.
Residual verify_complex(const std::string& id, const Cplx& s,
                        const BigRational& x_over_c, long N, long K,
                        const PrecisionContext& ctx);

} // namespace oddzeta
