#pragma once

#include <optional>

#include "oddzeta/cplx.hpp"
#include "oddzeta/precision.hpp"
#include "oddzeta/rational.hpp"

namespace oddzeta {

// zeta(2n) in both exact and floating form: value = coefficient * pi^(2n).
struct ZetaEvenValue {
    unsigned n;
    BigRational coefficient;
    Real value;
};

// Exact coefficient of pi^(2n) in zeta(2n); n = 0 yields -1/2 (zeta(0)).
BigRational zeta_even_coefficient(unsigned n);

// zeta(2n) for n >= 1.
ZetaEvenValue zeta_even(unsigned n, const PrecisionContext& ctx);

// zeta(-n) for n >= 0, exact.
BigRational zeta_nonpositive(unsigned n);

// Gamma function, Spouge expansion with reflection for Re(z) < 1/2.
// Relative error stays below 2^-(working_bits - guard_bits).
// Throws PoleError at non-positive integers.
Real gamma_fn(const Real& z, const PrecisionContext& ctx);
Cplx gamma_fn(const Cplx& z, const PrecisionContext& ctx);

// Independent zeta evaluator: accelerated alternating (eta) series for
// Re(s) >= 1/2, functional equation below. Never touches the Bernoulli
// route, so it can sit on the other side of every cross-check.
// Throws PoleError at s = 1, and within 1e-3 of it unless near_pole_ok.
// Throws PrecisionShortfall when the context cannot carry the request.
Real zeta_oracle(const Real& s, const PrecisionContext& ctx, bool near_pole_ok = false);
Cplx zeta_oracle(const Cplx& s, const PrecisionContext& ctx, bool near_pole_ok = false);

enum class TrigKind { Cos, Sin };

// Partial sum sum(n=1..N) trig(n * pi * theta_over_pi) / n^s.
// The angle is kept as a rational multiple of pi so the trig values cycle
// exactly with period 2 * denominator.
struct TrigSumSpec {
    TrigKind kind;
    BigRational theta_over_pi;
    Cplx s;
    long N;
};

struct TrigSumResult {
    Cplx value;
    // |remainder| bound N^(1-Re s)/(Re s - 1); absent unless Re(s) > 1
    // and N >= 1.
    std::optional<Real> tail_bound;
};

TrigSumResult trig_dirichlet(const TrigSumSpec& spec, const PrecisionContext& ctx);

TrigSumSpec trig_spec(TrigKind kind, const BigRational& theta_over_pi, long s, long N,
                      const PrecisionContext& ctx);
TrigSumSpec trig_spec(TrigKind kind, const BigRational& theta_over_pi, Real s, long N);
TrigSumSpec trig_spec(TrigKind kind, const BigRational& theta_over_pi, Cplx s, long N);

// cos(pi t) and sin(pi t) for rational t, reduced mod 2 first. Exact zeros
// at the multiples of pi/2, so cancellation patterns survive verbatim.
Real cospi(const BigRational& t, mpfr_prec_t prec);
Real sinpi(const BigRational& t, mpfr_prec_t prec);

// Closed form of the weight-1 cosine sum: -ln(2 sin(pi t)) for t in (0,1).
// Throws DomainError at the endpoints, where the log diverges.
Real log_sin_closed(const BigRational& t, const PrecisionContext& ctx);

// Closed form of the weight-1 sine sum: pi (1 - 2t) / 2 for t in (0,1).
Real sawtooth_closed(const BigRational& t, const PrecisionContext& ctx);

} // namespace oddzeta
