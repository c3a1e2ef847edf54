#pragma once

#include <mpfr.h>

#include <functional>
#include <string>

#include "oddzeta/rational.hpp"

namespace oddzeta {

// Floating-point number with an explicit per-value precision. RAII over
// mpfr_t. There is no default constructor and no global rounding/precision
// state: every value carries its own precision, all operations round to
// nearest, and a binary operation's result uses the wider operand's precision.
class Real {
  public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real from_long(long n, mpfr_prec_t prec);
    static Real from_rational(const BigRational& q, mpfr_prec_t prec); // correctly rounded
    static Real from_bigint(const BigInt& n, mpfr_prec_t prec);
    // Base-10 literal, e.g. "1.2020569e0"; correctly rounded to prec.
    static Real from_string(const std::string& s, mpfr_prec_t prec);
    static Real from_double(double d, mpfr_prec_t prec);
    // 2^e, exact.
    static Real pow2(long e, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    int sgn() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Decimal rendering with `digits` significant digits, round to nearest.
    // Plain positional form for moderate exponents, scientific otherwise.
    std::string to_string(size_t digits) const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator+(const Real& a, long b);
    friend Real operator-(const Real& a, long b);
    friend Real operator*(const Real& a, long b);
    friend Real operator/(const Real& a, long b);
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator-(long a, const Real& b);
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(long a, const Real& b);
    friend Real operator-(const Real& a);
    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator+=(long n) { mpfr_add_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator-=(long n) { mpfr_sub_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator*=(long n) { mpfr_mul_si(v_, v_, n, MPFR_RNDN); return *this; }
    Real& operator/=(long n) { mpfr_div_si(v_, v_, n, MPFR_RNDN); return *this; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return b < a; }
    friend bool operator>=(const Real& a, const Real& b) { return b <= a; }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

  private:
    mpfr_t v_;
};

Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real abs(const Real& x);
Real floor(const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, const Real& y); // x > 0
Real pow(const Real& x, long n);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

// pi and ln 2 rounded to `prec`, memoized per precision. Thread-safe;
// callers get private copies.
Real const_pi(mpfr_prec_t prec);
Real const_ln2(mpfr_prec_t prec);

// Precision request for one evaluation: how many decimal digits are wanted
// and how many bits to carry while computing them. working_bits covers the
// requested digits exactly, plus guard_bits of headroom.
struct PrecisionContext {
    unsigned target_digits;
    mpfr_prec_t working_bits;
    unsigned guard_bits;

    Real real(long n = 0) const { return Real::from_long(n, working_bits); }
    Real real(const BigRational& q) const { return Real::from_rational(q, working_bits); }
    Real real(const BigInt& n) const { return Real::from_bigint(n, working_bits); }
    Real real(const std::string& s) const { return Real::from_string(s, working_bits); }
    Real pi() const { return const_pi(working_bits); }
    Real ln2() const { return const_ln2(working_bits); }

    PrecisionContext widened(mpfr_prec_t extra_bits) const {
        return {target_digits, working_bits + extra_bits, guard_bits};
    }
};

// Context for `target_digits` decimal digits. working_bits is the exact bit
// length of 10^target_digits plus guard_bits; no log2 approximation, so the
// same request always yields the same precision.
// Rejects target_digits == 0 and target_digits > 1'000'000; guard_bits < 32.
PrecisionContext make_context(unsigned target_digits, unsigned guard_bits = 64);

// Result of a certification run: the better of the two computed values and
// how many leading decimal digits the two runs agree on.
struct DigitClaim {
    Real value;
    unsigned certified_digits;
};

using Evaluator = std::function<Real(const PrecisionContext&)>;

// Runs `eval` at ctx and again with 64 extra working bits, and counts the
// leading decimal digits on which the runs agree (capped at target_digits;
// zero when even the first digit, the sign, or the magnitude differs).
// The returned value is the wider run's. Digit counting compares rounded
// decimal strings, so agreement at a carry boundary can be under-reported;
// it is never over-reported.
DigitClaim certify(const Evaluator& eval, const PrecisionContext& ctx);

// Leading decimal digits shared by a and b, capped at max_digits.
unsigned agreed_decimal_digits(const Real& a, const Real& b, unsigned max_digits);

} // namespace oddzeta
