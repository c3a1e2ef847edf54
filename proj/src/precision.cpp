#include "oddzeta/precision.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "oddzeta/errors.hpp"

namespace oddzeta {

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real Real::from_long(long n, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, n, MPFR_RNDN);
    return r;
}

Real Real::from_rational(const BigRational& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, q.raw(), MPFR_RNDN);
    return r;
}

Real Real::from_bigint(const BigInt& n, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, n.raw(), MPFR_RNDN);
    return r;
}

Real Real::from_string(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw ConfigError("not a base-10 number: '" + s + "'");
    return r;
}

Real Real::from_double(double d, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

namespace {

mpfr_prec_t join(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }

} // namespace

Real operator+(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real operator-(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, const Real& b) {
    Real r(join(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, const Real& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    Real r(join(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real operator+(const Real& a, long b) {
    Real r(a.prec());
    mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
Real operator-(const Real& a, long b) {
    Real r(a.prec());
    mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, long b) {
    Real r(a.prec());
    mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, long b) {
    if (b == 0) throw DomainError("division by zero");
    Real r(a.prec());
    mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
Real operator-(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
Real operator/(long a, const Real& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    Real r(b.prec());
    mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

#define ODDZETA_UNARY(name, fn)                   \
    Real name(const Real& x) {                    \
        Real r(x.prec());                         \
        fn(r.raw(), x.raw(), MPFR_RNDN);          \
        return r;                                 \
    }
ODDZETA_UNARY(exp, mpfr_exp)
ODDZETA_UNARY(sin, mpfr_sin)
ODDZETA_UNARY(cos, mpfr_cos)
ODDZETA_UNARY(sinh, mpfr_sinh)
ODDZETA_UNARY(cosh, mpfr_cosh)
ODDZETA_UNARY(abs, mpfr_abs)
#undef ODDZETA_UNARY

Real floor(const Real& x) {
    Real r(x.prec());
    mpfr_rint_floor(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& x) {
    if (x.sgn() < 0) throw DomainError("sqrt of a negative number");
    Real r(x.prec());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real log(const Real& x) {
    if (x.sgn() <= 0) throw DomainError("log of a non-positive number");
    Real r(x.prec());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real atan2(const Real& y, const Real& x) {
    Real r(join(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real hypot(const Real& x, const Real& y) {
    Real r(join(x, y));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, const Real& y) {
    if (x.sgn() <= 0) throw DomainError("pow with non-positive base");
    Real r(join(x, y));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, long n) {
    Real r(x.prec());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

namespace {

// One memoized constant per precision; values are handed out as copies so
// concurrent callers never share mpfr state.
class ConstCache {
  public:
    explicit ConstCache(int (*compute)(mpfr_ptr, mpfr_rnd_t)) : compute_(compute) {}

    Real get(mpfr_prec_t prec) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(prec);
        if (it == cache_.end()) {
            auto v = std::make_unique<Real>(prec);
            compute_(v->raw(), MPFR_RNDN);
            it = cache_.emplace(prec, std::move(v)).first;
        }
        return *it->second;
    }

  private:
    int (*compute_)(mpfr_ptr, mpfr_rnd_t);
    std::mutex mu_;
    std::map<mpfr_prec_t, std::unique_ptr<Real>> cache_;
};

} // namespace

Real const_pi(mpfr_prec_t prec) {
    static ConstCache cache(mpfr_const_pi);
    return cache.get(prec);
}

Real const_ln2(mpfr_prec_t prec) {
    static ConstCache cache(mpfr_const_log2);
    return cache.get(prec);
}

PrecisionContext make_context(unsigned target_digits, unsigned guard_bits) {
    if (target_digits == 0) throw ConfigError("target_digits must be positive");
    if (target_digits > 1000000) throw ConfigError("target_digits above 10^6 not supported");
    if (guard_bits < 32) throw ConfigError("guard_bits must be at least 32");
    // Exact bit length of 10^d (10^d is never a power of two, so sizeinbase
    // base 2 is the exact count).
    BigInt p = BigInt::pow(10, target_digits);
    mpfr_prec_t bits = static_cast<mpfr_prec_t>(p.sizeinbase(2));
    return {target_digits, bits + static_cast<mpfr_prec_t>(guard_bits), guard_bits};
}

std::string Real::to_string(size_t digits) const {
    if (digits < 2) digits = 2;
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e = 0;
    std::vector<char> buf(digits + 8);
    mpfr_get_str(buf.data(), &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(buf.data());
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    // mpfr convention: value = 0.mant * 10^e
    if (e >= -3 && e <= 12) {
        if (e <= 0)
            return sign + "0." + std::string(static_cast<size_t>(-e), '0') + mant;
        if (static_cast<size_t>(e) >= mant.size())
            return sign + mant + std::string(static_cast<size_t>(e) - mant.size(), '0');
        return sign + mant.substr(0, static_cast<size_t>(e)) + "." +
               mant.substr(static_cast<size_t>(e));
    }
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    long ee = static_cast<long>(e) - 1;
    out += "e" + std::string(ee >= 0 ? "+" : "") + std::to_string(ee);
    return out;
}

unsigned agreed_decimal_digits(const Real& a, const Real& b, unsigned max_digits) {
    if (max_digits == 0) return 0;
    if (a.is_zero() && b.is_zero()) return max_digits;
    if (a.is_zero() || b.is_zero()) return 0;
    if (a.sgn() != b.sgn()) return 0;

    size_t len = static_cast<size_t>(max_digits) + 2;
    mpfr_exp_t ea = 0, eb = 0;
    std::vector<char> ba(len + 8), bb(len + 8);
    mpfr_get_str(ba.data(), &ea, 10, len, a.raw(), MPFR_RNDN);
    mpfr_get_str(bb.data(), &eb, 10, len, b.raw(), MPFR_RNDN);
    if (ea != eb) return 0; // magnitudes differ at the first digit
    std::string sa(ba.data()), sb(bb.data());
    if (!sa.empty() && sa[0] == '-') sa.erase(0, 1);
    if (!sb.empty() && sb[0] == '-') sb.erase(0, 1);
    unsigned n = 0;
    while (n < max_digits && n < sa.size() && n < sb.size() && sa[n] == sb[n]) ++n;
    return n;
}

DigitClaim certify(const Evaluator& eval, const PrecisionContext& ctx) {
    Real lo = eval(ctx);
    Real hi = eval(ctx.widened(64));
    unsigned agreed = agreed_decimal_digits(lo, hi, ctx.target_digits);
    return DigitClaim{std::move(hi), agreed};
}

} // namespace oddzeta
