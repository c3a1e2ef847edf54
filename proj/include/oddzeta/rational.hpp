#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace oddzeta {

// Arbitrary-precision integer. Thin RAII wrapper over mpz_t; value semantics.
class BigInt {
  public:
    BigInt() { mpz_init(v_); }
    BigInt(long n) { mpz_init_set_si(v_, n); } // NOLINT: implicit by design
    explicit BigInt(const std::string& decimal);
    BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~BigInt() { mpz_clear(v_); }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt operator-(const BigInt& a) {
        BigInt r;
        mpz_neg(r.v_, a.v_);
        return r;
    }
    BigInt& operator+=(const BigInt& o) {
        mpz_add(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(v_, v_, o.v_);
        return *this;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) < 0; }

    int sign() const { return mpz_sgn(v_); }
    bool is_odd() const { return mpz_odd_p(v_) != 0; }
    bool fits_long() const { return mpz_fits_slong_p(v_) != 0; }
    long to_long() const { return mpz_get_si(v_); }
    std::string to_string() const;

    static BigInt pow(unsigned long base, unsigned long exp) {
        BigInt r;
        mpz_ui_pow_ui(r.v_, base, exp);
        return r;
    }
    static BigInt factorial(unsigned long n) {
        BigInt r;
        mpz_fac_ui(r.v_, n);
        return r;
    }
    static BigInt binomial(unsigned long n, unsigned long k) {
        BigInt r;
        mpz_bin_uiui(r.v_, n, k);
        return r;
    }

    // Number of base-`base` digits; exact when the value is not a power of base.
    size_t sizeinbase(int base) const { return mpz_sizeinbase(v_, base); }

    mpz_srcptr raw() const { return v_; }
    mpz_ptr raw() { return v_; }

  private:
    mpz_t v_;
};

// Exact rational number, always kept in lowest terms with positive denominator.
class BigRational {
  public:
    BigRational() { mpq_init(v_); }
    BigRational(long n) { // NOLINT: implicit by design
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    BigRational(long num, long den);
    BigRational(const BigInt& num, const BigInt& den);
    explicit BigRational(const BigInt& n) {
        mpq_init(v_);
        mpq_set_z(v_, n.raw());
    }
    BigRational(const BigRational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    BigRational(BigRational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    BigRational& operator=(const BigRational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    BigRational& operator=(BigRational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~BigRational() { mpq_clear(v_); }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        BigRational r;
        mpq_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        BigRational r;
        mpq_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        BigRational r;
        mpq_mul(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b);
    friend BigRational operator-(const BigRational& a) {
        BigRational r;
        mpq_neg(r.v_, a.v_);
        return r;
    }
    BigRational& operator+=(const BigRational& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator-=(const BigRational& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    BigRational& operator*=(const BigRational& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return mpq_equal(a.v_, b.v_) != 0;
    }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return mpq_cmp(a.v_, b.v_) < 0;
    }
    friend bool operator<=(const BigRational& a, const BigRational& b) {
        return mpq_cmp(a.v_, b.v_) <= 0;
    }

    int sign() const { return mpq_sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    BigRational abs() const {
        BigRational r;
        mpq_abs(r.v_, v_);
        return r;
    }
    BigInt numerator() const;
    BigInt denominator() const;
    // "num/den" (or plain "num" when den == 1), base 10.
    std::string to_string() const;
    double to_double() const { return mpq_get_d(v_); }

    // a^n for integer n (n < 0 requires a != 0).
    static BigRational pow(const BigRational& a, long n);
    // num/den from decimal strings; den must be nonzero.
    static BigRational from_strings(const std::string& num, const std::string& den);

    mpq_srcptr raw() const { return v_; }
    mpq_ptr raw() { return v_; }

  private:
    mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& n);
std::ostream& operator<<(std::ostream& os, const BigRational& q);

} // namespace oddzeta
