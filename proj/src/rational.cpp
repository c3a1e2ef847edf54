#include "oddzeta/rational.hpp"

#include <ostream>
#include <vector>

#include "oddzeta/errors.hpp"

namespace oddzeta {

BigInt::BigInt(const std::string& decimal) {
    if (mpz_init_set_str(v_, decimal.c_str(), 10) != 0) {
        mpz_clear(v_);
        throw ConfigError("not a base-10 integer: '" + decimal + "'");
    }
}

std::string BigInt::to_string() const {
    std::vector<char> buf(mpz_sizeinbase(v_, 10) + 2);
    mpz_get_str(buf.data(), 10, v_);
    return std::string(buf.data());
}

BigRational::BigRational(long num, long den) {
    if (den == 0) throw ConfigError("rational with zero denominator");
    mpq_init(v_);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpq_set_si(v_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(v_);
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den.sign() == 0) throw ConfigError("rational with zero denominator");
    mpq_init(v_);
    mpz_set(mpq_numref(v_), num.raw());
    mpz_set(mpq_denref(v_), den.raw());
    mpq_canonicalize(v_);
}

BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.sign() == 0) throw DomainError("rational division by zero");
    BigRational r;
    mpq_div(r.v_, a.v_, b.v_);
    return r;
}

BigInt BigRational::numerator() const {
    BigInt n;
    mpz_set(n.raw(), mpq_numref(v_));
    return n;
}

BigInt BigRational::denominator() const {
    BigInt d;
    mpz_set(d.raw(), mpq_denref(v_));
    return d;
}

std::string BigRational::to_string() const {
    std::string s = numerator().to_string();
    if (mpz_cmp_ui(mpq_denref(v_), 1) != 0) s += "/" + denominator().to_string();
    return s;
}

BigRational BigRational::pow(const BigRational& a, long n) {
    if (n == 0) return BigRational(1);
    bool invert = n < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    if (invert && a.sign() == 0) throw DomainError("zero to a negative power");
    BigRational r;
    mpz_pow_ui(mpq_numref(r.v_), mpq_numref(a.v_), e);
    mpz_pow_ui(mpq_denref(r.v_), mpq_denref(a.v_), e);
    if (invert) mpq_inv(r.v_, r.v_);
    // numerator and denominator were coprime, so powers are too
    return r;
}

BigRational BigRational::from_strings(const std::string& num, const std::string& den) {
    return BigRational(BigInt(num), BigInt(den));
}

std::ostream& operator<<(std::ostream& os, const BigInt& n) { return os << n.to_string(); }
std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

} // namespace oddzeta
