#pragma once

#include "oddzeta/precision.hpp"

namespace oddzeta {

// Complex number over Real. Rectangular form; both parts keep their own
// precision, and mixed-precision arithmetic follows the Real rules.
struct Cplx {
    Real re;
    Real im;

    Cplx(Real re_, Real im_) : re(std::move(re_)), im(std::move(im_)) {}
    explicit Cplx(Real re_) : re(std::move(re_)), im(re.prec()) {}
    static Cplx zero(mpfr_prec_t prec) { return Cplx(Real(prec), Real(prec)); }

    bool is_real() const { return im.is_zero(); }
    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    Cplx conj() const { return Cplx(re, -im); }

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend Cplx operator+(const Cplx& a, const Real& b) { return {a.re + b, a.im}; }
    friend Cplx operator-(const Cplx& a, const Real& b) { return {a.re - b, a.im}; }
    friend Cplx operator*(const Cplx& a, const Real& b) { return {a.re * b, a.im * b}; }
    friend Cplx operator/(const Cplx& a, const Real& b) { return {a.re / b, a.im / b}; }
    friend Cplx operator*(const Real& a, const Cplx& b) { return b * a; }
    friend Cplx operator-(const Real& a, const Cplx& b) { return {a - b.re, -b.im}; }
    friend Cplx operator+(const Real& a, const Cplx& b) { return b + a; }
    friend Cplx operator+(const Cplx& a, long b) { return {a.re + b, a.im}; }
    friend Cplx operator-(const Cplx& a, long b) { return {a.re - b, a.im}; }
    friend Cplx operator*(const Cplx& a, long b) { return {a.re * b, a.im * b}; }
    friend Cplx operator/(const Cplx& a, long b) { return {a.re / b, a.im / b}; }
    friend Cplx operator-(long a, const Cplx& b) { return {a - b.re, -b.im}; }
    Cplx& operator+=(const Cplx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Cplx& operator-=(const Cplx& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
};

inline Real abs(const Cplx& z) { return hypot(z.re, z.im); }
inline Real arg(const Cplx& z) { return atan2(z.im, z.re); }

inline Cplx exp(const Cplx& z) {
    Real m = exp(z.re);
    if (z.im.is_zero()) return Cplx(std::move(m), Real(z.prec()));
    return {m * cos(z.im), m * sin(z.im)};
}

// Principal branch; z must be nonzero.
inline Cplx log(const Cplx& z) { return {log(abs(z)), arg(z)}; }

inline Cplx sin(const Cplx& z) {
    if (z.im.is_zero()) return Cplx(sin(z.re), Real(z.prec()));
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

inline Cplx cos(const Cplx& z) {
    if (z.im.is_zero()) return Cplx(cos(z.re), Real(z.prec()));
    return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))};
}

// Principal power exp(w log z); z must be nonzero.
inline Cplx pow(const Cplx& z, const Cplx& w) { return exp(w * log(z)); }

inline Cplx pow(const Cplx& z, long n) {
    mpfr_prec_t p = z.prec();
    Cplx acc(Real::from_long(1, p), Real(p));
    Cplx base = n < 0 ? Cplx(Real::from_long(1, p), Real(p)) / z : z;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    while (e != 0) {
        if (e & 1UL) acc = acc * base;
        base = base * base;
        e >>= 1UL;
    }
    return acc;
}

} // namespace oddzeta
