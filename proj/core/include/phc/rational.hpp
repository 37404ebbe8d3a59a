#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace phc {

using Integer = mpz_class;

// Exact rational scalar. mpq_class keeps the canonical form we need:
// gcd(|num|, den) = 1 and den > 0.
using Rational = mpq_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "p/q" or "p" (arbitrary precision). Throws ParseError on bad input
// or zero denominator.
Rational parse_rational(const std::string& s);

// "p/q" if the denominator is not 1, otherwise "p".
std::string rat_to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// a + b*sqrt(-1) with rational a, b. The formal root squares to -1.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() : re(0), im(0) {}
    GaussRational(int v) : re(v), im(0) {}
    GaussRational(Rational r) : re(std::move(r)), im(0) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    GaussRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }
    bool is_real() const { return sgn(im) == 0; }

    GaussRational operator-() const { return {-re, -im}; }

    GaussRational& operator+=(const GaussRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) {
        Rational n = o.norm();
        if (sgn(n) == 0) throw std::domain_error("GaussRational: division by zero");
        GaussRational c = o.conj();
        *this *= c;
        re /= n;
        im /= n;
        return *this;
    }
};

inline GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
inline GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
inline GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
inline GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
inline bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

inline bool is_zero(const GaussRational& g) { return is_zero(g.re) && is_zero(g.im); }

std::string gauss_to_string(const GaussRational& g);

}  // namespace phc
