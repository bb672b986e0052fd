#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace nonproper {

// Exact element of Q(i).
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v) {}
    GaussRat(mpq_class re, mpq_class im = 0);
    static GaussRat imag_unit() { return GaussRat(0, 1); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    GaussRat conj() const { return GaussRat(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussRat inverse() const;

    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);
    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b);

    GaussRat pow(unsigned e) const;

    // "3/2", "-i", "(1/2-3i)"
    std::string str() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::string rational_str(const mpq_class& q);
mpq_class parse_rational(const std::string& text);

// Least common multiple of the denominators of both parts.
mpz_class denominator_lcm(const GaussRat& g);

// Element of Z[i] used by fraction-free elimination.
struct GaussInt {
    mpz_class re{0};
    mpz_class im{0};

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussInt operator*(const GaussInt& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
    GaussInt operator-() const { return {-re, -im}; }
    // Exact division; the caller guarantees divisibility.
    GaussInt exact_div(const GaussInt& d) const;
};

}  // namespace nonproper
