#pragma once

#include "nonproper/gauss.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>

namespace nonproper {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Sets the working precision for newly created reals; restores on exit.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_digits_;
};

struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex operator-() const { return {-re, -im}; }
    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
};

Real abs(const Complex& z);
Real norm2(const Complex& z);
Complex conj(const Complex& z);
Complex powi(Complex z, int e);

Real to_real(const mpq_class& q);
Complex to_complex(const GaussRat& g);
mpq_class exact_rational(const Real& x);
double to_double(const Real& x);
std::string decimal(const Real& x, int digits = 20);

// Closest Gaussian rational with small denominators, if within tol of z.
std::optional<GaussRat> snap_gauss(const Complex& z, double tol);
std::optional<mpq_class> snap_rational(const Real& x, double tol);
// Cheap nearby Gaussian rational (denominator at most max_den), always succeeds.
GaussRat approximate_gauss(const Complex& z, long max_den);

}  // namespace nonproper
