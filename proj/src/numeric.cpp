#include "nonproper/numeric.hpp"

#include <cmath>
#include <sstream>

namespace nonproper {

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits_(Real::default_precision())
{
    Real::default_precision((bits * 301u + 999u) / 1000u);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits_); }

Complex& Complex::operator+=(const Complex& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o)
{
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

Complex& Complex::operator/=(const Complex& o)
{
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
}

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }
Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex powi(Complex z, int e)
{
    Complex r(Real(1));
    while (e > 0) {
        if (e & 1) r *= z;
        e >>= 1;
        if (e) z *= z;
    }
    return r;
}

Real to_real(const mpq_class& q)
{
    Real r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Complex to_complex(const GaussRat& g) { return {to_real(g.re()), to_real(g.im())}; }

mpq_class exact_rational(const Real& x)
{
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x.backend().data());
    return q;
}

double to_double(const Real& x) { return x.convert_to<double>(); }

std::string decimal(const Real& x, int digits)
{
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

std::optional<mpq_class> snap_rational(const Real& x, double tol)
{
    // Continued-fraction convergents of the exact binary value.
    mpq_class target = exact_rational(x);
    mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    mpq_class rest = target;
    const mpz_class max_den("1000000000000");
    const mpq_class bound(tol);
    for (int iter = 0; iter < 200; ++iter) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
        mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        mpq_class approx(h1, k1);
        approx.canonicalize();
        mpq_class err = abs(approx - target);
        // a genuine rational sits far closer than a generic convergent (|err| ~ 1/k^2)
        if (err <= bound * (1 + abs(target)) && err * k1 * k1 <= mpq_class(1, 1000000)) return approx;
        mpq_class frac = rest - a;
        if (sgn(frac) == 0) break;
        rest = 1 / frac;
    }
    return std::nullopt;
}

std::optional<GaussRat> snap_gauss(const Complex& z, double tol)
{
    Real scale = abs(z);
    double t = tol * (1.0 + to_double(scale));
    auto re = snap_rational(z.re, t);
    if (!re) return std::nullopt;
    auto im = snap_rational(z.im, t);
    if (!im) return std::nullopt;
    return GaussRat(*re, *im);
}

GaussRat approximate_gauss(const Complex& z, long max_den)
{
    auto round_q = [max_den](const Real& x) {
        Real scaled = x * max_den;
        Real r = boost::multiprecision::round(scaled);
        mpq_class q = exact_rational(r) / mpq_class(max_den);
        return q;
    };
    return GaussRat(round_q(z.re), round_q(z.im));
}

}  // namespace nonproper
