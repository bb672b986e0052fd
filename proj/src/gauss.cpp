#include "nonproper/gauss.hpp"

#include <stdexcept>

namespace nonproper {

GaussRat::GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

GaussRat GaussRat::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero in Q(i)");
    mpq_class n = norm();
    return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o)
{
    if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b)
{
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

GaussRat GaussRat::pow(unsigned e) const
{
    GaussRat result(1), base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

std::string rational_str(const mpq_class& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(const std::string& text)
{
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string GaussRat::str() const
{
    if (sgn(im_) == 0) return rational_str(re_);
    auto imag = [](const mpq_class& q) {
        if (q == 1) return std::string("i");
        if (q == -1) return std::string("-i");
        return rational_str(q) + "i";
    };
    if (sgn(re_) == 0) return imag(im_);
    std::string s = "(" + rational_str(re_);
    std::string i = imag(im_);
    if (i[0] != '-') s += "+";
    return s + i + ")";
}

mpz_class denominator_lcm(const GaussRat& g)
{
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), g.re().get_den().get_mpz_t(), g.im().get_den().get_mpz_t());
    return l;
}

GaussInt GaussInt::exact_div(const GaussInt& d) const
{
    if (sgn(d.im) == 0) {
        GaussInt q{re, im};
        mpz_divexact(q.re.get_mpz_t(), q.re.get_mpz_t(), d.re.get_mpz_t());
        mpz_divexact(q.im.get_mpz_t(), q.im.get_mpz_t(), d.re.get_mpz_t());
        return q;
    }
    mpz_class n = d.re * d.re + d.im * d.im;
    GaussInt q{re * d.re + im * d.im, im * d.re - re * d.im};
    mpz_divexact(q.re.get_mpz_t(), q.re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), q.im.get_mpz_t(), n.get_mpz_t());
    return q;
}

}  // namespace nonproper
