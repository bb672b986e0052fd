#include "nonproper/upoly.hpp"

#include <stdexcept>

namespace nonproper {

UPoly::UPoly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const GaussRat& constant)
{
    if (!constant.is_zero()) c_.push_back(constant);
}

UPoly UPoly::monomial(const GaussRat& c, int degree)
{
    if (c.is_zero()) return {};
    std::vector<GaussRat> v(degree + 1);
    v[degree] = c;
    return UPoly(std::move(v));
}

UPoly UPoly::from_roots(const std::vector<GaussRat>& roots)
{
    UPoly p(GaussRat(1));
    for (const auto& r : roots) p = p * UPoly({-r, GaussRat(1)});
    return p;
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussRat UPoly::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size())) return {};
    return c_[i];
}

GaussRat UPoly::operator()(const GaussRat& x) const
{
    GaussRat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Complex UPoly::operator()(const Complex& x) const
{
    Complex acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += to_complex(*it);
    }
    return acc;
}

UPoly UPoly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<GaussRat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * GaussRat(static_cast<long>(i));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const
{
    if (c_.empty()) return {};
    return *this * lead().inverse();
}

int UPoly::valuation() const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return 0;
}

UPoly UPoly::shift_down(int k) const
{
    if (k == 0) return *this;
    if (k < 0) return shift_up(-k);
    if (k > static_cast<int>(c_.size())) return {};
    for (int i = 0; i < k; ++i)
        if (!c_[i].is_zero()) throw std::logic_error("shift_down would drop nonzero terms");
    return UPoly(std::vector<GaussRat>(c_.begin() + k, c_.end()));
}

UPoly UPoly::shift_up(int k) const
{
    if (k == 0) return *this;
    if (k < 0) return shift_down(-k);
    if (c_.empty()) return {};
    std::vector<GaussRat> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(std::move(v));
}

UPoly UPoly::pow(unsigned e) const
{
    UPoly r(GaussRat(1)), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

UPoly UPoly::compose_affine(const GaussRat& a, const GaussRat& b) const
{
    return compose(UPoly({b, a}));
}

UPoly UPoly::compose(const UPoly& q) const
{
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * q;
        acc += UPoly(*it);
    }
    return acc;
}

UPoly& UPoly::operator+=(const UPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const GaussRat& s)
{
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

UPoly UPoly::operator-() const
{
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussRat> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
}

std::string UPoly::str(char var) const
{
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        std::string c = c_[i].str();
        bool neg = c[0] == '-';
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (neg) c = c.substr(1);
        if (i == 0) out += c;
        else {
            if (c != "1") out += c + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<GaussRat> r = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {UPoly(), a};
    std::vector<GaussRat> q(da - db + 1);
    GaussRat inv = b.lead().inverse();
    for (int i = da; i >= db; --i) {
        if (r[i].is_zero()) continue;
        GaussRat f = r[i] * inv;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
    }
    r.resize(db);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly exact_div(const UPoly& a, const UPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

UPoly gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p)
{
    std::vector<std::pair<UPoly, int>> out;
    if (p.degree() < 1) return out;
    UPoly f = p.monic();
    UPoly d = f.derivative();
    UPoly a = gcd(f, d);
    UPoly b = exact_div(f, a);
    UPoly c = exact_div(d, a) * GaussRat(1);
    UPoly dd = c - b.derivative();
    int i = 1;
    while (b.degree() >= 1) {
        a = gcd(b, dd);
        if (a.degree() >= 1) out.emplace_back(a, i);
        b = exact_div(b, a);
        c = exact_div(dd, a);
        dd = c - b.derivative();
        ++i;
    }
    return out;
}

UPoly squarefree_part(const UPoly& p)
{
    if (p.degree() < 1) return p.is_zero() ? UPoly() : UPoly(GaussRat(1));
    return exact_div(p.monic(), gcd(p, p.derivative()));
}

int multiplicity_at_roots(UPoly p, const UPoly& h)
{
    if (h.degree() < 1 || p.is_zero()) return 0;
    int total = 0;
    for (;;) {
        UPoly g = gcd(p, h);
        if (g.degree() < 1) break;
        total += g.degree();
        p = exact_div(p, g);
    }
    return total;
}

UPoly interpolate(const std::vector<GaussRat>& xs, const std::vector<GaussRat>& ys)
{
    const std::size_t n = xs.size();
    std::vector<GaussRat> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UPoly acc;
    for (std::size_t k = n; k-- > 0;) {
        acc = acc * UPoly({-xs[k], GaussRat(1)});
        acc += UPoly(dd[k]);
    }
    return acc;
}

}  // namespace nonproper
