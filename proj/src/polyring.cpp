#include "nonproper/polyring.hpp"

#include <algorithm>
#include <stdexcept>

namespace nonproper {

namespace {

std::vector<mpz_class> binomial_row(unsigned n)
{
    std::vector<mpz_class> row(n + 1);
    for (unsigned k = 0; k <= n; ++k) mpz_bin_uiui(row[k].get_mpz_t(), n, k);
    return row;
}

using VPoly = std::vector<UPoly>;

void trim(VPoly& a)
{
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int vdeg(const VPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly content(const VPoly& a)
{
    UPoly c;
    for (const auto& x : a) c = gcd(c, x);
    return c;
}

VPoly divide_all(VPoly a, const UPoly& c)
{
    for (auto& x : a) x = exact_div(x, c);
    return a;
}

VPoly pseudo_remainder(VPoly r, const VPoly& b)
{
    const UPoly& lc = b.back();
    while (!r.empty() && vdeg(r) >= vdeg(b)) {
        UPoly lr = r.back();
        int shift = vdeg(r) - vdeg(b);
        for (auto& x : r) x = x * lc;
        for (int j = 0; j <= vdeg(b); ++j) r[j + shift] -= lr * b[j];
        trim(r);
    }
    return r;
}

}  // namespace

Poly::Poly(const GaussRat& constant)
{
    if (!constant.is_zero()) terms_[{0, 0}] = constant;
}

Poly::Poly(Terms terms) : terms_(std::move(terms))
{
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

Poly Poly::monomial(const GaussRat& c, LatticePoint e)
{
    Poly p;
    if (!c.is_zero()) p.terms_[e] = c;
    return p;
}

Poly Poly::from_upoly(const UPoly& p, Var var)
{
    Terms t;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeffs()[i].is_zero()) continue;
        t[var == Var::u ? LatticePoint{i, 0} : LatticePoint{0, i}] = p.coeffs()[i];
    }
    return Poly(std::move(t));
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == LatticePoint{0, 0});
}

GaussRat Poly::coeff(const LatticePoint& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussRat() : it->second;
}

PointSet Poly::support_points() const
{
    PointSet s;
    for (const auto& [e, c] : terms_) s.insert(e);
    return s;
}

int Poly::total_degree() const
{
    long long d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.x + e.y);
    return static_cast<int>(d);
}

int Poly::degree(Var var) const
{
    long long d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, var == Var::u ? e.x : e.y);
    return static_cast<int>(d);
}

LatticePoint Poly::min_exponents() const
{
    if (terms_.empty()) return {};
    LatticePoint m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        m.x = std::min(m.x, e.x);
        m.y = std::min(m.y, e.y);
    }
    return m;
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [e, c] : o.terms_) {
        auto& slot = terms_[e];
        slot += c;
        if (slot.is_zero()) terms_.erase(e);
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (const auto& [e, c] : o.terms_) {
        auto& slot = terms_[e];
        slot -= c;
        if (slot.is_zero()) terms_.erase(e);
    }
    return *this;
}

Poly& Poly::operator*=(const GaussRat& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto& slot = r.terms_[ea + eb];
            slot += ca * cb;
        }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

Poly Poly::pow(unsigned e) const
{
    Poly r(GaussRat(1)), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

Poly Poly::derivative(Var var) const
{
    Terms t;
    for (const auto& [e, c] : terms_) {
        long long k = var == Var::u ? e.x : e.y;
        if (k == 0) continue;
        LatticePoint ne = var == Var::u ? LatticePoint{e.x - 1, e.y} : LatticePoint{e.x, e.y - 1};
        t[ne] = c * GaussRat(static_cast<long>(k));
    }
    return Poly(std::move(t));
}

Poly Poly::shift(const LatticePoint& s) const
{
    Terms t;
    for (const auto& [e, c] : terms_) {
        LatticePoint ne = e + s;
        if (ne.x < 0 || ne.y < 0) throw std::logic_error("monomial shift leaves the polynomial ring");
        t[ne] = c;
    }
    return Poly(std::move(t));
}

Poly Poly::normalized() const
{
    if (terms_.empty()) return {};
    return *this * terms_.rbegin()->second.inverse();
}

GaussRat Poly::operator()(const GaussRat& u, const GaussRat& v) const
{
    GaussRat acc;
    for (const auto& [e, c] : terms_) acc += c * u.pow(e.x) * v.pow(e.y);
    return acc;
}

Complex Poly::operator()(const Complex& u, const Complex& v) const
{
    Complex acc;
    for (const auto& [e, c] : terms_)
        acc += to_complex(c) * powi(u, static_cast<int>(e.x)) * powi(v, static_cast<int>(e.y));
    return acc;
}

UPoly Poly::substitute(Var var, const GaussRat& value) const
{
    std::vector<GaussRat> out;
    for (const auto& [e, c] : terms_) {
        long long keep = var == Var::u ? e.y : e.x;
        long long fixed = var == Var::u ? e.x : e.y;
        if (static_cast<long long>(out.size()) <= keep) out.resize(keep + 1);
        out[keep] += c * value.pow(static_cast<unsigned>(fixed));
    }
    return UPoly(std::move(out));
}

UPoly Poly::compose(const UPoly& x, const UPoly& y) const
{
    std::map<long long, UPoly> xp, yp;
    auto power = [](std::map<long long, UPoly>& cache, const UPoly& base, long long k) -> const UPoly& {
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        return cache.emplace(k, base.pow(static_cast<unsigned>(k))).first->second;
    };
    UPoly acc;
    for (const auto& [e, c] : terms_) acc += power(xp, x, e.x) * power(yp, y, e.y) * c;
    return acc;
}

Poly Poly::shear(const GaussRat& a) const
{
    Poly r;
    for (const auto& [e, c] : terms_) {
        auto row = binomial_row(static_cast<unsigned>(e.x));
        for (long long k = 0; k <= e.x; ++k) {
            GaussRat coef = c * GaussRat(mpq_class(row[k])) * a.pow(static_cast<unsigned>(e.x - k));
            r += monomial(coef, {k, e.y + e.x - k});
        }
    }
    return r;
}

Poly Poly::swapped() const
{
    Terms t;
    for (const auto& [e, c] : terms_) t[{e.y, e.x}] = c;
    return Poly(std::move(t));
}

std::vector<UPoly> Poly::coefficients_in(Var var) const
{
    std::vector<std::vector<GaussRat>> dense;
    for (const auto& [e, c] : terms_) {
        long long outer = var == Var::v ? e.y : e.x;
        long long inner = var == Var::v ? e.x : e.y;
        if (static_cast<long long>(dense.size()) <= outer) dense.resize(outer + 1);
        auto& row = dense[outer];
        if (static_cast<long long>(row.size()) <= inner) row.resize(inner + 1);
        row[inner] = c;
    }
    std::vector<UPoly> out;
    out.reserve(dense.size());
    for (auto& row : dense) out.emplace_back(std::move(row));
    return out;
}

Poly Poly::from_coefficients(const std::vector<UPoly>& coeffs, Var var)
{
    Terms t;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        for (int i = 0; i <= coeffs[j].degree(); ++i) {
            const GaussRat& c = coeffs[j].coeffs()[i];
            if (c.is_zero()) continue;
            long long jj = static_cast<long long>(j);
            t[var == Var::v ? LatticePoint{i, jj} : LatticePoint{jj, i}] = c;
        }
    return Poly(std::move(t));
}

std::string Poly::str(char x, char y) const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        if (e.x > 0) {
            mono += x;
            if (e.x > 1) mono += "^" + std::to_string(e.x);
        }
        if (e.y > 0) {
            if (!mono.empty()) mono += "*";
            mono += y;
            if (e.y > 1) mono += "^" + std::to_string(e.y);
        }
        std::string cs = c.str();
        bool neg = cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (mono.empty()) out += cs;
        else if (cs == "1") out += mono;
        else out += cs + "*" + mono;
    }
    return out;
}

Poly restrict_to_face(const Poly& p, const Support& g)
{
    Poly::Terms t;
    for (const auto& e : g.points()) {
        GaussRat c = p.coeff(e);
        if (!c.is_zero()) t[e] = c;
    }
    return Poly(std::move(t));
}

Poly gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    VPoly pa = a.coefficients_in(Var::v), pb = b.coefficients_in(Var::v);
    UPoly ca = content(pa), cb = content(pb);
    UPoly c = gcd(ca, cb);
    pa = divide_all(pa, ca);
    pb = divide_all(pb, cb);
    if (vdeg(pa) < vdeg(pb)) std::swap(pa, pb);
    if (vdeg(pb) <= 0) return Poly::from_upoly(c, Var::u).normalized();
    // a coprime specialization at a point where the leading coefficient survives rules out a common factor in v
    for (long u0 : {3, -7, 11}) {
        const GaussRat x(u0);
        if (pa.back()(x).is_zero() || pb.back()(x).is_zero()) continue;
        std::vector<GaussRat> sa, sb;
        for (const auto& k : pa) sa.push_back(k(x));
        for (const auto& k : pb) sb.push_back(k(x));
        if (gcd(UPoly(sa), UPoly(sb)).degree() == 0) return Poly::from_upoly(c, Var::u).normalized();
        break;
    }
    while (vdeg(pb) > 0) {
        VPoly r = pseudo_remainder(pa, pb);
        pa = std::move(pb);
        if (r.empty()) {
            pb = std::move(pa);
            break;
        }
        pb = divide_all(r, content(r));
    }
    if (vdeg(pb) <= 0) pb = {UPoly(GaussRat(1))};
    for (auto& x : pb) x = x * c;
    return Poly::from_coefficients(pb, Var::v).normalized();
}

Poly exact_div(const Poly& a, const Poly& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    VPoly r = a.coefficients_in(Var::v), d = b.coefficients_in(Var::v);
    trim(r);
    if (r.empty()) return {};
    if (vdeg(r) < vdeg(d)) throw std::logic_error("inexact polynomial division");
    VPoly q(vdeg(r) - vdeg(d) + 1);
    while (!r.empty() && vdeg(r) >= vdeg(d)) {
        int shift = vdeg(r) - vdeg(d);
        UPoly lq = exact_div(r.back(), d.back());
        q[shift] = lq;
        for (int j = 0; j <= vdeg(d); ++j) r[j + shift] -= lq * d[j];
        trim(r);
    }
    if (!r.empty()) throw std::logic_error("inexact polynomial division");
    return Poly::from_coefficients(q, Var::v);
}

int PolyMap::degree() const { return std::max(f1.total_degree(), f2.total_degree()); }

SupportPair support_pair(const PolyMap& f, bool augment)
{
    if (f.f1.is_zero() || f.f2.is_zero()) throw std::invalid_argument("zero component polynomial");
    PointSet a = f.f1.support_points(), b = f.f2.support_points();
    if (augment) {
        a.insert({0, 0});
        b.insert({0, 0});
    }
    return {Support(std::move(a)), Support(std::move(b))};
}

JacobianData jacobian(const PolyMap& f)
{
    Poly det = f.f1.derivative(Var::u) * f.f2.derivative(Var::v) - f.f1.derivative(Var::v) * f.f2.derivative(Var::u);
    Support sigma = det.support();
    return {std::move(det), std::move(sigma)};
}

Complex evaluate(const Poly& p, const Complex& u, const Complex& v) { return p(u, v); }

}  // namespace nonproper
