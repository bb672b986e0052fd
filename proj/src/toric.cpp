#include "nonproper/toric.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>

namespace nonproper {

namespace {

// Returns (x, y) with a x + b y = gcd(a, b) > 0.
LatticePoint extended_gcd(long long a, long long b)
{
    long long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        long long q = old_r / r;
        long long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_s, -old_t};
    return {old_s, old_t};
}

long long floor_div(long long n, long long d)
{
    long long q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

bool oriented(const LatticePoint& d) { return d.x > 0 || (d.x == 0 && d.y > 0); }

}  // namespace

IntMatrix2 IntMatrix2::inverse() const
{
    long long dt = det();
    if (dt != 1 && dt != -1) throw std::domain_error("matrix is not unimodular");
    return {d * dt, -b * dt, -c * dt, a * dt};
}

UnimodularTransform build_transform(const SupportPair& a, const FacePair& g, long long extra_shift)
{
    if (g.dim != 1) throw std::invalid_argument("transform needs a one-dimensional face");
    Support face = minkowski_sum(g.g1, g.g2);
    if (face.dim() != 1) throw std::invalid_argument("transform needs a one-dimensional face");
    LatticePoint p = face.hull()[0], q = face.hull()[1];
    long long np = dot(p, p), nq = dot(q, q);
    LatticePoint base = p, other = q;
    if (nq < np || (nq == np && !oriented(q - p))) std::swap(base, other);

    LatticePoint e1 = primitive(other - base);
    const LatticePoint& alpha = g.normal;
    if (dot(alpha, e1) != 0) throw std::logic_error("normal does not support the face");
    LatticePoint e2 = extended_gcd(alpha.x, alpha.y);
    assert(dot(alpha, e2) == 1);

    // Row 1 of the inverse basis matrix; row 2 is alpha.
    long long det_e = e1.x * e2.y - e1.y * e2.x;
    LatticePoint w{e2.y * det_e, -e2.x * det_e};

    Support sum = minkowski_sum(a.a1, a.a2);
    long long kmax = std::numeric_limits<long long>::max();
    for (const auto& pt : sum.points()) {
        LatticePoint d = pt - base;
        long long h = dot(alpha, d);
        if (h < 0) throw std::logic_error("cone condition cannot hold");
        if (h > 0) kmax = std::min(kmax, floor_div(dot(w, d), h));
    }
    long long k = kmax == std::numeric_limits<long long>::max() ? 0 : kmax;
    k -= extra_shift;
    e2 = e2 + e1 * k;
    w = w - alpha * k;

    UnimodularTransform t;
    t.u = {w.x, w.y, alpha.x, alpha.y};
    t.e1 = e1;
    t.e2 = e2;
    t.base = base;
    assert(t.u * e1 == (LatticePoint{1, 0}));
    assert(t.u * e2 == (LatticePoint{0, 1}));
    return t;
}

LatticePoint clearing_shift(const PointSet& points, const IntMatrix2& u)
{
    LatticePoint r{0, 0};
    for (const auto& p : points) {
        LatticePoint q = u * p;
        r.x = std::max(r.x, -q.x);
        r.y = std::max(r.y, -q.y);
    }
    return r;
}

Poly transform_poly(const Poly& p, const IntMatrix2& u)
{
    Poly::Terms t;
    for (const auto& [e, c] : p.terms()) t[u * e] = c;
    // May carry negative exponents until shifted.
    return Poly(std::move(t));
}

ClearedPair apply_transform(const Poly& p1, const Poly& p2, const IntMatrix2& u, const std::optional<SupportPair>& frames)
{
    ClearedPair out;
    out.r1 = clearing_shift(frames ? frames->a1.points() : p1.support_points(), u);
    out.r2 = clearing_shift(frames ? frames->a2.points() : p2.support_points(), u);
    auto move = [&](const Poly& p, const LatticePoint& r) {
        Poly::Terms t;
        for (const auto& [e, c] : p.terms()) t[u * e + r] = c;
        return Poly(std::move(t));
    };
    out.p1 = move(p1, out.r1);
    out.p2 = move(p2, out.r2);
    return out;
}

ClearedPair apply_transform(const PolyMap& f, const UnimodularTransform& t, const std::optional<SupportPair>& frames)
{
    return apply_transform(f.f1, f.f2, t.u, frames);
}

LatticePoint normal_image_check(const UnimodularTransform& t, const LatticePoint& alpha)
{
    return {dot(alpha, t.e1), dot(alpha, t.e2)};
}

}  // namespace nonproper
