#include "nonproper/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace nonproper {

std::string LatticePoint::str() const
{
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

long long gcd_ll(long long a, long long b)
{
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

LatticePoint primitive(const LatticePoint& v)
{
    long long g = gcd_ll(v.x, v.y);
    if (g == 0) return v;
    return {v.x / g, v.y / g};
}

std::vector<LatticePoint> convex_hull(const PointSet& points)
{
    if (points.empty()) throw std::invalid_argument("convex hull of an empty point set");
    std::vector<LatticePoint> p(points.begin(), points.end());
    if (p.size() <= 2) return p;
    std::vector<LatticePoint> h(2 * p.size());
    std::size_t k = 0;
    for (const auto& q : p) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], q - h[k - 2]) <= 0) --k;
        h[k++] = q;
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 1] - h[k - 2], p[i] - h[k - 2]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return h;
}

Support::Support(PointSet points) : points_(std::move(points))
{
    if (!points_.empty()) hull_ = convex_hull(points_);
}

int Support::dim() const
{
    if (hull_.size() <= 1) return 0;
    return hull_.size() == 2 ? 1 : 2;
}

long long Support::min_value(const LatticePoint& alpha) const
{
    long long m = std::numeric_limits<long long>::max();
    for (const auto& p : hull_) m = std::min(m, dot(alpha, p));
    return m;
}

Support Support::face(const LatticePoint& alpha) const
{
    long long m = min_value(alpha);
    PointSet out;
    for (const auto& p : points_)
        if (dot(alpha, p) == m) out.insert(p);
    return Support(std::move(out));
}

long long Support::twice_area() const
{
    long long s = 0;
    for (std::size_t i = 0; i < hull_.size(); ++i) s += cross(hull_[i], hull_[(i + 1) % hull_.size()]);
    return s;
}

Support minkowski_sum(const Support& a, const Support& b)
{
    PointSet out;
    for (const auto& p : a.points())
        for (const auto& q : b.points()) out.insert(p + q);
    return Support(std::move(out));
}

mpq_class mixed_volume(const Support& a, const Support& b)
{
    Support s = minkowski_sum(a, b);
    return mpq_class(static_cast<long>(s.twice_area() - a.twice_area() - b.twice_area())) / 2;
}

bool is_independent(const SupportPair& a)
{
    if (a.a1.empty() || a.a2.empty()) return false;
    return sgn(mixed_volume(a.a1, a.a2)) > 0;
}

long long integer_length(const Support& s)
{
    if (s.dim() != 1) throw std::invalid_argument("integer length needs a one-dimensional support");
    LatticePoint d = s.hull()[1] - s.hull()[0];
    return gcd_ll(d.x, d.y);
}

bool strictly_inside_cone(const LatticePoint& v, const LatticePoint& lo, const LatticePoint& hi)
{
    return cross(lo, v) > 0 && cross(v, hi) > 0;
}

LatticePoint cone_representative(const LatticePoint& lo, const LatticePoint& hi)
{
    for (long long r = 1;; ++r) {
        for (long long x = -r; x <= r; ++x) {
            for (long long y = -r; y <= r; ++y) {
                if (std::max(std::llabs(x), std::llabs(y)) != r) continue;
                LatticePoint v{x, y};
                if (gcd_ll(x, y) != 1) continue;
                if (strictly_inside_cone(v, lo, hi)) return v;
            }
        }
    }
}

std::vector<FacePair> enumerate_face_pairs(const SupportPair& a)
{
    std::vector<FacePair> out;
    Support sum = minkowski_sum(a.a1, a.a2);
    const auto& h = sum.hull();
    const std::size_t m = h.size();
    if (m < 2) return out;
    std::vector<LatticePoint> normals(m);
    for (std::size_t i = 0; i < m; ++i) {
        LatticePoint d = h[(i + 1) % m] - h[i];
        normals[i] = primitive(LatticePoint{-d.y, d.x});
    }
    for (std::size_t i = 0; i < m; ++i) {
        const LatticePoint& lo = normals[(i + m - 1) % m];
        const LatticePoint& hi = normals[i];
        LatticePoint rep = cone_representative(lo, hi);
        out.push_back({a.a1.face(rep), a.a2.face(rep), rep, 0, lo, hi});
        out.push_back({a.a1.face(hi), a.a2.face(hi), hi, 1, hi, hi});
    }
    return out;
}

}  // namespace nonproper
