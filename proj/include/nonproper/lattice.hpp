#pragma once

#include <gmpxx.h>

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace nonproper {

struct LatticePoint {
    long long x = 0;
    long long y = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
    LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
    LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
    LatticePoint operator*(long long k) const { return {x * k, y * k}; }
    LatticePoint operator-() const { return {-x, -y}; }
    std::string str() const;
};

inline long long dot(const LatticePoint& a, const LatticePoint& b) { return a.x * b.x + a.y * b.y; }
inline long long cross(const LatticePoint& a, const LatticePoint& b) { return a.x * b.y - a.y * b.x; }
LatticePoint primitive(const LatticePoint& v);
long long gcd_ll(long long a, long long b);

using PointSet = std::set<LatticePoint>;

class Support {
public:
    Support() = default;
    explicit Support(PointSet points);
    Support(std::initializer_list<LatticePoint> pts) : Support(PointSet(pts)) {}

    const PointSet& points() const { return points_; }
    const std::vector<LatticePoint>& hull() const { return hull_; }
    bool empty() const { return points_.empty(); }
    bool contains(const LatticePoint& p) const { return points_.count(p) > 0; }
    // 0 for a point, 1 for a segment, 2 otherwise
    int dim() const;
    // Points minimizing alpha.x
    Support face(const LatticePoint& alpha) const;
    long long min_value(const LatticePoint& alpha) const;
    // Twice the hull area.
    long long twice_area() const;
    mpq_class area() const { return mpq_class(static_cast<long>(twice_area())) / 2; }

    friend bool operator==(const Support& a, const Support& b) { return a.points_ == b.points_; }

private:
    PointSet points_;
    std::vector<LatticePoint> hull_;
};

struct SupportPair {
    Support a1;
    Support a2;
};

struct FacePair {
    Support g1;
    Support g2;
    LatticePoint normal;
    int dim = 0;
    // Vertex faces: open normal cone spanned counterclockwise from cone_lo to cone_hi.
    // Edge faces: both equal normal.
    LatticePoint cone_lo;
    LatticePoint cone_hi;
    friend bool operator==(const FacePair& a, const FacePair& b) { return a.normal == b.normal && a.dim == b.dim && a.cone_lo == b.cone_lo && a.cone_hi == b.cone_hi; }
};

std::vector<LatticePoint> convex_hull(const PointSet& points);
Support minkowski_sum(const Support& a, const Support& b);
mpq_class mixed_volume(const Support& a, const Support& b);
bool is_independent(const SupportPair& a);
long long integer_length(const Support& s);
std::vector<FacePair> enumerate_face_pairs(const SupportPair& a);

// Smallest infinity-norm primitive vector strictly inside the cone from lo to hi (counterclockwise).
LatticePoint cone_representative(const LatticePoint& lo, const LatticePoint& hi);
bool strictly_inside_cone(const LatticePoint& v, const LatticePoint& lo, const LatticePoint& hi);

}  // namespace nonproper
