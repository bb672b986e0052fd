#pragma once

#include "nonproper/lattice.hpp"
#include "nonproper/polyring.hpp"

#include <optional>

namespace nonproper {

// Row-major [[a, b], [c, d]].
struct IntMatrix2 {
    long long a = 1, b = 0, c = 0, d = 1;

    long long det() const { return a * d - b * c; }
    LatticePoint operator*(const LatticePoint& p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
    IntMatrix2 operator*(const IntMatrix2& o) const
    {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    // Only for unimodular matrices.
    IntMatrix2 inverse() const;
    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

struct UnimodularTransform {
    IntMatrix2 u;
    LatticePoint e1;
    LatticePoint e2;
    LatticePoint base;
};

struct ClearedPair {
    Poly p1;
    Poly p2;
    LatticePoint r1;
    LatticePoint r2;
};

// extra_shift > 0 replaces e2 by e2 - extra_shift * e1, which keeps the cone condition.
UnimodularTransform build_transform(const SupportPair& a, const FacePair& g, long long extra_shift = 0);

// Monomial substitution x^e -> x^{u e}, then each member is multiplied by the smallest monomial
// making it a polynomial. Optional frames (supersets of the supports) fix the clearing shifts.
ClearedPair apply_transform(const Poly& p1, const Poly& p2, const IntMatrix2& u,
                            const std::optional<SupportPair>& frames = std::nullopt);
ClearedPair apply_transform(const PolyMap& f, const UnimodularTransform& t,
                            const std::optional<SupportPair>& frames = std::nullopt);

Poly transform_poly(const Poly& p, const IntMatrix2& u);
LatticePoint clearing_shift(const PointSet& points, const IntMatrix2& u);

// Image of a supporting vector in the transformed lattice; (0,1) when alpha supports the face.
LatticePoint normal_image_check(const UnimodularTransform& t, const LatticePoint& alpha);

}  // namespace nonproper
