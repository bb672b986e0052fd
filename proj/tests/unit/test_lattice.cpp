#include "doctest.h"

#include "nonproper/faceclass.hpp"
#include "nonproper/lattice.hpp"
#include "nonproper/polyring.hpp"
#include "nonproper/toric.hpp"

using namespace nonproper;

namespace {

SupportPair triangle_pair() { return {Support{{0, 0}, {1, 1}, {1, 2}}, Support{{0, 0}, {1, 0}, {1, 1}}}; }
SupportPair polygon_pair() { return {Support{{0, 0}, {1, 2}, {2, 4}, {2, 5}, {1, 3}}, Support{{0, 0}, {1, 0}, {1, 1}, {2, 2}}}; }

const FacePair* find_face(const std::vector<FacePair>& faces, LatticePoint n)
{
    for (const auto& f : faces)
        if (f.normal == n) return &f;
    return nullptr;
}

}  // namespace

TEST_CASE("convex hull examples")
{
    CHECK(convex_hull({{0, 0}, {1, 2}, {2, 4}}) == std::vector<LatticePoint>{{0, 0}, {2, 4}});
    CHECK(convex_hull({{0, 0}, {1, 1}, {1, 2}}) == std::vector<LatticePoint>{{0, 0}, {1, 1}, {1, 2}});
    CHECK(convex_hull({{0, 0}}) == std::vector<LatticePoint>{{0, 0}});
    CHECK_THROWS(convex_hull({}));
}

TEST_CASE("minkowski sums")
{
    CHECK(minkowski_sum(Support{{0, 0}}, Support{{1, 1}}).points() == PointSet{{1, 1}});
    auto s = minkowski_sum(triangle_pair().a1, triangle_pair().a2);
    CHECK(s.hull() == std::vector<LatticePoint>{{0, 0}, {1, 0}, {2, 1}, {2, 3}, {1, 2}});
    auto sq = minkowski_sum(Support{{0, 0}, {1, 0}}, Support{{0, 0}, {0, 1}});
    CHECK(sq.hull().size() == 4);
    CHECK(sq.area() == 1);
}

TEST_CASE("mixed volumes")
{
    CHECK(mixed_volume(triangle_pair().a1, triangle_pair().a2) == 2);
    SupportPair m12{Support{{0, 0}, {2, 2}, {2, 3}}, Support{{0, 0}, {1, 1}, {3, 3}, {3, 4}}};
    CHECK(mixed_volume(m12.a1, m12.a2) == 3);
    CHECK(mixed_volume(Support{{0, 0}, {1, 1}}, Support{{0, 0}, {2, 2}}) == 0);
    CHECK(is_independent(triangle_pair()));
    CHECK_FALSE(is_independent({Support{{0, 0}, {1, 1}}, Support{{0, 0}, {2, 2}}}));
    CHECK_FALSE(is_independent({Support{{0, 0}}, triangle_pair().a2}));
}

TEST_CASE("integer lengths")
{
    CHECK(integer_length(Support{{0, 0}, {2, 4}}) == 2);
    CHECK(integer_length(Support{{0, 0}, {1, 1}}) == 1);
    CHECK(integer_length(Support{{0, 2}, {2, 4}}) == 2);
    CHECK_THROWS(integer_length(Support{{0, 0}}));
}

TEST_CASE("face pairs of the triangle pair")
{
    auto faces = enumerate_face_pairs(triangle_pair());
    const FacePair* f = find_face(faces, {2, -1});
    REQUIRE(f);
    CHECK(f->g1.points() == PointSet{{0, 0}, {1, 2}});
    CHECK(f->g2.points() == PointSet{{0, 0}});
    const FacePair* g = find_face(faces, {-1, 0});
    REQUIRE(g);
    CHECK(g->g1.points() == PointSet{{1, 1}, {1, 2}});
    CHECK(g->g2.points() == PointSet{{1, 0}, {1, 1}});
    CHECK(enumerate_face_pairs({Support{{0, 0}}, Support{{1, 1}}}).empty());
    for (const auto& fp : faces) {
        CHECK(fp.g1 == triangle_pair().a1.face(fp.normal));
        CHECK(fp.g2 == triangle_pair().a2.face(fp.normal));
    }
}

TEST_CASE("face classification")
{
    auto faces = enumerate_face_pairs(triangle_pair());
    auto c = classify_face(*find_face(faces, {2, -1}));
    CHECK(c.origin);
    CHECK(c.relevant);
    CHECK_FALSE(c.long_face);
    CHECK(c.side == Side::left);
    auto d = classify_face(*find_face(faces, {-1, 0}));
    CHECK_FALSE(d.semi_origin);
    CHECK_FALSE(d.relevant);

    SupportPair m14{Support{{0, 0}, {1, 1}}, Support{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {1, 3}}};
    auto rel = relevant_faces(m14);
    int long_count = 0;
    for (const auto& cf : rel.faces)
        if (cf.cls.long_face) {
            ++long_count;
            CHECK((cf.face.normal == LatticePoint{-1, 1} || cf.face.normal == LatticePoint{1, -1}));
            if (cf.face.normal == LatticePoint{-1, 1}) {
                CHECK(cf.cls.origin);
                CHECK(cf.cls.side == Side::right);
            } else {
                CHECK(cf.cls.half_origin);
                CHECK(cf.face.g2.points() == PointSet{{0, 2}, {1, 3}});
            }
        }
    CHECK(long_count == 2);

    SupportPair simplex{Support{{0, 0}, {1, 0}, {0, 1}}, Support{{0, 0}, {1, 0}, {0, 1}}};
    CHECK(relevant_faces(simplex).faces.empty());
}

TEST_CASE("classification counts of the two-polygon figure")
{
    int origin = 0, half = 0, coord = 0, relevant = 0;
    for (const auto& cf : classify_all(polygon_pair())) {
        origin += cf.cls.origin;
        half += cf.cls.half_origin;
        coord += cf.cls.coordinate;
        relevant += cf.cls.relevant;
    }
    CHECK(origin == 3);
    CHECK(half == 6);
    CHECK(coord == 1);
    CHECK(relevant == 4);
}

TEST_CASE("toric transform of the figure face")
{
    auto faces = enumerate_face_pairs(polygon_pair());
    const FacePair* f = find_face(faces, {-2, 1});
    REQUIRE(f);
    REQUIRE(f->dim == 1);
    auto t = build_transform(polygon_pair(), *f);
    CHECK(t.e1 == LatticePoint{1, 2});
    CHECK(t.e2 == LatticePoint{-1, -1});
    CHECK(normal_image_check(t, f->normal) == LatticePoint{0, 1});

    Poly phi1 = Poly(GaussRat(1)) + Poly::monomial(2, {1, 2}) + Poly::monomial(3, {2, 4}) + Poly::monomial(4, {1, 3}) +
                Poly::monomial(5, {2, 5});
    Poly phi2 = Poly(GaussRat(-1)) + Poly::monomial(-2, {1, 0}) + Poly::monomial(-3, {2, 2});
    auto cp = apply_transform(phi1, phi2, t.u);
    CHECK(cp.p1.str('s', 't') == "1 + 2*s + 3*s^2 + 4*s^2*t + 5*s^3*t");
    CHECK(cp.r1 == LatticePoint{0, 0});
    CHECK(cp.r2 == LatticePoint{1, 2});
}

TEST_CASE("transform of the diagonal face")
{
    SupportPair m14{Support{{0, 0}, {1, 1}}, Support{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {1, 3}}};
    auto faces = enumerate_face_pairs(m14);
    const FacePair* f = find_face(faces, {-1, 1});
    REQUIRE(f);
    auto t = build_transform(m14, *f);
    CHECK(t.e1 == LatticePoint{1, 1});
    CHECK(normal_image_check(t, f->normal) == LatticePoint{0, 1});
    CHECK(t.u * LatticePoint{1, 1} == LatticePoint{1, 0});
    const FacePair* h = find_face(faces, {1, -1});
    REQUIRE(h);
    auto th = build_transform(m14, *h);
    CHECK(normal_image_check(th, h->normal) == LatticePoint{0, 1});

    IntMatrix2 shear{1, 0, -1, 1};
    auto cp = apply_transform(Poly::monomial(1, {1, 1}), Poly(GaussRat(1)), shear);
    CHECK(cp.p1 == Poly::monomial(1, {1, 0}));
}
