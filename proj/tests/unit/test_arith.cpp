#include "doctest.h"

#include "nonproper/gauss.hpp"
#include "nonproper/numeric.hpp"
#include "nonproper/upoly.hpp"

using namespace nonproper;

TEST_CASE("gauss rationals canonicalize and print")
{
    GaussRat a(mpq_class(6, 4), 0);
    CHECK(a.str() == "3/2");
    CHECK(GaussRat::imag_unit().str() == "i");
    CHECK((-GaussRat::imag_unit()).str() == "-i");
    CHECK(GaussRat(mpq_class(1, 2), -3).str() == "(1/2-3i)");
    GaussRat z(1, 2);
    CHECK(z * z.inverse() == GaussRat(1));
    CHECK(parse_rational("-4/6") == mpq_class(-2, 3));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("gaussian integer exact division")
{
    GaussInt a{3, 4}, b{1, -2};
    GaussInt p = a * b;
    GaussInt q = p.exact_div(b);
    CHECK(q.re == 3);
    CHECK(q.im == 4);
}

TEST_CASE("univariate division, gcd and squarefree parts")
{
    UPoly x = UPoly::x();
    UPoly one(GaussRat(1));
    UPoly p = (x - one).pow(2) * (x - UPoly(GaussRat(2)));
    auto sq = squarefree_decomposition(p);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].first == x - UPoly(GaussRat(2)));
    CHECK(sq[0].second == 1);
    CHECK(sq[1].first == x - one);
    CHECK(sq[1].second == 2);
    CHECK(gcd(p, p.derivative()) == x - one);
    CHECK(multiplicity_at_roots(p, x - one) == 2);
    auto [q, r] = divmod(p, x - one);
    CHECK(r.is_zero());
    CHECK(q.degree() == 2);
}

TEST_CASE("newton interpolation recovers a polynomial")
{
    UPoly p({GaussRat(3), GaussRat(0, 1), GaussRat(-2)});
    std::vector<GaussRat> xs, ys;
    for (long i = 0; i < 5; ++i) {
        xs.emplace_back(i);
        ys.push_back(p(GaussRat(i)));
    }
    CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("mpfr reals follow the precision scope")
{
    PrecisionScope scope(256);
    Real third = to_real(mpq_class(1, 3));
    Real back = third * 3;
    CHECK(abs(Complex(back - 1)) < Real(1e-70));
    auto snapped = snap_gauss(Complex(to_real(mpq_class(22, 7)), to_real(mpq_class(-1, 5))), 1e-24);
    REQUIRE(snapped.has_value());
    CHECK(*snapped == GaussRat(mpq_class(22, 7), mpq_class(-1, 5)));
}
