#pragma once

#include "nonproper/gauss.hpp"
#include "nonproper/lattice.hpp"
#include "nonproper/numeric.hpp"
#include "nonproper/upoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace nonproper {

enum class Var { u = 0, v = 1 };

// Sparse bivariate polynomial over Q(i). Exponent (i,j) stands for u^i v^j.
class Poly {
public:
    using Terms = std::map<LatticePoint, GaussRat>;

    Poly() = default;
    Poly(const GaussRat& constant);
    explicit Poly(Terms terms);
    static Poly monomial(const GaussRat& c, LatticePoint e);
    static Poly u() { return monomial(GaussRat(1), {1, 0}); }
    static Poly v() { return monomial(GaussRat(1), {0, 1}); }
    // Embeds a univariate polynomial in the chosen variable.
    static Poly from_upoly(const UPoly& p, Var var);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussRat coeff(const LatticePoint& e) const;
    GaussRat constant_term() const { return coeff({0, 0}); }
    PointSet support_points() const;
    Support support() const { return Support(support_points()); }
    int total_degree() const;
    int degree(Var var) const;
    LatticePoint min_exponents() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const GaussRat& s);
    Poly operator-() const;
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const GaussRat& s) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    Poly pow(unsigned e) const;

    Poly derivative(Var var) const;
    // Multiplies by u^e.x v^e.y; negative entries must divide exactly.
    Poly shift(const LatticePoint& e) const;
    // Divided by the largest monomial factor.
    Poly strip_monomial() const { return shift(-min_exponents()); }
    // Scaled so that the lexicographically largest term has coefficient 1.
    Poly normalized() const;

    GaussRat operator()(const GaussRat& u, const GaussRat& v) const;
    Complex operator()(const Complex& u, const Complex& v) const;
    // Fixes one variable; the result is univariate in the other.
    UPoly substitute(Var var, const GaussRat& value) const;
    // p(x(s), y(s))
    UPoly compose(const UPoly& x, const UPoly& y) const;
    // p(u + a v, v)
    Poly shear(const GaussRat& a) const;
    // p(v, u)
    Poly swapped() const;
    // Coefficients of powers of var, ascending; each lives in the other variable, placed on u.
    std::vector<UPoly> coefficients_in(Var var) const;
    static Poly from_coefficients(const std::vector<UPoly>& coeffs, Var var);

    std::string str(char x = 'u', char y = 'v') const;

private:
    Terms terms_;
};

Poly restrict_to_face(const Poly& p, const Support& g);
Poly gcd(const Poly& a, const Poly& b);
Poly exact_div(const Poly& a, const Poly& b);

struct PolyMap {
    Poly f1;
    Poly f2;
    const Poly& operator[](int i) const { return i == 0 ? f1 : f2; }
    Poly& operator[](int i) { return i == 0 ? f1 : f2; }
    PolyMap translated(const GaussRat& c1, const GaussRat& c2) const { return {f1 + Poly(c1), f2 + Poly(c2)}; }
    int degree() const;
};

struct JacobianData {
    Poly det;
    Support sigma;
};

SupportPair support_pair(const PolyMap& f, bool augment);
JacobianData jacobian(const PolyMap& f);
Complex evaluate(const Poly& p, const Complex& u, const Complex& v);

}  // namespace nonproper
