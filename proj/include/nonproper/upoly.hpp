#pragma once

#include "nonproper/gauss.hpp"
#include "nonproper/numeric.hpp"

#include <utility>
#include <vector>

namespace nonproper {

// Dense univariate polynomial over Q(i), coefficients in ascending order.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<GaussRat> coeffs);
    UPoly(const GaussRat& constant);
    static UPoly monomial(const GaussRat& c, int degree);
    static UPoly x() { return monomial(GaussRat(1), 1); }
    // Monic polynomial with the given roots.
    static UPoly from_roots(const std::vector<GaussRat>& roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<GaussRat>& coeffs() const { return c_; }
    GaussRat coeff(int i) const;
    const GaussRat& lead() const { return c_.back(); }

    GaussRat operator()(const GaussRat& x) const;
    Complex operator()(const Complex& x) const;

    UPoly derivative() const;
    UPoly monic() const;
    // Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    int valuation() const;
    UPoly shift_down(int k) const;
    UPoly shift_up(int k) const;
    UPoly pow(unsigned e) const;
    // p(a*x + b)
    UPoly compose_affine(const GaussRat& a, const GaussRat& b) const;
    // p(q(x))
    UPoly compose(const UPoly& q) const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const GaussRat& s);
    UPoly operator-() const;
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const GaussRat& s) { return a *= s; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    std::string str(char var = 'x') const;

private:
    void trim();
    std::vector<GaussRat> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly exact_div(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);
// Yun's algorithm: monic pairwise coprime factors with their multiplicities.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);
UPoly squarefree_part(const UPoly& p);
// Sum over the roots of the squarefree polynomial h of their multiplicities in p.
int multiplicity_at_roots(UPoly p, const UPoly& h);
// Newton interpolation through (x_i, y_i).
UPoly interpolate(const std::vector<GaussRat>& xs, const std::vector<GaussRat>& ys);

}  // namespace nonproper
