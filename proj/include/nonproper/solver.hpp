#pragma once

#include "nonproper/config.hpp"
#include "nonproper/lattice.hpp"
#include "nonproper/numeric.hpp"
#include "nonproper/polyring.hpp"
#include "nonproper/upoly.hpp"

#include <vector>

namespace nonproper {

struct RootCluster {
    Complex value;
    int multiplicity = 1;
    bool certified = false;
};

// Multiplicities from exact squarefree decomposition, values by Aberth iteration.
std::vector<RootCluster> univariate_roots(const UPoly& p, const Tolerances& tol = {});
// Plain Aberth on floating coefficients (ascending); roots are not clustered.
std::vector<Complex> numeric_roots(std::vector<Complex> coeffs, const Tolerances& tol = {});

// Sylvester resultant eliminating the variable whose coefficients are listed (ascending).
// The coefficients are polynomials in two parameters; so is the result.
Poly resultant(const std::vector<Poly>& a, const std::vector<Poly>& b);
// Result is univariate in the remaining variable.
UPoly resultant(const Poly& p, const Poly& q, Var eliminate);

struct IsolatedCount {
    int count = 0;
    bool positive_dimensional = false;
};

// Isolated common zeros with multiplicity, optionally leaving out those on u=0 and/or v=0.
IsolatedCount count_isolated(const Poly& p, const Poly& q, bool exclude_u_axis, bool exclude_v_axis);
IsolatedCount count_all(const Poly& p, const Poly& q);
IsolatedCount count_torus_solutions(const Poly& p, const Poly& q);

// Exact test: f(u,v) = y has no solution in C^2.
bool fiber_empty(const PolyMap& f, const GaussRat& y1, const GaussRat& y2);

struct Solution {
    Complex u;
    Complex v;
    int multiplicity = 1;
};

struct SolutionSet {
    std::vector<Solution> solutions;
    int count_all = 0;
    int count_torus = 0;
    bool positive_dimensional = false;
};

SolutionSet solve_system(const Poly& p, const Poly& q, const Tolerances& tol = {});

enum class FiberVerdict { attained, empty, inconclusive };

struct NumericFiber {
    FiberVerdict verdict = FiberVerdict::inconclusive;
    double min_residual = 0;
};

// Floating test of f = y for points known only numerically.
NumericFiber numeric_fiber(const PolyMap& f, const Complex& y1, const Complex& y2, const Tolerances& tol = {});

struct FaceDeficiency {
    FacePair face;
    int m = 0;
    bool degenerate = false;
};

// Roots escaping to each face's toric boundary; only faces with positive m are returned.
std::vector<FaceDeficiency> bernstein_deficiency(const Poly& p, const Poly& q);
std::vector<FaceDeficiency> bernstein_deficiency(const PolyMap& f, const GaussRat& y1, const GaussRat& y2);

// Roots in Q(i), found numerically and confirmed exactly.
std::vector<GaussRat> gauss_rational_roots(const UPoly& p, const Tolerances& tol = {});

}  // namespace nonproper
