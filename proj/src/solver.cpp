#include "nonproper/solver.hpp"

#include "nonproper/toric.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace nonproper {

namespace {

// ---- roots -------------------------------------------------------------

struct AberthRun {
    std::vector<Complex> roots;
    bool converged = false;
};

Real relative_residual(const std::vector<Complex>& a, const Complex& z, Complex& value, Complex& deriv)
{
    value = Complex();
    deriv = Complex();
    Real scale(0);
    Real az = abs(z);
    for (std::size_t k = a.size(); k-- > 0;) {
        deriv = deriv * z + value;
        value = value * z + a[k];
        scale = scale * az + abs(a[k]);
    }
    if (scale == 0) return Real(0);
    return abs(value) / scale;
}

AberthRun aberth(const std::vector<Complex>& c, const Tolerances& tol)
{
    const int d = static_cast<int>(c.size()) - 1;
    AberthRun run;
    if (d < 1) {
        run.converged = true;
        return run;
    }
    std::vector<Complex> a(c.size());
    for (int k = 0; k <= d; ++k) a[k] = c[k] / c[d];
    if (d == 1) {
        run.roots.push_back(-a[0]);
        run.converged = true;
        return run;
    }
    Real radius(0);
    for (int k = 1; k <= d; ++k) {
        Real m = abs(a[d - k]);
        if (m > 0) radius = std::max(radius, Real(boost::multiprecision::pow(m, Real(1) / k)));
    }
    radius *= 2;
    if (radius == 0) radius = 1;
    const Real two_pi = 2 * boost::multiprecision::acos(Real(-1));
    std::vector<Complex> z(d);
    for (int k = 0; k < d; ++k) {
        Real theta = two_pi * k / d + Real(0.7);
        z[k] = Complex(radius * boost::multiprecision::cos(theta), radius * boost::multiprecision::sin(theta));
    }
    std::vector<bool> done(d, false);
    const Real target(tol.root_residual);
    for (int iter = 0; iter < tol.max_iterations; ++iter) {
        bool all = true;
        for (int i = 0; i < d; ++i) {
            if (done[i]) continue;
            Complex pv, dv;
            Real res = relative_residual(a, z[i], pv, dv);
            if (res <= target) {
                done[i] = true;
                continue;
            }
            all = false;
            if (norm2(dv) == 0) {
                z[i] += Complex(Real(1e-6) * (1 + abs(z[i])), Real(1e-6));
                continue;
            }
            Complex ratio = pv / dv;
            Complex s;
            for (int j = 0; j < d; ++j)
                if (j != i) {
                    Complex diff = z[i] - z[j];
                    if (norm2(diff) > 0) s += Complex(Real(1)) / diff;
                }
            Complex denom = Complex(Real(1)) - ratio * s;
            Complex w = norm2(denom) == 0 ? ratio : ratio / denom;
            z[i] -= w;
        }
        if (all) {
            run.converged = true;
            break;
        }
    }
    if (!run.converged) {
        run.converged = true;
        for (int i = 0; i < d; ++i) {
            Complex pv, dv;
            if (relative_residual(a, z[i], pv, dv) > target) run.converged = false;
        }
    }
    run.roots = std::move(z);
    return run;
}

std::vector<RootCluster> merge_clusters(std::vector<RootCluster> in, double radius)
{
    std::vector<RootCluster> out;
    const Real r(radius);
    for (auto& c : in) {
        bool merged = false;
        for (auto& o : out) {
            if (abs(o.value - c.value) < r * (1 + abs(o.value))) {
                o.multiplicity += c.multiplicity;
                o.certified = false;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(std::move(c));
    }
    return out;
}

// ---- resultants --------------------------------------------------------

mpz_class denominators_lcm(const std::vector<Poly>& ps)
{
    mpz_class l = 1;
    for (const auto& p : ps)
        for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), denominator_lcm(c).get_mpz_t());
    return l;
}

GaussInt to_gauss_int(const GaussRat& g)
{
    return {g.re().get_num(), g.im().get_num()};
}

struct IntPoly {
    std::vector<std::pair<LatticePoint, GaussInt>> terms;
    long long degx = 0;
    long long degy = 0;
};

IntPoly to_int_poly(const Poly& p, const mpz_class& scale)
{
    IntPoly out;
    for (const auto& [e, c] : p.terms()) {
        GaussRat s = c * GaussRat(mpq_class(scale));
        out.terms.emplace_back(e, to_gauss_int(s));
        out.degx = std::max(out.degx, e.x);
        out.degy = std::max(out.degy, e.y);
    }
    return out;
}

GaussInt eval_int(const IntPoly& p, const std::vector<mpz_class>& xp, const std::vector<mpz_class>& yp)
{
    GaussInt acc;
    for (const auto& [e, c] : p.terms) {
        mpz_class m = xp[e.x] * yp[e.y];
        acc.re += c.re * m;
        acc.im += c.im * m;
    }
    return acc;
}

GaussInt bareiss(std::vector<std::vector<GaussInt>> m)
{
    const std::size_t n = m.size();
    if (n == 0) return {1, 0};
    bool negate = false;
    GaussInt prev{1, 0};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return {};
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
            m[i][k] = GaussInt{};
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

long long degree_bound(const std::vector<IntPoly>& a, const std::vector<IntPoly>& b, bool in_x)
{
    const long long m = static_cast<long long>(a.size()) - 1, n = static_cast<long long>(b.size()) - 1;
    long long ma = 0, mb = 0, ta = 0, tb = 0;
    for (long long j = 0; j <= m; ++j) {
        if (a[j].terms.empty()) continue;
        long long d = in_x ? a[j].degx : a[j].degy;
        ma = std::max(ma, d);
        ta = std::max(ta, d + j);
    }
    for (long long j = 0; j <= n; ++j) {
        if (b[j].terms.empty()) continue;
        long long d = in_x ? b[j].degx : b[j].degy;
        mb = std::max(mb, d);
        tb = std::max(tb, d + j);
    }
    return std::min(n * ma + m * mb, ta * tb);
}

std::vector<mpz_class> powers(long long base, long long up_to)
{
    std::vector<mpz_class> p(up_to + 1);
    p[0] = 1;
    for (long long k = 1; k <= up_to; ++k) p[k] = p[k - 1] * static_cast<long>(base);
    return p;
}

// ---- counting ----------------------------------------------------------

GaussRat top_form_at(const Poly& p, const GaussRat& a)
{
    int d = p.total_degree();
    GaussRat acc;
    for (const auto& [e, c] : p.terms())
        if (e.x + e.y == d) acc += c * a.pow(static_cast<unsigned>(e.x));
    return acc;
}

const long kShears[] = {1, -2, 3, -1, 2, -3, 5, -4, 4, -5, 7, -7, 11, -11};

std::vector<GaussRat> valid_shears(const std::vector<const Poly*>& ps, std::size_t how_many)
{
    std::vector<GaussRat> out;
    for (long a : kShears) {
        bool ok = true;
        for (const Poly* p : ps)
            if (top_form_at(*p, GaussRat(a)).is_zero()) ok = false;
        if (ok) out.emplace_back(a);
        if (out.size() == how_many) break;
    }
    if (out.empty()) throw std::runtime_error("no admissible shear found");
    return out;
}

Poly strip_axes(const Poly& p, bool u_axis, bool v_axis)
{
    LatticePoint m = p.min_exponents();
    return p.shift({u_axis ? -m.x : 0, v_axis ? -m.y : 0});
}

int count_with_shear(const Poly& p, const Poly& q, const GaussRat& a, bool ex_u, bool ex_v, const Poly* common)
{
    Poly ps = p.shear(a), qs = q.shear(a);
    UPoly r = resultant(ps, qs, Var::v);
    if (r.is_zero()) return 0;
    UPoly h(GaussRat(1));
    if (common) {
        UPoly rg = resultant(ps, common->shear(a), Var::v);
        h = h * (rg.is_zero() ? r : gcd(r, rg));
    }
    if (ex_u) {
        UPoly gu = gcd(p.substitute(Var::u, GaussRat(0)), q.substitute(Var::u, GaussRat(0)));
        if (gu.degree() >= 1) h = h * gu.compose_affine(-GaussRat(1) / a, GaussRat(0));
    }
    if (ex_v) {
        UPoly gv = gcd(p.substitute(Var::v, GaussRat(0)), q.substitute(Var::v, GaussRat(0)));
        if (gv.degree() >= 1) h = h * gv;
    }
    int excluded = h.degree() >= 1 ? multiplicity_at_roots(r, squarefree_part(h)) : 0;
    return r.degree() - excluded;
}

std::vector<Complex> numeric_coeffs_in_v(const Poly& ps, const Complex& w, const Complex& shift)
{
    auto cs = ps.coefficients_in(Var::v);
    std::vector<Complex> out(cs.size());
    for (std::size_t j = 0; j < cs.size(); ++j) out[j] = cs[j](w);
    if (!out.empty()) out[0] -= shift;
    return out;
}

Real numeric_relative_residual(const Poly& p, const Complex& shift, const Complex& u, const Complex& v)
{
    Complex val = p(u, v) - shift;
    Real scale = abs(shift);
    Real au = abs(u), av = abs(v);
    for (const auto& [e, c] : p.terms())
        scale += abs(to_complex(c)) * boost::multiprecision::pow(au, Real(e.x)) * boost::multiprecision::pow(av, Real(e.y));
    if (scale == 0) return Real(0);
    return abs(val) / scale;
}

std::vector<Complex> trim_numeric(std::vector<Complex> c, double rel)
{
    Real mx(0);
    for (const auto& x : c) mx = std::max(mx, abs(x));
    while (!c.empty() && abs(c.back()) <= Real(rel) * mx) c.pop_back();
    return c;
}

Complex numeric_det(std::vector<std::vector<Complex>> m)
{
    const std::size_t n = m.size();
    Complex det(Real(1));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (norm2(m[r][k]) > norm2(m[piv][k])) piv = r;
        if (norm2(m[piv][k]) == 0) return Complex();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            Complex f = m[r][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[r][j] -= f * m[k][j];
        }
    }
    return det;
}

std::vector<std::vector<Complex>> sylvester(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
    const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
    std::vector<std::vector<Complex>> s(size, std::vector<Complex>(size));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
    return s;
}

}  // namespace

std::vector<RootCluster> univariate_roots(const UPoly& p, const Tolerances& tol)
{
    if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    auto factors = squarefree_decomposition(p);
    for (unsigned bits = tol.precision_bits; bits <= tol.max_precision_bits; bits *= 2) {
        PrecisionScope scope(bits);
        std::vector<RootCluster> out;
        bool ok = true;
        for (const auto& [f, mult] : factors) {
            std::vector<Complex> c;
            for (const auto& x : f.coeffs()) c.push_back(to_complex(x));
            AberthRun run = aberth(c, tol);
            if (!run.converged) {
                ok = false;
                break;
            }
            for (auto& z : run.roots) out.push_back({std::move(z), mult, true});
        }
        if (ok) return merge_clusters(std::move(out), tol.cluster_radius);
    }
    throw std::runtime_error("root finding did not converge at the maximal precision");
}

std::vector<Complex> numeric_roots(std::vector<Complex> coeffs, const Tolerances& tol)
{
    while (!coeffs.empty() && norm2(coeffs.back()) == 0) coeffs.pop_back();
    AberthRun run = aberth(coeffs, tol);
    return run.roots;
}

Poly resultant(const std::vector<Poly>& a_in, const std::vector<Poly>& b_in)
{
    std::vector<Poly> a = a_in, b = b_in;
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    while (!b.empty() && b.back().is_zero()) b.pop_back();
    if (a.empty() || b.empty()) return {};
    const long long m = static_cast<long long>(a.size()) - 1, n = static_cast<long long>(b.size()) - 1;
    if (m == 0 && n == 0) throw std::invalid_argument("resultant of two constants in the eliminated variable");
    if (m == 0) return a[0].pow(static_cast<unsigned>(n));
    if (n == 0) return b[0].pow(static_cast<unsigned>(m));

    mpz_class la = denominators_lcm(a), lb = denominators_lcm(b);
    std::vector<IntPoly> ia, ib;
    for (const auto& p : a) ia.push_back(to_int_poly(p, la));
    for (const auto& p : b) ib.push_back(to_int_poly(p, lb));
    const long long dx = degree_bound(ia, ib, true), dy = degree_bound(ia, ib, false);
    long long mdx = 0, mdy = 0;
    for (const auto* v : {&ia, &ib})
        for (const auto& p : *v) {
            mdx = std::max(mdx, p.degx);
            mdy = std::max(mdy, p.degy);
        }

    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<GaussRat>> grid(dx + 1, std::vector<GaussRat>(dy + 1));
    for (long long ix = 0; ix <= dx; ++ix) {
        auto xp = powers(ix, mdx);
        for (long long iy = 0; iy <= dy; ++iy) {
            auto yp = powers(iy, mdy);
            std::vector<std::vector<GaussInt>> s(size, std::vector<GaussInt>(size));
            std::vector<GaussInt> av, bv;
            for (const auto& p : ia) av.push_back(eval_int(p, xp, yp));
            for (const auto& p : ib) bv.push_back(eval_int(p, xp, yp));
            for (long long i = 0; i < n; ++i)
                for (long long j = 0; j <= m; ++j) s[i][i + j] = av[m - j];
            for (long long i = 0; i < m; ++i)
                for (long long j = 0; j <= n; ++j) s[n + i][i + j] = bv[n - j];
            GaussInt d = bareiss(std::move(s));
            grid[ix][iy] = GaussRat(mpq_class(d.re), mpq_class(d.im));
        }
    }

    std::vector<GaussRat> xs, ys;
    for (long long i = 0; i <= dx; ++i) xs.emplace_back(static_cast<long>(i));
    for (long long i = 0; i <= dy; ++i) ys.emplace_back(static_cast<long>(i));
    std::vector<UPoly> in_x(dy + 1);
    for (long long iy = 0; iy <= dy; ++iy) {
        std::vector<GaussRat> col(dx + 1);
        for (long long ix = 0; ix <= dx; ++ix) col[ix] = grid[ix][iy];
        in_x[iy] = interpolate(xs, col);
    }
    mpz_class denom;
    mpz_class lan, lbm;
    mpz_pow_ui(lan.get_mpz_t(), la.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(lbm.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(m));
    denom = lan * lbm;
    GaussRat inv(mpq_class(1) / mpq_class(denom));
    Poly::Terms terms;
    for (long long k = 0; k <= dx; ++k) {
        std::vector<GaussRat> vals(dy + 1);
        for (long long iy = 0; iy <= dy; ++iy) vals[iy] = in_x[iy].coeff(static_cast<int>(k));
        UPoly cy = interpolate(ys, vals);
        for (int l = 0; l <= cy.degree(); ++l)
            if (!cy.coeffs()[l].is_zero()) terms[{k, l}] = cy.coeffs()[l] * inv;
    }
    return Poly(std::move(terms));
}

UPoly resultant(const Poly& p, const Poly& q, Var eliminate)
{
    std::vector<Poly> a, b;
    for (const auto& c : p.coefficients_in(eliminate)) a.push_back(Poly::from_upoly(c, Var::u));
    for (const auto& c : q.coefficients_in(eliminate)) b.push_back(Poly::from_upoly(c, Var::u));
    Poly r = resultant(a, b);
    auto cs = r.coefficients_in(Var::v);
    return cs.empty() ? UPoly() : cs[0];
}

IsolatedCount count_isolated(const Poly& p_in, const Poly& q_in, bool exclude_u_axis, bool exclude_v_axis)
{
    IsolatedCount out;
    if (p_in.is_zero() || q_in.is_zero()) {
        out.positive_dimensional = true;
        return out;
    }
    Poly p = strip_axes(p_in, exclude_u_axis, exclude_v_axis);
    Poly q = strip_axes(q_in, exclude_u_axis, exclude_v_axis);
    if (p.is_constant() || q.is_constant()) return out;

    std::optional<Poly> common;
    Poly g = gcd(p, q);
    if (!g.is_constant()) {
        out.positive_dimensional = true;
        p = exact_div(p, g);
        q = exact_div(q, g);
        common = g;
        if (p.is_constant() || q.is_constant()) return out;
    }
    std::vector<const Poly*> ps{&p, &q};
    if (common) ps.push_back(&*common);
    const bool exact_single = !exclude_u_axis && !exclude_v_axis && !common;
    auto shears = valid_shears(ps, exact_single ? 1 : 3);
    const Poly* cp = common ? &*common : nullptr;
    int best = count_with_shear(p, q, shears[0], exclude_u_axis, exclude_v_axis, cp);
    if (shears.size() > 1) {
        int second = count_with_shear(p, q, shears[1], exclude_u_axis, exclude_v_axis, cp);
        if (second != best && shears.size() > 2)
            second = std::max(second, count_with_shear(p, q, shears[2], exclude_u_axis, exclude_v_axis, cp));
        best = std::max(best, second);
    }
    out.count = best;
    return out;
}

IsolatedCount count_all(const Poly& p, const Poly& q) { return count_isolated(p, q, false, false); }

IsolatedCount count_torus_solutions(const Poly& p, const Poly& q) { return count_isolated(p, q, true, true); }

bool fiber_empty(const PolyMap& f, const GaussRat& y1, const GaussRat& y2)
{
    Poly p = f.f1 - Poly(y1), q = f.f2 - Poly(y2);
    if (p.is_zero()) return q.is_constant() && !q.is_zero();
    if (q.is_zero()) return p.is_constant();
    if (p.is_constant() || q.is_constant()) return true;
    auto a = valid_shears({&p, &q}, 1)[0];
    UPoly r = resultant(p.shear(a), q.shear(a), Var::v);
    return !r.is_zero() && r.degree() == 0;
}

SolutionSet solve_system(const Poly& p, const Poly& q, const Tolerances& tol)
{
    SolutionSet out;
    IsolatedCount all = count_all(p, q);
    IsolatedCount torus = count_torus_solutions(p, q);
    out.count_all = all.count;
    out.count_torus = torus.count;
    out.positive_dimensional = all.positive_dimensional;
    if (out.positive_dimensional || p.is_constant() || q.is_constant()) return out;

    auto a = valid_shears({&p, &q}, 1)[0];
    Poly ps = p.shear(a), qs = q.shear(a);
    UPoly r = resultant(ps, qs, Var::v);
    if (r.degree() < 1) return out;
    PrecisionScope scope(tol.precision_bits);
    Complex ca = to_complex(a);
    for (const auto& cl : univariate_roots(r, tol)) {
        auto vs = numeric_roots(numeric_coeffs_in_v(ps, cl.value, Complex()), tol);
        std::vector<Complex> good;
        for (const auto& v : vs)
            if (numeric_relative_residual(qs, Complex(), cl.value, v) < Real(tol.numeric_residual)) good.push_back(v);
        for (const auto& v : good)
            out.solutions.push_back({cl.value + ca * v, v, good.size() == 1 ? cl.multiplicity : 1});
    }
    return out;
}

NumericFiber numeric_fiber(const PolyMap& f, const Complex& y1, const Complex& y2, const Tolerances& tol)
{
    PrecisionScope scope(tol.precision_bits);
    NumericFiber out;
    const Poly& p = f.f1;
    const Poly& q = f.f2;
    auto a = valid_shears({&p, &q}, 1)[0];
    Poly ps = p.shear(a), qs = q.shear(a);
    const int dp = p.total_degree(), dq = q.total_degree();
    const int n_points = dp * dq + 1;
    const Real two_pi = 2 * boost::multiprecision::acos(Real(-1));
    std::vector<Complex> values(n_points), nodes(n_points);
    for (int k = 0; k < n_points; ++k) {
        Real th = two_pi * k / n_points;
        nodes[k] = Complex(boost::multiprecision::cos(th), boost::multiprecision::sin(th));
        auto av = numeric_coeffs_in_v(ps, nodes[k], y1);
        auto bv = numeric_coeffs_in_v(qs, nodes[k], y2);
        values[k] = av.size() < 2 && bv.size() < 2 ? Complex(Real(1)) : numeric_det(sylvester(av, bv));
    }
    std::vector<Complex> coeffs(n_points);
    for (int j = 0; j < n_points; ++j) {
        Complex acc;
        for (int k = 0; k < n_points; ++k) acc += values[k] * conj(powi(nodes[k], j));
        coeffs[j] = acc / Complex(Real(n_points));
    }
    coeffs = trim_numeric(std::move(coeffs), 1e-20);
    Real best(1);
    if (coeffs.size() >= 2) {
        Complex ca = to_complex(a);
        for (const auto& w : numeric_roots(coeffs, tol)) {
            for (const auto& v : numeric_roots(numeric_coeffs_in_v(ps, w, y1), tol)) {
                Complex u = w + ca * v;
                Real r1 = numeric_relative_residual(p, y1, u, v);
                Real r2 = numeric_relative_residual(q, y2, u, v);
                best = std::min(best, std::max(r1, r2));
            }
        }
    }
    out.min_residual = to_double(best);
    if (out.min_residual <= tol.attained_residual) out.verdict = FiberVerdict::attained;
    else if (out.min_residual > tol.numeric_residual) out.verdict = FiberVerdict::empty;
    else out.verdict = FiberVerdict::inconclusive;
    return out;
}

namespace {

// Any chart sending the face normal to (0,1) sees the same roots on C* x {0}; pick the one with
// the narrowest range of first exponents.
IntMatrix2 compact_chart(const SupportPair& a, const FacePair& face)
{
    IntMatrix2 u = build_transform(a, face).u;
    auto spread = [&](long long k) {
        long long total = 0;
        for (const Support* s : {&a.a1, &a.a2}) {
            long long lo = std::numeric_limits<long long>::max(), hi = std::numeric_limits<long long>::min();
            for (const auto& p : s->points()) {
                const long long x = (u.a + k * u.c) * p.x + (u.b + k * u.d) * p.y;
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
            total += hi - lo;
        }
        return total;
    };
    long long best = 0;
    for (long long k = -64; k <= 64; ++k)
        if (spread(k) < spread(best)) best = k;
    return {u.a + best * u.c, u.b + best * u.d, u.c, u.d};
}

}  // namespace

std::vector<FaceDeficiency> bernstein_deficiency(const Poly& p, const Poly& q)
{
    std::vector<FaceDeficiency> out;
    SupportPair a{p.support(), q.support()};
    int torus = -1;
    for (const auto& face : enumerate_face_pairs(a)) {
        if (face.dim != 1 || face.g1.dim() != 1 || face.g2.dim() != 1) continue;
        auto cp = apply_transform(p, q, compact_chart(a, face));
        cp.p1 = cp.p1.strip_monomial();
        cp.p2 = cp.p2.strip_monomial();
        UPoly s1 = cp.p1.substitute(Var::v, GaussRat(0));
        UPoly s2 = cp.p2.substitute(Var::v, GaussRat(0));
        s1 = s1.shift_down(s1.valuation());
        s2 = s2.shift_down(s2.valuation());
        if (gcd(s1, s2).degree() < 1) continue;
        IsolatedCount off_axis = count_isolated(cp.p1, cp.p2, true, false);
        if (torus < 0) torus = count_torus_solutions(p, q).count;
        FaceDeficiency fd{face, off_axis.count - torus, off_axis.positive_dimensional};
        if (fd.m > 0 || fd.degenerate) out.push_back(std::move(fd));
    }
    return out;
}

std::vector<FaceDeficiency> bernstein_deficiency(const PolyMap& f, const GaussRat& y1, const GaussRat& y2)
{
    return bernstein_deficiency(f.f1 - Poly(y1), f.f2 - Poly(y2));
}

std::vector<GaussRat> gauss_rational_roots(const UPoly& p, const Tolerances& tol)
{
    std::vector<GaussRat> out;
    if (p.degree() < 1) return out;
    PrecisionScope scope(tol.precision_bits);
    for (const auto& r : univariate_roots(p, tol)) {
        auto g = snap_gauss(r.value, tol.snap_tolerance);
        if (g && p(*g).is_zero() && std::find(out.begin(), out.end(), *g) == out.end()) out.push_back(*g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nonproper
