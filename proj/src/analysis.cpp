#include "nonproper/analysis.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace nonproper {

namespace {

GaussRat random_rational(std::mt19937_64& rng, long span, long max_den)
{
    std::uniform_int_distribution<long> num(-span, span), den(1, max_den);
    long p = 0;
    while (p == 0) p = num(rng);
    return GaussRat(mpq_class(p) / mpq_class(den(rng)));
}

GaussRat power(const GaussRat& x, int e) { return e >= 0 ? x.pow(e) : x.inverse().pow(-e); }
Complex power(const Complex& x, int e) { return powi(x, e); }

template <class T>
T lift(const GaussRat& g)
{
    if constexpr (std::is_same_v<T, GaussRat>) return g;
    else return to_complex(g);
}

bool negligible(const GaussRat& x, const Real&) { return x.is_zero(); }
bool negligible(const Complex& x, const Real& scale) { return abs(x) <= Real(1e-25) * (1 + scale); }
Real magnitude(const GaussRat& x) { return abs(to_complex(x)); }
Real magnitude(const Complex& x) { return abs(x); }

UPoly strip_s(const UPoly& p) { return p.shift_down(p.valuation()); }

Poly squarefree_bivariate(const Poly& p)
{
    Poly d = p.derivative(Var::u);
    if (d.is_zero()) d = p.derivative(Var::v);
    if (d.is_zero()) return p.normalized();
    Poly g = gcd(p, d);
    return exact_div(p, g).normalized();
}

Poly lift_constant(const GaussRat& c) { return Poly(c); }

// coefficients in s of y * s^rho - num(s), y placed on the given variable
std::vector<Poly> y_minus_num(const UPoly& num, int rho, Var y)
{
    std::size_t len = std::max<std::size_t>(num.coeffs().size(), static_cast<std::size_t>(rho) + 1);
    std::vector<Poly> out(len);
    for (int j = 0; j <= num.degree(); ++j) out[j] = lift_constant(-num.coeffs()[j]);
    out[rho] += y == Var::u ? Poly::u() : Poly::v();
    return out;
}

UPoly to_upoly(const Poly& p, Var var)
{
    auto cs = p.coefficients_in(var == Var::u ? Var::v : Var::u);
    return cs.empty() ? UPoly() : cs[0];
}

void add_component(std::vector<JelonekComponent>& out, JelonekComponent c)
{
    c.implicit = c.implicit.normalized();
    for (const auto& o : out)
        if (o.implicit == c.implicit) return;
    out.push_back(std::move(c));
}

bool is_constant_param(const UPoly& num, int den, GaussRat& value)
{
    if (num.is_zero()) {
        value = GaussRat();
        return true;
    }
    if (num.valuation() == den && num.degree() == den) {
        value = num.coeffs()[den];
        return true;
    }
    return false;
}

template <class T>
struct SliceValues {
    T ds;  // d/ds of P_i(s,0) with the active y substituted
    T dt;  // d/dt of P_i(s,0) without the y contribution
};

template <class T>
SliceValues<T> slice_values(const FaceData& fd, int i, const T& s, const std::optional<T>& y)
{
    LatticePoint pos = fd.y_position(i);
    int rho = static_cast<int>(pos.x);
    SliceValues<T> v{fd.coeff(i, 0).derivative()(s), fd.coeff(i, 1)(s)};
    if (fd.active[i] && y && rho > 0) v.ds -= *y * lift<T>(GaussRat(rho)) * power(s, rho - 1);
    return v;
}

}  // namespace

std::string to_string(VerdictKind v)
{
    switch (v) {
    case VerdictKind::generically_nonproper: return "generically_nonproper";
    case VerdictKind::proper_candidate: return "proper_candidate";
    default: return "degenerate";
    }
}

std::string to_string(ComponentKind k)
{
    switch (k) {
    case ComponentKind::vertical_line: return "vertical_line";
    case ComponentKind::horizontal_line: return "horizontal_line";
    default: return "rational_curve";
    }
}

bool is_dominant(const PolyMap& f) { return !jacobian(f).det.is_zero(); }

DegreeInfo topological_degree(const PolyMap& f, std::uint64_t seed)
{
    if (!is_dominant(f)) throw std::invalid_argument("map is not dominant");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    DegreeInfo info;
    std::vector<int> counts;
    for (int k = 0; k < 13; ++k) {
        GaussRat y1 = random_rational(rng, 50, 11), y2 = random_rational(rng, 50, 11);
        info.targets.push_back({y1, y2});
        counts.push_back(count_all(f.f1 - Poly(y1), f.f2 - Poly(y2)).count);
        if (k == 2 && counts[0] == counts[1] && counts[1] == counts[2]) break;
    }
    info.mu = *std::max_element(counts.begin(), counts.end());
    info.agreed = counts.size() == 3;
    return info;
}

GenericityVerdict genericity_check(const PolyMap& f, std::uint64_t seed)
{
    GenericityVerdict v;
    v.dominant = is_dominant(f);
    if (!v.dominant) {
        v.reason = "map is not dominant";
        return v;
    }
    SupportPair a = support_pair(f, true);
    v.independent = is_independent(a);
    if (!v.independent) {
        v.reason = "dependent support pair";
        return v;
    }
    v.nonproper = !relevant_faces(a).faces.empty();
    Poly jac = jacobian(f).det;
    std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
    for (int attempt = 1; attempt <= 5; ++attempt) {
        v.attempts = attempt;
        GaussRat c1 = random_rational(rng, 20, 9), c2 = random_rational(rng, 20, 9);
        PolyMap g = f.translated(c1, c2);
        v.translation = {c1, c2};
        v.origin_in_torus = !g.f1.constant_term().is_zero() && !g.f2.constant_term().is_zero();
        if (!v.origin_in_torus) continue;
        Support s1 = g.f1.support(), s2 = g.f2.support(), sigma = jac.support();
        auto clause = [](const Poly& p, const Poly& q, const Support& sp, const Support& sq) {
            ClauseCount c;
            IsolatedCount ic = count_torus_solutions(p, q);
            c.count = ic.count;
            c.positive_dimensional = ic.positive_dimensional;
            c.target = mixed_volume(sp, sq);
            return c;
        };
        v.sys_f1f2 = clause(g.f1, g.f2, s1, s2);
        v.sys_f1J = clause(g.f1, jac, s1, sigma);
        v.sys_f2J = clause(g.f2, jac, s2, sigma);
        if (v.sys_f1f2.pass() && v.sys_f1J.pass() && v.sys_f2J.pass()) break;
    }
    bool clauses = v.origin_in_torus && v.sys_f1f2.pass() && v.sys_f1J.pass() && v.sys_f2J.pass();
    if (!v.nonproper) {
        v.verdict = VerdictKind::proper_candidate;
        v.reason = "no relevant face";
    } else if (clauses) {
        v.verdict = VerdictKind::generically_nonproper;
    } else {
        std::ostringstream why;
        auto note = [&why](const char* name, const ClauseCount& c) {
            if (c.pass()) return;
            if (!why.str().empty()) why << "; ";
            why << name << " has " << c.count << " torus solutions";
            if (c.positive_dimensional) why << " and a common curve";
            why << ", expected " << rational_str(c.target);
        };
        if (!v.origin_in_torus) why << "no admissible translation";
        note("f1=f2=0", v.sys_f1f2);
        note("f1=J=0", v.sys_f1J);
        note("f2=J=0", v.sys_f2J);
        v.verdict = VerdictKind::degenerate;
        v.reason = why.str();
    }
    return v;
}

std::vector<FaceData> face_data(const PolyMap& f, long long extra_shift)
{
    std::vector<FaceData> out;
    SupportPair a = support_pair(f, true);
    if (!is_independent(a)) return out;
    for (auto& cf : relevant_faces(a).faces) {
        if (cf.face.dim != 1) continue;
        FaceData fd;
        fd.transform = build_transform(a, cf.face, extra_shift);
        fd.cleared = apply_transform(f, fd.transform, a);
        fd.c[0] = fd.cleared.p1.coefficients_in(Var::v);
        fd.c[1] = fd.cleared.p2.coefficients_in(Var::v);
        fd.active = {fd.cleared.r1.y == 0, fd.cleared.r2.y == 0};
        fd.face = std::move(cf);
        out.push_back(std::move(fd));
    }
    return out;
}

Complex JelonekComponent::eval(int i, const Complex& s) const
{
    return numerator[i](s) / powi(s, den_power[i]);
}

GaussRat JelonekComponent::eval(int i, const GaussRat& s) const
{
    return numerator[i](s) / s.pow(static_cast<unsigned>(den_power[i]));
}

std::vector<JelonekComponent> jelonek_set(const PolyMap& f, const Tolerances& tol, long long extra_shift)
{
    PrecisionScope scope(tol.precision_bits);
    std::vector<JelonekComponent> out;
    for (const auto& fd : face_data(f, extra_shift)) {
        const FacePair& face = fd.face.face;
        if (fd.active[0] && fd.active[1]) {
            std::array<UPoly, 2> num{fd.coeff(0, 0), fd.coeff(1, 0)};
            std::array<int, 2> den{static_cast<int>(fd.cleared.r1.x), static_cast<int>(fd.cleared.r2.x)};
            GaussRat k0, k1;
            bool c0 = is_constant_param(num[0], den[0], k0), c1 = is_constant_param(num[1], den[1], k1);
            if (c0 && c1) continue;
            JelonekComponent comp;
            comp.face = face;
            if (c0 || c1) {
                comp.kind = c0 ? ComponentKind::vertical_line : ComponentKind::horizontal_line;
                comp.position = c0 ? k0 : k1;
                comp.implicit = (c0 ? Poly::u() : Poly::v()) - Poly(*comp.position);
            } else {
                comp.kind = ComponentKind::rational_curve;
                comp.numerator = num;
                comp.den_power = den;
                comp.implicit = squarefree_bivariate(resultant(y_minus_num(num[0], den[0], Var::u), y_minus_num(num[1], den[1], Var::v)));
            }
            add_component(out, std::move(comp));
            continue;
        }
        for (int i = 0; i < 2; ++i) {
            if (!fd.active[i]) continue;
            const int k = 1 - i;
            UPoly roots_of = strip_s(fd.coeff(k, 0));
            if (roots_of.degree() < 1) continue;
            int rho = static_cast<int>(fd.y_position(i).x);
            std::vector<Poly> a;
            for (const auto& c : roots_of.coeffs()) a.push_back(Poly(c));
            UPoly line = to_upoly(resultant(a, y_minus_num(fd.coeff(i, 0), rho, Var::u)), Var::u);
            line = squarefree_part(line);
            const ComponentKind kind = i == 0 ? ComponentKind::vertical_line : ComponentKind::horizontal_line;
            const Var var = i == 0 ? Var::u : Var::v;
            for (const auto& r : gauss_rational_roots(line, tol)) {
                JelonekComponent comp;
                comp.kind = kind;
                comp.face = face;
                comp.position = r;
                comp.implicit = Poly::from_upoly(UPoly({-r, GaussRat(1)}), var);
                line = exact_div(line, UPoly({-r, GaussRat(1)}));
                add_component(out, std::move(comp));
            }
            if (line.degree() >= 1) {
                JelonekComponent comp;
                comp.kind = kind;
                comp.face = face;
                comp.implicit = Poly::from_upoly(line, var);
                add_component(out, std::move(comp));
            }
        }
    }
    return out;
}

TargetPoint TargetPoint::from_exact(const GaussRat& a, const GaussRat& b)
{
    return {to_complex(a), to_complex(b), a, b};
}

TargetPoint TargetPoint::from_numeric(const Complex& a, const Complex& b, double snap_tol)
{
    TargetPoint p{a, b, std::nullopt, std::nullopt};
    auto sa = snap_gauss(a, snap_tol), sb = snap_gauss(b, snap_tol);
    if (sa && sb) return from_exact(*sa, *sb);
    return p;
}

bool TargetPoint::same_as(const TargetPoint& o, double radius) const
{
    if (exact() && o.exact()) return *e1 == *o.e1 && *e2 == *o.e2;
    Real scale = 1 + abs(y1) + abs(y2);
    return abs(y1 - o.y1) + abs(y2 - o.y2) < Real(radius) * scale;
}

std::string TargetPoint::str() const
{
    if (exact()) return "(" + e1->str() + ", " + e2->str() + ")";
    auto c = [](const Complex& z) {
        std::string s = decimal(z.re, 12);
        if (z.im != 0) s += (z.im < 0 ? "-" : "+") + decimal(abs(Complex(z.im)), 12) + "i";
        return s;
    };
    return "(" + c(y1) + ", " + c(y2) + ")";
}

bool lex_less(const TargetPoint& a, const TargetPoint& b)
{
    if (a.exact() && b.exact()) {
        if (*a.e1 != *b.e1) return *a.e1 < *b.e1;
        return *a.e2 < *b.e2;
    }
    if (a.y1.re != b.y1.re) return a.y1.re < b.y1.re;
    if (a.y1.im != b.y1.im) return a.y1.im < b.y1.im;
    if (a.y2.re != b.y2.re) return a.y2.re < b.y2.re;
    return a.y2.im < b.y2.im;
}

namespace {

template <class T>
void push_kf(KfResult& out, const FaceData& fd, const T& y1, const T& y2, const Tolerances& tol)
{
    TargetPoint p;
    if constexpr (std::is_same_v<T, GaussRat>) p = TargetPoint::from_exact(y1, y2);
    else p = TargetPoint::from_numeric(y1, y2, tol.snap_tolerance);
    for (const auto& q : out.points)
        if (q.point.same_as(p, tol.dedup_radius)) return;
    out.points.push_back({p, fd.face.face});
}

// One active coordinate i, s a C* root of the inactive slice.
template <class T>
void line_kf(KfResult& out, const FaceData& fd, int i, const T& s, const Tolerances& tol)
{
    const int k = 1 - i;
    int rho_i = static_cast<int>(fd.y_position(i).x);
    T yi = fd.coeff(i, 0)(s) / power(s, rho_i);
    SliceValues<T> vi = slice_values<T>(fd, i, s, yi);
    SliceValues<T> vk = slice_values<T>(fd, k, s, std::nullopt);
    LatticePoint pk = fd.y_position(k);
    // d/dt P_k = vk.dt - [tau_k == 1] y_k s^rho_k, so J = alpha + beta y_k.
    T sk = pk.y == 1 ? power(s, static_cast<int>(pk.x)) : lift<T>(GaussRat(0));
    T alpha, beta;
    if (i == 0) {
        alpha = vi.ds * vk.dt - vi.dt * vk.ds;
        beta = -(vi.ds * sk);
    } else {
        alpha = vk.ds * vi.dt - vk.dt * vi.ds;
        beta = sk * vi.ds;
    }
    Real scale = magnitude(alpha) + magnitude(vi.ds) + magnitude(vk.dt) + magnitude(vi.dt) + magnitude(vk.ds);
    if (negligible(beta, scale)) {
        if (negligible(alpha, scale)) out.degenerate_faces.push_back(fd.face.face);
        return;
    }
    T yk = -alpha / beta;
    if (i == 0) push_kf(out, fd, yi, yk, tol);
    else push_kf(out, fd, yk, yi, tol);
}

}  // namespace

KfResult kf_points(const PolyMap& f, const Tolerances& tol)
{
    PrecisionScope scope(tol.precision_bits);
    KfResult out;
    for (const auto& fd : face_data(f)) {
        if (fd.active[0] && fd.active[1]) {
            // s * J(s, 0) with y = g(s)
            std::array<UPoly, 2> sds;
            for (int i = 0; i < 2; ++i) {
                int rho = static_cast<int>(fd.y_position(i).x);
                sds[i] = fd.coeff(i, 0).derivative().shift_up(1) - fd.coeff(i, 0) * GaussRat(rho);
            }
            UPoly d = sds[0] * fd.coeff(1, 1) - fd.coeff(0, 1) * sds[1];
            if (d.is_zero()) {
                out.degenerate_faces.push_back(fd.face.face);
                continue;
            }
            d = strip_s(d);
            if (d.degree() < 1) continue;
            std::array<int, 2> rho{static_cast<int>(fd.cleared.r1.x), static_cast<int>(fd.cleared.r2.x)};
            for (const auto& r : univariate_roots(d, tol)) {
                auto exact = snap_gauss(r.value, tol.snap_tolerance);
                if (exact && d(*exact).is_zero()) {
                    push_kf(out, fd, fd.coeff(0, 0)(*exact) / power(*exact, rho[0]), fd.coeff(1, 0)(*exact) / power(*exact, rho[1]), tol);
                } else {
                    push_kf(out, fd, fd.coeff(0, 0)(r.value) / power(r.value, rho[0]), fd.coeff(1, 0)(r.value) / power(r.value, rho[1]), tol);
                }
            }
            continue;
        }
        for (int i = 0; i < 2; ++i) {
            if (!fd.active[i]) continue;
            UPoly roots_of = strip_s(fd.coeff(1 - i, 0));
            if (roots_of.degree() < 1) continue;
            for (const auto& r : univariate_roots(roots_of, tol)) {
                auto exact = snap_gauss(r.value, tol.snap_tolerance);
                if (exact && roots_of(*exact).is_zero()) line_kf(out, fd, i, *exact, tol);
                else line_kf(out, fd, i, r.value, tol);
            }
        }
    }
    std::sort(out.points.begin(), out.points.end(), [](const KfPoint& a, const KfPoint& b) { return lex_less(a.point, b.point); });
    return out;
}

}  // namespace nonproper
