#include "nonproper/missing.hpp"

#include <algorithm>

namespace nonproper {

namespace {

bool is_curve(const JelonekComponent& c) { return c.kind == ComponentKind::rational_curve; }

int line_coordinate(const JelonekComponent& c) { return c.kind == ComponentKind::vertical_line ? 0 : 1; }

UPoly line_poly(const JelonekComponent& c)
{
    return line_coordinate(c) == 0 ? c.implicit.substitute(Var::v, GaussRat(0)) : c.implicit.substitute(Var::u, GaussRat(0));
}

std::vector<Complex> line_positions(const JelonekComponent& c, const Tolerances& tol)
{
    if (c.position) return {to_complex(*c.position)};
    std::vector<Complex> out;
    for (const auto& r : univariate_roots(line_poly(c), tol)) out.push_back(r.value);
    return out;
}

bool near_zero(const Complex& z, double eps) { return abs(z) < Real(eps); }

// num(x) * y^d as a bivariate polynomial, x and y the chosen slots.
Poly scaled_numerator(const UPoly& num, Var x, int d)
{
    Poly p = Poly::from_upoly(num, x);
    const LatticePoint e = x == Var::u ? LatticePoint{0, d} : LatticePoint{d, 0};
    return p * Poly::monomial(GaussRat(1), e);
}

// n_g(r) s^{d_h} - n_h(s) r^{d_g}, the cleared form of g(r) - h(s).
Poly cleared_difference(const UPoly& ng, int dg, const UPoly& nh, int dh)
{
    return scaled_numerator(ng, Var::u, dh) - scaled_numerator(nh, Var::v, dg);
}

// p(n(s)/s^d) * s^{d deg p}
UPoly compose_laurent(const UPoly& p, const UPoly& n, int d)
{
    const int D = p.degree();
    UPoly out;
    UPoly npow(GaussRat(1));
    for (int k = 0; k <= D; ++k) {
        if (!p.coeff(k).is_zero()) out = out + (p.coeff(k) * npow).shift_up(d * (D - k));
        npow = npow * n;
    }
    return out;
}

Candidate make_candidate(const TargetPoint& p, CandidateSource src, std::vector<FacePair> faces)
{
    return {p, src, std::move(faces)};
}

TargetPoint point_on_curve(const JelonekComponent& c, const Complex& s, const Tolerances& tol)
{
    return TargetPoint::from_numeric(c.eval(0, s), c.eval(1, s), tol.snap_tolerance);
}

void push_unique(std::vector<Candidate>& out, Candidate c, const Tolerances& tol)
{
    for (auto& o : out) {
        if (o.point.same_as(c.point, tol.dedup_radius)) {
            for (const auto& f : c.faces)
                if (std::find(o.faces.begin(), o.faces.end(), f) == o.faces.end()) o.faces.push_back(f);
            return;
        }
    }
    out.push_back(std::move(c));
}

std::vector<Complex> torus_roots(const UPoly& p, const Tolerances& tol)
{
    std::vector<Complex> out;
    if (p.is_zero()) return out;
    for (const auto& r : univariate_roots(p.shift_down(p.valuation()), tol))
        if (!near_zero(r.value, tol.zero_threshold)) out.push_back(r.value);
    return out;
}

}  // namespace

std::string to_string(CandidateSource s)
{
    switch (s) {
    case CandidateSource::node: return "node";
    case CandidateSource::cross: return "cross";
    case CandidateSource::cusp: return "cusp";
    case CandidateSource::component_intersection: return "component_intersection";
    }
    return "";
}

std::string to_string(CandidateVerdict v)
{
    switch (v) {
    case CandidateVerdict::missing_isolated: return "missing_isolated";
    case CandidateVerdict::attained: return "attained";
    case CandidateVerdict::missing_nonisolated: return "missing_nonisolated";
    case CandidateVerdict::inconclusive: return "inconclusive";
    }
    return "";
}

std::string to_string(Tier t) { return t == Tier::exact ? "exact" : "numeric"; }

std::string to_string(Region r)
{
    switch (r) {
    case Region::kf: return "K_f";
    case Region::cross: return "cross";
    case Region::torus: return "torus";
    }
    return "";
}

std::vector<Candidate> node_candidates(const std::vector<JelonekComponent>& comps, const Tolerances& tol)
{
    PrecisionScope scope(tol.precision_bits);
    std::vector<Candidate> out;
    const Poly diag = Poly::u() - Poly::v();
    for (const auto& c : comps) {
        if (!is_curve(c)) continue;
        Poly g1 = exact_div(cleared_difference(c.numerator[0], c.den_power[0], c.numerator[0], c.den_power[0]), diag);
        Poly g2 = exact_div(cleared_difference(c.numerator[1], c.den_power[1], c.numerator[1], c.den_power[1]), diag);
        SolutionSet sols = solve_system(g1, g2, tol);
        for (const auto& s : sols.solutions) {
            if (near_zero(s.u, tol.zero_threshold) || near_zero(s.v, tol.zero_threshold)) continue;
            if (abs(s.u - s.v) < Real(tol.zero_threshold) * (1 + abs(s.u))) continue;
            push_unique(out, make_candidate(point_on_curve(c, s.u, tol), CandidateSource::node, {c.face}), tol);
        }
    }
    return out;
}

std::vector<Candidate> cross_candidates(const PolyMap& f, const std::vector<JelonekComponent>& comps, const Tolerances& tol)
{
    PrecisionScope scope(tol.precision_bits);
    std::vector<Candidate> out;
    const std::array<GaussRat, 2> c0{f.f1.constant_term(), f.f2.constant_term()};
    for (const auto& c : comps) {
        if (is_curve(c)) {
            for (int i = 0; i < 2; ++i) {
                UPoly eq = c.numerator[i] - UPoly::monomial(c0[i], c.den_power[i]);
                for (const auto& s : torus_roots(eq, tol)) {
                    TargetPoint p = point_on_curve(c, s, tol);
                    // the fixed coordinate is known exactly
                    if (!p.exact()) {
                        if (i == 0) {
                            p.y1 = to_complex(c0[0]);
                            if (auto b = snap_gauss(p.y2, tol.snap_tolerance)) p = TargetPoint::from_exact(c0[0], *b);
                        } else {
                            p.y2 = to_complex(c0[1]);
                            if (auto a = snap_gauss(p.y1, tol.snap_tolerance)) p = TargetPoint::from_exact(*a, c0[1]);
                        }
                    }
                    push_unique(out, make_candidate(p, CandidateSource::cross, {c.face}), tol);
                }
            }
            continue;
        }
        const int i = line_coordinate(c);
        const int k = 1 - i;
        if (c.position) {
            if (*c.position == c0[i]) continue;
            TargetPoint p = i == 0 ? TargetPoint::from_exact(*c.position, c0[1]) : TargetPoint::from_exact(c0[0], *c.position);
            push_unique(out, make_candidate(p, CandidateSource::cross, {c.face}), tol);
            continue;
        }
        for (const auto& a : line_positions(c, tol)) {
            TargetPoint p = i == 0 ? TargetPoint{a, to_complex(c0[k]), std::nullopt, std::nullopt}
                                   : TargetPoint{to_complex(c0[k]), a, std::nullopt, std::nullopt};
            push_unique(out, make_candidate(p, CandidateSource::cross, {c.face}), tol);
        }
    }
    return out;
}

std::vector<Candidate> cusp_candidates(const KfResult& kf)
{
    std::vector<Candidate> out;
    Tolerances tol;
    for (const auto& p : kf.points) push_unique(out, make_candidate(p.point, CandidateSource::cusp, {p.face}), tol);
    return out;
}

std::vector<Candidate> intersection_candidates(const std::vector<JelonekComponent>& comps, const Tolerances& tol)
{
    PrecisionScope scope(tol.precision_bits);
    std::vector<Candidate> out;
    for (std::size_t a = 0; a < comps.size(); ++a) {
        for (std::size_t b = a + 1; b < comps.size(); ++b) {
            const auto& g = comps[a];
            const auto& h = comps[b];
            std::vector<FacePair> faces{g.face, h.face};
            if (is_curve(g) && is_curve(h)) {
                Poly p = cleared_difference(g.numerator[0], g.den_power[0], h.numerator[0], h.den_power[0]);
                Poly q = cleared_difference(g.numerator[1], g.den_power[1], h.numerator[1], h.den_power[1]);
                SolutionSet sols = solve_system(p, q, tol);
                for (const auto& s : sols.solutions) {
                    if (near_zero(s.u, tol.zero_threshold) || near_zero(s.v, tol.zero_threshold)) continue;
                    push_unique(out, make_candidate(point_on_curve(g, s.u, tol), CandidateSource::component_intersection, faces), tol);
                }
                continue;
            }
            if (is_curve(g) || is_curve(h)) {
                const auto& curve = is_curve(g) ? g : h;
                const auto& line = is_curve(g) ? h : g;
                const int i = line_coordinate(line);
                UPoly eq = compose_laurent(line_poly(line), curve.numerator[i], curve.den_power[i]);
                for (const auto& s : torus_roots(eq, tol))
                    push_unique(out, make_candidate(point_on_curve(curve, s, tol), CandidateSource::component_intersection, faces), tol);
                continue;
            }
            if (line_coordinate(g) == line_coordinate(h)) continue;
            const auto& vert = line_coordinate(g) == 0 ? g : h;
            const auto& horiz = line_coordinate(g) == 0 ? h : g;
            if (vert.position && horiz.position) {
                push_unique(out, make_candidate(TargetPoint::from_exact(*vert.position, *horiz.position),
                                                CandidateSource::component_intersection, faces), tol);
                continue;
            }
            for (const auto& x : line_positions(vert, tol))
                for (const auto& y : line_positions(horiz, tol))
                    push_unique(out, make_candidate(TargetPoint::from_numeric(x, y, tol.snap_tolerance),
                                                    CandidateSource::component_intersection, faces), tol);
        }
    }
    return out;
}

std::vector<Candidate> node_candidates(const PolyMap& f, const Tolerances& tol)
{
    return node_candidates(jelonek_set(f, tol), tol);
}

std::vector<Candidate> cross_candidates(const PolyMap& f, const Tolerances& tol)
{
    return cross_candidates(f, jelonek_set(f, tol), tol);
}

std::vector<Candidate> cusp_candidates(const PolyMap& f, const Tolerances& tol) { return cusp_candidates(kf_points(f, tol)); }

namespace {

constexpr int sample_count = 5;

bool incident(const JelonekComponent& c, const TargetPoint& y, const Tolerances& tol)
{
    if (y.exact()) return c.implicit(*y.e1, *y.e2).is_zero();
    Real scale = 1;
    for (const auto& [e, coef] : c.implicit.terms())
        scale += abs(to_complex(coef)) * powi(Complex(1 + abs(y.y1)), static_cast<int>(e.x)).re *
                 powi(Complex(1 + abs(y.y2)), static_cast<int>(e.y)).re;
    return abs(c.implicit(y.y1, y.y2)) < Real(tol.implicit_residual) * scale;
}

// Parameter value s with g(s) closest to y.
std::optional<Complex> curve_parameter(const JelonekComponent& c, const TargetPoint& y, const Tolerances& tol)
{
    std::optional<Complex> best;
    Real best_err = 0;
    for (int i = 0; i < 2 && !best; ++i) {
        UPoly eq = y.exact() ? c.numerator[i] - UPoly::monomial(i == 0 ? *y.e1 : *y.e2, c.den_power[i]) : UPoly();
        std::vector<Complex> roots;
        if (y.exact()) {
            roots = torus_roots(eq, tol);
        } else {
            std::vector<Complex> coeffs;
            for (int j = 0; j <= std::max(c.numerator[i].degree(), c.den_power[i]); ++j) {
                Complex v = to_complex(c.numerator[i].coeff(j));
                if (j == c.den_power[i]) v -= i == 0 ? y.y1 : y.y2;
                coeffs.push_back(v);
            }
            for (const auto& r : numeric_roots(coeffs, tol))
                if (!near_zero(r, tol.zero_threshold)) roots.push_back(r);
        }
        for (const auto& s : roots) {
            Real err = abs(c.eval(0, s) - y.y1) + abs(c.eval(1, s) - y.y2);
            if (!best || err < best_err) {
                best = s;
                best_err = err;
            }
        }
    }
    return best;
}

bool samples_all_empty(const PolyMap& f, const JelonekComponent& c, const TargetPoint& y, const Tolerances& tol)
{
    std::optional<Complex> s0;
    if (is_curve(c)) {
        s0 = curve_parameter(c, y, tol);
        if (!s0) return false;
    }
    for (int k = 1; k <= sample_count; ++k) {
        const GaussRat delta(mpq_class(k) / 1000, mpq_class(k) / 3000);
        if (y.exact()) {
            GaussRat a = *y.e1, b = *y.e2;
            if (is_curve(c)) {
                GaussRat s = approximate_gauss(*s0, 1000000) + delta;
                if (s.is_zero()) s += delta;
                a = c.eval(0, s);
                b = c.eval(1, s);
            } else if (line_coordinate(c) == 0) {
                b += delta;
            } else {
                a += delta;
            }
            if (!fiber_empty(f, a, b)) return false;
        } else {
            Complex a = y.y1, b = y.y2;
            const Complex d = to_complex(delta);
            if (is_curve(c)) {
                a = c.eval(0, *s0 + d);
                b = c.eval(1, *s0 + d);
            } else if (line_coordinate(c) == 0) {
                b += d;
            } else {
                a += d;
            }
            if (numeric_fiber(f, a, b, tol).verdict != FiberVerdict::empty) return false;
        }
    }
    return true;
}

}  // namespace

Verification verify_candidate(const PolyMap& f, const TargetPoint& y, const std::vector<JelonekComponent>& comps,
                              const Tolerances& tol)
{
    PrecisionScope scope(tol.precision_bits);
    Verification out;
    if (y.exact()) {
        out.tier = Tier::exact;
        if (!fiber_empty(f, *y.e1, *y.e2)) {
            out.verdict = CandidateVerdict::attained;
            return out;
        }
    } else {
        out.tier = Tier::numeric;
        NumericFiber nf = numeric_fiber(f, y.y1, y.y2, tol);
        out.residual = nf.min_residual;
        if (nf.verdict == FiberVerdict::attained) {
            out.verdict = CandidateVerdict::attained;
            return out;
        }
        if (nf.verdict == FiberVerdict::inconclusive) {
            out.verdict = CandidateVerdict::inconclusive;
            return out;
        }
    }
    out.verdict = CandidateVerdict::missing_isolated;
    for (const auto& c : comps) {
        if (!incident(c, y, tol)) continue;
        ++out.incident_components;
        if (samples_all_empty(f, c, y, tol)) out.verdict = CandidateVerdict::missing_nonisolated;
    }
    return out;
}

Verification verify_candidate(const PolyMap& f, const Candidate& c, const Tolerances& tol)
{
    return verify_candidate(f, c.point, jelonek_set(f, tol), tol);
}

bool MissingReport::all_bounds_satisfied() const
{
    return std::all_of(bounds.begin(), bounds.end(), [](const BoundEntry& b) { return b.satisfied; });
}

namespace {

BoundEntry bound(std::string name, std::optional<mpq_class> value, int measured)
{
    BoundEntry b{std::move(name), std::move(value), measured, true};
    if (b.value) b.satisfied = mpq_class(measured) <= *b.value;
    return b;
}

bool on_cross(const TargetPoint& y, const std::array<GaussRat, 2>& c0, double radius)
{
    if (y.exact()) return *y.e1 == c0[0] || *y.e2 == c0[1];
    if (y.e1 && *y.e1 == c0[0]) return true;
    if (y.e2 && *y.e2 == c0[1]) return true;
    return abs(y.y1 - to_complex(c0[0])) < Real(radius) || abs(y.y2 - to_complex(c0[1])) < Real(radius);
}

}  // namespace

MissingReport missing_points(const PolyMap& f, const std::vector<JelonekComponent>& comps, const KfResult& kf, int mu,
                             const Tolerances& tol)
{
    PrecisionScope scope(tol.precision_bits);
    MissingReport rep;
    rep.deg_f1 = f.f1.total_degree();
    rep.deg_f2 = f.f2.total_degree();
    rep.mu = mu;

    std::vector<Candidate> all;
    for (auto&& list : {cusp_candidates(kf), cross_candidates(f, comps, tol), node_candidates(comps, tol),
                        intersection_candidates(comps, tol)})
        for (const auto& c : list) push_unique(all, c, tol);

    const std::array<GaussRat, 2> c0{f.f1.constant_term(), f.f2.constant_term()};
    for (const auto& cand : all) {
        Verification v = verify_candidate(f, cand.point, comps, tol);
        if (v.verdict != CandidateVerdict::missing_isolated) {
            if (v.verdict == CandidateVerdict::inconclusive) rep.inconclusive = true;
            rep.rejected.push_back({cand, to_string(v.verdict)});
            continue;
        }
        VerifiedPoint p{cand.point, v.tier, Region::torus, cand.source};
        const bool in_kf = std::any_of(kf.points.begin(), kf.points.end(),
                                       [&](const KfPoint& k) { return k.point.same_as(cand.point, tol.dedup_radius); });
        if (in_kf)
            p.region = Region::kf;
        else if (on_cross(cand.point, c0, tol.dedup_radius))
            p.region = Region::cross;
        rep.verified.push_back(std::move(p));
    }
    auto by_point = [](const auto& a, const auto& b) { return lex_less(a.point, b.point); };
    std::sort(rep.verified.begin(), rep.verified.end(), by_point);
    std::sort(rep.rejected.begin(), rep.rejected.end(),
              [](const RejectedCandidate& a, const RejectedCandidate& b) { return lex_less(a.candidate.point, b.candidate.point); });

    for (const auto& p : rep.verified) {
        if (p.region == Region::kf) ++rep.in_kf;
        if (p.region == Region::cross) ++rep.in_cross;
        if (p.region == Region::torus) ++rep.in_torus;
    }
    const int total = static_cast<int>(rep.verified.size());
    const int d1 = rep.deg_f1, d2 = rep.deg_f2;
    std::optional<mpq_class> f11, p25a;
    if (mu >= 2) {
        const mpq_class m(mu * (mu - 1));
        f11 = mpq_class(d1 * d2) / m + 2 * (d1 + d2);
        p25a = mpq_class(3 * d1 * d2) / (4 * m);
    }
    rep.bounds.push_back(bound("six_deg", mpq_class(6 * std::max(d1, d2)), total));
    rep.bounds.push_back(bound("formula_11", f11, total));
    rep.bounds.push_back(bound("prop22", mpq_class(d1 + d2), rep.in_kf));
    rep.bounds.push_back(bound("prop24", mpq_class(d1 + d2), rep.in_cross));
    rep.bounds.push_back(bound("prop25a", p25a, rep.in_torus));
    rep.bounds.push_back(bound("prop25b", mpq_class(2 * std::max(d1, d2)), rep.in_torus));
    return rep;
}

MissingReport missing_points(const PolyMap& f, const RunOptions& opt)
{
    PrecisionScope scope(opt.tol.precision_bits);
    return missing_points(f, jelonek_set(f, opt.tol), kf_points(f, opt.tol), topological_degree(f, opt.seed).mu, opt.tol);
}

AnalysisReport analyze_map(const PolyMap& f, const RunOptions& opt)
{
    PrecisionScope scope(opt.tol.precision_bits);
    AnalysisReport r;
    r.options = opt;
    r.supports = support_pair(f, true);
    r.faces = classify_all(r.supports);
    r.mixed_volume = mixed_volume(r.supports.a1, r.supports.a2);
    r.dominant = is_dominant(f);
    r.independent = is_independent(r.supports);
    r.genericity = genericity_check(f, opt.seed);
    if (!r.dominant) return r;
    r.degree = topological_degree(f, opt.seed);
    if (!r.independent) return r;
    r.jelonek = jelonek_set(f, opt.tol);
    r.kf = kf_points(f, opt.tol);
    r.missing = missing_points(f, r.jelonek, r.kf, r.degree.mu, opt.tol);
    return r;
}

}  // namespace nonproper
