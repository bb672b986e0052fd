#include "nonproper/report.hpp"

#include "nonproper/mapio.hpp"

namespace nonproper {

using nlohmann::json;

namespace {

json point(const LatticePoint& p) { return json::array({p.x, p.y}); }

json decimal_json(const Complex& z) { return {{"re", decimal(z.re, 20)}, {"im", decimal(z.im, 20)}}; }

}  // namespace

json to_json(const mpq_class& q) { return rational_str(q); }

json to_json(const GaussRat& g) { return {{"re", rational_str(g.re())}, {"im", rational_str(g.im())}}; }

json to_json(const Complex& z) { return decimal_json(z); }

json to_json(const TargetPoint& p)
{
    json j;
    j["exact"] = p.exact();
    j["y1"] = p.e1 ? to_json(*p.e1) : decimal_json(p.y1);
    j["y2"] = p.e2 ? to_json(*p.e2) : decimal_json(p.y2);
    j["text"] = p.str();
    return j;
}

json to_json(const Poly& p)
{
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", point(e)}, {"coefficient", to_json(c)}});
    return terms;
}

json to_json(const Support& s)
{
    json pts = json::array();
    for (const auto& p : s.points()) pts.push_back(point(p));
    return pts;
}

json to_json(const ClassifiedFace& f)
{
    const FacePair& g = f.face;
    return {{"normal", point(g.normal)},
            {"dim", g.dim},
            {"cone", json::array({point(g.cone_lo), point(g.cone_hi)})},
            {"gamma1", to_json(g.g1)},
            {"gamma2", to_json(g.g2)},
            {"semi_origin", f.cls.semi_origin},
            {"origin", f.cls.origin},
            {"half_origin", f.cls.half_origin},
            {"coordinate", f.cls.coordinate},
            {"relevant", f.cls.relevant},
            {"long", f.cls.long_face},
            {"side", to_string(f.cls.side)}};
}

namespace {

json clause(const ClauseCount& c)
{
    return {{"count", c.count}, {"target", to_json(c.target)}, {"positive_dimensional", c.positive_dimensional}, {"pass", c.pass()}};
}

json upoly_json(const UPoly& p)
{
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

}  // namespace

json to_json(const GenericityVerdict& g)
{
    return {{"dominant", g.dominant},
            {"independent", g.independent},
            {"origin_in_torus", g.origin_in_torus},
            {"nonproper", g.nonproper},
            {"f1_f2", clause(g.sys_f1f2)},
            {"f1_jacobian", clause(g.sys_f1J)},
            {"f2_jacobian", clause(g.sys_f2J)},
            {"verdict", to_string(g.verdict)},
            {"reason", g.reason},
            {"translation", json::array({to_json(g.translation[0]), to_json(g.translation[1])})},
            {"attempts", g.attempts}};
}

json to_json(const JelonekComponent& c)
{
    json j{{"kind", to_string(c.kind)},
           {"face_normal", point(c.face.normal)},
           {"implicit", to_json(c.implicit)},
           {"implicit_text", c.implicit.str('s', 't')}};
    if (c.kind == ComponentKind::rational_curve) {
        j["parametrization"] = {{"numerators", json::array({upoly_json(c.numerator[0]), upoly_json(c.numerator[1])})},
                                {"denominator_powers", json::array({c.den_power[0], c.den_power[1]})}};
    }
    j["position"] = c.position ? to_json(*c.position) : json(nullptr);
    return j;
}

json to_json(const KfResult& kf)
{
    json pts = json::array();
    for (const auto& p : kf.points) pts.push_back({{"point", to_json(p.point)}, {"face_normal", point(p.face.normal)}});
    json degenerate = json::array();
    for (const auto& f : kf.degenerate_faces) degenerate.push_back(point(f.normal));
    return {{"points", pts}, {"degenerate_faces", degenerate}};
}

json to_json(const MissingReport& m)
{
    json verified = json::array();
    for (const auto& p : m.verified)
        verified.push_back({{"point", to_json(p.point)},
                            {"tier", to_string(p.tier)},
                            {"region", to_string(p.region)},
                            {"source", to_string(p.source)}});
    json rejected = json::array();
    for (const auto& r : m.rejected)
        rejected.push_back({{"point", to_json(r.candidate.point)}, {"reason", r.reason}, {"source", to_string(r.candidate.source)}});
    return {{"verified", verified},
            {"rejected", rejected},
            {"inconclusive", m.inconclusive},
            {"counts", {{"K_f", m.in_kf}, {"cross", m.in_cross}, {"torus", m.in_torus}}}};
}

namespace {

json bounds_json(const MissingReport& m)
{
    json out = json::array();
    for (const auto& b : m.bounds)
        out.push_back({{"name", b.name},
                       {"value", b.value ? to_json(*b.value) : json(nullptr)},
                       {"measured", b.measured},
                       {"satisfied", b.satisfied}});
    return out;
}

}  // namespace

json to_json(const AnalysisReport& r, const PolyMap& f)
{
    json faces = json::array();
    for (const auto& c : r.faces) faces.push_back(to_json(c));
    json jel = json::array();
    for (const auto& c : r.jelonek) jel.push_back(to_json(c));
    return {{"schema_version", schema_version},
            {"map", {{"f1", format_poly(f.f1)}, {"f2", format_poly(f.f2)}}},
            {"degree", {{"f1", f.f1.total_degree()}, {"f2", f.f2.total_degree()}, {"f", f.degree()}}},
            {"supports", {{"A1", to_json(r.supports.a1)}, {"A2", to_json(r.supports.a2)}}},
            {"faces", faces},
            {"mixed_volume", to_json(r.mixed_volume)},
            {"dominant", r.dominant},
            {"independent", r.independent},
            {"mu", r.degree.mu},
            {"mu_agreed", r.degree.agreed},
            {"genericity", to_json(r.genericity)},
            {"jelonek", jel},
            {"kf_points", to_json(r.kf)},
            {"missing", to_json(r.missing)},
            {"bounds", bounds_json(r.missing)},
            {"seed", r.options.seed},
            {"precision_bits", r.options.tol.precision_bits}};
}

GaussRat gauss_from_json(const json& j)
{
    return GaussRat(parse_rational(j.at("re").get<std::string>()), parse_rational(j.at("im").get<std::string>()));
}

Poly poly_from_json(const json& j)
{
    Poly::Terms t;
    for (const auto& term : j) {
        const auto& e = term.at("exponent");
        GaussRat c = gauss_from_json(term.at("coefficient"));
        if (!c.is_zero()) t[{e.at(0).get<long long>(), e.at(1).get<long long>()}] = c;
    }
    return Poly(std::move(t));
}

}  // namespace nonproper
