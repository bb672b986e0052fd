#include "nonproper/families.hpp"
#include "nonproper/missing.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace nonproper;

namespace {

class Check {
public:
    void expect(bool ok, const std::string& what)
    {
        ++total_;
        if (!ok) failures_.push_back(what);
    }
    void note(const std::string& text) { notes_.push_back(text); }
    bool passed() const { return failures_.empty(); }
    std::string counts() const
    {
        return std::to_string(total_ - failures_.size()) + "/" + std::to_string(total_) + " checks";
    }
    std::string details() const
    {
        std::ostringstream os;
        for (const auto& f : failures_) os << "    failed: " << f << "\n";
        for (const auto& n : notes_) os << "    note: " << n << "\n";
        return os.str();
    }

private:
    int total_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

GaussRat q(long n, long d = 1) { return GaussRat(mpq_class(n) / d); }

Poly mono(const GaussRat& c, long long i, long long j) { return Poly::monomial(c, {i, j}); }

std::set<std::string> point_texts(const MissingReport& m)
{
    std::set<std::string> out;
    for (const auto& p : m.verified) out.insert(p.point.str());
    return out;
}

std::set<std::string> kf_texts(const KfResult& kf)
{
    std::set<std::string> out;
    for (const auto& p : kf.points) out.insert(p.point.str());
    return out;
}

std::string join(const std::set<std::string>& s)
{
    std::string out = "{";
    for (const auto& x : s) out += (out.size() > 1 ? ", " : "") + x;
    return out + "}";
}

bool all_exact(const MissingReport& m)
{
    return std::all_of(m.verified.begin(), m.verified.end(), [](const VerifiedPoint& p) { return p.tier == Tier::exact; });
}

const BoundEntry& bound(const MissingReport& m, const std::string& name)
{
    return *std::find_if(m.bounds.begin(), m.bounds.end(), [&](const BoundEntry& b) { return b.name == name; });
}

bool proportional(const Poly& a, const Poly& b) { return !a.is_zero() && a.normalized() == b.normalized(); }

std::set<std::string> implicit_texts(const std::vector<JelonekComponent>& comps)
{
    std::set<std::string> out;
    for (const auto& c : comps) out.insert(c.implicit.normalized().str('s', 't'));
    return out;
}

Check criterion1()
{
    Check c;
    auto t0 = Clock::now();
    PolyMap f = fixture("1.4");
    AnalysisReport r = analyze_map(f);
    const double dt = seconds_since(t0);
    c.expect(point_texts(r.missing) == std::set<std::string>{"(1, 1)", "(2, 2)"}, "missing = " + join(point_texts(r.missing)));
    c.expect(all_exact(r.missing), "exact tier");
    const Poly s = Poly::u(), t = Poly::v();
    std::set<std::string> want{(s - t).normalized().str('s', 't'), (s - Poly(q(1))).normalized().str('s', 't')};
    c.expect(implicit_texts(r.jelonek) == want, "components = " + join(implicit_texts(r.jelonek)));
    c.expect(kf_texts(r.kf) == std::set<std::string>{"(2, 2)"}, "K_f = " + join(kf_texts(r.kf)));
    c.expect(r.degree.mu == 2, "mu = " + std::to_string(r.degree.mu));
    c.expect(f.degree() == 4, "deg f = " + std::to_string(f.degree()));
    const BoundEntry& six = bound(r.missing, "six_deg");
    const BoundEntry& f11 = bound(r.missing, "formula_11");
    c.expect(six.value && *six.value == 24, "6 deg f = 24");
    const int d1 = f.f1.total_degree(), d2 = f.f2.total_degree();
    const mpq_class expected = mpq_class(d1 * d2) / (r.degree.mu * (r.degree.mu - 1)) + 2 * (d1 + d2);
    c.expect(f11.value && *f11.value == expected, "formula_11 evaluated on deg f1, deg f2");
    c.expect(six.satisfied && f11.satisfied, "both bounds satisfied");
    c.note("formula_11 = " + (f11.value ? rational_str(*f11.value) : std::string("n/a")) + " with deg f1 = " + std::to_string(d1) +
           ", deg f2 = " + std::to_string(d2));
    c.expect(dt < 5, "runtime " + std::to_string(dt) + " s");
    return c;
}

Check criterion2()
{
    Check c;
    for (std::string id : {"1.2", "1.3"}) {
        auto t0 = Clock::now();
        AnalysisReport r = analyze_map(fixture(id));
        const double dt = seconds_since(t0);
        const std::string tag = "map" + id.substr(0, 1) + id.substr(2) + ": ";
        c.expect(point_texts(r.missing) == std::set<std::string>{"(0, 1)"}, tag + "missing = " + join(point_texts(r.missing)));
        c.expect(kf_texts(r.kf) == std::set<std::string>{"(0, 1)"}, tag + "K_f = " + join(kf_texts(r.kf)));
        c.expect(dt < 5, tag + "runtime " + std::to_string(dt) + " s");
        if (id == "1.3") {
            const Poly s = Poly::u(), t = Poly::v(), one(q(1));
            Poly stated = one + q(2) * s - q(2) * t + t.pow(2) - s.pow(2) - q(2) * s * t + s.pow(3);
            bool found = std::any_of(r.jelonek.begin(), r.jelonek.end(),
                                     [&](const JelonekComponent& j) { return proportional(j.implicit, stated); });
            std::string got;
            for (const auto& j : r.jelonek) got += j.implicit.str('s', 't') + " ";
            c.expect(found, tag + "implicit proportional to " + stated.str('s', 't') + "; computed " + got);
        }
    }
    return c;
}

Check criterion3()
{
    Check c;
    for (int n = 1; n <= 3; ++n) {
        auto [p, qq] = random_thm14_roots(n, 2024);
        PolyMap f = make_thm14(n, p, qq);
        auto t0 = Clock::now();
        AnalysisReport r = analyze_map(f);
        const double dt = seconds_since(t0);
        const std::string tag = "n=" + std::to_string(n) + ": ";
        c.expect(r.missing.verified.size() == static_cast<std::size_t>(2 * n), tag + std::to_string(r.missing.verified.size()) + " missing points");
        bool diagonal = std::all_of(r.missing.verified.begin(), r.missing.verified.end(),
                                    [](const VerifiedPoint& v) { return v.point.exact() && *v.point.e1 == *v.point.e2; });
        c.expect(diagonal, tag + "points of the form (a,a): " + join(point_texts(r.missing)));
        c.expect(f.degree() == 2 * n + 2, tag + "deg f = " + std::to_string(f.degree()));
        c.expect(r.degree.mu == 2, tag + "mu = " + std::to_string(r.degree.mu));
        c.expect(r.genericity.verdict == VerdictKind::generically_nonproper,
                 tag + "genericity verdict " + to_string(r.genericity.verdict) + " (" + r.genericity.reason + ")");
        if (n == 3) c.expect(dt < 30, tag + "runtime " + std::to_string(dt) + " s");
    }
    return c;
}

Check criterion4()
{
    Check c;
    for (int k = 1; k <= 3; ++k) {
        PolyMap f = make_lemma23(k, std::vector<GaussRat>(k + 1, q(1)));
        auto t0 = Clock::now();
        AnalysisReport r = analyze_map(f);
        const double dt = seconds_since(t0);
        const std::string tag = "k=" + std::to_string(k) + ": ";
        c.expect(r.degree.mu == k + 1, tag + "mu = " + std::to_string(r.degree.mu));
        c.expect(point_texts(r.missing) == std::set<std::string>{"(0, 1)"}, tag + "missing = " + join(point_texts(r.missing)));
        if (k == 3) c.expect(dt < 30, tag + "runtime " + std::to_string(dt) + " s");
    }
    return c;
}

struct RandomPolys {
    std::mt19937_64 rng;
    explicit RandomPolys(std::uint64_t seed) : rng(seed) {}

    long coeff()
    {
        long c = 0;
        while (c == 0) c = std::uniform_int_distribution<long>(-9, 9)(rng);
        return c;
    }

    // Up to six points with exponents at most 5; a forced pair gets two points on v = 0 whose
    // slice vanishes at u = 1, so the (0,1) face system has a common root.
    Poly sparse(bool forced)
    {
        std::uniform_int_distribution<int> e(0, 5), count(3, 6);
        PointSet pts;
        if (forced) {
            while (pts.size() < 2) pts.insert({e(rng), 0});
        }
        const std::size_t want = static_cast<std::size_t>(count(rng));
        while (pts.size() < want) pts.insert({e(rng), e(rng)});
        Poly p;
        GaussRat slice_sum;
        LatticePoint last_slice{-1, -1};
        for (const auto& pt : pts) {
            if (forced && pt.y == 0) last_slice = pt;
        }
        for (const auto& pt : pts) {
            if (pt == last_slice) continue;
            GaussRat c(coeff());
            if (pt.y == 0) slice_sum += c;
            p = p + Poly::monomial(c, pt);
        }
        if (forced) p = p + Poly::monomial(slice_sum.is_zero() ? GaussRat(0) : -slice_sum, last_slice);
        return p;
    }
};

Check criterion5()
{
    Check c;
    RandomPolys gen(55);
    int done = 0, forced_with_deficiency = 0, attempts = 0;
    while (done < 50 && attempts < 500) {
        ++attempts;
        const bool forced = std::uniform_int_distribution<int>(0, 1)(gen.rng) == 1;
        Poly p = gen.sparse(forced), qq = gen.sparse(forced);
        if (p.terms().size() < 2 || qq.terms().size() < 2) continue;
        IsolatedCount torus = count_torus_solutions(p, qq);
        if (torus.positive_dimensional) continue;
        auto def = bernstein_deficiency(p, qq);
        if (std::any_of(def.begin(), def.end(), [](const FaceDeficiency& d) { return d.degenerate; })) continue;
        int sum = 0;
        for (const auto& d : def) sum += d.m;
        if (sum > 0) ++forced_with_deficiency;
        const mpq_class v = mixed_volume(p.support(), qq.support());
        c.expect(mpq_class(torus.count + sum) == v, "sample " + std::to_string(done) + ": " + std::to_string(torus.count) + " + " +
                                                       std::to_string(sum) + " != " + rational_str(v) + " for (" + p.str() + ", " + qq.str() + ")");
        ++done;
    }
    c.expect(done == 50, "drew " + std::to_string(done) + " usable samples");
    c.note(std::to_string(forced_with_deficiency) + " samples with positive deficiency");
    return c;
}

LatticePoint random_point(std::mt19937_64& rng, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    return {d(rng), d(rng)};
}

Support segment(const LatticePoint& a, const LatticePoint& b)
{
    return Support(PointSet{a, b});
}

IntMatrix2 random_unimodular(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> k(1, 2), sign(0, 1), kind(0, 3);
    const long long x = sign(rng) ? k(rng) : -k(rng);
    switch (kind(rng)) {
    case 0: return {1, x, 0, 1};
    case 1: return {1, 0, x, 1};
    case 2: return {0, 1, 1, 0};
    default: return {-1, 0, 0, 1};
    }
}

Poly cleared(const Poly& p)
{
    LatticePoint lo = p.min_exponents();
    Poly::Terms t;
    for (const auto& [e, c] : p.terms()) t[{e.x - lo.x, e.y - lo.y}] = c;
    return Poly(std::move(t));
}

Check criterion6()
{
    Check c;
    std::mt19937_64 rng(66);

    int segs = 0;
    while (segs < 200) {
        LatticePoint a = random_point(rng, -6, 6), b = random_point(rng, -6, 6);
        LatticePoint x = random_point(rng, -6, 6), y = random_point(rng, -6, 6);
        if (a == b || x == y || cross(b - a, y - x) == 0) continue;
        Support s1 = segment(a, b), s2 = segment(x, y);
        const mpq_class v = mixed_volume(s1, s2);
        const long ll = static_cast<long>(integer_length(s1) * integer_length(s2));
        const bool unimodular = std::abs(cross(primitive(b - a), primitive(y - x))) == 1;
        c.expect(mpq_class(ll) <= v, "segment product " + std::to_string(ll) + " > " + rational_str(v));
        c.expect((mpq_class(ll) == v) == unimodular, "equality iff unimodular directions");
        ++segs;
    }

    auto random_set = [&](int n, int lo, int hi) {
        PointSet s;
        while (static_cast<int>(s.size()) < n) s.insert(random_point(rng, lo, hi));
        return s;
    };
    for (int i = 0; i < 100; ++i) {
        PointSet l1 = random_set(3, 0, 4), l2 = random_set(3, 0, 4);
        PointSet d1 = l1, d2 = l2;
        for (const auto& p : random_set(3, -2, 6)) d1.insert(p);
        for (const auto& p : random_set(3, -2, 6)) d2.insert(p);
        const mpq_class small = mixed_volume(Support(l1), Support(l2)), big = mixed_volume(Support(d1), Support(d2));
        c.expect(small <= big, "monotonicity " + rational_str(small) + " > " + rational_str(big));
    }

    for (int i = 0; i < 100; ++i) {
        Support d(random_set(std::uniform_int_distribution<int>(1, 7)(rng), -5, 5));
        c.expect(mixed_volume(d, d) == 2 * d.area(), "V(D,D) = 2 Area");
    }

    RandomPolys gen(67);
    int inv = 0;
    while (inv < 50) {
        Poly p = gen.sparse(false), qq = gen.sparse(false);
        IsolatedCount before = count_torus_solutions(p, qq);
        if (before.positive_dimensional) continue;
        IntMatrix2 u = random_unimodular(rng);
        IsolatedCount after = count_torus_solutions(cleared(transform_poly(p, u)), cleared(transform_poly(qq, u)));
        c.expect(!after.positive_dimensional && after.count == before.count,
                 "torus count " + std::to_string(before.count) + " -> " + std::to_string(after.count));
        ++inv;
    }

    std::vector<SupportPair> pairs;
    pairs.push_back({Support{{0, 0}, {1, 2}, {2, 4}, {2, 5}, {1, 3}}, Support{{0, 0}, {1, 0}, {1, 1}, {2, 2}}});
    pairs.push_back({Support{{0, 0}, {1, 1}, {1, 2}}, Support{{0, 0}, {1, 0}, {1, 1}}});
    for (std::string id : {"1.2", "1.3", "1.4"}) pairs.push_back(support_pair(fixture(id), true));
    for (int i = 0; i < 30; ++i) pairs.push_back({Support(random_set(4, 0, 5)), Support(random_set(4, 0, 5))});
    int transforms = 0;
    for (const auto& a : pairs) {
        if (!is_independent(a)) continue;
        for (const auto& face : enumerate_face_pairs(a)) {
            if (face.dim != 1) continue;
            for (long long shift = 0; shift <= 1; ++shift) {
                UnimodularTransform t = build_transform(a, face, shift);
                c.expect(normal_image_check(t, face.normal) == LatticePoint{0, 1}, "normal image of " + face.normal.str());
                ++transforms;
            }
        }
    }
    c.note(std::to_string(transforms) + " transforms checked for the normal image");

    std::vector<std::pair<std::string, PolyMap>> maps;
    for (std::string id : {"1.2", "1.3", "1.4"}) maps.push_back({"(" + id + ")", fixture(id)});
    for (int n = 1; n <= 3; ++n) {
        auto [p, qq] = random_thm14_roots(n, 2024);
        maps.push_back({"thm14 n=" + std::to_string(n), make_thm14(n, p, qq)});
    }
    for (int k = 1; k <= 3; ++k) maps.push_back({"lemma23 k=" + std::to_string(k), make_lemma23(k, std::vector<GaussRat>(k + 1, q(1)))});
    for (const auto& [name, f] : maps) {
        auto base = implicit_texts(jelonek_set(f));
        for (long long shift = 1; shift <= 2; ++shift)
            c.expect(implicit_texts(jelonek_set(f, {}, shift)) == base, name + " implicit polynomials under shift " + std::to_string(shift));
    }
    return c;
}

Check criterion8()
{
    Check c;
    PolyMap generic{Poly(q(1)) + Poly::u() * Poly::v() + Poly::u() * Poly::v().pow(2), Poly(q(1)) + Poly::u() + Poly::u() * Poly::v()};
    SupportPair a = support_pair(generic, true);
    c.expect(mixed_volume(a.a1, a.a2) == 2, "V(A) = 2");
    std::mt19937_64 rng(88);
    std::uniform_int_distribution<long> d(-9, 9);
    auto nz = [&] {
        long x = 0;
        while (x == 0) x = d(rng);
        return x;
    };
    auto build = [](long a0, long a1, long a2, long b0, long b1, long b2) {
        return PolyMap{mono(q(a0), 0, 0) + mono(q(a1), 1, 1) + mono(q(a2), 1, 2), mono(q(b0), 0, 0) + mono(q(b1), 1, 0) + mono(q(b2), 1, 1)};
    };
    for (int i = 0; i < 10; ++i) {
        long a0 = nz(), a1 = nz(), a2 = nz(), b0 = nz(), b1 = nz(), b2 = nz();
        if (a1 * b2 - b1 * a2 == 0) {
            --i;
            continue;
        }
        GenericityVerdict g = genericity_check(build(a0, a1, a2, b0, b1, b2), 8);
        c.expect(g.verdict == VerdictKind::generically_nonproper, "draw " + std::to_string(i) + ": " + to_string(g.verdict) + " " + g.reason);
    }
    for (int i = 0; i < 10; ++i) {
        long a0 = nz(), a1 = nz(), a2 = nz(), b0 = nz(), m = nz();
        // b1 : b2 = a1 : a2
        GenericityVerdict g = genericity_check(build(a0, a1, a2, b0, m * a1, m * a2), 8);
        c.expect(g.verdict == VerdictKind::degenerate, "degenerate draw " + std::to_string(i) + ": " + to_string(g.verdict));
    }
    return c;
}

Check criterion9()
{
    Check c;
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4), deg(1, 4);
    for (int i = 0; i < 20; ++i) {
        Poly p;
        const int n = static_cast<int>(deg(rng));
        for (int j = 0; j <= n; ++j) {
            long x = num(rng);
            if (j == n && x == 0) x = 1;
            p = p + mono(q(x, den(rng)), 0, j);
        }
        PolyMap f{Poly::u() + p, Poly::v() + Poly(q(num(rng), den(rng)))};
        AnalysisReport r = analyze_map(f);
        c.expect(r.degree.mu == 1, "map " + std::to_string(i) + " mu = " + std::to_string(r.degree.mu));
        c.expect(r.missing.verified.empty(), "map " + std::to_string(i) + " has " + std::to_string(r.missing.verified.size()) + " missing points");
    }
    return c;
}

Check criterion7()
{
    Check c;
    SupportPair a{Support{{0, 0}, {1, 2}, {2, 4}, {2, 5}, {1, 3}}, Support{{0, 0}, {1, 0}, {1, 1}, {2, 2}}};
    const auto faces = enumerate_face_pairs(a);
    auto it = std::find_if(faces.begin(), faces.end(), [](const FacePair& f) { return f.dim == 1 && f.normal == LatticePoint{-2, 1}; });
    c.expect(it != faces.end(), "face supported by (-2,1)");
    if (it == faces.end()) return c;
    UnimodularTransform t = build_transform(a, *it);
    Poly phi1 = mono(q(1), 0, 0) + mono(q(2), 1, 2) + mono(q(3), 2, 4) + mono(q(4), 1, 3) + mono(q(5), 2, 5);
    Poly phi2 = mono(q(-1), 0, 0) + mono(q(-2), 1, 0) + mono(q(-3), 2, 2);
    ClearedPair cp = apply_transform(phi1, phi2, t.u);
    c.expect(cp.p1.str('s', 't') == "1 + 2*s + 3*s^2 + 4*s^2*t + 5*s^3*t", "first component " + cp.p1.str('s', 't'));
    c.expect(cp.r1 == LatticePoint{0, 0}, "r1 = " + cp.r1.str());
    c.expect(cp.r2 == LatticePoint{1, 2}, "r2 = " + cp.r2.str());
    return c;
}

}  // namespace

int main(int argc, char** argv)
{
    // optional criterion numbers restrict the run
    std::set<std::size_t> only;
    for (int i = 1; i < argc; ++i) only.insert(static_cast<std::size_t>(std::stoul(argv[i])));
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"fixture map14 report", criterion1},
        {"fixtures map12 and map13", criterion2},
        {"diagonal family n=1..3", criterion3},
        {"cross-line family k=1..3", criterion4},
        {"Bernstein deficiency identity on 50 sparse pairs", criterion5},
        {"property suite", criterion6},
        {"transform of the two-polygon face", criterion7},
        {"triangle pair genericity dichotomy", criterion8},
        {"mu = 1 vacuity on 20 triangular maps", criterion9},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (!only.empty() && !only.count(i + 1)) continue;
        auto t0 = Clock::now();
        Check c = criteria[i].second();
        const double dt = seconds_since(t0);
        if (!c.passed()) ++failed;
        std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " [" << c.counts()
                  << "] (" << dt << " s)\n"
                  << c.details() << std::flush;
    }
    const std::size_t ran = only.empty() ? criteria.size() : only.size();
    std::cout << (ran - failed) << "/" << ran << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
