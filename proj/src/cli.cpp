#include "nonproper/cli.hpp"

#include "nonproper/families.hpp"
#include "nonproper/mapio.hpp"
#include "nonproper/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace nonproper {

namespace {

struct Settings {
    std::uint64_t seed = 0;
    unsigned precision = 128;
    std::optional<double> tolerance;
    bool json = false;
    bool require_generic = false;
    std::string out_path;
    std::string file;
    std::string point;
    std::string family;
    int n = 1;
    int k = 1;
    std::string id = "1.4";
    std::string p_roots, q_roots, p_coeffs;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

RunOptions options(const Settings& s)
{
    RunOptions o;
    o.seed = s.seed;
    o.tol.precision_bits = s.precision;
    o.tol.max_precision_bits = std::max(o.tol.max_precision_bits, s.precision);
    if (s.tolerance) o.tol.numeric_residual = *s.tolerance;
    return o;
}

std::string read_source(const std::string& file, std::istream& in)
{
    std::ostringstream buf;
    if (file == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream f(file);
    if (!f) throw UsageError("cannot open " + file);
    buf << f.rdbuf();
    return buf.str();
}

GaussRat parse_constant(const std::string& text)
{
    Poly p = parse_poly(text);
    if (!p.is_constant()) throw UsageError("expected a constant, got '" + text + "'");
    return p.constant_term();
}

std::vector<GaussRat> parse_list(const std::string& text)
{
    std::vector<GaussRat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_constant(item));
    return out;
}

std::string face_line(const ClassifiedFace& f)
{
    std::ostringstream os;
    os << "normal " << f.face.normal.str() << " dim " << f.face.dim << " gamma1 {";
    const char* sep = "";
    for (const auto& p : f.face.g1.points()) os << std::exchange(sep, ", ") << p.str();
    os << "} gamma2 {";
    sep = "";
    for (const auto& p : f.face.g2.points()) os << std::exchange(sep, ", ") << p.str();
    os << "}";
    const FaceClass& c = f.cls;
    for (auto [on, name] : {std::pair{c.semi_origin, "semi-origin"}, {c.origin, "origin"}, {c.half_origin, "half-origin"},
                            {c.coordinate, "coordinate"}, {c.relevant, "relevant"}, {c.long_face, "long"}})
        if (on) os << " " << name;
    if (c.side != Side::none) os << " " << to_string(c.side);
    return os.str();
}

int degeneracy_code(bool dominant, bool independent) { return dominant && independent ? exit_ok : exit_degenerate; }

class Command {
public:
    Command(const Settings& s, std::istream& in, std::ostream& out) : s_(s), in_(in), out_(out), opt_(options(s)) {}

    int analyze()
    {
        PolyMap f = load();
        AnalysisReport r = analyze_map(f, opt_);
        emit(to_json(r, f).dump(2) + "\n");
        return finish(r.dominant, r.independent, r.genericity, r.missing.inconclusive);
    }

    int faces()
    {
        PolyMap f = load();
        SupportPair a = support_pair(f, true);
        auto all = classify_all(a);
        if (s_.json) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& c : all) j.push_back(to_json(c));
            emit(j.dump(2) + "\n");
        } else {
            std::string text;
            for (const auto& c : all) text += face_line(c) + "\n";
            emit(text);
        }
        return exit_ok;
    }

    int mixed_volume_cmd()
    {
        PolyMap f = load();
        SupportPair a = support_pair(f, true);
        mpq_class v = mixed_volume(a.a1, a.a2);
        if (s_.json) {
            nlohmann::json j{{"mixed_volume", to_json(v)}, {"area_A1", to_json(a.a1.area())}, {"area_A2", to_json(a.a2.area())}};
            emit(j.dump(2) + "\n");
        } else {
            emit("mixed volume " + rational_str(v) + "\n");
        }
        return exit_ok;
    }

    int jelonek()
    {
        PolyMap f = load();
        PrecisionScope scope(opt_.tol.precision_bits);
        const bool dominant = is_dominant(f), independent = is_independent(support_pair(f, true));
        if (!dominant || !independent) return degenerate(dominant);
        GenericityVerdict g = genericity_check(f, opt_.seed);
        auto comps = jelonek_set(f, opt_.tol);
        KfResult kf = kf_points(f, opt_.tol);
        if (s_.json) {
            nlohmann::json list = nlohmann::json::array();
            for (const auto& c : comps) list.push_back(to_json(c));
            emit(nlohmann::json{{"jelonek", list}, {"kf_points", to_json(kf)}, {"genericity", to_json(g)}}.dump(2) + "\n");
        } else {
            std::string text;
            for (const auto& c : comps) text += to_string(c.kind) + " " + c.implicit.str('s', 't') + " = 0\n";
            for (const auto& p : kf.points) text += "K_f " + p.point.str() + "\n";
            emit(text);
        }
        return finish(dominant, independent, g, false);
    }

    int missing()
    {
        PolyMap f = load();
        AnalysisReport r = analyze_map(f, opt_);
        if (!r.dominant || !r.independent) return degenerate(r.dominant);
        if (s_.json) {
            emit(nlohmann::json{{"missing", to_json(r.missing)}, {"mu", r.degree.mu}}.dump(2) + "\n");
        } else {
            std::string text;
            for (const auto& p : r.missing.verified)
                text += p.point.str() + " " + to_string(p.tier) + " " + to_string(p.region) + "\n";
            for (const auto& b : r.missing.bounds)
                text += "bound " + b.name + " " + (b.value ? rational_str(*b.value) : "n/a") + " measured " +
                        std::to_string(b.measured) + (b.satisfied ? " ok" : " violated") + "\n";
            emit(text);
        }
        return finish(r.dominant, r.independent, r.genericity, r.missing.inconclusive);
    }

    int verify()
    {
        PolyMap f = load();
        auto pos = s_.point.find(',');
        if (pos == std::string::npos) throw UsageError("--point expects \"a,b\"");
        TargetPoint y = TargetPoint::from_exact(parse_constant(s_.point.substr(0, pos)), parse_constant(s_.point.substr(pos + 1)));
        PrecisionScope scope(opt_.tol.precision_bits);
        std::vector<JelonekComponent> comps;
        if (is_dominant(f) && is_independent(support_pair(f, true))) comps = jelonek_set(f, opt_.tol);
        Verification v = verify_candidate(f, y, comps, opt_.tol);
        if (s_.json)
            emit(nlohmann::json{{"point", to_json(y)}, {"verdict", to_string(v.verdict)}, {"tier", to_string(v.tier)}}.dump(2) + "\n");
        else
            emit(to_string(v.verdict) + "\n");
        return v.verdict == CandidateVerdict::inconclusive ? exit_inconclusive : exit_ok;
    }

    int generate()
    {
        FamilySpec spec;
        if (s_.family == "thm14") {
            spec.kind = FamilyKind::thm14;
            spec.n_or_k = s_.n;
            auto [p, q] = random_thm14_roots(s_.n, s_.seed);
            spec.p_roots = s_.p_roots.empty() ? p : parse_list(s_.p_roots);
            spec.q_roots = s_.q_roots.empty() ? q : parse_list(s_.q_roots);
        } else if (s_.family == "lemma23") {
            spec.kind = FamilyKind::lemma23;
            spec.n_or_k = s_.k;
            spec.p_coeffs = s_.p_coeffs.empty() ? std::vector<GaussRat>(s_.k + 1, GaussRat(1)) : parse_list(s_.p_coeffs);
        } else if (s_.family == "fixture") {
            spec.kind = FamilyKind::fixture;
            spec.fixture_id = s_.id;
        } else {
            throw UsageError("unknown family '" + s_.family + "'");
        }
        PolyMap f;
        try {
            f = make_family(spec);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        emit(format_map(f));
        return exit_ok;
    }

private:
    PolyMap load() { return parse_map(read_source(s_.file, in_)); }

    void emit(const std::string& text)
    {
        if (s_.out_path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(s_.out_path);
        if (!f) throw UsageError("cannot write " + s_.out_path);
        f << text;
    }

    int degenerate(bool dominant)
    {
        emit(std::string(dominant ? "degenerate: dependent support pair" : "degenerate: map is not dominant") + "\n");
        return exit_degenerate;
    }

    int finish(bool dominant, bool independent, const GenericityVerdict& g, bool inconclusive) const
    {
        if (int c = degeneracy_code(dominant, independent)) return c;
        if (s_.require_generic && g.verdict != VerdictKind::generically_nonproper) return exit_not_generic;
        return inconclusive ? exit_inconclusive : exit_ok;
    }

    const Settings& s_;
    std::istream& in_;
    std::ostream& out_;
    RunOptions opt_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Settings s;
    CLI::App app{"Missing points and Jelonek sets of planar polynomial maps", "nonproper"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--json", s.json, "Emit JSON");
    app.add_option("--seed", s.seed, "Seed for all randomized choices");
    app.add_option("--precision", s.precision, "Working precision in bits")->check(CLI::Range(64u, 8192u));
    app.add_option("--tolerance", s.tolerance, "Residual above which a numeric fiber counts as empty");
    app.add_option("--out", s.out_path, "Write output to a file");
    app.add_flag("--require-generic", s.require_generic, "Exit 3 unless the map is generically non-proper");

    auto with_file = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", s.file, "Map file, '-' for stdin")->required();
        return sub;
    };
    CLI::App* analyze = with_file("analyze", "Full report");
    CLI::App* faces = with_file("faces", "Face pairs and their classification");
    CLI::App* mv = with_file("mixed-volume", "Mixed volume of the support pair");
    CLI::App* jel = with_file("jelonek", "Jelonek components and K_f");
    CLI::App* missing = with_file("missing", "Verified missing points");
    CLI::App* verify = with_file("verify", "Decide whether a target point is attained");
    verify->add_option("--point", s.point, "Target \"a,b\"")->required();
    CLI::App* gen = app.add_subcommand("generate", "Emit a map file for a family");
    gen->add_option("family", s.family, "thm14, lemma23 or fixture")->required()->check(CLI::IsMember({"thm14", "lemma23", "fixture"}));
    gen->add_option("--n", s.n, "Degree parameter for thm14")->check(CLI::Range(1, 50));
    gen->add_option("--k", s.k, "Parameter for lemma23")->check(CLI::Range(1, 50));
    gen->add_option("--id", s.id, "Fixture id: 1.2, 1.3 or 1.4");
    gen->add_option("--p-roots", s.p_roots, "Comma separated roots of P");
    gen->add_option("--q-roots", s.q_roots, "Comma separated roots of Q");
    gen->add_option("--p-coeffs", s.p_coeffs, "Comma separated ascending coefficients of P");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        Command cmd(s, in, out);
        if (analyze->parsed()) return cmd.analyze();
        if (faces->parsed()) return cmd.faces();
        if (mv->parsed()) return cmd.mixed_volume_cmd();
        if (jel->parsed()) return cmd.jelonek();
        if (missing->parsed()) return cmd.missing();
        if (verify->parsed()) return cmd.verify();
        if (gen->parsed()) return cmd.generate();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace nonproper
