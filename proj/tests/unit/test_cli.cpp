#include "doctest.h"

#include "nonproper/cli.hpp"
#include "nonproper/mapio.hpp"
#include "nonproper/report.hpp"

#include <random>
#include <sstream>

using namespace nonproper;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = "")
{
    args.insert(args.begin(), "nonproper");
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string map14 = "f1 = u*v\nf2 = 2*v + v^2 + u*v - u*v^2 - u*v^3\n";

}  // namespace

TEST_CASE("parse polynomials")
{
    Poly p = parse_poly("1 - u^2*v^2 + u^2*v^3");
    CHECK(p.terms().size() == 3);
    CHECK(p.coeff({0, 0}) == GaussRat(1));
    CHECK(p.coeff({2, 2}) == GaussRat(-1));
    CHECK(p.coeff({2, 3}) == GaussRat(1));
    CHECK(parse_poly("3/2*u*v").coeff({1, 1}) == GaussRat(mpq_class(3) / 2));
    CHECK(parse_poly("(1/2-3i)u v^2").coeff({1, 2}) == GaussRat(mpq_class(1) / 2, -3));
    CHECK(parse_poly("-i*u + 2i").coeff({0, 0}) == GaussRat(0, 2));
    CHECK(parse_poly(" u v + u*v ").coeff({1, 1}) == GaussRat(2));
    CHECK(parse_poly("2 u^3").coeff({3, 0}) == GaussRat(2));
}

TEST_CASE("parse errors carry columns")
{
    try {
        parse_map("f1 = u +\nf2 = v\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 8);
    }
    CHECK_THROWS_AS(parse_map("f1 = u - u\nf2 = v\n"), ParseError);
    CHECK_THROWS_AS(parse_map("f1 = u\n"), ParseError);
    CHECK_THROWS_AS(parse_map("f1 = 2/0\nf2 = v\n"), ParseError);
    CHECK_THROWS_AS(parse_map("f1 = u ^ \nf2 = v\n"), ParseError);
    CHECK_THROWS_AS(parse_map("g = u\nf2 = v\n"), ParseError);
}

TEST_CASE("print then parse is the identity")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> exp(0, 4), num(-9, 9), den(1, 5), nterms(1, 6), coin(0, 3);
    auto random_poly = [&] {
        Poly p;
        while (p.is_zero()) {
            for (int k = nterms(rng); k > 0; --k) {
                GaussRat c(mpq_class(num(rng)) / den(rng), coin(rng) == 0 ? mpq_class(num(rng)) / den(rng) : mpq_class(0));
                p = p + Poly::monomial(c, {exp(rng), exp(rng)});
            }
        }
        return p;
    };
    for (int i = 0; i < 200; ++i) {
        PolyMap f{random_poly(), random_poly()};
        PolyMap g = parse_map(format_map(f));
        CHECK(g.f1 == f.f1);
        CHECK(g.f2 == f.f2);
    }
}

TEST_CASE("analyze emits the missing points")
{
    Result r = call({"analyze", "-", "--json"}, map14);
    REQUIRE(r.code == exit_ok);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema_version"] == schema_version);
    CHECK(j["mu"] == 2);
    REQUIRE(j["missing"]["verified"].size() == 2);
    CHECK(j["missing"]["verified"][0]["point"]["text"] == "(1, 1)");
    CHECK(j["missing"]["verified"][1]["point"]["text"] == "(2, 2)");
    CHECK(j["mixed_volume"] == "2");
    CHECK(j.dump() == nlohmann::json::parse(j.dump()).dump());
    for (const auto& c : j["jelonek"]) CHECK(poly_from_json(c["implicit"]).str('s', 't') == c["implicit_text"]);
}

TEST_CASE("same seed gives identical reports")
{
    Result a = call({"analyze", "-", "--seed", "9"}, map14);
    Result b = call({"analyze", "-", "--seed", "9"}, map14);
    CHECK(a.out == b.out);
}

TEST_CASE("generate piped into missing")
{
    Result g = call({"generate", "thm14", "--n", "2", "--p-roots", "1,3", "--q-roots", "2,5"});
    REQUIRE(g.code == exit_ok);
    Result m = call({"missing", "-", "--json"}, g.out);
    REQUIRE(m.code == exit_ok);
    CHECK(nlohmann::json::parse(m.out)["missing"]["verified"].size() == 4);
}

TEST_CASE("verify and exit codes")
{
    Result v = call({"verify", "-", "--point", "3,3"}, map14);
    CHECK(v.code == exit_ok);
    CHECK(v.out == "attained\n");
    CHECK(call({"verify", "-", "--point", "1,1"}, map14).out == "missing_isolated\n");
    CHECK(call({"faces", "-"}, "f1 = u +\nf2 = v\n").code == exit_usage);
    CHECK(call({"bogus"}).code == exit_usage);
    CHECK(call({"analyze", "-"}, "f1 = u*v\nf2 = u^2*v^2\n").code == exit_degenerate);
    CHECK(call({"analyze", "-", "--require-generic"}, map14).code == exit_not_generic);
    CHECK(call({"analyze", "-", "--require-generic"}, "f1 = 1 - 2*u*v + u^2*v^2\nf2 = 1 + v + u*v - 2*u^2*v^2 + u^3*v^3\n").code == exit_ok);
    CHECK(call({"generate", "thm14", "--n", "1", "--p-roots", "2", "--q-roots", "2"}).code == exit_usage);
}

TEST_CASE("mixed-volume and faces subcommands")
{
    Result r = call({"mixed-volume", "-"}, map14);
    CHECK(r.out == "mixed volume 2\n");
    Result f = call({"faces", "-", "--json"}, map14);
    auto j = nlohmann::json::parse(f.out);
    CHECK(j.size() > 0);
}
