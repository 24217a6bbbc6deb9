#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <frontal/cli/commands.hpp>
#include <frontal/cli/input.hpp>
#include <frontal/cli/report.hpp>

#include "support.hpp"

using namespace frontal;
using namespace frontal::cli;
using test::P;

namespace
{

json run_json(const std::string &verb, std::vector<std::string> inputs, int expected_exit, bool multigerm = false)
{
    config cfg;
    cfg.json = true;
    const auto o = run({verb, std::move(inputs), multigerm}, cfg);
    CHECK(o.exit_code == expected_exit);
    return json::parse(o.out);
}

} // namespace

TEST_CASE("expressions, curves and germ blocks")
{
    const auto poly = parse_expression("t^5 + 4/3*w*t^3");
    REQUIRE(std::holds_alternative<polynomial>(poly));
    CHECK(std::get<polynomial>(poly).size() == 2);

    const auto germ = parse_expression("germ { vars:[t]; p = t^3; q = t^5 }");
    REQUIRE(std::holds_alternative<frontal_germ>(germ));
    const auto r = check_frontal(std::get<frontal_germ>(germ).p, std::get<frontal_germ>(germ).q, "t");
    CHECK(*r.mu == P("5/3*t^2"));

    const auto c = parse_expression("(s^3, s^4 + s^5)");
    REQUIRE(std::holds_alternative<curve_branch>(c));
    CHECK(std::get<curve_branch>(c).var == "s");

    const auto f = parse_germ("germ { params: [u]; q = t^4 + 2*u*t^2; vars: [t]; p = t^3 + 3*u*t; mu = 4/3*t; }");
    CHECK(f.params == std::vector<std::string>{"u"});
    CHECK(*f.mu == P("4/3*t"));
}

TEST_CASE("parse errors")
{
    CHECK(test::error_kind([] { (void)parse_expression("t^"); }) == "ParseError");
    CHECK(test::error_kind([] { (void)parse_expression("germ { vars: [t]; p = t^2; p = t^3; q = t^3 }"); }) ==
          "ParseError");
    CHECK(test::error_kind([] { (void)parse_expression("germ { vars: [t]; p = t^2; q = t^3; r = t }"); }) ==
          "ParseError");
    CHECK(test::error_kind([] { (void)parse_expression("germ { vars: [t]; p = t^2; q = t^3 + u*t }"); }) ==
          "UndeclaredVariable");
    CHECK(test::error_kind([] { (void)parse_expression("germ { vars: [t]; p = t^2; q = t^3; mu = t }"); }) ==
          "InvalidCertificate");
    CHECK(test::error_kind([] { (void)parse_expression("(t^2, s^3)"); }) == "InvalidCurve");
    try {
        (void)parse_expression("t +\n  * 2");
        FAIL("expected a parse error");
    } catch (const frontal::error &e) {
        CHECK(std::string(e.what()).find("2:") != std::string::npos);
    }
}

TEST_CASE("printed values parse back to themselves")
{
    const frontal_germ f = require_frontal(test::germ({"x", "t"}, {"u", "v"}, "t^3 + u*t", "t^4 + 2/3*u*t^2 + x*v"));
    const auto back = parse_expression(to_text(f));
    REQUIRE(std::holds_alternative<frontal_germ>(back));
    CHECK(std::get<frontal_germ>(back) == f);

    const curve_branch g = test::curve("t^4", "t^5 + t^7");
    CHECK(std::get<curve_branch>(parse_expression(to_text(g))) == g);
    CHECK(to_text(parse_expression(to_text(g))) == to_text(g));
}

TEST_CASE("input files are read as text")
{
    const auto path = std::filesystem::temp_directory_path() / "frontal_cli_input.txt";
    {
        std::ofstream(path) << "germ {\n  vars: [t];\n  p = t^2;\n  q = t^5;\n}\n";
    }
    const auto j = run_json("check", {path.string()}, 0);
    CHECK(j["mu"] == "5/2*t^3");
    std::filesystem::remove(path);
}

TEST_CASE("exit codes")
{
    config cfg;
    CHECK(run({"check", {"germ{vars:[t]; p=t^2; q=t^3}"}, false}, cfg).exit_code == 0);
    CHECK(run({"check", {"germ{vars:[t]; params:[s]; p=t^3+s*t; q=t^4}"}, false}, cfg).exit_code == 2);
    CHECK(run({"check", {"t^"}, false}, cfg).exit_code == 1);
    CHECK(run({"check", {}, false}, cfg).exit_code == 1);
    CHECK(run({"sum", {"(t^2, t^3)"}, false}, cfg).exit_code == 1);
    CHECK(run({"table", {"(t^2, t^3)"}, false}, cfg).exit_code == 1);
    CHECK(run({"frobnicate", {}, false}, cfg).exit_code == 1);
    CHECK(run({"stable", {"germ{vars:[t]; params:[u]; p=t^2; q=t^5}"}, false}, cfg).exit_code == 2);
    CHECK(run({"lift", {"germ{vars:[t]; params:[s]; p=t^3+s*t; q=t^4}"}, false}, cfg).exit_code == 2);

    config bad;
    bad.jet_cap = 3;
    const auto o = run({"codim", {"(t^2, t^3)"}, false}, bad);
    CHECK(o.exit_code == 1);
    CHECK(o.err.find("InvalidConfig") != std::string::npos);
}

TEST_CASE("structured errors")
{
    const auto j = run_json("check", {"t^"}, 1);
    CHECK(j["schema"] == 1);
    CHECK(j["error"] == "ParseError");
    CHECK(j["detail"].is_string());
}

TEST_CASE("reduce reports the E8 eliminations")
{
    const auto j = run_json("reduce", {"(t^3,t^5)"}, 0);
    CHECK(j["schema"] == 1);
    CHECK(j["eliminations"]["v1"] == "-5/9*u^2");
    CHECK(j["eliminations"]["v2"] == "2/3*u*w");
    CHECK(j["versal"] == true);

    const auto fam = run_json("reduce", {"germ{vars:[t]; params:[s]; p=t^3+s*t; q=t^4}"}, 1);
    CHECK(fam["error"] == "NonAffineConstraint");
    CHECK(fam["residual"][0] == "-4/3*s");
}

TEST_CASE("batches keep input order")
{
    const auto j = run_json("codim", {"(t^2,t^9)", "(t^2,t^3)", "t^", "(t^3,t^5)"}, 1);
    REQUIRE(j["results"].size() == 4);
    CHECK(j["results"][0]["codim_Ae"] == 4);
    CHECK(j["results"][1]["codim_Ae"] == 1);
    CHECK(j["results"][2]["error"] == "ParseError");
    CHECK(j["results"][3]["codim_F"] == 2);
}

TEST_CASE("table and classify")
{
    const auto t = run_json("table", {}, 0);
    REQUIRE(t["classes"].size() == 5);
    for (const auto &c : t["classes"]) {
        CHECK(c["stable"] == true);
        CHECK(c.contains("listed_form"));
        CHECK(c.contains("provenance"));
        CHECK(c["conjecture_invariants"].contains("agrees_with_label"));
    }
    const auto e = run_json("classify", {}, 0);
    CHECK(e["selected"].size() == 5);

    const auto id = run_json("classify", {"germ{vars:[t]; params:[u,v]; p=t^3 + u*t; q=t^4 + 2/3*u*t^2}"}, 0);
    CHECK(id["verdict"] == "A_{3,0}");
    run_json("classify", {"germ{vars:[t]; params:[u,v]; p=t^2; q=t^7+u*t^5}"}, 2);
}

TEST_CASE("stable and multigerm commands")
{
    const auto s = run_json("stable", {"(t^3,t^5)"}, 0);
    CHECK(s["minimal_params"] == 2);
    const auto m = run_json("stable", {"(t,t^2)", "(t,-t)"}, 0, true);
    CHECK(m["general_position"] == true);
    run_json("stable", {"(t^2,t^3)", "(t^2,t^3)"}, 2, true);
}

TEST_CASE("the remaining commands produce reports")
{
    CHECK(run_json("lift", {"(t^2,t^5)"}, 0)["lift"]["integral_corank"] == 1);
    CHECK(run_json("invariants", {"(t^4,t^5+t^7)"}, 0)["delta"] == 6);
    CHECK(run_json("versal", {"(t^3,t^4)"}, 0)["codim_Ae"] == 3);
    const auto sum = run_json("sum",
                              {"germ{vars:[t]; params:[u]; p=t^2; q=t^5+u*t^3}",
                               "germ{vars:[t]; params:[v]; p=t^2; q=t^5+v*t^3}"},
                              0);
    CHECK(sum["sum"]["q"] == "t^5 + t^3*u + t^3*v");
}

TEST_CASE("json output is deterministic")
{
    config cfg;
    cfg.json = true;
    const command cmd{"classify", {}, false};
    CHECK(run(cmd, cfg).out == run(cmd, cfg).out);
}

TEST_CASE("jet mode carries its degree")
{
    config cfg;
    cfg.json = true;
    cfg.mode = config::mode_kind::jet;
    cfg.jet_degree = 8;
    const auto j = json::parse(run({"check", {"(t^2, t^3)"}, false}, cfg).out);
    CHECK(j["certified_up_to_degree"] == 8);
}

TEST_CASE("text output")
{
    config cfg;
    const auto o = run({"check", {"(t^2, t^3)"}, false}, cfg);
    CHECK(o.out.find("verdict: Frontal") != std::string::npos);
    CHECK(o.out.find("mu: 3/2*t") != std::string::npos);
    const auto e = run({"check", {"t^"}, false}, cfg);
    CHECK(e.err.find("error: ParseError") == 0);
}
