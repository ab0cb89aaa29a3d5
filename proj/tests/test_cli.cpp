#include <cstdlib>
#include <sstream>

#include "doctest.h"

#include "affschur/cli.hpp"
#include "affschur/suites.hpp"

using namespace affschur;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

ParseContext ctx(int n, int r) {
    ParseContext c;
    c.n = n;
    c.r = r;
    return c;
}

}  // namespace

TEST_CASE("command line examples") {
    auto a = run({"mult", "--n", "2", "--r", "2", "[diag(1,1)]", "[diag(1,1)]"});
    CHECK(a.code == 0);
    CHECK(a.out == "[diag(1,1)]\n");

    auto b = run({"mult", "E12(0,r)", "0(0,r)"});
    CHECK(b.code == 0);
    CHECK(parse_element(b.out, ctx(2, 2)) == parse_element("E12(0,r)", ctx(2, 2)));

    auto c = run({"mult", "--n", "2", "--r", "2", "s1", "s1"});
    CHECK(c.code == 0);
    CHECK(c.out == "(v^2 - 1)T_{s1} + v^2\n");

    auto d = run({"hallpoly", "--n", "2", "S1[2]", "S1", "S2"});
    CHECK(d.code == 0);
    CHECK(d.out == "1\n");

    auto e = run({"verify", "polyidentity", "--n", "3", "--max", "2"});
    CHECK(e.code == 0);
    CHECK(e.out.rfind("polyidentity: pass", 0) == 0);

    auto f = run({"verify", "oracle-vs-blm", "--n", "2", "--r", "3"});
    CHECK(f.code == 0);
}

TEST_CASE("exit codes for usage and parse errors") {
    CHECK(run({"verify", "no-such-suite"}).code == 2);
    CHECK(run({"mult", "[diag(1,1)", "[diag(1,1)]"}).code == 2);
    CHECK(run({"mult", "--n", "2", "--r", "3", "[diag(1,1)]", "[diag(1,1)]"}).code == 2);
    CHECK(run({"mult", "s1", "[diag(1,1)]"}).code == 2);
    CHECK(run({"mult", "--format", "xml", "s1", "s1"}).code == 2);
    CHECK(run({"mult", "--n", "1", "s1", "s1"}).code == 2);
    CHECK(run({"mult", "--cap", "7", "s1", "s1"}).code == 2);
    CHECK(run({"hallpoly", "--n", "2", "S3", "S1", "S2"}).code == 2);
    CHECK(run({"mult", "s1"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);

    int cap = dimension_cap();
    setenv("AFFSCHUR_CAP", "9", 1);
    CHECK(run({"mult", "s1", "s1"}).code == 2);
    setenv("AFFSCHUR_CAP", "5", 1);
    CHECK(run({"mult", "s1", "s1"}).code == 0);
    CHECK(dimension_cap() == 5);
    unsetenv("AFFSCHUR_CAP");
    set_dimension_cap(cap);
}

TEST_CASE("help documents the element grammar") {
    auto h = run({"mult", "--help"});
    CHECK(h.code == 0);
    for (const char* s : {"e[A]", "br[A]", "A(j,r)", "A[j,r]", "Tw[...]", "gen:E1", "{(i,j):a,...}"})
        CHECK(h.out.find(s) != std::string::npos);
}

TEST_CASE("matrix and module notation") {
    CHECK(parse_matrix("E12", 2) == PeriodicMatrix::elementary(2, 1, 2, 1));
    CHECK(parse_matrix("E(1,2)", 2) == parse_matrix("{(1,2):1}", 2));
    CHECK(parse_matrix("2E13+diag(1,0)", 2) == PeriodicMatrix::parse(2, "{(1,1):1,(1,3):2}"));
    CHECK(parse_matrix("0", 3) == PeriodicMatrix(3));
    CHECK_THROWS_AS(parse_matrix("diag(1,1,1)", 2), DimensionMismatch);
    CHECK_THROWS_AS(parse_matrix("F12", 2), ParseError);

    CHECK(parse_module("S1[2]", 2) == PeriodicMatrix::elementary(2, 1, 3, 1));
    CHECK(parse_module("2S1+S2[3]", 2) == PeriodicMatrix::parse(2, "{(1,2):2,(2,5):1}"));
    CHECK(parse_module("[1;2)+[2;1)", 2) == parse_module("S1[2]+S2", 2));
    CHECK_THROWS_AS(parse_module("S0", 2), ParseError);
    for (const auto& A : theta_plus_up_to(3, 3, true)) CHECK(parse_module(module_string(A), 3) == A);

    CHECK(pretty_laurent(LaurentPoly::parse("-1 + v^2")) == "v^2 - 1");
    CHECK(pretty_laurent(LaurentPoly::parse("-v^-1")) == "-v^-1");
}

TEST_CASE("element expressions") {
    auto c = ctx(2, 2);
    CHECK(parse_element("br[diag(1,1)]", c) == parse_element("[diag(1,1)]", c));
    CHECK(parse_element("e[E12+E21]", c).mat == e_basis(parse_matrix("E12+E21", 2)));
    CHECK(parse_element("gen:E1", c).mat == xi_E(2, 1, 2));
    CHECK(parse_element("gen:K2", c).mat == kk(2, 2, 2));
    CHECK(parse_element("0(e1,r)", c).mat == xi_K(unit_vector(2, 1), 2));
    CHECK(parse_element("0((1,-1),2)", c).mat == xi_K(DimVector{1, -1}, 2));
    CHECK(parse_element("gen:one", c).mat == schur_one(2, 2));
    CHECK(parse_element("2", [] {
              ParseContext k;
              k.kind = ElementKind::Schur;
              return k;
          }()).mat == schur_one(2, 2) * LaurentPoly(2));
    CHECK(parse_element("v^-1*[diag(2,0)] - (v + 1)[diag(0,2)]", c).mat ==
          bracket(PeriodicMatrix::diag({2, 0})) * LaurentPoly::v(-1) -
              bracket(PeriodicMatrix::diag({0, 2})) * LaurentPoly::parse("v + 1"));
    CHECK(parse_element("Tw[2,1]", c) == parse_element("T_{s1}", c));
    CHECK(parse_element("T[2,3]", c) == parse_element("rho", c));
    CHECK(parse_element("u[S1] - u[S2]", c).mat == hall_basis(parse_module("S1", 2)) - hall_basis(parse_module("S2", 2)));
    CHECK(parse_element("3/2*c[diag(1,1)]", c).classical.coeff(PeriodicMatrix::diag({1, 1})) == mpq_class(3, 2));
    CHECK(parse_element("E12[0,r]", ctx(2, 3)).classical == abr(parse_matrix("E12", 2), {0, 0}, 3));
    CHECK_THROWS_AS(parse_element("s1 + [diag(1,1)]", c), DimensionMismatch);
    CHECK_THROWS_AS(parse_element("(v^2", c), ParseError);
    CHECK_THROWS_AS(parse_element("v^2", c), ParseError);
    CHECK_THROWS_AS(parse_element("gen:X1", c), ParseError);
}

TEST_CASE("output round-trips through the parsers") {
    std::vector<std::pair<std::string, ParseContext>> cases{
        {"E12(0,r)", ctx(2, 2)},
        {"gen:E1", ctx(3, 2)},
        {"gen:z1+", ctx(2, 2)},
        {"gen:rho", ctx(2, 2)},
        {"(v^2 - 1)*e[E12+E21] - v^-3*[diag(1,1)]", ctx(2, 2)},
        {"E13(e2,r)", ctx(2, 3)},
        {"s1", ctx(2, 3)},
        {"(v - v^-1)T[3,1,2] + 2", ctx(2, 3)},
        {"gen:u1", ctx(3, 2)},
        {"u[S1[2]] - v^2*u[0]", ctx(2, 2)},
        {"E12[(1,0),r]", ctx(2, 3)},
        {"-1/3*c[diag(1,2)]", ctx(2, 3)},
    };
    for (const auto& [text, c] : cases) {
        Element x = parse_element(text, c);
        CAPTURE(text);
        ParseContext back = c;
        back.kind = x.kind;
        CHECK(parse_element(element_text(x), back) == x);
        CHECK(parse_element(element_json(x), ParseContext{}) == x);
        Element sq = multiply(x, x);
        CHECK(parse_element(element_json(sq), ParseContext{}) == sq);
    }
    auto j = run({"mult", "--format", "json", "--n", "3", "--r", "2", "gen:E1", "gen:F1"});
    REQUIRE(j.code == 0);
    auto again = run({"mult", "--format", "json", "--n", "3", "--r", "2", j.out, "gen:one"});
    CHECK(again.out == j.out);
    auto csv = run({"mult", "--format", "csv", "s1", "s1"});
    CHECK(csv.out.rfind("perm,coeff\n", 0) == 0);
}

TEST_CASE("hall polynomial tables") {
    auto t = run({"hallpoly", "--n", "2", "--format", "csv", "--primes", "2,3", "S1[2]+S2"});
    CHECK(t.code == 0);
    CHECK(t.out.find("S1[2]+S2,S1[2],S2,q\n") != std::string::npos);
    auto j = run({"hallpoly", "--n", "2", "--format", "json", "S1[2]", "S1", "S2"});
    CHECK(j.out == "{\"A\":\"S1\",\"B\":\"S2\",\"C\":\"S1[2]\",\"phi\":\"1\"}\n");
    CHECK(run({"hallpoly", "--n", "2", "S1[2]", "S2", "S1"}).out == "0\n");
}

TEST_CASE("suite registry") {
    auto names = suite_names();
    for (const char* s : {"gauss", "hall-assoc", "hopf", "pairing", "oracle-vs-blm", "pbw", "commutator", "polyidentity",
                          "presentation", "rho-nr", "tensor-bimodule", "classical-mf", "classical-realization"})
        CHECK(std::find(names.begin(), names.end(), s) != names.end());
    CHECK_THROWS_AS(run_suite("nothing", {}), UnknownSuite);

    SuiteReport rep("x");
    rep.check(true, [] { return std::string("unused"); });
    rep.check(false, [] { return std::string("bad instance"); });
    CHECK(rep.checked == 2);
    CHECK(rep.failures == std::vector<std::string>{"bad instance"});
    CHECK_FALSE(rep.passed());

    auto v = run({"verify", "gauss", "--format", "json"});
    CHECK(v.code == 0);
    CHECK(v.out.find("\"status\":\"pass\"") != std::string::npos);
}
