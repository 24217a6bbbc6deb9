#include <doctest.h>

#include <frontal/reduction.hpp>

#include "support.hpp"

using namespace frontal;
using test::curve;
using test::P;

TEST_CASE("miniversal unfoldings")
{
    const auto cusp = miniversal_unfolding(curve("t^2", "t^3"));
    CHECK(cusp.germ.params == std::vector<std::string>{"v1"});
    CHECK(cusp.germ.q == P("t^3 + t*v1"));

    const auto e6 = miniversal_unfolding(curve("t^3", "t^4"));
    CHECK(e6.germ.p == P("t^3 + t*u"));
    CHECK(e6.germ.q == P("t^4 + t^2*v2 + t*v1"));
    CHECK(e6.roles.at("u") == param_role::u_block);
    CHECK(e6.roles.at("v2") == param_role::v_block);

    const auto e8 = miniversal_unfolding(curve("t^3", "t^5"));
    CHECK(e8.germ.q == P("t^5 + t^4*w + t^2*v2 + t*v1"));
    CHECK(e8.params_with(param_role::w_block) == std::vector<std::string>{"w"});

    const auto w = miniversal_unfolding(curve("t^4", "t^5+t^7"));
    CHECK(w.germ.params.size() == 5);
    CHECK(w.params_with(param_role::u_block).size() == 2);
    CHECK(w.params_with(param_role::w_block).empty());

    CHECK(miniversal_unfolding(curve("t^2", "t^7")).params_with(param_role::w_block).size() == 2);
    CHECK(test::error_kind([] { (void)miniversal_unfolding(curve("t^2+t^3", "t^5")); }) == "NotPuiseuxForm");
}

TEST_CASE("roles follow where a parameter occurs")
{
    const auto roles = infer_roles(test::germ({"t"}, {"a", "b", "c"}, "t^3 + a*t", "t^4 + b*t^2 + c*t^5"));
    CHECK(roles.at("a") == param_role::u_block);
    CHECK(roles.at("b") == param_role::v_block);
    CHECK(roles.at("c") == param_role::w_block);
}

TEST_CASE("reduction of the E6 unfolding")
{
    const auto r = frontal_reduction(miniversal_unfolding(curve("t^3", "t^4")));
    CHECK(r.mu_coeffs == std::vector<polynomial>{P("0"), P("4/3")});
    CHECK(r.eliminations.at("v1") == P("0"));
    CHECK(r.eliminations.at("v2") == P("2/3*u"));
    REQUIRE(r.reduced);
    CHECK(r.reduced->germ.params == std::vector<std::string>{"u"});
    CHECK(r.reduced->germ.q == P("t^4 + 2/3*t^2*u"));
    CHECK(r.immersion_h.at("v2") == P("2/3*u"));
    CHECK(reduction_is_versal(r));
}

TEST_CASE("reduction of the E8 unfolding")
{
    const auto r = frontal_reduction(miniversal_unfolding(curve("t^3", "t^5")));
    CHECK(r.mu("t") == P("5/3*t^2 + 4/3*t*w - 5/9*u"));
    CHECK(r.eliminations.at("v1") == P("-5/9*u^2"));
    CHECK(r.eliminations.at("v2") == P("2/3*u*w"));
    REQUIRE(r.reduced);
    CHECK(r.reduced->germ.params == std::vector<std::string>{"u", "w"});
    CHECK(reduction_is_versal(r));
}

TEST_CASE("reductions that keep one curve parameter per frontal direction")
{
    const auto cusp = frontal_reduction(miniversal_unfolding(curve("t^2", "t^3")));
    REQUIRE(cusp.reduced);
    CHECK(cusp.reduced->germ.params.empty());
    CHECK(reduction_is_versal(cusp));

    for (const char *q : {"t^5+t^7"}) {
        const auto r = frontal_reduction(miniversal_unfolding(curve("t^4", q)));
        REQUIRE(r.reduced);
        CHECK(r.reduced->germ.params.size() == 2);
    }
    const auto a2 = frontal_reduction(miniversal_unfolding(curve("t^2", "t^7")));
    REQUIRE(a2.reduced);
    CHECK(a2.reduced->germ.params.size() == 2);
}

TEST_CASE("reduction of a hand-built unfolding")
{
    unfolding g;
    g.germ = test::germ({"t"}, {"u"}, "t^2", "t^5 + u*t");
    g.roles = infer_roles(g.germ);
    const auto r = frontal_reduction(g);
    CHECK(r.eliminations.at("u") == P("0"));
    REQUIRE(r.reduced);
    CHECK(r.reduced->germ.params.empty());
    CHECK_FALSE(reduction_is_versal(r));
}

TEST_CASE("reduction failures")
{
    unfolding fam;
    fam.germ = test::germ({"t"}, {"s"}, "t^3 + s*t", "t^4");
    fam.roles = infer_roles(fam.germ);
    const auto r = frontal_reduction(fam);
    REQUIRE(r.failure);
    CHECK(*r.failure == "NonAffineConstraint");
    CHECK_FALSE(r.reduced);
    CHECK(r.residual == std::vector<polynomial>{P("-4/3*s")});

    unfolding bad;
    bad.germ = test::germ({"t"}, {}, "t^5", "t^3");
    bad.roles = {};
    CHECK(test::error_kind([&] { (void)frontal_reduction(bad); }) == "DegreeOrderViolated");

    unfolding lead;
    lead.germ = test::germ({"t"}, {"u"}, "(1+u)*t^3", "t^4");
    lead.roles = infer_roles(lead.germ);
    CHECK(test::error_kind([&] { (void)frontal_reduction(lead); }) == "NotPuiseuxForm");
}
