#include <doctest.h>

#include <frontal/germ.hpp>

#include "support.hpp"

using namespace frontal;
using test::P;

TEST_CASE("frontality of plane curves")
{
    const auto cusp = check_frontal(P("t^2"), P("t^3"), "t");
    CHECK(cusp.result == frontality::verdict::frontal);
    REQUIRE(cusp.mu);
    CHECK(*cusp.mu == P("3/2*t"));

    const auto e8 = check_frontal(P("t^3"), P("t^5"), "t");
    REQUIRE(e8.mu);
    CHECK(*e8.mu == P("5/3*t^2"));

    const auto swapped = check_frontal(P("t^3"), P("t^2"), "t");
    CHECK(swapped.result == frontality::verdict::frontal_swapped);
    CHECK(*swapped.mu == P("3/2*t"));
}

TEST_CASE("frontality of unfoldings")
{
    CHECK(check_frontal(P("t^3+3*v*t"), P("t^4+2*v*t^2"), "t").result == frontality::verdict::frontal);
    CHECK(check_frontal(P("t^3+s*t"), P("t^4"), "t").result == frontality::verdict::not_frontal);
    CHECK(test::error_kind([] { (void)check_frontal(P("x"), P("x^2"), "t"); }) == "DegenerateGerm");
}

TEST_CASE("truncated mode reports its degree")
{
    const auto r = check_frontal(P("t^2"), P("t^3"), "t", jet_mode::up_to(6));
    CHECK(r.result == frontality::verdict::frontal);
    REQUIRE(r.up_to_degree);
    CHECK(*r.up_to_degree == 6);
    CHECK_FALSE(check_frontal(P("t^2"), P("t^3"), "t").up_to_degree);
}

TEST_CASE("germ construction validates its input")
{
    CHECK(test::error_kind([] { (void)test::germ({"t"}, {}, "t^2 + 1", "t^3"); }) != "");
    CHECK(test::error_kind([] { (void)test::germ({"t"}, {"t"}, "t^2", "t^3"); }) != "");
    const frontal_germ f = test::germ({"x", "t"}, {"u"}, "t^2", "t^3 + u*t + x*t");
    CHECK(f.y() == "t");
    CHECK(f.dimension() == 3);
    CHECK(f.transverse_vars() == std::vector<std::string>{"u", "x"});
    CHECK(f.components().size() == 4);
}

TEST_CASE("certificates")
{
    const frontal_germ f = require_frontal(test::curve("t^2", "t^3").as_germ());
    REQUIRE(f.mu);
    CHECK(f.q.diff("t") == *f.mu * f.p.diff("t"));
    CHECK(test::error_kind([] { (void)require_frontal(test::germ({"t"}, {"s"}, "t^3+s*t", "t^4")); }) ==
          "NotFrontal");
}

TEST_CASE("Nash lift and integral corank")
{
    const frontal_germ cusp = require_frontal(test::curve("t^2", "t^3").as_germ());
    const auto lift = make_nash_lift(cusp);
    CHECK(lift.fibre == std::vector<polynomial>{P("3/2*t")});
    const auto r = lift_rank(cusp);
    CHECK(r.integral_corank == 0);
    CHECK(r.wave_front);

    const auto a21 = lift_rank(require_frontal(test::curve("t^2", "t^5").as_germ()));
    CHECK(a21.integral_corank == 1);
    CHECK_FALSE(a21.wave_front);

    // Cuspidal edge (u, t^2, t^3): P_u = q_u - mu p_u = 0.
    const frontal_germ edge = require_frontal(test::germ({"t"}, {"u"}, "t^2", "t^3"));
    const auto el = make_nash_lift(edge);
    CHECK(el.fibre.size() == 2);
    CHECK(el.fibre[0].is_zero());
    CHECK(lift_rank(edge).wave_front);
}

TEST_CASE("the contact form annihilates the lift")
{
    const frontal_germ f = require_frontal(test::germ({"t"}, {"u"}, "t^3+u*t", "t^4+2/3*u*t^2"));
    const auto lift = make_nash_lift(f);
    // dq - mu dp - P_u du vanishes along the lift.
    const auto comps = f.components();
    std::vector<polynomial> nu = {-lift.fibre[0], -*f.mu, polynomial(1)};
    CHECK(verify_one_form(comps, nu, f.all_vars()).holds);
    nu[0] += polynomial(1);
    CHECK_FALSE(verify_one_form(comps, nu, f.all_vars()).holds);
}

TEST_CASE("generic slice")
{
    const frontal_germ f = test::germ({"x", "t"}, {"u", "v"}, "t^3 + u*t", "t^4 + x*t^2 + v*t");
    CHECK(generic_slice(f) == test::curve("t^3", "t^4"));
    CHECK(value_at_origin({P("t + 2"), P("u - 1/2")}) == std::vector<rational>{2, rational(-1, 2)});
}
