#include <doctest.h>

#include <frontal/sum.hpp>

#include "support.hpp"

using namespace frontal;
using test::curve;
using test::P;

namespace
{

summand_unfolding summand(std::vector<std::string> params, const char *p, const char *q)
{
    return summand_unfolding::from_germ(require_frontal(test::germ({"t"}, std::move(params), p, q)));
}

} // namespace

TEST_CASE("summands remember their base")
{
    const auto f = summand({"u"}, "t^2", "t^5 + u*t^3");
    CHECK(f.base_p == P("t^2"));
    CHECK(f.base_q == P("t^5"));
    CHECK(f.base_mu == P("5/2*t^3"));
    CHECK(f.transverse_vars() == std::vector<std::string>{"u"});
    CHECK(test::error_kind([] { (void)summand({"s"}, "t^3 + s*t", "t^4"); }) == "NotFrontal");
}

TEST_CASE("sum of two unfoldings of the same curve")
{
    const frontal_germ s = frontal_sum(summand({"u"}, "t^2", "t^5 + u*t^3"), summand({"v"}, "t^2", "t^5 + v*t^3"));
    CHECK(s.params == std::vector<std::string>{"u", "v"});
    CHECK(s.p == P("t^2"));
    CHECK(s.q == P("t^5 + u*t^3 + v*t^3"));
    REQUIRE(s.mu);
    CHECK(*s.mu == P("5/2*t^3 + 3/2*u*t + 3/2*v*t"));
}

TEST_CASE("sum keeps both restrictions")
{
    const auto f = summand({"u"}, "t^3 + 3*u*t", "t^4 + 2*u*t^2");
    const auto g = summand({"v"}, "t^3", "t^4 + v*t^3");
    const frontal_germ s = frontal_sum(f, g);
    CHECK(s.p.set_zero({"v"}) == f.p);
    CHECK(s.q.set_zero({"v"}) == f.q);
    CHECK(s.p.set_zero({"u"}) == g.p);
    CHECK(s.q.set_zero({"u"}) == g.q);
    CHECK(s.q.diff("t") == *s.mu * s.p.diff("t"));
}

TEST_CASE("sum in several source variables")
{
    const auto f = summand_unfolding::from_germ(require_frontal(test::germ({"x", "y"}, {}, "y^3 + x*y", "y^4 + 2/3*x*y^2")));
    CHECK(f.xs == std::vector<std::string>{"x"});
    CHECK(f.y == "y");
    CHECK(f.base_p == P("y^3"));
}

TEST_CASE("sum rejects incompatible summands")
{
    CHECK(test::error_kind([] {
              (void)frontal_sum(summand({"u"}, "t^2", "t^5 + u*t^3"), summand({"u"}, "t^2", "t^5 + u*t^3"));
          }) == "ParamCollision");
    CHECK(test::error_kind([] {
              (void)frontal_sum(summand({"u"}, "t^2", "t^5 + u*t^3"), summand({"v"}, "t^2", "t^7 + v*t^3"));
          }) == "BaseMismatch");
}

TEST_CASE("stable unfoldings generated from T^1_KFe")
{
    const auto cusp = stable_unfolding_generator(curve("t^2", "t^3"));
    CHECK(cusp.minimal_params == 0);
    CHECK(cusp.stable);

    const auto a21 = stable_unfolding_generator(curve("t^2", "t^5"));
    CHECK(a21.unfolding.q == P("t^5 + t^3*u"));
    CHECK(a21.stable);

    const auto e6 = stable_unfolding_generator(curve("t^3", "t^4"));
    CHECK(e6.unfolding.p == P("t^3 + 3*t*u"));
    CHECK(e6.unfolding.q == P("t^4 + 2*t^2*u"));

    const auto e8 = stable_unfolding_generator(curve("t^3", "t^5"));
    CHECK(e8.minimal_params == 2);
    CHECK(e8.unfolding.p == P("t^3 + 9*t*u"));
    CHECK(e8.unfolding.q == P("t^5 + t^4*v + 5*t^3*u + 6*t^2*u*v"));
    CHECK(e8.stable);

    const auto w = stable_unfolding_generator(curve("t^4", "t^5+t^7"));
    CHECK(w.minimal_params == 2);
    CHECK(w.stable);
    CHECK(check_frontal(w.unfolding.p, w.unfolding.q, "t").result == frontality::verdict::frontal);
}
