#include <doctest.h>

#include <frontal/curves.hpp>

#include "support.hpp"

using namespace frontal;
using test::curve;

TEST_CASE("value semigroups")
{
    struct row {
        const char *p, *q;
        std::vector<unsigned> gens;
        unsigned delta;
    };
    for (const row &r : {row{"t", "t^2", {1}, 0}, row{"t^2", "t^3", {2, 3}, 1}, row{"t^2", "t^5", {2, 5}, 2},
                         row{"t^3", "t^4", {3, 4}, 3}, row{"t^3", "t^5", {3, 5}, 4},
                         row{"t^4", "t^5+t^7", {4, 5}, 6}, row{"t^4", "t^6+t^7", {4, 6, 13}, 8}}) {
        CAPTURE(r.q);
        const curve_branch g = curve(r.p, r.q);
        const auto s = value_semigroup(g);
        CHECK(s.generators == r.gens);
        CHECK(s.gaps.size() == r.delta);
        CHECK(delta_invariant(s) == r.delta);
        CHECK(multiplicity(g) == r.gens.front());
    }
    CHECK(value_semigroup(curve("t^4", "t^6+t^7")).to_string() == "<4,6,13>");
}

TEST_CASE("semigroup construction")
{
    const auto s = numerical_semigroup::from_generators({3, 5});
    CHECK(s.gaps == std::vector<unsigned>{1, 2, 4, 7});
    CHECK(s.conductor == 8);
    CHECK(s.contains(9));
    CHECK_FALSE(s.contains(7));
    CHECK(delta_formula(s) == rational(4));
    CHECK(test::error_kind([] { (void)numerical_semigroup::from_generators({2, 4}); }) == "InvalidSemigroup");
}

TEST_CASE("quasi-homogeneity is syntactic")
{
    CHECK(is_quasihomogeneous(curve("t^3", "t^5")).value);
    CHECK_FALSE(is_quasihomogeneous(curve("t^4", "t^5+t^7")).value);
}

TEST_CASE("invariant report")
{
    const auto e6 = invariant_report(curve("t^3", "t^4"));
    CHECK(e6.mult == 3);
    CHECK(e6.delta == 3);
    CHECK(e6.milnor == 6);
    CHECK(e6.codim_ae == 3);
    CHECK(e6.codim_f == 1);
    CHECK(e6.frontal_milnor == 1);
    CHECK(e6.mond_frontal_holds);
    CHECK(e6.mond_frontal_equality);

    const auto w = invariant_report(curve("t^4", "t^5+t^7"));
    CHECK(w.delta == 6);
    CHECK(w.codim_f == 2);
    CHECK(w.frontal_milnor == 3);
    CHECK(w.tau_derived == 11);
    CHECK(w.mond_frontal_holds);
    CHECK_FALSE(w.mond_frontal_equality);
}
