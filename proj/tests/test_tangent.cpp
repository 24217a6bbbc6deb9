#include <doctest.h>

#include <frontal/tangent.hpp>

#include "support.hpp"

using namespace frontal;
using test::curve;
using test::P;

TEST_CASE("codimensions of plane curve germs")
{
    struct row {
        const char *p, *q;
        unsigned ae, f;
    };
    for (const row &r : {row{"t^2", "t^3", 1, 0}, row{"t^2", "t^5", 2, 1}, row{"t^2", "t^9", 4, 3},
                         row{"t^3", "t^4", 3, 1}, row{"t^3", "t^5", 4, 2}, row{"t^4", "t^5+t^7", 5, 2},
                         row{"t^4", "t^6+t^7", 6, 3}}) {
        CAPTURE(r.q);
        const auto c = codims(curve(r.p, r.q).as_germ());
        CHECK(c.codim_ae == r.ae);
        CHECK(c.codim_f == r.f);
        CHECK(c.frontal_basis.size() == r.f);
        CHECK(c.certified_up_to == c.stabilized_at + 4);
    }
    const auto immersion = codims(curve("t", "t^2").as_germ());
    CHECK(immersion.codim_ae == 0);
    CHECK(immersion.codim_f == 0);
}

TEST_CASE("tangent spaces are nested")
{
    const frontal_germ f = require_frontal(curve("t^3", "t^5").as_germ());
    const auto tae = jet_tangent_ae(f, 12);
    const auto fs = jet_frontal_space(f, 12);
    const auto tk = jet_tangent_kfe(f, fs);
    CHECK(tae.label == subspace_label::tae);
    for (const auto &v : tae.basis.basis()) {
        CHECK(fs.basis.contains(v));
    }
    for (const auto &v : tk.basis.basis()) {
        CHECK(fs.basis.contains(v));
    }
    CHECK(fs.contains({P("9*t"), P("5*t^3")}));
    CHECK(fs.contains({P("t"), P("0")}));
    CHECK_FALSE(fs.contains({P("0"), P("t")}));
}

TEST_CASE("jet stabilization gives up at the cap")
{
    CHECK(test::error_kind([] { (void)codims(curve("t^2", "t^21").as_germ(), jet_limits{8, 8}); }) ==
          "NoStabilization");
}

TEST_CASE("T_j generators and T^1_KFe")
{
    const auto tj = tj_generators(curve("t^3", "t^4"));
    REQUIRE(tj.size() == 1);
    CHECK(tj[0] == vector_field{P("t"), P("2/3*t^2")});

    const auto e8 = t1_kfe_basis(curve("t^3", "t^5"));
    CHECK(e8.dim == 2);
    CHECK(e8.lower_bound_holds);
    CHECK(e8.upper_bound_holds);

    CHECK(t1_kfe_basis(curve("t^2", "t^3")).dim == 0);
    CHECK(t1_kfe_basis(curve("t^2", "t^7")).dim == 1);
    CHECK(t1_kfe_basis(curve("t", "t^2")).basis.empty());
}

TEST_CASE("tau of curve germs")
{
    const auto line = tau_subspace(require_frontal(curve("t", "t^2").as_germ()));
    CHECK(line.ambient == 2);
    CHECK(line.basis.size() == 1);
    const auto cusp = tau_subspace(require_frontal(curve("t^2", "t^3").as_germ()));
    CHECK(cusp.basis.empty());
}

TEST_CASE("stability through the generic slice")
{
    CHECK(is_stable(test::germ({"t"}, {}, "t^2", "t^3")));
    CHECK(is_stable(test::germ({"t"}, {"u", "v"}, "t^2", "t^3")));
    CHECK(is_stable(test::germ({"t"}, {"u"}, "t^2", "t^5 + u*t^3")));
    CHECK_FALSE(is_stable(test::germ({"t"}, {"u"}, "t^2", "t^5")));
    CHECK_FALSE(is_stable(test::germ({"t"}, {"u", "v"}, "t^2", "t^7 + u*t^5")));

    const curve_branch a21 = curve("t^2", "t^5");
    CHECK(unfolding_stable_via_base(a21, {{P("0"), P("t^3")}}));
    CHECK_FALSE(unfolding_stable_via_base(a21, {}));
    CHECK(unfolding_versal_via_base(a21, {{P("0"), P("t^3")}}));
    CHECK_FALSE(unfolding_versal_via_base(a21, {{P("0"), P("t^6")}}));
}

TEST_CASE("frontal codimension of unfoldings")
{
    CHECK(frontal_codimension(test::germ({"t"}, {"u"}, "t^2", "t^5 + u*t^3")).value == 0);
    CHECK(frontal_codimension(test::germ({"t"}, {}, "t^2", "t^5")).value == 1);
}

TEST_CASE("general position of subspaces")
{
    using sub = std::vector<std::vector<rational>>;
    CHECK(general_position({sub{}}, 2));
    CHECK_FALSE(general_position({sub{}, sub{}}, 2));
    CHECK(general_position({sub{{1, 0}}, sub{{0, 1}}}, 2));
    CHECK_FALSE(general_position({sub{{1, 0}}, sub{{3, 0}}}, 2));
    CHECK(general_position({sub{{1, 0, 0}, {0, 1, 0}}, sub{{0, 1, 0}, {0, 0, 1}}}, 3));
}

TEST_CASE("multigerms")
{
    const auto cusp = require_frontal(curve("t^2", "t^3").as_germ());
    CHECK(multigerm_stable({cusp}).stable);
    const auto two = multigerm_stable({cusp, cusp});
    CHECK(two.branch_stable == std::vector<bool>{true, true});
    CHECK_FALSE(two.general_position);
    CHECK_FALSE(two.stable);
    const auto node = multigerm_stable({require_frontal(curve("t", "t^2").as_germ()),
                                        require_frontal(curve("t", "-t").as_germ())});
    CHECK(node.stable);
    const auto tangent = multigerm_stable({require_frontal(curve("t", "t^2").as_germ()),
                                           require_frontal(curve("t", "-t^2").as_germ())});
    CHECK_FALSE(tangent.stable);
}
