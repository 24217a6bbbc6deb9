#include <doctest.h>

#include <frontal/jet_space.hpp>
#include <frontal/linalg.hpp>
#include <frontal/polynomial.hpp>
#include <frontal/rational.hpp>

#include "support.hpp"

using namespace frontal;
using test::P;

TEST_CASE("rational arithmetic stays in lowest terms")
{
    const rational a(6, 4), b(-1, 3);
    CHECK(a == rational(3, 2));
    CHECK((a + b).to_string() == "7/6");
    CHECK((a * b).to_string() == "-1/2");
    CHECK((a / b).to_string() == "-9/2");
    CHECK(rational(4, -2).to_string() == "-2");
    CHECK(rational::parse("10/4") == rational(5, 2));
    CHECK(test::error_kind([] { (void)(rational(1) / rational(0)); }) == "ZeroDivisor");
}

TEST_CASE("polynomial canonical printing")
{
    CHECK(P("t^5 + 4/3*w*t^3").size() == 2);
    CHECK(P("t^5 + 4/3*w*t^3").to_string() == "t^5 + 4/3*t^3*w");
    CHECK(P("u*t^2").to_string() == "t^2*u");
    CHECK(P("t^5 + t^7").to_string() == "t^7 + t^5");
    CHECK(P("(t+1)^2 - 2*t").to_string() == "t^2 + 1");
    CHECK(P("0").to_string() == "0");
    CHECK(P("-t").to_string() == "-t");
}

TEST_CASE("polynomial parse of printed form is the identity")
{
    for (const char *s : {"t^5 + t^4*w + 2/3*t^2*u*w - 5/9*t*u^2", "-3*x^2*y + 7/2*z - 1", "t^7 + t^5"}) {
        const polynomial p = P(s);
        CHECK(P(p.to_string().c_str()) == p);
    }
}

TEST_CASE("polynomial calculus")
{
    const polynomial p = P("t^3*u + 2*t");
    CHECK(p.diff("t") == P("3*t^2*u + 2"));
    CHECK(p.integrate("t") == P("1/4*t^4*u + t^2"));
    CHECK(p.degree() == 4);
    CHECK(p.degree_in("t") == 3);
    CHECK(p.order_in("t") == 1);
    CHECK(P("0").order() == infinite_order);
    CHECK(p.substitute("u", P("t")) == P("t^4 + 2*t"));
    CHECK(p.set_zero({"u"}) == P("2*t"));
    CHECK(P("t^3 + t^2 + t").truncate(2) == P("t^2 + t"));
}

TEST_CASE("exact division")
{
    const auto q = div_exact(P("t^4 - u^2"), P("t^2 - u"), "t");
    REQUIRE(q.has_value());
    CHECK(*q == P("t^2 + u"));
    CHECK_FALSE(div_exact(P("t^3"), P("t^2 + u"), "t").has_value());
    CHECK(test::error_kind([] { (void)div_exact(P("t"), P("0"), "t"); }) == "ZeroDivisor");
}

TEST_CASE("rref and nullspace")
{
    const rational_matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    const auto r = rref(m);
    CHECK(r.rank == 2);
    REQUIRE(r.nullspace.size() == 1);
    const auto &n = r.nullspace.front();
    for (std::size_t i = 0; i < 3; ++i) {
        rational s;
        for (std::size_t j = 0; j < 3; ++j) {
            s += m(i, j) * n[j];
        }
        CHECK(s.is_zero());
    }
}

TEST_CASE("echelon basis membership and kernel")
{
    echelon_basis e;
    CHECK(e.insert({{0, rational(1)}, {1, rational(1)}}));
    CHECK(e.insert({{1, rational(1)}}));
    CHECK_FALSE(e.insert({{0, rational(2)}}));
    CHECK(e.contains({{0, rational(5)}, {1, rational(-3)}}));
    CHECK_FALSE(e.contains({{2, rational(1)}}));

    const auto k = kernel({{{0, rational(1)}}, {{0, rational(2)}}, {{1, rational(1)}}});
    REQUIRE(k.size() == 1);
    sparse_vector image;
    const std::vector<sparse_vector> images = {{{0, rational(1)}}, {{0, rational(2)}}, {{1, rational(1)}}};
    for (const auto &[i, c] : k.front()) {
        axpy(image, c, images[i]);
    }
    CHECK(image.empty());
}

TEST_CASE("monomial basis coordinates")
{
    const monomial_basis b({"x", "y"}, 3);
    CHECK(b.size() == 10);
    CHECK(b.degree_begin(2) == 3);
    const polynomial p = P("x^2*y + 3*y - 1");
    CHECK(b.decode(b.encode(p)) == p);
    CHECK(b.decode(b.multiply(b.encode(P("x")), b.encode(P("x*y")))) == P("x^2*y"));
    CHECK(b.decode(b.diff(b.encode(p), 0)) == P("2*x*y"));
    CHECK(b.decode(b.encode(P("x^4 + x"))) == P("x"));
    CHECK(test::error_kind([&] { (void)b.encode(P("z")); }) == "UndeclaredVariable");
}
