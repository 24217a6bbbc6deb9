#include <doctest.h>

#include <cstdlib>
#include <random>

#include <frontal/cli/input.hpp>
#include <frontal/linalg.hpp>
#include <frontal/sum.hpp>
#include <frontal/tangent.hpp>

#include "support.hpp"

using namespace frontal;

namespace
{

std::uint64_t seed()
{
    const char *s = std::getenv("FRONTAL_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 20261014;
}

struct gen {
    std::mt19937_64 rng{seed()};

    long integer(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    }
    rational coefficient()
    {
        long n = 0;
        while (n == 0) {
            n = integer(-5, 5);
        }
        return rational(n, integer(1, 4));
    }
    polynomial poly(const std::vector<std::string> &vars, unsigned degree, unsigned terms)
    {
        polynomial p;
        for (unsigned i = 0; i < terms; ++i) {
            std::vector<monomial::factor> fs;
            long left = integer(0, degree);
            for (const auto &v : vars) {
                const long e = integer(0, left);
                left -= e;
                fs.push_back({v, static_cast<unsigned>(e)});
            }
            p += polynomial(coefficient(), monomial(fs));
        }
        return p;
    }
    polynomial in_t(unsigned lo, unsigned hi)
    {
        polynomial p;
        for (unsigned k = lo; k <= hi; ++k) {
            if (integer(0, 1)) {
                p += polynomial::variable("t", k).scaled(coefficient());
            }
        }
        return p;
    }
};

const std::vector<std::string> xyz = {"x", "y", "z"};

} // namespace

TEST_CASE("ring axioms on random polynomials")
{
    gen g;
    for (int i = 0; i < 300; ++i) {
        const polynomial a = g.poly(xyz, 3, 4), b = g.poly(xyz, 3, 4), c = g.poly(xyz, 2, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == polynomial());
        CHECK(a.pow(2) == a * a);
    }
}

TEST_CASE("division undoes multiplication")
{
    gen g;
    for (int i = 0; i < 150; ++i) {
        const polynomial a = g.poly(xyz, 3, 3);
        polynomial b;
        while (b.is_zero()) {
            b = g.poly(xyz, 2, 3);
        }
        for (const char *var : {"x", "z"}) {
            const auto q = div_exact(a * b, b, var);
            REQUIRE(q);
            CHECK(*q == a);
        }
    }
}

TEST_CASE("integration inverts differentiation")
{
    gen g;
    for (int i = 0; i < 150; ++i) {
        const polynomial a = g.poly(xyz, 4, 5);
        CHECK(a.integrate("x").diff("x") == a);
        CHECK(a.diff("x").integrate("x") == a - a.set_zero({"x"}));
        CHECK((a * a).diff("y") == a.diff("y") * a * polynomial(2));
    }
}

TEST_CASE("printing then parsing is the identity")
{
    gen g;
    for (int i = 0; i < 150; ++i) {
        const polynomial a = g.poly(xyz, 5, 6);
        CHECK(polynomial::parse(a.to_string()) == a);
    }
}

TEST_CASE("rank agrees between dense and incremental elimination")
{
    gen g;
    for (int i = 0; i < 60; ++i) {
        const std::size_t rows = static_cast<std::size_t>(g.integer(1, 6)), cols = static_cast<std::size_t>(g.integer(1, 6));
        rational_matrix m(rows, cols);
        echelon_basis e;
        for (std::size_t r = 0; r < rows; ++r) {
            sparse_vector v;
            for (std::size_t c = 0; c < cols; ++c) {
                const long x = g.integer(-2, 2) * g.integer(0, 1);
                m(r, c) = rational(x);
                if (x != 0) {
                    v.push_back({c, rational(x)});
                }
            }
            e.insert(v);
        }
        const auto rr = rref(m);
        CHECK(rr.rank == e.size());
        CHECK(rr.rank + rr.nullspace.size() == cols);
    }
}

TEST_CASE("random frontal curves have T A_e inside F")
{
    gen g;
    for (int i = 0; i < 20; ++i) {
        const unsigned a = static_cast<unsigned>(g.integer(2, 4));
        const polynomial p = polynomial::variable("t", a) + g.in_t(a + 1, 4);
        polynomial mu;
        while (mu.is_zero()) {
            mu = g.in_t(0, 3);
        }
        const polynomial q = (mu * p.diff("t")).integrate("t");
        const auto r = check_frontal(p, q, "t");
        CHECK(r.result == frontality::verdict::frontal);
        REQUIRE(r.mu);
        CHECK(*r.mu == mu);

        const frontal_germ f = require_frontal(frontal_germ::make({"t"}, {}, p, q));
        const auto tae = jet_tangent_ae(f, 10);
        const auto fs = jet_frontal_space(f, 10);
        for (const auto &v : tae.basis.basis()) {
            CHECK(fs.basis.contains(v));
        }
    }
}

TEST_CASE("random frontal sums restrict to their summands")
{
    gen g;
    for (int i = 0; i < 10; ++i) {
        const unsigned a = static_cast<unsigned>(g.integer(2, 3));
        const polynomial p0 = polynomial::variable("t", a) + g.in_t(a + 1, a + 2);
        const polynomial mu0 = g.in_t(0, 2);
        auto summand = [&](const std::string &name) {
            const polynomial s = polynomial::variable(name);
            const polynomial p = p0 + s * g.in_t(0, a - 1);
            const polynomial mu = mu0 + s * g.in_t(0, 2);
            const polynomial q = (mu * p.diff("t")).integrate("t") + s.scaled(g.coefficient());
            return require_frontal(frontal_germ::make({"t"}, {name}, p, q));
        };
        const frontal_germ f = summand("u"), h = summand("v");
        const frontal_germ s = frontal_sum(summand_unfolding::from_germ(f), summand_unfolding::from_germ(h));
        REQUIRE(s.mu);
        CHECK(s.q.diff("t") == *s.mu * s.p.diff("t"));
        CHECK(s.p.set_zero({"v"}) == f.p);
        CHECK(s.q.set_zero({"v"}) == f.q);
        CHECK(s.p.set_zero({"u"}) == h.p);
        CHECK(s.q.set_zero({"u"}) == h.q);
    }
}

TEST_CASE("germ text round trip on random frontal germs")
{
    gen g;
    for (int i = 0; i < 30; ++i) {
        const polynomial p = polynomial::parse("t^3") + polynomial::variable("u") * g.in_t(1, 2);
        const polynomial mu = g.in_t(1, 2) + polynomial::variable("u").scaled(g.coefficient());
        const polynomial q = (mu * p.diff("t")).integrate("t");
        const frontal_germ f = require_frontal(frontal_germ::make({"t"}, {"u"}, p, q));
        const auto back = cli::parse_expression(cli::to_text(f));
        REQUIRE(std::holds_alternative<frontal_germ>(back));
        CHECK(std::get<frontal_germ>(back) == f);
    }
}
