#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include <frontal/classify.hpp>
#include <frontal/cli/acceptance.hpp>
#include <frontal/cli/commands.hpp>
#include <frontal/curves.hpp>
#include <frontal/errors.hpp>
#include <frontal/reduction.hpp>
#include <frontal/sum.hpp>

namespace frontal::cli
{

namespace
{

// Collects failed assertions and a few informative notes for one criterion.
struct checker {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string &what)
    {
        if (!ok) {
            failures.push_back(what);
        }
    }
    void note(const std::string &s)
    {
        notes.push_back(s);
    }
};

polynomial P(const char *s)
{
    return polynomial::parse(s);
}

curve_branch curve(const char *p, const char *q)
{
    return curve_branch::make(P(p), P(q));
}

frontal_germ germ(std::vector<std::string> params, const char *p, const char *q)
{
    return frontal_germ::make({"t"}, std::move(params), P(p), P(q));
}

bool is_frontal(const frontal_germ &f)
{
    return check_frontal(f.p, f.q, f.y()).result != frontality::verdict::not_frontal;
}

struct division {
    polynomial quotient, remainder;
};

// Long division in var by a polynomial whose leading var-coefficient is a nonzero constant.
division monic_division(const polynomial &num, const polynomial &den, const std::string &var)
{
    const unsigned dd = den.degree_in(var);
    const rational lead = den.coefficients_in(var).at(dd).constant_term();
    division d{polynomial(), num};
    while (!d.remainder.is_zero() && d.remainder.degree_in(var) >= dd) {
        const unsigned dr = d.remainder.degree_in(var);
        const polynomial term =
            d.remainder.coefficients_in(var).at(dr).scaled(rational(1) / lead) * polynomial::variable(var, dr - dd);
        d.quotient += term;
        d.remainder -= term * den;
    }
    return d;
}

// Solves remainder = 0 for v_{alpha-1} .. v_1, reading v_j off the coefficient of t^{j-1}.
// Returns nothing if some coefficient is not affine in its v_j with constant slope.
std::optional<std::map<std::string, polynomial>> solve_v_block(polynomial remainder, unsigned alpha)
{
    std::map<std::string, polynomial> sol;
    for (unsigned j = alpha - 1; j >= 1; --j) {
        const std::string v = "v" + std::to_string(j);
        const auto cs = remainder.coefficients_in("t");
        const auto it = cs.find(j - 1);
        const polynomial c = it == cs.end() ? polynomial() : it->second;
        const polynomial slope = c.diff(v);
        if (!slope.is_constant() || slope.is_zero()) {
            return std::nullopt;
        }
        const polynomial value = c.set_zero({v}).scaled(-rational(1) / slope.constant_term());
        sol[v] = value;
        remainder = remainder.substitute(v, value);
        for (auto &[k, x] : sol) {
            x = x.substitute(v, value);
        }
    }
    if (!remainder.is_zero()) {
        return std::nullopt;
    }
    return sol;
}

std::string str(const std::map<std::string, polynomial> &m)
{
    std::string s;
    for (const auto &[k, v] : m) {
        s += (s.empty() ? "" : ", ") + k + " = " + v.to_string();
    }
    return s;
}

// Gaps of the semigroup spanned by gens, counted below the product of the generators.
unsigned brute_gap_count(const std::vector<unsigned> &gens)
{
    unsigned bound = 1;
    for (auto g : gens) {
        bound *= g;
    }
    std::vector<bool> in(bound + 1, false);
    in[0] = true;
    for (unsigned n = 1; n <= bound; ++n) {
        for (auto g : gens) {
            if (n >= g && in[n - g]) {
                in[n] = true;
            }
        }
    }
    unsigned gaps = 0;
    for (unsigned n = 1; n <= bound; ++n) {
        gaps += !in[n];
    }
    return gaps;
}

checker frontality_criterion(const jet_limits &limits)
{
    checker c;
    const auto cusp = check_frontal(P("t^2"), P("t^3"), "t");
    c.expect(cusp.result == frontality::verdict::frontal && cusp.mu && *cusp.mu == P("3/2*t"),
             "(t^2, t^3) frontal with mu = 3/2*t");
    const auto e6 = check_frontal(P("t^3+3*v*t"), P("t^4+2*v*t^2"), "t");
    c.expect(e6.result == frontality::verdict::frontal && e6.mu &&
                 P("t^4+2*v*t^2").diff("t") == *e6.mu * P("t^3+3*v*t").diff("t"),
             "(t^3+3vt, t^4+2vt^2) frontal with a verified certificate");
    const auto family = check_frontal(P("t^3+s*t"), P("t^4"), "t");
    c.expect(family.result == frontality::verdict::not_frontal, "(s, t^3+st, t^4) not frontal");

    config cfg;
    cfg.jet_cap = limits.curve_cap;
    cfg.n3_jet_cap = limits.germ_cap;
    cfg.json = true;
    const auto ok = run({"check", {"germ{vars:[t]; p=t^2; q=t^3}"}, false}, cfg);
    const auto bad = run({"check", {"germ { vars: [t]; params: [s]; p = t^3 + s*t; q = t^4 }"}, false}, cfg);
    c.expect(ok.exit_code == 0, "check on the cusp exits 0");
    c.expect(bad.exit_code == 2, "check on the non-frontal family exits 2");
    if (e6.mu) {
        c.note("mu(E6 family) = " + e6.mu->to_string());
    }
    return c;
}

checker a2k_codims(const jet_limits &limits)
{
    checker c;
    for (unsigned k = 1; k <= 4; ++k) {
        const curve_branch g = curve_branch::make(P("t^2"), polynomial::variable("t", 2 * k + 1));
        const auto r = codims(g.as_germ(), limits);
        c.expect(r.codim_ae == k && r.codim_f == k - 1 && r.frontal_basis.size() == k - 1,
                 to_string(g) + ": got codim_Ae = " + std::to_string(r.codim_ae) +
                     ", codim_F = " + std::to_string(r.codim_f));
    }
    return c;
}

checker codim_formula(const jet_limits &limits)
{
    checker c;
    const std::vector<curve_branch> curves = {curve("t^2", "t^3"), curve("t^2", "t^5"), curve("t^3", "t^4"),
                                              curve("t^3", "t^5"), curve("t^4", "t^5+t^7"), curve("t^2", "t^7")};
    for (const auto &g : curves) {
        const auto r = codims(g.as_germ(), limits);
        const unsigned mult = std::min(g.p.order_in("t"), g.q.order_in("t"));
        c.expect(r.codim_f + mult == r.codim_ae + 1, to_string(g) + ": codim_F = " + std::to_string(r.codim_f) +
                                                         ", codim_Ae = " + std::to_string(r.codim_ae) +
                                                         ", mult = " + std::to_string(mult));
        c.note(to_string(g) + " " + std::to_string(r.codim_ae) + "/" + std::to_string(r.codim_f));
    }
    return c;
}

checker e6_reduction(const jet_limits &limits)
{
    checker c;
    const auto u = miniversal_unfolding(curve("t^3", "t^4"), limits);
    const auto r = frontal_reduction(u);
    c.expect(u.germ.p == P("t^3+t*u") && u.germ.q == P("t^4+t^2*v2+t*v1"), "miniversal unfolding of (t^3, t^4)");
    c.expect(r.mu_coeffs == std::vector<polynomial>{P("0"), P("4/3")}, "mu_0 = 0, mu_1 = 4/3");

    const auto oracle = monic_division(u.germ.q.diff("t"), u.germ.p.diff("t"), "t");
    const auto solved = solve_v_block(oracle.remainder, 3);
    c.expect(solved.has_value(), "coefficient matching solves the v-block");
    if (solved) {
        c.expect(r.eliminations == *solved, "eliminations " + str(r.eliminations) + " vs oracle " + str(*solved));
        c.expect(solved->at("v1").is_zero(), "v1 = 0");
        c.expect(solved->at("v2") == P("2/3*u"), "3 v2 = 2 u");
        c.expect(oracle.quotient.substitute(*solved) == r.mu("t"), "mu agrees with the quotient");
    }
    c.expect(r.reduced.has_value(), "reduced unfolding present");
    if (r.reduced) {
        const polynomial p = r.reduced->germ.p.substitute("u", P("3*v"));
        const polynomial q = r.reduced->germ.q.substitute("u", P("3*v"));
        c.expect(p == P("t^3+3*v*t") && q == P("t^4+2*v*t^2"), "u = 3v gives (v, t^3+3vt, t^4+2vt^2)");
    }
    // The relation as listed, v2 = 3/2 u, does not give a frontal unfolding.
    const bool listed = is_frontal(germ({"u"}, "t^3+t*u", "t^4+3/2*t^2*u"));
    c.expect(!listed, "listed relation 2 v2 = 3 u is not frontal");
    c.note("relation is 3u3 = 2u1; the listed 2u3 = 3u1 fails check_frontal");
    return c;
}

checker e8_reduction(const jet_limits &limits)
{
    checker c;
    const auto u = miniversal_unfolding(curve("t^3", "t^5"), limits);
    const auto r = frontal_reduction(u);
    c.expect(r.mu_coeffs == std::vector<polynomial>{P("-5/9*u"), P("4/3*w"), P("5/3")},
             "mu = (5/3, 4w/3, -5u/9)");
    c.expect(r.eliminations.contains("v1") && r.eliminations.at("v1") == P("-5/9*u^2"), "v1 = -5/9 u^2");

    const auto oracle = monic_division(u.germ.q.diff("t"), u.germ.p.diff("t"), "t");
    const auto solved = solve_v_block(oracle.remainder, 3);
    c.expect(solved.has_value(), "coefficient matching solves the v-block");
    if (solved) {
        c.expect(r.eliminations == *solved, "eliminations " + str(r.eliminations) + " vs oracle " + str(*solved));
        c.expect(solved->at("v2") == P("2/3*u*w"), "oracle v2 = 2/3 u w");
        const polynomial listed_rem =
            oracle.remainder.substitute({{"v1", solved->at("v1")}, {"v2", P("2/3*w")}});
        c.expect(!listed_rem.is_zero(), "listed v2 = 2/3 w leaves a nonzero remainder");
        c.note("v2 = " + solved->at("v2").to_string() + "; listed 2/3*w flagged");
    }
    return c;
}

checker e8_stable(const jet_limits &limits)
{
    checker c;
    const curve_branch g = curve("t^3", "t^5");
    const auto t1 = t1_kfe_basis(g, limits);
    c.expect(t1.dim == 2 && t1.basis.size() == 2, "dim T^1_KFe = 2");

    const frontal_germ f = require_frontal(g.as_germ());
    const auto fs = jet_frontal_space(f, t1.stabilized_at);
    const auto tk = jet_tangent_kfe(f, fs);
    const std::vector<vector_field> expected = {{P("9*t"), P("5*t^3")}, {P("0"), P("t^4")}};
    echelon_basis with_expected = tk.basis;
    for (const auto &v : expected) {
        c.expect(fs.contains(v), "expected class lies in F(g)");
        c.expect(with_expected.insert(fs.space.encode(v)), "expected classes independent modulo TK_Fe");
    }
    for (const auto &v : t1.basis) {
        c.expect(with_expected.contains(fs.space.encode(v)), "representative in the span of the expected classes");
    }

    const auto s = stable_unfolding_generator(g, limits);
    c.expect(s.minimal_params == 2 && s.unfolding.params.size() == 2, "2-parameter unfolding");
    c.expect(is_frontal(s.unfolding), "generated unfolding is frontal");
    c.expect(unfolding_stable_via_base(g, slice_velocities(s.unfolding), limits), "unfolding_stable_via_base");
    c.note("F = " + s.unfolding.p.to_string() + ", " + s.unfolding.q.to_string());

    const bool listed = is_frontal(germ({"u", "v"}, "t^3+9*u*t", "t^5+5*u*t^3+1/3*v*t^4+6*u*v*t^2"));
    c.expect(!listed, "listed normal form with 1/3*v*t^4 is not frontal");
    c.note("listed normal form fails check_frontal");
    return c;
}

checker sandwich(const jet_limits &limits)
{
    checker c;
    const std::vector<curve_branch> curves = {curve("t^3", "t^4"), curve("t^3", "t^5"), curve("t^4", "t^5+t^7")};
    for (const auto &g : curves) {
        const auto rep = t1_kfe_basis(g, limits);
        const frontal_germ f = require_frontal(g.as_germ());
        const auto fs = jet_frontal_space(f, rep.stabilized_at);
        const auto tk = jet_tangent_kfe(f, fs);
        const unsigned alpha = g.p.order_in("t");
        const polynomial mu = *div_exact(g.q.diff("t"), g.p.diff("t"), "t");

        std::vector<vector_field> upper;
        echelon_basis lower = tk.basis;
        for (unsigned j = 1; j + 2 <= alpha; ++j) {
            const vector_field tj = {polynomial::variable("t", j),
                                     (polynomial::variable("t", j - 1) * mu).scaled(rational(j)).integrate("t")};
            c.expect(fs.contains(tj), to_string(g) + ": T_" + std::to_string(j) + " in F(g)");
            c.expect(lower.insert(fs.space.encode(tj)),
                     to_string(g) + ": T_" + std::to_string(j) + " independent modulo TK_Fe");
            upper.push_back(tj);
        }
        for (unsigned k = alpha; k <= 2 * alpha - 1; ++k) {
            upper.push_back({polynomial(), polynomial::variable("t", k)});
        }
        echelon_basis upper_span = tk.basis;
        for (const auto &v : upper) {
            upper_span.insert(fs.space.encode(v));
        }
        echelon_basis quotient = tk.basis;
        for (const auto &v : rep.basis) {
            c.expect(upper_span.contains(fs.space.encode(v)), to_string(g) + ": class within the upper bound");
            c.expect(quotient.insert(fs.space.encode(v)), to_string(g) + ": representatives independent");
        }
        c.expect(rep.lower_bound_holds && rep.upper_bound_holds, to_string(g) + ": library bound flags");
        c.note(to_string(g) + " dim " + std::to_string(rep.dim));
    }
    return c;
}

checker mond_curves(const jet_limits &limits)
{
    checker c;
    std::vector<std::pair<curve_branch, std::vector<unsigned>>> cases;
    for (unsigned k = 1; k <= 4; ++k) {
        cases.push_back({curve_branch::make(P("t^2"), polynomial::variable("t", 2 * k + 1)), {2, 2 * k + 1}});
    }
    cases.push_back({curve("t^3", "t^4"), {3, 4}});
    for (const auto &[g, gens] : cases) {
        const unsigned delta = brute_gap_count(gens);
        const int mu_f = static_cast<int>(delta) - static_cast<int>(gens.front()) + 1;
        const auto r = codims(g.as_germ(), limits);
        const auto inv = invariant_report(g, limits);
        c.expect(mu_f == static_cast<int>(r.codim_f), to_string(g) + ": delta - mult + 1 = " + std::to_string(mu_f) +
                                                            ", codim_F = " + std::to_string(r.codim_f));
        c.expect(inv.frontal_milnor == static_cast<unsigned>(mu_f) && inv.mond_frontal_equality,
                 to_string(g) + ": invariant report");
    }
    return c;
}

checker delta_gaps(const jet_limits &)
{
    checker c;
    const std::vector<std::pair<std::vector<unsigned>, unsigned>> cases = {
        {{2, 3}, 1}, {{3, 4}, 3}, {{3, 5}, 4}, {{4, 5}, 6}};
    for (const auto &[gens, expected] : cases) {
        const auto s = numerical_semigroup::from_generators(gens);
        const unsigned brute = brute_gap_count(gens);
        c.expect(delta_formula(s) == rational(static_cast<long>(brute)) && brute == expected &&
                     delta_invariant(s) == expected,
                 s.to_string() + ": formula " + delta_formula(s).to_string() + ", gaps " + std::to_string(brute));
    }
    return c;
}

checker classification(const jet_limits &limits)
{
    checker c;
    std::set<std::string> found;
    for (const auto &g : enumerate_stable_slice_curves(limits)) {
        found.insert(to_string(g));
    }
    const std::set<std::string> expected = {to_string(curve("t^2", "t^3")), to_string(curve("t^2", "t^5")),
                                            to_string(curve("t^3", "t^4")), to_string(curve("t^3", "t^5")),
                                            to_string(curve("t^4", "t^5+t^7"))};
    c.expect(found == expected, "five stable slice curves");

    const auto table = build_table(limits);
    std::set<std::string> labels;
    unsigned listed_fail = 0;
    for (const auto &k : table) {
        labels.insert(k.label);
        const auto &f = k.normal_form;
        c.expect(is_frontal(f), k.label + ": normal form frontal");
        c.expect(k.stable && k.frontal_codim == 0, k.label + ": stable with codim_F = 0");
        c.expect(frontal_codimension(f, limits).value == 0, k.label + ": jet codim_F = 0");
        c.expect(generic_slice(f) == k.slice_curve, k.label + ": slice matches");
        const auto id = identify_stable_germ(f, 3, limits);
        c.expect(id.label == k.label && id.slice_signature_match, k.label + ": identify round trip");
        listed_fail += k.listed_verdict == "NotFrontal";
    }
    c.expect(labels == std::set<std::string>{"A_{2,0}", "A_{2,1}", "A_{3,0}", "A_{3,1}", "A_{4,0}"},
             "labels A_{2,0} .. A_{4,0}");
    c.note(std::to_string(listed_fail) + " listed forms fail check_frontal");
    return c;
}

checker multigerm(const jet_limits &limits)
{
    checker c;
    const frontal_germ cusp = require_frontal(curve("t^2", "t^3").as_germ());
    c.expect(multigerm_stable({cusp}, limits).stable, "single stable branch");
    const auto two = multigerm_stable({cusp, cusp}, limits);
    c.expect(!two.general_position && !two.stable, "two branches with tau = {0}");
    const auto pair = multigerm_stable(
        {require_frontal(curve("t", "t^2").as_germ()), require_frontal(curve("t", "-t").as_germ())}, limits);
    c.expect(pair.general_position && pair.stable, "complementary tau pair");

    // Two subspaces meet with codim(A n B) = codim A + codim B exactly when A + B is everything.
    auto oracle = [](const std::vector<std::vector<rational>> &a, const std::vector<std::vector<rational>> &b,
                     std::size_t m) {
        echelon_basis e;
        for (const auto *list : {&a, &b}) {
            for (const auto &v : *list) {
                sparse_vector s;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (!v[i].is_zero()) {
                        s.push_back({i, v[i]});
                    }
                }
                e.insert(s);
            }
        }
        return e.size() == m;
    };
    using sub = std::vector<std::vector<rational>>;
    const std::vector<std::pair<sub, sub>> configs = {
        {{}, {}}, {{{1, 0}}, {{0, 1}}}, {{{1, 0}}, {{2, 0}}}, {{{1, 0}, {0, 1}}, {}}, {{{1, 1}}, {{1, -1}}}};
    for (const auto &[a, b] : configs) {
        c.expect(general_position({a, b}, 2) == oracle(a, b, 2), "general_position agrees with the rank oracle");
    }
    c.expect(general_position({{}}, 2), "one subspace is always in general position");
    return c;
}

struct random_source {
    std::mt19937_64 rng;

    long integer(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(rng);
    }
    rational coefficient()
    {
        long n = 0;
        while (n == 0) {
            n = integer(-4, 4);
        }
        return rational(n, integer(1, 3));
    }
    polynomial poly(const std::vector<std::string> &vars, unsigned max_degree, unsigned terms)
    {
        polynomial p;
        for (unsigned i = 0; i < terms; ++i) {
            std::vector<monomial::factor> fs;
            long budget = integer(0, max_degree);
            for (const auto &v : vars) {
                const long e = integer(0, budget);
                budget -= e;
                fs.push_back({v, static_cast<unsigned>(e)});
            }
            p += polynomial(coefficient(), monomial(fs));
        }
        return p;
    }
    // Polynomial in var with degrees lo .. hi, each coefficient present with probability 1/2.
    polynomial univariate(const std::string &var, unsigned lo, unsigned hi)
    {
        polynomial p;
        for (unsigned k = lo; k <= hi; ++k) {
            if (integer(0, 1)) {
                p += polynomial::variable(var, k).scaled(coefficient());
            }
        }
        return p;
    }
};

checker properties(std::uint64_t seed)
{
    checker c;
    random_source g{std::mt19937_64(seed)};
    const std::vector<std::string> xyz = {"x", "y", "z"};
    unsigned bad_ring = 0, bad_div = 0, bad_calc = 0;
    for (int i = 0; i < 200; ++i) {
        const polynomial a = g.poly(xyz, 3, 4), b = g.poly(xyz, 3, 4), d = g.poly(xyz, 3, 4);
        bad_ring += !((a + b) + d == a + (b + d) && a * b == b * a && (a * b) * d == a * (b * d) &&
                      a * (b + d) == a * b + a * d && a - a == polynomial() && a * polynomial(1) == a);
    }
    for (int i = 0; i < 100; ++i) {
        const polynomial a = g.poly(xyz, 3, 3);
        polynomial b;
        while (b.is_zero()) {
            b = g.poly(xyz, 3, 3);
        }
        const auto q = div_exact(a * b, b, "x");
        bad_div += !(q && *q == a);
    }
    for (int i = 0; i < 100; ++i) {
        const polynomial a = g.poly(xyz, 4, 5);
        bad_calc += !(a.integrate("y").diff("y") == a && a.diff("y").integrate("y") == a - a.set_zero({"y"}));
    }
    c.expect(bad_ring == 0, std::to_string(bad_ring) + " ring axiom failures");
    c.expect(bad_div == 0, std::to_string(bad_div) + " div/mul failures");
    c.expect(bad_calc == 0, std::to_string(bad_calc) + " diff/int failures");

    unsigned bad_inclusion = 0;
    for (int i = 0; i < 20; ++i) {
        const unsigned a = static_cast<unsigned>(g.integer(2, 4));
        const polynomial p = polynomial::variable("t", a) + g.univariate("t", a + 1, 4);
        polynomial mu;
        while (mu.is_zero()) {
            mu = g.univariate("t", 0, 3);
        }
        const polynomial q = (mu * p.diff("t")).integrate("t");
        const frontal_germ f = require_frontal(frontal_germ::make({"t"}, {}, p, q));
        const unsigned n = 10;
        const auto tae = jet_tangent_ae(f, n);
        const auto fs = jet_frontal_space(f, n);
        for (const auto &v : tae.basis.basis()) {
            if (!fs.basis.contains(v)) {
                ++bad_inclusion;
                c.note("TAe not in F for " + to_string(curve_branch::make(p, q)));
                break;
            }
        }
    }
    c.expect(bad_inclusion == 0, std::to_string(bad_inclusion) + " germs with TAe not inside F");

    unsigned bad_sum = 0;
    for (int i = 0; i < 10; ++i) {
        const unsigned a = static_cast<unsigned>(g.integer(2, 3));
        const polynomial p0 = polynomial::variable("t", a) + g.univariate("t", a + 1, a + 1);
        const polynomial mu0 = g.univariate("t", 0, 2);
        auto summand = [&](const std::string &param) {
            const polynomial s = polynomial::variable(param);
            const polynomial pf = p0 + s * g.univariate("t", 0, a - 1);
            const polynomial muf = mu0 + s * g.univariate("t", 0, 2);
            const polynomial qf = (muf * pf.diff("t")).integrate("t") + s.scaled(g.coefficient());
            return require_frontal(frontal_germ::make({"t"}, {param}, pf, qf));
        };
        const frontal_germ f = summand("u"), h = summand("v");
        const frontal_germ s = frontal_sum(summand_unfolding::from_germ(f), summand_unfolding::from_germ(h));
        const bool ok = s.mu && s.q.diff("t") == *s.mu * s.p.diff("t") &&
                        s.params == std::vector<std::string>{"u", "v"} && s.p.set_zero({"v"}) == f.p &&
                        s.q.set_zero({"v"}) == f.q && s.p.set_zero({"u"}) == h.p && s.q.set_zero({"u"}) == h.q;
        bad_sum += !ok;
    }
    c.expect(bad_sum == 0, std::to_string(bad_sum) + " frontal sums failing certificate or restriction");
    c.note("seed " + std::to_string(seed));
    return c;
}

} // namespace

std::vector<criterion_result> run_acceptance(std::uint64_t seed, const jet_limits &limits)
{
    struct criterion {
        const char *name;
        double budget;
        std::function<checker()> body;
    };
    const std::vector<criterion> all = {
        {"frontality criterion", 1, [&] { return frontality_criterion(limits); }},
        {"A_2k codimensions", 10, [&] { return a2k_codims(limits); }},
        {"codimension formula", 30, [&] { return codim_formula(limits); }},
        {"E6 frontal reduction", 1, [&] { return e6_reduction(limits); }},
        {"E8 frontal reduction", 1, [&] { return e8_reduction(limits); }},
        {"E8 stable unfolding", 10, [&] { return e8_stable(limits); }},
        {"T^1_KFe bounds", 30, [&] { return sandwich(limits); }},
        {"frontal Milnor number", 10, [&] { return mond_curves(limits); }},
        {"delta formula vs gaps", 1, [&] { return delta_gaps(limits); }},
        {"classification", 120, [&] { return classification(limits); }},
        {"multigerm criterion", 5, [&] { return multigerm(limits); }},
        {"property suites", 120, [&] { return properties(seed); }},
    };
    std::vector<criterion_result> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        criterion_result r;
        r.id = static_cast<unsigned>(i + 1);
        r.name = all[i].name;
        r.budget_seconds = all[i].budget;
        const auto start = std::chrono::steady_clock::now();
        checker c;
        try {
            c = all[i].body();
        } catch (const std::exception &e) {
            c.failures.push_back(std::string("threw ") + e.what());
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.seconds > r.budget_seconds) {
            c.failures.push_back("over the time budget");
        }
        r.pass = c.failures.empty();
        const auto &parts = r.pass ? c.notes : c.failures;
        for (const auto &s : parts) {
            r.detail += (r.detail.empty() ? "" : "; ") + s;
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_result(const criterion_result &r)
{
    char timing[64];
    std::snprintf(timing, sizeof timing, "(%.2f s of %.0f s)", r.seconds, r.budget_seconds);
    return std::string(r.pass ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.name + "  " + timing +
           (r.detail.empty() ? "" : "  " + r.detail);
}

} // namespace frontal::cli
