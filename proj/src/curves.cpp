#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <frontal/curves.hpp>
#include <frontal/errors.hpp>

namespace frontal
{

numerical_semigroup numerical_semigroup::from_generators(std::vector<unsigned> gens)
{
    gens.erase(std::remove(gens.begin(), gens.end(), 0u), gens.end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    unsigned g = 0;
    for (auto v : gens) {
        g = std::gcd(g, v);
    }
    if (g != 1) {
        fail("InvalidSemigroup", "generators must have gcd 1");
    }
    // Elements up to the Frobenius bound by dynamic programming.
    const unsigned bound = gens.front() * gens.back() + 1;
    std::vector<bool> in(bound + 1, false);
    in[0] = true;
    for (unsigned v = 1; v <= bound; ++v) {
        for (auto a : gens) {
            if (a <= v && in[v - a]) {
                in[v] = true;
                break;
            }
        }
    }
    numerical_semigroup s;
    for (unsigned v = 1; v <= bound; ++v) {
        if (!in[v]) {
            s.gaps.push_back(v);
        }
    }
    s.conductor = s.gaps.empty() ? 0 : s.gaps.back() + 1;
    // Minimal generators: nonzero elements that are not sums of two nonzero elements.
    for (auto a : gens) {
        bool decomposable = false;
        for (unsigned x = 1; x < a && !decomposable; ++x) {
            decomposable = in[x] && in[a - x];
        }
        if (!decomposable) {
            s.generators.push_back(a);
        }
    }
    return s;
}

bool numerical_semigroup::contains(unsigned v) const
{
    return !std::binary_search(gaps.begin(), gaps.end(), v);
}

std::string numerical_semigroup::to_string() const
{
    std::string s = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        s += (i ? "," : "") + std::to_string(generators[i]);
    }
    return s + ">";
}

unsigned multiplicity(const curve_branch &g)
{
    return std::min(g.p.order_in(g.var), g.q.order_in(g.var));
}

numerical_semigroup value_semigroup(const curve_branch &g, unsigned degree_cap)
{
    const unsigned a = g.p.order_in(g.var), b = g.q.order_in(g.var);
    const unsigned v0 = std::min(a, b);
    if (v0 == 0 || v0 == infinite_order) {
        fail("InvalidCurve", "branch must be non-constant and vanish at the origin");
    }
    for (unsigned d = 4 * (v0 + 1); d <= degree_cap; d *= 2) {
        // Valuation echelon: one normalized element per attained order <= d.
        std::map<unsigned, polynomial> rows;
        auto insert = [&](polynomial h) {
            while (!h.is_zero()) {
                const unsigned o = h.order_in(g.var);
                if (o > d) {
                    return;
                }
                auto it = rows.find(o);
                if (it == rows.end()) {
                    const rational lead = h.coefficient(monomial::variable(g.var, o));
                    rows.emplace(o, h.scaled(rational(1) / lead));
                    return;
                }
                h -= it->second.scaled(h.coefficient(monomial::variable(g.var, o)));
                h = h.truncate(d);
            }
        };
        const polynomial pt = g.p.truncate(d), qt = g.q.truncate(d);
        // Pullbacks p^i q^j whose order i*a + j*b is at most d; a zero component contributes only its 0th power.
        auto within = [&](unsigned i, unsigned j) {
            const unsigned long wa = a == infinite_order ? (i == 0 ? 0 : d + 1ul) : 1ul * i * a;
            const unsigned long wb = b == infinite_order ? (j == 0 ? 0 : d + 1ul) : 1ul * j * b;
            return wa + wb <= d;
        };
        polynomial pi(1);
        for (unsigned i = 0; within(i, 0); ++i) {
            polynomial h = pi;
            for (unsigned j = 0; within(i, j); ++j) {
                insert(h);
                h = (h * qt).truncate(d);
            }
            pi = (pi * pt).truncate(d);
        }
        // All values >= c belong to the set once v0 consecutive values start at c.
        std::optional<unsigned> start;
        unsigned run = 0;
        for (unsigned v = 0; v <= d; ++v) {
            run = rows.contains(v) ? run + 1 : 0;
            if (run == v0) {
                start = v + 1 - v0;
                break;
            }
        }
        if (!start) {
            continue;
        }
        std::vector<unsigned> gens;
        for (const auto &kv : rows) {
            if (kv.first > 0 && kv.first <= *start + v0) {
                gens.push_back(kv.first);
            }
        }
        return numerical_semigroup::from_generators(std::move(gens));
    }
    fail("CapExceeded", "value semigroup of (" + g.p.to_string() + ", " + g.q.to_string()
                            + ") did not close up to degree " + std::to_string(degree_cap));
}

rational delta_formula(const numerical_semigroup &s)
{
    const auto &v = s.generators;
    rational sum(1);
    sum -= rational(static_cast<long>(v.front()));
    unsigned e_prev = v.front();
    for (std::size_t i = 1; i < v.size(); ++i) {
        const unsigned e = std::gcd(e_prev, v[i]);
        sum -= rational(static_cast<long>(v[i])) * (rational(1) - rational(static_cast<long>(e_prev), static_cast<long>(e)));
        e_prev = e;
    }
    return sum / rational(2);
}

unsigned delta_invariant(const numerical_semigroup &s)
{
    const rational f = delta_formula(s);
    const auto gaps = static_cast<long>(s.gaps.size());
    if (!(f == rational(gaps))) {
        fail("FormulaGapMismatch", "delta formula gives " + f.to_string() + " but " + s.to_string() + " has "
                                       + std::to_string(gaps) + " gaps");
    }
    return static_cast<unsigned>(gaps);
}

quasi_homogeneity is_quasihomogeneous(const curve_branch &g)
{
    quasi_homogeneity r;
    r.value = g.p.size() <= 1 && g.q.size() <= 1;
    if (!r.value) {
        r.warning = "syntactic test only: a component has several terms, which does not rule out "
                    "quasi-homogeneity after a change of coordinates";
    }
    return r;
}

curve_invariant_report invariant_report(const curve_branch &g, const jet_limits &limits)
{
    curve_invariant_report r;
    r.mult = multiplicity(g);
    r.semigroup = value_semigroup(g);
    r.delta = delta_invariant(r.semigroup);
    r.milnor = 2 * r.delta;
    r.image_milnor = r.delta;
    const auto c = codims(g.as_germ(), limits);
    r.codim_ae = c.codim_ae;
    r.codim_f = c.codim_f;
    r.certified_up_to = c.certified_up_to;
    if (c.codim_f + r.mult != c.codim_ae + 1) {
        fail("InconsistentCodims", "jets give codim_F = " + std::to_string(c.codim_f) + " but codim_Ae - mult + 1 = "
                                       + std::to_string(static_cast<long>(c.codim_ae) - r.mult + 1));
    }
    r.frontal_milnor = r.image_milnor + 1 - r.mult;
    r.tau_derived = r.codim_f + r.mult + r.delta - 1;
    r.quasi_homogeneous = is_quasihomogeneous(g);
    r.mond_frontal_equality = r.frontal_milnor == r.codim_f;
    r.mond_frontal_holds = r.frontal_milnor >= r.codim_f && (!r.quasi_homogeneous.value || r.mond_frontal_equality);
    return r;
}

} // namespace frontal
