#include <algorithm>

#include <frontal/errors.hpp>
#include <frontal/reduction.hpp>

namespace frontal
{

const char *to_string(param_role r)
{
    switch (r) {
        case param_role::u_block:
            return "u";
        case param_role::v_block:
            return "v";
        case param_role::w_block:
            break;
    }
    return "w";
}

std::vector<std::string> unfolding::params_with(param_role r) const
{
    std::vector<std::string> out;
    for (const auto &name : germ.params) {
        auto it = roles.find(name);
        if (it != roles.end() && it->second == r) {
            out.push_back(name);
        }
    }
    return out;
}

std::map<std::string, param_role> infer_roles(const frontal_germ &g)
{
    const std::string &t = g.y();
    const unsigned alpha = g.p.degree_in(t);
    const auto qc = g.q.coefficients_in(t);
    std::map<std::string, param_role> roles;
    for (const auto &name : g.params) {
        param_role r = param_role::w_block;
        if (g.p.variables().contains(name)) {
            r = param_role::u_block;
        } else {
            for (const auto &[k, c] : qc) {
                if (k < alpha && c.variables().contains(name)) {
                    r = param_role::v_block;
                    break;
                }
            }
        }
        roles.emplace(name, r);
    }
    return roles;
}

namespace
{

std::vector<std::string> block_names(const std::string &stem, std::size_t n, bool always_indexed)
{
    if (n == 1 && !always_indexed) {
        return {stem};
    }
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) {
        out.push_back(stem + std::to_string(i));
    }
    return out;
}

polynomial coefficient_or_zero(const std::map<unsigned, polynomial> &c, unsigned k)
{
    auto it = c.find(k);
    return it == c.end() ? polynomial() : it->second;
}

polynomial substituted(const polynomial &p, const std::map<std::string, polynomial> &values)
{
    return values.empty() ? p : p.substitute(values);
}

} // namespace

unfolding miniversal_unfolding(const curve_branch &g, const jet_limits &limits)
{
    const std::string &t = g.var;
    const unsigned alpha = g.p.order_in(t);
    if (alpha == infinite_order || !(g.p == polynomial::variable(t, alpha))) {
        fail("NotPuiseuxForm", "first component must be a pure power of " + t + ", got " + g.p.to_string());
    }
    const unsigned beta = g.q.order_in(t);
    if (beta != infinite_order && beta <= alpha) {
        fail("NotPuiseuxForm", "second component must have order greater than " + std::to_string(alpha));
    }
    const frontal_germ base = g.as_germ();
    const auto c = codims(base, limits);

    const auto us = block_names("u", alpha >= 2 ? alpha - 2 : 0, false);
    const auto vs = block_names("v", alpha - 1, true);
    const polynomial zero;
    polynomial P = g.p, Q = g.q;
    std::vector<vector_field> directions;
    for (std::size_t j = 0; j < us.size(); ++j) {
        const polynomial tj = polynomial::variable(t, static_cast<unsigned>(j + 1));
        P += polynomial::variable(us[j]) * tj;
        directions.push_back({tj, zero});
    }
    for (std::size_t j = 0; j < vs.size(); ++j) {
        const polynomial tj = polynomial::variable(t, static_cast<unsigned>(j + 1));
        Q += polynomial::variable(vs[j]) * tj;
        directions.push_back({zero, tj});
    }

    const auto tae = jet_tangent_ae(base, c.stabilized_at);
    echelon_basis e = tae.basis;
    for (const auto &d : directions) {
        if (!e.insert(tae.space.encode(d))) {
            fail("InconsistentCodims", "monomial deformation directions are dependent modulo T A_e");
        }
    }
    std::vector<unsigned> w_degrees;
    for (unsigned k = alpha + 1; k <= c.stabilized_at && directions.size() + w_degrees.size() < c.codim_ae; ++k) {
        if (e.insert(tae.space.encode({zero, polynomial::variable(t, k)}))) {
            w_degrees.push_back(k);
        }
    }
    if (directions.size() + w_degrees.size() != c.codim_ae) {
        fail("NoStabilization", "could not complete a basis of the A_e normal space of (" + g.p.to_string() + ", "
                                    + g.q.to_string() + ")");
    }
    const auto ws = block_names("w", w_degrees.size(), false);
    for (std::size_t i = 0; i < ws.size(); ++i) {
        Q += polynomial::variable(ws[i]) * polynomial::variable(t, w_degrees[i]);
    }

    unfolding u;
    std::vector<std::string> params;
    for (const auto &[names, role] : {std::pair{&us, param_role::u_block}, std::pair{&vs, param_role::v_block},
                                      std::pair{&ws, param_role::w_block}}) {
        for (const auto &n : *names) {
            params.push_back(n);
            u.roles.emplace(n, role);
        }
    }
    u.germ = frontal_germ::make({t}, std::move(params), std::move(P), std::move(Q));
    return u;
}

polynomial reduction_result::mu(const std::string &var) const
{
    polynomial m;
    for (std::size_t j = 0; j < mu_coeffs.size(); ++j) {
        m += mu_coeffs[j] * polynomial::variable(var, static_cast<unsigned>(j));
    }
    return m;
}

reduction_result frontal_reduction(const unfolding &gamma)
{
    const frontal_germ &f = gamma.germ;
    if (f.source_vars.size() != 1) {
        fail("InvalidArgument", "frontal reduction expects an unfolding of a plane curve");
    }
    const std::string &t = f.y();
    auto roles = infer_roles(f);
    for (const auto &[k, r] : gamma.roles) {
        roles[k] = r;
    }
    const unsigned a = f.p.degree_in(t), b = f.q.degree_in(t);
    if (a > b) {
        fail("DegreeOrderViolated", "deg_t P = " + std::to_string(a) + " exceeds deg_t Q = " + std::to_string(b));
    }
    const auto pc = f.p.coefficients_in(t), qc = f.q.coefficients_in(t);
    const polynomial lead = coefficient_or_zero(pc, a);
    if (a == 0 || !lead.is_constant() || lead.is_zero()) {
        fail("NotPuiseuxForm", "leading t-coefficient of P must be a nonzero constant");
    }
    auto p_at = [&](unsigned i) { return coefficient_or_zero(pc, i); };
    auto q_at = [&](unsigned i) { return coefficient_or_zero(qc, i); };
    auto krat = [](unsigned k) { return rational(static_cast<long>(k)); };

    // Coefficient of t^{k-1}: k q_k = sum_{i+j=k} i p_i mu_j, solved downward from k = b.
    const unsigned top = b - a;
    std::vector<polynomial> mu(top + 1);
    auto rhs_tail = [&](unsigned k, unsigned below) {
        polynomial s;
        for (unsigned i = 1; i < below && i <= k; ++i) {
            if (k - i <= top) {
                s += p_at(i).scaled(krat(i)) * mu[k - i];
            }
        }
        return s;
    };
    const rational lead_inv = rational(1) / (krat(a) * lead.constant_term());
    for (unsigned k = b; k >= a; --k) {
        mu[k - a] = (q_at(k).scaled(krat(k)) - rhs_tail(k, a)).scaled(lead_inv);
        if (k == a) {
            break;
        }
    }

    reduction_result r;
    std::vector<polynomial> equations;
    for (unsigned k = 1; k < a; ++k) {
        equations.push_back(q_at(k).scaled(krat(k)) - rhs_tail(k, k + 1));
    }
    std::vector<std::string> v_block;
    for (const auto &name : f.params) {
        if (roles[name] == param_role::v_block) {
            v_block.push_back(name);
        }
    }
    for (std::size_t e = 0; e < equations.size(); ++e) {
        const polynomial eq = substituted(equations[e], r.eliminations);
        if (eq.is_zero()) {
            continue;
        }
        std::optional<std::string> chosen;
        polynomial slope;
        for (const auto &v : v_block) {
            if (r.eliminations.contains(v) || eq.degree_in(v) != 1) {
                continue;
            }
            const polynomial c = eq.coefficients_in(v).at(1);
            if (c.is_constant()) {
                chosen = v;
                slope = c;
                break;
            }
        }
        if (!chosen) {
            r.failure = "NonAffineConstraint";
            for (std::size_t rest = e; rest < equations.size(); ++rest) {
                const polynomial left = substituted(equations[rest], r.eliminations);
                if (!left.is_zero()) {
                    r.residual.push_back(left);
                }
            }
            break;
        }
        const polynomial rest = eq - slope * polynomial::variable(*chosen);
        const polynomial sol = rest.scaled(rational(-1) / slope.constant_term());
        for (auto &[name, value] : r.eliminations) {
            value = value.substitute(*chosen, sol);
        }
        r.eliminations.emplace(*chosen, sol);
    }
    for (auto &m : mu) {
        m = substituted(m, r.eliminations);
    }
    r.mu_coeffs = std::move(mu);
    std::vector<std::string> survivors;
    for (const auto &name : f.params) {
        auto it = r.eliminations.find(name);
        if (it == r.eliminations.end()) {
            survivors.push_back(name);
            r.immersion_h.emplace(name, polynomial::variable(name));
        } else {
            r.immersion_h.emplace(name, it->second);
        }
    }
    if (r.failure) {
        return r;
    }

    polynomial P = substituted(f.p, r.eliminations), Q = substituted(f.q, r.eliminations);
    const auto fr = check_frontal(P, Q, t);
    const polynomial expected = r.mu(t);
    if (fr.result != frontality::verdict::frontal || !(*fr.mu == expected)) {
        fail("FrontalityLost", "reduced unfolding (" + P.to_string() + ", " + Q.to_string()
                                   + ") does not satisfy Q_t = mu P_t with mu = " + expected.to_string());
    }
    unfolding red;
    for (const auto &name : survivors) {
        red.roles.emplace(name, roles[name]);
    }
    red.germ = frontal_germ::make({t}, std::move(survivors), std::move(P), std::move(Q));
    red.germ.mu = expected;
    r.reduced = std::move(red);
    return r;
}

bool reduction_is_versal(const reduction_result &r, const jet_limits &limits)
{
    if (!r.reduced) {
        return false;
    }
    const frontal_germ &g = r.reduced->germ;
    return unfolding_versal_via_base(generic_slice(g), slice_velocities(g), limits);
}

} // namespace frontal
