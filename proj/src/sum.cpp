#include <optional>
#include <set>

#include <frontal/errors.hpp>
#include <frontal/sum.hpp>

namespace frontal
{

summand_unfolding summand_unfolding::from_germ(const frontal_germ &f0)
{
    const frontal_germ f = require_frontal(f0);
    summand_unfolding s;
    s.params = f.params;
    s.xs.assign(f.source_vars.begin(), f.source_vars.end() - 1);
    s.y = f.y();
    s.p = f.p;
    s.q = f.q;
    s.mu = *f.mu;
    const auto z = f.transverse_vars();
    s.base_p = f.p.set_zero(z);
    s.base_q = f.q.set_zero(z);
    s.base_mu = f.mu->set_zero(z);
    return s;
}

std::vector<std::string> summand_unfolding::transverse_vars() const
{
    std::vector<std::string> out = params;
    out.insert(out.end(), xs.begin(), xs.end());
    return out;
}

frontal_germ frontal_sum(const summand_unfolding &f, const summand_unfolding &g)
{
    if (f.y != g.y) {
        fail("BaseMismatch", "summands use different curve variables " + f.y + " and " + g.y);
    }
    std::set<std::string> seen;
    for (const auto &v : f.transverse_vars()) {
        seen.insert(v);
    }
    for (const auto &v : g.transverse_vars()) {
        if (seen.contains(v) || v == f.y) {
            fail("ParamCollision", "variable " + v + " occurs in both summands");
        }
    }
    if (!(f.base_p == g.base_p) || !(f.base_q == g.base_q) || !(f.base_mu == g.base_mu)) {
        fail("BaseMismatch", "base germs (" + f.base_p.to_string() + ", " + f.base_q.to_string() + ") and ("
                                 + g.base_p.to_string() + ", " + g.base_q.to_string() + ") differ");
    }
    const polynomial P = g.p + f.p - f.base_p;
    const polynomial mu = g.mu + f.mu - f.base_mu;
    const polynomial Q = (mu * P.diff(f.y)).integrate(f.y) + g.q.set_zero({g.y}) + f.q.set_zero({f.y});

    std::vector<std::string> params = f.params;
    params.insert(params.end(), g.params.begin(), g.params.end());
    std::vector<std::string> source = f.xs;
    source.insert(source.end(), g.xs.begin(), g.xs.end());
    source.push_back(f.y);
    frontal_germ out = frontal_germ::make(std::move(source), std::move(params), P, Q);
    const auto fr = check_frontal(P, Q, f.y);
    if (fr.result != frontality::verdict::frontal || !(*fr.mu == mu)) {
        fail("FrontalityLost", "frontal sum (" + P.to_string() + ", " + Q.to_string() + ") fails its certificate");
    }
    out.mu = mu;
    return out;
}

namespace
{

std::vector<std::string> generator_names(std::size_t k)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < k; ++i) {
        out.push_back(k <= 3 ? std::string(1, "uvw"[i]) : "u" + std::to_string(i + 1));
    }
    return out;
}

} // namespace

stable_unfolding stable_unfolding_generator(const curve_branch &g, const jet_limits &limits)
{
    const frontal_germ base = require_frontal(g.as_germ());
    const auto t1 = t1_kfe_basis(g, limits);
    stable_unfolding r;
    r.generators_used = t1.basis;
    r.minimal_params = t1.dim;
    r.certified_up_to = t1.certified_up_to;
    if (t1.basis.empty()) {
        r.unfolding = base;
    } else {
        const auto names = generator_names(t1.basis.size());
        std::optional<summand_unfolding> acc;
        for (std::size_t i = 0; i < t1.basis.size(); ++i) {
            const polynomial s = polynomial::variable(names[i]);
            const auto &xi = t1.basis[i];
            const polynomial P = g.p + s * xi[0], Q = g.q + s * xi[1];
            // The one-parameter piece must itself be frontal: P_t divides Q_t.
            const auto mu = div_exact(Q.diff(g.var), P.diff(g.var), g.var);
            if (!mu) {
                fail("FrontalityLost", "one-parameter unfolding (" + P.to_string() + ", " + Q.to_string()
                                           + ") is not frontal");
            }
            frontal_germ piece = frontal_germ::make({g.var}, {names[i]}, P, Q);
            piece.mu = *mu;
            const auto summand = summand_unfolding::from_germ(piece);
            acc = acc ? summand_unfolding::from_germ(frontal_sum(*acc, summand)) : summand;
        }
        frontal_germ out = frontal_germ::make({g.var}, acc->params, acc->p, acc->q);
        out.mu = acc->mu;
        r.unfolding = std::move(out);
    }
    r.stable = is_stable(r.unfolding, limits);
    return r;
}

} // namespace frontal
