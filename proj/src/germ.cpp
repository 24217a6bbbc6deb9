#include <algorithm>
#include <set>

#include <frontal/errors.hpp>
#include <frontal/germ.hpp>
#include <frontal/jet_space.hpp>
#include <frontal/linalg.hpp>

namespace frontal
{

namespace
{

void check_names(const std::vector<std::string> &names)
{
    std::set<std::string> seen;
    for (const auto &n : names) {
        if (n.empty() || !seen.insert(n).second) {
            fail("InvalidGerm", "variable names must be nonempty and distinct ('" + n + "')");
        }
    }
}

void check_coverage(const polynomial &p, const std::vector<std::string> &names, const char *what)
{
    for (const auto &v : p.variables()) {
        if (std::find(names.begin(), names.end(), v) == names.end()) {
            fail("UndeclaredVariable", std::string(what) + " uses undeclared variable '" + v + "'");
        }
    }
}

std::optional<polynomial> jet_quotient(const polynomial &num, const polynomial &den, std::vector<std::string> vars,
                                       unsigned n)
{
    const monomial_basis basis(std::move(vars), n);
    const sparse_vector nv = basis.encode(num);
    const sparse_vector dv = basis.encode(den);
    const std::size_t m = basis.size();
    // Unknown coefficients of the quotient over the whole basis; one equation per monomial.
    rational_matrix a(m, m + 1);
    for (std::size_t j = 0; j < m; ++j) {
        const sparse_vector col = basis.multiply(sparse_vector{{j, rational(1)}}, dv);
        for (const auto &[i, c] : col) {
            a(i, j) = c;
        }
    }
    for (const auto &[i, c] : nv) {
        a(i, m) = c;
    }
    const rref_result r = rref(a);
    if (!r.pivots.empty() && r.pivots.back() == m) {
        return std::nullopt;
    }
    sparse_vector sol;
    for (std::size_t k = 0; k < r.rank; ++k) {
        const rational &v = r.reduced(k, m);
        if (!v.is_zero()) {
            sol.emplace_back(r.pivots[k], v);
        }
    }
    std::sort(sol.begin(), sol.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    return basis.decode(sol);
}

std::vector<std::string> variables_of(const polynomial &p, const polynomial &q, const std::string &y)
{
    auto vs = p.variables();
    for (const auto &v : q.variables()) {
        vs.insert(v);
    }
    vs.insert(y);
    return {vs.begin(), vs.end()};
}

} // namespace

frontal_germ frontal_germ::make(std::vector<std::string> source_vars, std::vector<std::string> params, polynomial p,
                                polynomial q)
{
    if (source_vars.empty()) {
        fail("InvalidGerm", "a germ needs at least one source variable");
    }
    frontal_germ f{std::move(source_vars), std::move(params), std::move(p), std::move(q), std::nullopt};
    check_names(f.all_vars());
    const auto names = f.all_vars();
    check_coverage(f.p, names, "p");
    check_coverage(f.q, names, "q");
    if (!f.p.constant_term().is_zero() || !f.q.constant_term().is_zero()) {
        fail("InvalidGerm", "the germ must send the origin to the origin");
    }
    return f;
}

std::vector<std::string> frontal_germ::transverse_vars() const
{
    std::vector<std::string> r = params;
    r.insert(r.end(), source_vars.begin(), source_vars.end() - 1);
    return r;
}

std::vector<std::string> frontal_germ::all_vars() const
{
    std::vector<std::string> r = params;
    r.insert(r.end(), source_vars.begin(), source_vars.end());
    return r;
}

std::vector<polynomial> frontal_germ::components() const
{
    std::vector<polynomial> r;
    for (const auto &z : transverse_vars()) {
        r.push_back(polynomial::variable(z));
    }
    r.push_back(p);
    r.push_back(q);
    return r;
}

curve_branch curve_branch::make(polynomial p, polynomial q, std::string var)
{
    for (const auto *c : {&p, &q}) {
        for (const auto &v : c->variables()) {
            if (v != var) {
                fail("InvalidCurve", "a curve branch is a polynomial map in '" + var + "' only; found '" + v + "'");
            }
        }
        if (!c->constant_term().is_zero()) {
            fail("InvalidCurve", "curve components must vanish at the origin");
        }
    }
    if (p.is_zero() && q.is_zero()) {
        fail("InvalidCurve", "constant curve branch");
    }
    return {std::move(p), std::move(q), std::move(var)};
}

bool curve_branch::is_immersive() const
{
    return p.order_in(var) == 1 || q.order_in(var) == 1;
}

frontal_germ curve_branch::as_germ() const
{
    return frontal_germ::make({var}, {}, p, q);
}

std::string to_string(const curve_branch &g)
{
    return "(" + g.p.to_string() + ", " + g.q.to_string() + ")";
}

const char *to_string(frontality::verdict v)
{
    switch (v) {
        case frontality::verdict::frontal:
            return "Frontal";
        case frontality::verdict::frontal_swapped:
            return "FrontalSwapped";
        case frontality::verdict::not_frontal:
            break;
    }
    return "NotFrontal";
}

frontality check_frontal(const polynomial &p, const polynomial &q, const std::string &y, jet_mode mode)
{
    const polynomial py = p.diff(y), qy = q.diff(y);
    if (py.is_zero() && qy.is_zero()) {
        fail("DegenerateGerm", "p_y and q_y both vanish identically");
    }
    frontality r;
    if (mode.truncated) {
        r.up_to_degree = mode.degree;
    }
    auto quotient = [&](const polynomial &num, const polynomial &den) -> std::optional<polynomial> {
        if (den.is_zero()) {
            return std::nullopt;
        }
        if (!mode.truncated) {
            return div_exact(num, den, y);
        }
        return jet_quotient(num, den, variables_of(p, q, y), mode.degree);
    };
    if (auto mu = quotient(qy, py)) {
        r.result = frontality::verdict::frontal;
        r.mu = std::move(mu);
    } else if (auto mu2 = quotient(py, qy)) {
        r.result = frontality::verdict::frontal_swapped;
        r.mu = std::move(mu2);
    }
    return r;
}

frontal_germ certify(frontal_germ f)
{
    if (f.mu) {
        return f;
    }
    auto r = check_frontal(f.p, f.q, f.y());
    if (r.result == frontality::verdict::frontal) {
        f.mu = r.mu;
    }
    return f;
}

frontal_germ require_frontal(frontal_germ f)
{
    f = certify(std::move(f));
    if (!f.mu) {
        fail("NotFrontal", "no certificate mu with q_y = mu p_y exists for p = " + f.p.to_string()
                               + ", q = " + f.q.to_string());
    }
    return f;
}

std::vector<polynomial> nash_lift::components() const
{
    std::vector<polynomial> r = base.components();
    r.insert(r.end(), fibre.begin(), fibre.end());
    return r;
}

nash_lift make_nash_lift(const frontal_germ &f)
{
    if (!f.mu) {
        fail("MissingCertificate", "the Nash lift needs the frontality certificate mu");
    }
    nash_lift l{f, {}};
    for (const auto &z : f.transverse_vars()) {
        l.fibre.push_back(f.q.diff(z) - *f.mu * f.p.diff(z));
    }
    l.fibre.push_back(*f.mu);
    return l;
}

lift_rank_report lift_rank(const frontal_germ &f)
{
    const nash_lift l = make_nash_lift(f);
    const auto vars = f.all_vars();
    const auto comps = l.components();
    rational_matrix jac(comps.size(), vars.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = 0; j < vars.size(); ++j) {
            jac(i, j) = comps[i].diff(vars[j]).constant_term();
        }
    }
    const auto r = rref(jac);
    lift_rank_report rep;
    rep.integral_corank = static_cast<unsigned>(vars.size() - r.rank);
    rep.wave_front = rep.integral_corank == 0;
    rep.singular_locus_generators = {f.p.diff(f.y()), f.mu->diff(f.y())};
    return rep;
}

one_form_check verify_one_form(const std::vector<polynomial> &f, const std::vector<polynomial> &nu,
                               const std::vector<std::string> &source_vars)
{
    if (f.size() != nu.size()) {
        fail("ArityMismatch", "map has " + std::to_string(f.size()) + " components but the one-form has "
                                  + std::to_string(nu.size()));
    }
    one_form_check r;
    r.degenerate = std::all_of(nu.begin(), nu.end(), [](const polynomial &c) { return c.constant_term().is_zero(); });
    r.holds = true;
    for (const auto &x : source_vars) {
        polynomial s;
        for (std::size_t i = 0; i < f.size(); ++i) {
            s += nu[i] * f[i].diff(x);
        }
        if (!s.is_zero()) {
            r.holds = false;
            break;
        }
    }
    return r;
}

curve_branch generic_slice(const frontal_germ &f)
{
    const auto z = f.transverse_vars();
    polynomial p = f.p.set_zero(z), q = f.q.set_zero(z);
    if (p.is_zero() && q.is_zero()) {
        fail("ConstantSlice", "the generic slice of the germ is constant");
    }
    return {std::move(p), std::move(q), f.y()};
}

std::vector<rational> value_at_origin(const std::vector<polynomial> &v)
{
    std::vector<rational> r;
    r.reserve(v.size());
    for (const auto &c : v) {
        r.push_back(c.constant_term());
    }
    return r;
}

} // namespace frontal
