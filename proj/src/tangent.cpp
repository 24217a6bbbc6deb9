#include <algorithm>
#include <numeric>

#include <frontal/errors.hpp>
#include <frontal/tangent.hpp>

namespace frontal
{

namespace
{

sparse_vector unit(std::size_t i)
{
    return {{i, rational(1)}};
}

// Jet data of a germ at a fixed degree.
struct germ_jets {
    vector_jet_space space;
    std::size_t y_index;
    std::vector<sparse_vector> comps;

    germ_jets(const frontal_germ &f, unsigned n) : space(theta_space(f, n)), y_index(f.all_vars().size() - 1)
    {
        for (const auto &c : f.components()) {
            comps.push_back(space.scalars().encode(c));
        }
    }
    const monomial_basis &scalars() const
    {
        return space.scalars();
    }
    unsigned degree() const
    {
        return scalars().max_degree();
    }
};

frontal_germ certified(const frontal_germ &f)
{
    frontal_germ g = certify(f);
    if (!g.mu) {
        fail("MissingCertificate", "the germ (" + f.p.to_string() + ", " + f.q.to_string()
                                       + ") has no frontality certificate q_y = mu p_y");
    }
    return g;
}

// tf(m d/dv) for every variable v and monomial m.
void add_tf(const germ_jets &g, echelon_basis &out)
{
    const auto &b = g.scalars();
    const std::size_t nc = g.comps.size();
    for (std::size_t v = 0; v <= g.y_index; ++v) {
        std::vector<sparse_vector> d(nc);
        for (std::size_t c = 0; c < nc; ++c) {
            d[c] = b.diff(g.comps[c], v);
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::vector<sparse_vector> parts(nc);
            for (std::size_t c = 0; c < nc; ++c) {
                parts[c] = b.multiply(unit(i), d[c]);
            }
            out.insert(g.space.encode_components(parts));
        }
    }
}

// omega f(M o f e_j) for target monomials M whose pullback has order <= N.
void add_omega(const germ_jets &g, echelon_basis &out)
{
    const auto &b = g.scalars();
    const std::size_t nc = g.comps.size();
    std::vector<unsigned> ord(nc, infinite_order);
    for (std::size_t k = 0; k < nc; ++k) {
        if (!g.comps[k].empty()) {
            ord[k] = b.degree(g.comps[k].front().first);
        }
    }
    auto rec = [&](auto &&self, std::size_t k, const sparse_vector &prod, unsigned weight) -> void {
        if (k == nc) {
            for (std::size_t j = 0; j < nc; ++j) {
                std::vector<sparse_vector> parts(nc);
                parts[j] = prod;
                out.insert(g.space.encode_components(parts));
            }
            return;
        }
        sparse_vector cur = prod;
        unsigned w = weight;
        while (true) {
            self(self, k + 1, cur, w);
            if (ord[k] == infinite_order || w + ord[k] > g.degree()) {
                break;
            }
            w += ord[k];
            cur = b.multiply(cur, g.comps[k]);
            if (cur.empty()) {
                break;
            }
        }
    };
    rec(rec, 0, unit(0), 0);
}

jet_subspace empty_subspace(const germ_jets &g, subspace_label label)
{
    return {g.space, g.degree(), label, {}};
}

// Removes the constant part of each vector: the remaining vectors span F_0 when the
// constant fields belong to the space.
echelon_basis without_constants(const jet_subspace &s)
{
    const std::size_t nc = s.space.components();
    echelon_basis out;
    for (auto v : s.basis.basis()) {
        v.erase(std::remove_if(v.begin(), v.end(), [nc](const auto &e) { return e.first < nc; }), v.end());
        out.insert(std::move(v));
    }
    return out;
}

mpz_class lcm_of_denominators(const vector_field &v)
{
    mpz_class l = 1;
    for (const auto &c : v) {
        for (const auto &[m, x] : c.terms()) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.value().get_den_mpz_t());
        }
    }
    return l;
}

// Rescales to integer coefficients with content 1 and a positive leading coefficient.
vector_field primitive(const vector_field &v)
{
    const mpz_class l = lcm_of_denominators(v);
    mpz_class g = 0;
    std::optional<int> lead_sign;
    for (const auto &c : v) {
        for (const auto &[m, x] : c.terms()) {
            mpz_class num = x.value().get_num() * (l / x.value().get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        }
        if (!lead_sign && !c.is_zero()) {
            lead_sign = c.terms().rbegin()->second.sign();
        }
    }
    if (g == 0) {
        return v;
    }
    rational factor{mpq_class(l, g)};
    if (lead_sign && *lead_sign < 0) {
        factor = -factor;
    }
    vector_field r;
    for (const auto &c : v) {
        r.push_back(c.scaled(factor));
    }
    return r;
}

std::vector<std::vector<rational>> canonical_span(std::vector<std::vector<rational>> vs, std::size_t ambient)
{
    rational_matrix m(vs.size(), ambient);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = 0; j < ambient; ++j) {
            m(i, j) = vs[i][j];
        }
    }
    const auto r = rref(m);
    std::vector<std::vector<rational>> out;
    for (std::size_t i = 0; i < r.rank; ++i) {
        out.push_back(r.reduced.row(i));
    }
    return out;
}

sparse_vector encode_field(const vector_jet_space &space, const vector_field &v)
{
    return space.encode(v);
}

} // namespace

const char *to_string(subspace_label l)
{
    switch (l) {
        case subspace_label::tae:
            return "TAe";
        case subspace_label::frontal:
            return "F";
        case subspace_label::frontal0:
            return "F0";
        case subspace_label::tkfe:
            return "TKFe";
        case subspace_label::full:
            break;
    }
    return "full";
}

std::vector<vector_field> jet_subspace::fields() const
{
    std::vector<vector_field> out;
    for (const auto &v : basis.basis()) {
        out.push_back(space.decode(v));
    }
    return out;
}

vector_jet_space theta_space(const frontal_germ &f, unsigned n)
{
    return vector_jet_space(monomial_basis(f.all_vars(), n), f.transverse_vars().size() + 2);
}

jet_subspace jet_tangent_ae(const frontal_germ &f, unsigned n)
{
    const germ_jets g(f, n);
    jet_subspace s = empty_subspace(g, subspace_label::tae);
    add_tf(g, s.basis);
    add_omega(g, s.basis);
    return s;
}

jet_subspace jet_frontal_space(const frontal_germ &f, unsigned n)
{
    if (!f.mu) {
        fail("MissingCertificate", "F(f) needs the frontality certificate mu");
    }
    if (n == 0) {
        fail("InvalidArgument", "jet degree must be at least 1");
    }
    const germ_jets g(f, n);
    const auto &b = g.scalars();
    const std::size_t nz = f.transverse_vars().size();
    const nash_lift lift = make_nash_lift(f);
    std::vector<sparse_vector> coef;
    for (std::size_t j = 0; j < nz; ++j) {
        coef.push_back(scale(b.encode(lift.fibre[j]), rational(-1)));
    }
    coef.push_back(scale(b.encode(*f.mu), rational(-1)));
    coef.push_back(unit(0));

    // Multiples of p_y, known modulo m^n.
    const sparse_vector py = b.diff(g.comps[nz], g.y_index);
    echelon_basis w;
    for (std::size_t i = 0; i < b.degree_begin(n); ++i) {
        w.insert(b.truncate(b.multiply(unit(i), py), n - 1));
    }
    std::vector<sparse_vector> images;
    images.reserve(g.space.size());
    for (std::size_t col = 0; col < g.space.size(); ++col) {
        const auto [c, i] = g.space.locate(col);
        const sparse_vector dm = b.diff(unit(i), g.y_index);
        images.push_back(w.reduce(b.truncate(b.multiply(coef[c], dm), n - 1)));
    }
    jet_subspace s = empty_subspace(g, subspace_label::frontal);
    for (auto &v : kernel(images)) {
        s.basis.insert(std::move(v));
    }
    return s;
}

jet_subspace jet_tangent_kfe(const frontal_germ &f, const jet_subspace &frontal_space)
{
    const germ_jets g(f, frontal_space.degree);
    const auto &b = g.scalars();
    jet_subspace s = empty_subspace(g, subspace_label::tkfe);
    add_tf(g, s.basis);
    for (const auto &xi : frontal_space.basis.basis()) {
        const auto parts = g.space.split(xi);
        for (const auto &fk : g.comps) {
            std::vector<sparse_vector> prod(parts.size());
            for (std::size_t c = 0; c < parts.size(); ++c) {
                prod[c] = b.multiply(fk, parts[c]);
            }
            s.basis.insert(g.space.encode_components(prod));
        }
    }
    return s;
}

unsigned initial_jet_degree(const frontal_germ &f, unsigned cap)
{
    const auto z = f.transverse_vars();
    unsigned o = f.q.set_zero(z).order_in(f.y());
    if (o == infinite_order) {
        o = f.p.set_zero(z).order_in(f.y());
    }
    if (o == infinite_order) {
        o = 1;
    }
    const unsigned n0 = 2 * (o + 2);
    return std::max(2u, std::min(n0, cap >= 4 ? cap - 4 : 0u));
}

codim_report codims(const frontal_germ &f0, const jet_limits &limits)
{
    const frontal_germ f = certified(f0);
    const unsigned cap = limits.cap_for(f);
    using dims = std::pair<unsigned, unsigned>;
    const auto st = stabilize<dims>(
        initial_jet_degree(f, cap), cap,
        [&](unsigned n) -> dims {
            const auto tae = jet_tangent_ae(f, n);
            const auto fs = jet_frontal_space(f, n);
            return {static_cast<unsigned>(tae.space.size() - tae.dim()), static_cast<unsigned>(fs.dim() - tae.dim())};
        },
        "codimension of (" + f.p.to_string() + ", " + f.q.to_string() + ")");

    codim_report r;
    r.codim_ae = st.value.first;
    r.codim_f = st.value.second;
    r.stabilized_at = st.degree;
    r.certified_up_to = st.certified;

    const auto tae = jet_tangent_ae(f, st.degree);
    const auto fs = jet_frontal_space(f, st.degree);
    echelon_basis e = tae.basis;
    for (std::size_t col = 0; col < fs.space.size() && r.frontal_basis.size() < r.codim_f; ++col) {
        if (fs.basis.contains(unit(col)) && e.insert(unit(col))) {
            r.frontal_basis.push_back(fs.space.decode(unit(col)));
        }
    }
    for (const auto &v : fs.basis.basis()) {
        if (r.frontal_basis.size() >= r.codim_f) {
            break;
        }
        if (e.insert(v)) {
            r.frontal_basis.push_back(fs.space.decode(v));
        }
    }
    return r;
}

stabilized<unsigned> frontal_codimension(const frontal_germ &f0, const jet_limits &limits)
{
    const frontal_germ f = certified(f0);
    const unsigned cap = limits.cap_for(f);
    return stabilize<unsigned>(
        initial_jet_degree(f, cap), cap,
        [&](unsigned n) {
            return static_cast<unsigned>(jet_frontal_space(f, n).dim() - jet_tangent_ae(f, n).dim());
        },
        "frontal codimension of (" + f.p.to_string() + ", " + f.q.to_string() + ")");
}

std::vector<vector_field> tj_generators(const curve_branch &g)
{
    const frontal_germ f = certified(g.as_germ());
    const unsigned alpha = std::min(g.p.order_in(g.var), g.q.order_in(g.var));
    std::vector<vector_field> out;
    for (unsigned j = 1; j + 2 <= alpha; ++j) {
        const polynomial tj = polynomial::variable(g.var, j);
        const polynomial bj = (polynomial(rational(static_cast<long>(j))) * polynomial::variable(g.var, j - 1) * *f.mu)
                                  .integrate(g.var);
        out.push_back({tj, bj});
    }
    return out;
}

t1_kfe_report t1_kfe_basis(const curve_branch &g, const jet_limits &limits)
{
    t1_kfe_report r;
    if (g.is_immersive()) {
        r.lower_bound_holds = r.upper_bound_holds = true;
        return r;
    }
    const frontal_germ f = certified(g.as_germ());
    const unsigned alpha = g.p.order_in(g.var);
    if (g.q.order_in(g.var) < alpha) {
        fail("InvalidCurve", "expected the first component to realize the multiplicity");
    }
    const unsigned cap = limits.cap_for(f);
    const auto st = stabilize<unsigned>(
        initial_jet_degree(f, cap), cap,
        [&](unsigned n) {
            const auto fs = jet_frontal_space(f, n);
            const auto tk = jet_tangent_kfe(f, fs);
            return static_cast<unsigned>(without_constants(fs).size() - tk.dim());
        },
        "T^1_KFe of (" + g.p.to_string() + ", " + g.q.to_string() + ")");
    r.dim = st.value;
    r.stabilized_at = st.degree;
    r.certified_up_to = st.certified;

    const auto fs = jet_frontal_space(f, st.degree);
    const auto tk = jet_tangent_kfe(f, fs);
    const echelon_basis f0 = without_constants(fs);
    echelon_basis e = tk.basis;
    const polynomial zero;

    const auto tjs = tj_generators(g);
    std::vector<vector_field> upper;
    for (const auto &t : tjs) {
        upper.push_back(primitive(t));
    }
    for (unsigned k = alpha; k <= 2 * alpha - 1; ++k) {
        upper.push_back({zero, polynomial::variable(g.var, k)});
    }
    std::size_t from_upper = 0;
    for (std::size_t i = 0; i < upper.size() && r.basis.size() < r.dim; ++i) {
        const auto v = fs.space.encode(upper[i]);
        if (f0.contains(v) && e.insert(v)) {
            r.basis.push_back(upper[i]);
            ++from_upper;
            if (i < tjs.size()) {
                ++r.tj_count;
            }
        }
    }
    // Fallback representatives if the upper-bound candidates do not span the quotient.
    for (std::size_t col = fs.space.components(); col < fs.space.size() && r.basis.size() < r.dim; ++col) {
        if (f0.contains(unit(col)) && e.insert(unit(col))) {
            r.basis.push_back(fs.space.decode(unit(col)));
        }
    }
    for (const auto &v : f0.basis()) {
        if (r.basis.size() >= r.dim) {
            break;
        }
        if (e.insert(v)) {
            r.basis.push_back(fs.space.decode(v));
        }
    }
    r.lower_bound_holds = r.tj_count == tjs.size();
    r.upper_bound_holds = from_upper == r.dim;
    return r;
}

std::vector<vector_field> slice_velocities(const frontal_germ &f)
{
    const auto z = f.transverse_vars();
    std::vector<vector_field> out;
    for (const auto &v : z) {
        out.push_back({f.p.diff(v).set_zero(z), f.q.diff(v).set_zero(z)});
    }
    return out;
}

tau_report tau_subspace(const frontal_germ &f0, const jet_limits &limits)
{
    const frontal_germ f = certified(f0);
    const curve_branch g = generic_slice(f);
    const frontal_germ base = certified(g.as_germ());
    const auto vel = slice_velocities(f);
    const std::size_t ambient = vel.size() + 2;
    using span = std::vector<std::vector<rational>>;
    const unsigned cap = limits.cap_for(base);
    const auto st = stabilize<span>(
        initial_jet_degree(base, cap), cap,
        [&](unsigned n) {
            const auto fs = jet_frontal_space(base, n);
            const auto tk = jet_tangent_kfe(base, fs);
            // Image of each target basis vector under the isomorphism onto the slice.
            std::vector<sparse_vector> images;
            const polynomial zero, one(1);
            for (const auto &v : vel) {
                images.push_back(tk.basis.reduce(scale(fs.space.encode(v), rational(-1))));
            }
            images.push_back(tk.basis.reduce(fs.space.encode({one, zero})));
            images.push_back(tk.basis.reduce(fs.space.encode({zero, one})));
            span vs;
            for (const auto &k : kernel(images)) {
                std::vector<rational> dense(ambient);
                for (const auto &[i, x] : k) {
                    dense[i] = x;
                }
                vs.push_back(std::move(dense));
            }
            return canonical_span(std::move(vs), ambient);
        },
        "tau of (" + f.p.to_string() + ", " + f.q.to_string() + ")");
    return {st.value, ambient, st.certified};
}

namespace
{

// dim(S + F) - dim S and dim(S + F) - dim F, with S built from `seed` plus extra vectors.
std::pair<unsigned, unsigned> span_gap(const jet_subspace &fs, echelon_basis s, const std::vector<vector_field> &extra)
{
    for (const auto &v : extra) {
        s.insert(encode_field(fs.space, v));
    }
    echelon_basis sum = s;
    for (const auto &v : fs.basis.basis()) {
        sum.insert(v);
    }
    return {static_cast<unsigned>(sum.size() - s.size()), static_cast<unsigned>(sum.size() - fs.dim())};
}

} // namespace

bool unfolding_stable_via_base(const curve_branch &g, const std::vector<vector_field> &velocities,
                               const jet_limits &limits)
{
    const frontal_germ f = certified(g.as_germ());
    const unsigned cap = limits.cap_for(f);
    using gap = std::pair<unsigned, unsigned>;
    const auto st = stabilize<gap>(
        initial_jet_degree(f, cap), cap,
        [&](unsigned n) {
            const auto fs = jet_frontal_space(f, n);
            const auto tk = jet_tangent_kfe(f, fs);
            std::vector<vector_field> extra = velocities;
            extra.push_back({polynomial(1), polynomial()});
            extra.push_back({polynomial(), polynomial(1)});
            return span_gap(fs, tk.basis, extra);
        },
        "stability test over (" + g.p.to_string() + ", " + g.q.to_string() + ")");
    return st.value == gap{0, 0};
}

bool unfolding_versal_via_base(const curve_branch &g, const std::vector<vector_field> &velocities,
                               const jet_limits &limits)
{
    const frontal_germ f = certified(g.as_germ());
    const unsigned cap = limits.cap_for(f);
    using gap = std::pair<unsigned, unsigned>;
    const auto st = stabilize<gap>(
        initial_jet_degree(f, cap), cap,
        [&](unsigned n) {
            const auto fs = jet_frontal_space(f, n);
            const auto tae = jet_tangent_ae(f, n);
            return span_gap(fs, tae.basis, velocities);
        },
        "versality test over (" + g.p.to_string() + ", " + g.q.to_string() + ")");
    return st.value == gap{0, 0};
}

bool is_stable(const frontal_germ &f0, const jet_limits &limits)
{
    const frontal_germ f = certified(f0);
    return unfolding_stable_via_base(generic_slice(f), slice_velocities(f), limits);
}

bool general_position(const std::vector<std::vector<std::vector<rational>>> &subspaces, std::size_t ambient)
{
    // Stack the annihilators of all subspaces; surjectivity onto the sum of quotients is full row rank.
    std::vector<std::vector<rational>> rows;
    for (const auto &s : subspaces) {
        rational_matrix m(s.size(), ambient);
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = 0; j < ambient; ++j) {
                m(i, j) = s[i][j];
            }
        }
        for (auto &a : rref(m).nullspace) {
            rows.push_back(std::move(a));
        }
    }
    if (rows.empty()) {
        return true;
    }
    rational_matrix stacked(rows.size(), ambient);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < ambient; ++j) {
            stacked(i, j) = rows[i][j];
        }
    }
    return rref(stacked).rank == rows.size();
}

multigerm_report multigerm_stable(const std::vector<frontal_germ> &branches, const jet_limits &limits)
{
    if (branches.empty()) {
        fail("InvalidArgument", "a multigerm needs at least one branch");
    }
    multigerm_report r;
    const std::size_t target = branches.front().dimension() + 1;
    std::vector<std::vector<std::vector<rational>>> spans;
    for (const auto &b : branches) {
        if (b.dimension() + 1 != target) {
            fail("ArityMismatch", "multigerm branches must share the target dimension");
        }
        r.branch_stable.push_back(is_stable(b, limits));
        r.taus.push_back(tau_subspace(b, limits));
        spans.push_back(r.taus.back().basis);
    }
    r.general_position = general_position(spans, target);
    r.stable = r.general_position && std::all_of(r.branch_stable.begin(), r.branch_stable.end(), [](bool s) { return s; });
    return r;
}

} // namespace frontal
