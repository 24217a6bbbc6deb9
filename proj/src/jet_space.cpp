#include <algorithm>

#include <frontal/errors.hpp>
#include <frontal/jet_space.hpp>

namespace frontal
{

namespace
{

void compositions(std::size_t k, std::size_t nvars, unsigned remaining, std::vector<unsigned> &cur,
                  std::vector<std::vector<unsigned>> &out)
{
    if (k + 1 == nvars) {
        cur[k] = remaining;
        out.push_back(cur);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        cur[k] = e;
        compositions(k + 1, nvars, remaining - e, cur, out);
    }
}

sparse_vector from_map(const std::map<std::size_t, rational> &acc)
{
    sparse_vector v;
    v.reserve(acc.size());
    for (const auto &[i, c] : acc) {
        if (!c.is_zero()) {
            v.emplace_back(i, c);
        }
    }
    return v;
}

} // namespace

monomial_basis::monomial_basis(std::vector<std::string> vars, unsigned n) : vars_(std::move(vars)), n_(n)
{
    for (unsigned d = 0; d <= n_; ++d) {
        start_.push_back(exps_.size());
        if (vars_.empty()) {
            if (d == 0) {
                exps_.emplace_back();
            }
            continue;
        }
        std::vector<unsigned> cur(vars_.size(), 0);
        compositions(0, vars_.size(), d, cur, exps_);
    }
    deg_.reserve(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        unsigned d = 0;
        for (auto e : exps_[i]) {
            d += e;
        }
        deg_.push_back(d);
        index_.emplace(exps_[i], i);
    }
}

std::size_t monomial_basis::index(const std::vector<unsigned> &e) const
{
    auto it = index_.find(e);
    return it == index_.end() ? npos : it->second;
}

monomial monomial_basis::to_monomial(std::size_t i) const
{
    std::vector<monomial::factor> fs;
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        if (exps_[i][k] > 0) {
            fs.emplace_back(vars_[k], exps_[i][k]);
        }
    }
    return monomial(std::move(fs));
}

sparse_vector monomial_basis::encode(const polynomial &p) const
{
    std::map<std::size_t, rational> acc;
    for (const auto &[m, c] : p.terms()) {
        if (m.degree() > n_) {
            continue;
        }
        std::vector<unsigned> e(vars_.size(), 0);
        for (const auto &[name, k] : m.factors()) {
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) {
                fail("UndeclaredVariable", "variable '" + name + "' is not a coordinate of this jet space");
            }
            e[static_cast<std::size_t>(it - vars_.begin())] = k;
        }
        acc[index(e)] = c;
    }
    return from_map(acc);
}

polynomial monomial_basis::decode(const sparse_vector &v) const
{
    polynomial p;
    for (const auto &[i, c] : v) {
        p += polynomial(c, to_monomial(i));
    }
    return p;
}

sparse_vector monomial_basis::multiply(const sparse_vector &a, const sparse_vector &b) const
{
    std::map<std::size_t, rational> acc;
    std::vector<unsigned> e(vars_.size());
    for (const auto &[i, ca] : a) {
        for (const auto &[j, cb] : b) {
            if (deg_[i] + deg_[j] > n_) {
                // b is sorted by degree, so the remaining entries are all too large.
                break;
            }
            for (std::size_t k = 0; k < e.size(); ++k) {
                e[k] = exps_[i][k] + exps_[j][k];
            }
            auto [it, inserted] = acc.try_emplace(index(e), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
            }
        }
    }
    return from_map(acc);
}

sparse_vector monomial_basis::diff(const sparse_vector &a, std::size_t var) const
{
    std::map<std::size_t, rational> acc;
    for (const auto &[i, c] : a) {
        const unsigned e = exps_[i][var];
        if (e == 0) {
            continue;
        }
        auto ex = exps_[i];
        ex[var] -= 1;
        acc[index(ex)] += c * rational(static_cast<long>(e));
    }
    return from_map(acc);
}

sparse_vector monomial_basis::truncate(const sparse_vector &a, unsigned d) const
{
    const std::size_t end = degree_begin(d + 1);
    sparse_vector r;
    for (const auto &entry : a) {
        if (entry.first >= end) {
            break;
        }
        r.push_back(entry);
    }
    return r;
}

vector_jet_space::vector_jet_space(monomial_basis basis, std::size_t components)
    : basis_(std::move(basis)), comps_(components)
{
}

std::size_t vector_jet_space::column(std::size_t component, std::size_t mono) const
{
    const unsigned d = basis_.degree(mono);
    const std::size_t b = basis_.degree_begin(d);
    const std::size_t width = basis_.degree_begin(d + 1) - b;
    return comps_ * b + component * width + (mono - b);
}

std::pair<std::size_t, std::size_t> vector_jet_space::locate(std::size_t col) const
{
    // Find the degree block containing col.
    unsigned d = 0;
    while (d < basis_.max_degree() && comps_ * basis_.degree_begin(d + 1) <= col) {
        ++d;
    }
    const std::size_t b = basis_.degree_begin(d);
    const std::size_t width = basis_.degree_begin(d + 1) - b;
    const std::size_t off = col - comps_ * b;
    return {off / width, b + off % width};
}

sparse_vector vector_jet_space::encode_components(const std::vector<sparse_vector> &field) const
{
    if (field.size() != comps_) {
        fail("ArityMismatch", "vector field has " + std::to_string(field.size()) + " components, expected "
                                  + std::to_string(comps_));
    }
    sparse_vector v;
    for (std::size_t c = 0; c < comps_; ++c) {
        for (const auto &[i, x] : field[c]) {
            v.emplace_back(column(c, i), x);
        }
    }
    std::sort(v.begin(), v.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return v;
}

sparse_vector vector_jet_space::encode(const std::vector<polynomial> &field) const
{
    std::vector<sparse_vector> parts;
    parts.reserve(field.size());
    for (const auto &p : field) {
        parts.push_back(basis_.encode(p));
    }
    return encode_components(parts);
}

std::vector<sparse_vector> vector_jet_space::split(const sparse_vector &v) const
{
    std::vector<sparse_vector> parts(comps_);
    for (const auto &[col, x] : v) {
        auto [c, i] = locate(col);
        parts[c].emplace_back(i, x);
    }
    for (auto &p : parts) {
        std::sort(p.begin(), p.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    }
    return parts;
}

std::vector<polynomial> vector_jet_space::decode(const sparse_vector &v) const
{
    std::vector<polynomial> out;
    for (const auto &part : split(v)) {
        out.push_back(basis_.decode(part));
    }
    return out;
}

} // namespace frontal
