#include <frontal/errors.hpp>
#include <frontal/linalg.hpp>

namespace frontal
{

rational_matrix::rational_matrix(std::initializer_list<std::initializer_list<rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    a_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            fail("ArityMismatch", "ragged matrix literal");
        }
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

std::vector<rational> rational_matrix::row(std::size_t i) const
{
    return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_), a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

rref_result rref(const rational_matrix &m)
{
    rref_result r;
    r.reduced = m;
    auto &a = r.reduced;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
        std::size_t piv = lead_row;
        while (piv < rows && a(piv, c).is_zero()) {
            ++piv;
        }
        if (piv == rows) {
            continue;
        }
        if (piv != lead_row) {
            for (std::size_t j = 0; j < cols; ++j) {
                std::swap(a(piv, j), a(lead_row, j));
            }
        }
        const rational inv = rational(1) / a(lead_row, c);
        for (std::size_t j = c; j < cols; ++j) {
            a(lead_row, j) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead_row || a(i, c).is_zero()) {
                continue;
            }
            const rational f = a(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (!a(lead_row, j).is_zero()) {
                    a(i, j) -= f * a(lead_row, j);
                }
            }
        }
        r.pivots.push_back(c);
        ++lead_row;
    }
    r.rank = r.pivots.size();

    std::vector<bool> is_pivot(cols, false);
    for (auto c : r.pivots) {
        is_pivot[c] = true;
    }
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<rational> v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) {
            v[r.pivots[i]] = -a(i, f);
        }
        r.nullspace.push_back(std::move(v));
    }
    return r;
}

void axpy(sparse_vector &y, const rational &c, const sparse_vector &x)
{
    if (c.is_zero() || x.empty()) {
        return;
    }
    sparse_vector out;
    out.reserve(y.size() + x.size());
    auto i = y.begin();
    auto j = x.begin();
    while (i != y.end() || j != x.end()) {
        if (j == x.end() || (i != y.end() && i->first < j->first)) {
            out.push_back(std::move(*i++));
        } else if (i == y.end() || j->first < i->first) {
            out.emplace_back(j->first, c * j->second);
            ++j;
        } else {
            rational s = i->second + c * j->second;
            if (!s.is_zero()) {
                out.emplace_back(i->first, std::move(s));
            }
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

sparse_vector scale(const sparse_vector &x, const rational &c)
{
    sparse_vector r;
    if (c.is_zero()) {
        return r;
    }
    r.reserve(x.size());
    for (const auto &[i, v] : x) {
        r.emplace_back(i, v * c);
    }
    return r;
}

namespace
{

// Reduces v (and, when tracking, its coefficient vector alongside) against rows keyed by lead index.
template <typename Rows, typename Track>
void reduce_against(const Rows &rows, sparse_vector &v, Track &&track)
{
    std::size_t i = 0;
    while (i < v.size()) {
        auto it = rows.find(v[i].first);
        if (it == rows.end()) {
            ++i;
            continue;
        }
        const rational c = -v[i].second;
        track(c, it->second);
        axpy(v, c, it->second.first);
    }
}

void normalize_lead(sparse_vector &v, sparse_vector *combo)
{
    const rational inv = rational(1) / v.front().second;
    v = scale(v, inv);
    if (combo) {
        *combo = scale(*combo, inv);
    }
}

} // namespace

bool echelon_basis::insert(sparse_vector v)
{
    v = reduce(std::move(v));
    if (v.empty()) {
        return false;
    }
    normalize_lead(v, nullptr);
    const auto key = v.front().first;
    rows_.emplace(key, std::move(v));
    return true;
}

sparse_vector echelon_basis::reduce(sparse_vector v) const
{
    std::size_t i = 0;
    while (i < v.size()) {
        auto it = rows_.find(v[i].first);
        if (it == rows_.end()) {
            ++i;
            continue;
        }
        axpy(v, -v[i].second, it->second);
    }
    return v;
}

std::vector<sparse_vector> echelon_basis::basis() const
{
    std::vector<sparse_vector> b;
    b.reserve(rows_.size());
    for (const auto &kv : rows_) {
        b.push_back(kv.second);
    }
    return b;
}

std::vector<sparse_vector> kernel(const std::vector<sparse_vector> &images)
{
    std::map<std::size_t, std::pair<sparse_vector, sparse_vector>> rows;
    std::vector<sparse_vector> out;
    for (std::size_t k = 0; k < images.size(); ++k) {
        sparse_vector v = images[k];
        sparse_vector combo{{k, rational(1)}};
        reduce_against(rows, v, [&](const rational &c, const auto &row) { axpy(combo, c, row.second); });
        if (v.empty()) {
            out.push_back(std::move(combo));
            continue;
        }
        normalize_lead(v, &combo);
        const auto key = v.front().first;
        rows.emplace(key, std::make_pair(std::move(v), std::move(combo)));
    }
    return out;
}

} // namespace frontal
