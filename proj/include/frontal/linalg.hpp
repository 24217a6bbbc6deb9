#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <frontal/rational.hpp>

namespace frontal
{

class rational_matrix
{
public:
    rational_matrix() = default;
    rational_matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    rational_matrix(std::initializer_list<std::initializer_list<rational>> rows);

    std::size_t rows() const noexcept
    {
        return rows_;
    }
    std::size_t cols() const noexcept
    {
        return cols_;
    }
    rational &operator()(std::size_t i, std::size_t j)
    {
        return a_[i * cols_ + j];
    }
    const rational &operator()(std::size_t i, std::size_t j) const
    {
        return a_[i * cols_ + j];
    }
    std::vector<rational> row(std::size_t i) const;

    friend bool operator==(const rational_matrix &, const rational_matrix &) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<rational> a_;
};

struct rref_result {
    rational_matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    std::vector<std::vector<rational>> nullspace;
};

// Exact Gauss-Jordan elimination.
rref_result rref(const rational_matrix &m);

// Sparse coordinate vector: (index, value) pairs sorted by index, no zero values.
using sparse_vector = std::vector<std::pair<std::size_t, rational>>;

// y += c * x
void axpy(sparse_vector &y, const rational &c, const sparse_vector &x);
sparse_vector scale(const sparse_vector &x, const rational &c);

// Incrementally built basis of a subspace, in semi-echelon form: each row is keyed by its
// lowest nonzero index and no two rows share a key. reduce() clears every key index and
// is therefore a canonical projection onto the complement spanned by non-key coordinates.
class echelon_basis
{
public:
    // Returns true when v was independent of the current span.
    bool insert(sparse_vector v);
    sparse_vector reduce(sparse_vector v) const;
    bool contains(const sparse_vector &v) const
    {
        return reduce(v).empty();
    }
    std::size_t size() const noexcept
    {
        return rows_.size();
    }
    bool has_pivot(std::size_t idx) const
    {
        return rows_.contains(idx);
    }
    std::vector<sparse_vector> basis() const;

private:
    std::map<std::size_t, sparse_vector> rows_;
};

// Kernel of the linear map sending the i-th standard basis vector to images[i].
// Each returned vector is sparse over the image indices.
std::vector<sparse_vector> kernel(const std::vector<sparse_vector> &images);

} // namespace frontal
