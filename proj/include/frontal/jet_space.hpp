#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <frontal/linalg.hpp>
#include <frontal/polynomial.hpp>

namespace frontal
{

// Coordinates for polynomials of total degree <= N in a fixed list of variables.
// Monomials are indexed by increasing degree; within a degree, lexicographically with
// larger exponents of earlier variables first.
class monomial_basis
{
public:
    monomial_basis(std::vector<std::string> vars, unsigned n);

    const std::vector<std::string> &vars() const noexcept
    {
        return vars_;
    }
    unsigned max_degree() const noexcept
    {
        return n_;
    }
    std::size_t size() const noexcept
    {
        return exps_.size();
    }
    const std::vector<unsigned> &exponents(std::size_t i) const
    {
        return exps_[i];
    }
    unsigned degree(std::size_t i) const
    {
        return deg_[i];
    }
    // Index range [degree_begin(d), degree_begin(d + 1)) holds the monomials of degree d.
    std::size_t degree_begin(unsigned d) const
    {
        return d > n_ ? exps_.size() : start_[d];
    }
    // Index of the monomial with the given exponents, or npos if its degree exceeds N.
    std::size_t index(const std::vector<unsigned> &e) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    monomial to_monomial(std::size_t i) const;
    // Drops terms of degree > N; throws error("UndeclaredVariable") on foreign variables.
    sparse_vector encode(const polynomial &p) const;
    polynomial decode(const sparse_vector &v) const;

    sparse_vector multiply(const sparse_vector &a, const sparse_vector &b) const;
    sparse_vector diff(const sparse_vector &a, std::size_t var) const;
    // Keeps only coordinates of degree <= d.
    sparse_vector truncate(const sparse_vector &a, unsigned d) const;

private:
    std::vector<std::string> vars_;
    unsigned n_;
    std::vector<std::vector<unsigned>> exps_;
    std::vector<unsigned> deg_;
    std::vector<std::size_t> start_;
    std::map<std::vector<unsigned>, std::size_t> index_;
};

// Coordinates for tuples of `components` polynomials of degree <= N. Columns are ordered by
// degree first, then by component, then by monomial index.
class vector_jet_space
{
public:
    vector_jet_space(monomial_basis basis, std::size_t components);

    const monomial_basis &scalars() const noexcept
    {
        return basis_;
    }
    std::size_t components() const noexcept
    {
        return comps_;
    }
    std::size_t size() const noexcept
    {
        return comps_ * basis_.size();
    }
    std::size_t column(std::size_t component, std::size_t mono) const;
    std::pair<std::size_t, std::size_t> locate(std::size_t column) const;
    unsigned column_degree(std::size_t column) const
    {
        return basis_.degree(locate(column).second);
    }

    sparse_vector encode(const std::vector<polynomial> &field) const;
    sparse_vector encode_components(const std::vector<sparse_vector> &field) const;
    std::vector<polynomial> decode(const sparse_vector &v) const;
    std::vector<sparse_vector> split(const sparse_vector &v) const;

private:
    monomial_basis basis_;
    std::size_t comps_;
};

} // namespace frontal
