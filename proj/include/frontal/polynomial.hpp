#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <frontal/rational.hpp>

namespace frontal
{

// Order of the zero polynomial.
inline constexpr unsigned infinite_order = std::numeric_limits<unsigned>::max();

class monomial
{
public:
    using factor = std::pair<std::string, unsigned>;

    monomial() = default;
    // Factors may come in any order; zero exponents are dropped and repeated names merged.
    explicit monomial(std::vector<factor> factors);
    static monomial variable(std::string name, unsigned e = 1);

    const std::vector<factor> &factors() const noexcept
    {
        return f_;
    }
    unsigned exponent(std::string_view name) const;
    unsigned degree() const;
    bool is_one() const noexcept
    {
        return f_.empty();
    }

    monomial operator*(const monomial &o) const;
    // Drops the given variable entirely.
    monomial without(std::string_view name) const;

    friend bool operator==(const monomial &, const monomial &) = default;

private:
    std::vector<factor> f_; // sorted by name, exponents > 0
};

// Canonical term order: total degree descending, ties broken lexicographically with
// variables in alphabetical priority and larger exponents first.
struct term_order {
    bool operator()(const monomial &a, const monomial &b) const;
};

class polynomial
{
public:
    using term_map = std::map<monomial, rational, term_order>;

    polynomial() = default;
    polynomial(const rational &c);
    polynomial(long c) : polynomial(rational(c)) {}
    polynomial(const rational &c, monomial m);

    static polynomial variable(const std::string &name, unsigned e = 1);
    // Parses the canonical text form (and any expression in + - * / ^ ( ) with rational literals).
    static polynomial parse(std::string_view text);

    const term_map &terms() const noexcept
    {
        return terms_;
    }
    std::size_t size() const noexcept
    {
        return terms_.size();
    }
    std::set<std::string> variables() const;
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    bool is_constant() const;
    rational constant_term() const;
    rational coefficient(const monomial &m) const;

    // Total degree; 0 for constants and for zero.
    unsigned degree() const;
    unsigned degree_in(std::string_view var) const;
    // Least total degree, or least exponent of var; infinite_order for zero.
    unsigned order() const;
    unsigned order_in(std::string_view var) const;

    polynomial operator-() const;
    polynomial &operator+=(const polynomial &o);
    polynomial &operator-=(const polynomial &o);
    polynomial &operator*=(const polynomial &o);
    friend polynomial operator+(polynomial a, const polynomial &b)
    {
        return a += b;
    }
    friend polynomial operator-(polynomial a, const polynomial &b)
    {
        return a -= b;
    }
    friend polynomial operator*(const polynomial &a, const polynomial &b);
    polynomial pow(unsigned e) const;
    polynomial scaled(const rational &c) const;

    polynomial diff(std::string_view var) const;
    // Antiderivative with zero constant of integration.
    polynomial integrate(std::string_view var) const;
    // Drops terms of total degree > n.
    polynomial truncate(unsigned n) const;
    // Drops terms of degree > n in the given variables only.
    polynomial truncate_in(const std::vector<std::string> &vars, unsigned n) const;

    polynomial substitute(std::string_view var, const polynomial &value) const;
    polynomial substitute(const std::map<std::string, polynomial> &values) const;
    polynomial set_zero(const std::vector<std::string> &vars) const;
    // Coefficients of var^k as polynomials in the remaining variables.
    std::map<unsigned, polynomial> coefficients_in(std::string_view var) const;

    std::string to_string() const;

    friend bool operator==(const polynomial &, const polynomial &) = default;

private:
    void add_term(const monomial &m, const rational &c);

    term_map terms_;
};

// Exact quotient num/den, or nullopt when den does not divide num in the polynomial ring.
// Division is univariate in var with polynomial coefficients; leading coefficients are
// divided recursively in the remaining variables in alphabetical order.
// Throws error("ZeroDivisor") when den is zero.
std::optional<polynomial> div_exact(const polynomial &num, const polynomial &den, std::string_view var);

struct jet {
    polynomial poly;
    unsigned degree_bound = 0;
};

jet jet_truncate(const polynomial &p, unsigned n);

} // namespace frontal
