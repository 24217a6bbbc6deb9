#pragma once

#include <optional>
#include <string>
#include <vector>

#include <frontal/polynomial.hpp>

namespace frontal
{

// Corank-1 germ in prenormal form (z, p(z, y), q(z, y)) where z runs over the parameters
// followed by the non-distinguished source variables, and y is the last source variable.
struct frontal_germ {
    std::vector<std::string> source_vars; // x_1 .. x_{n-1}, y
    std::vector<std::string> params;
    polynomial p, q;
    std::optional<polynomial> mu; // q_y = mu * p_y when present

    // Validates names, variable coverage and p(0) = q(0) = 0.
    static frontal_germ make(std::vector<std::string> source_vars, std::vector<std::string> params, polynomial p,
                             polynomial q);

    const std::string &y() const
    {
        return source_vars.back();
    }
    // Total source dimension, parameters included.
    std::size_t dimension() const
    {
        return params.size() + source_vars.size();
    }
    // Parameters, then x_1 .. x_{n-1}.
    std::vector<std::string> transverse_vars() const;
    // transverse_vars() followed by y.
    std::vector<std::string> all_vars() const;
    // Target coordinates: one per transverse variable, then p and q.
    std::vector<polynomial> components() const;

    friend bool operator==(const frontal_germ &, const frontal_germ &) = default;
};

struct curve_branch {
    polynomial p, q;
    std::string var = "t";

    static curve_branch make(polynomial p, polynomial q, std::string var = "t");
    bool is_immersive() const;
    frontal_germ as_germ() const;

    friend bool operator==(const curve_branch &, const curve_branch &) = default;
};

// "(p, q)" in canonical polynomial form.
std::string to_string(const curve_branch &g);

struct plane_curve {
    std::vector<curve_branch> branches;
};

struct jet_mode {
    bool truncated = false;
    unsigned degree = 0;

    static jet_mode exact()
    {
        return {};
    }
    static jet_mode up_to(unsigned n)
    {
        return {true, n};
    }
};

struct frontality {
    enum class verdict { frontal, frontal_swapped, not_frontal };
    verdict result = verdict::not_frontal;
    // q_y = mu p_y for frontal, p_y = mu q_y for frontal_swapped.
    std::optional<polynomial> mu;
    // Set in truncated mode: the verdict holds modulo terms of degree > this bound.
    std::optional<unsigned> up_to_degree;
};

const char *to_string(frontality::verdict v);

// Decides p_y | q_y or q_y | p_y. Throws error("DegenerateGerm") when p_y = q_y = 0.
frontality check_frontal(const polynomial &p, const polynomial &q, const std::string &y, jet_mode mode = {});

// Attaches the certificate when the germ passes check_frontal in exact mode.
frontal_germ certify(frontal_germ f);
// Like certify, but throws error("NotFrontal") when no certificate exists.
frontal_germ require_frontal(frontal_germ f);

struct nash_lift {
    frontal_germ base;
    // P_j = q_{z_j} - mu p_{z_j} for each transverse variable, then mu.
    std::vector<polynomial> fibre;

    // Components of the lift: base components followed by the fibre coordinates.
    std::vector<polynomial> components() const;
};

nash_lift make_nash_lift(const frontal_germ &f);

struct lift_rank_report {
    unsigned integral_corank = 0;
    bool wave_front = false;
    std::vector<polynomial> singular_locus_generators; // p_y, mu_y
};

lift_rank_report lift_rank(const frontal_germ &f);

struct one_form_check {
    bool holds = false;
    bool degenerate = false; // every component of nu vanishes at the origin
};

// Tests sum_i nu_i * d f_i / d x_j = 0 for every source variable x_j.
one_form_check verify_one_form(const std::vector<polynomial> &f, const std::vector<polynomial> &nu,
                               const std::vector<std::string> &source_vars);

// Restriction to all transverse variables = 0, as a curve in y.
curve_branch generic_slice(const frontal_germ &f);

// Evaluates the constant vector field part: values of the polynomials at the origin.
std::vector<rational> value_at_origin(const std::vector<polynomial> &v);

} // namespace frontal
