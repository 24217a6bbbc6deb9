#pragma once

#include <optional>
#include <string>
#include <vector>

#include <frontal/germ.hpp>
#include <frontal/tangent.hpp>

namespace frontal
{

struct numerical_semigroup {
    std::vector<unsigned> generators; // minimal generators, increasing
    std::vector<unsigned> gaps;
    unsigned conductor = 0;

    // Throws error("InvalidSemigroup") when the gcd of the generators is not 1.
    static numerical_semigroup from_generators(std::vector<unsigned> gens);
    bool contains(unsigned v) const;
    std::string to_string() const;

    friend bool operator==(const numerical_semigroup &, const numerical_semigroup &) = default;
};

unsigned multiplicity(const curve_branch &g);

// Orders of h(p(t), q(t)) over polynomials h, found by valuation-echelon reduction of the
// pullbacks of monomials; the bound is doubled until a run of multiplicity-many consecutive
// values appears. Throws error("CapExceeded") past degree_cap.
numerical_semigroup value_semigroup(const curve_branch &g, unsigned degree_cap = 512);

// (1/2)[1 - v_0 - sum_i v_i (1 - e_{i-1}/e_i)] with e_i = gcd(v_0, ..., v_i); may be non-integral.
rational delta_formula(const numerical_semigroup &s);
// Gap count, after checking it against delta_formula. Throws error("FormulaGapMismatch").
unsigned delta_invariant(const numerical_semigroup &s);

struct quasi_homogeneity {
    bool value = false;
    std::optional<std::string> warning;
};

// Syntactic test: both components are single monomials.
quasi_homogeneity is_quasihomogeneous(const curve_branch &g);

struct curve_invariant_report {
    unsigned mult = 0;
    numerical_semigroup semigroup;
    unsigned delta = 0;
    unsigned milnor = 0;
    unsigned image_milnor = 0;
    unsigned codim_ae = 0;
    unsigned codim_f = 0;
    unsigned frontal_milnor = 0;
    unsigned tau_derived = 0;
    quasi_homogeneity quasi_homogeneous;
    bool mond_frontal_holds = false;
    bool mond_frontal_equality = false;
    unsigned certified_up_to = 0;
};

// Throws error("InconsistentCodims") when codim_F from jets differs from codim_Ae - mult + 1.
curve_invariant_report invariant_report(const curve_branch &g, const jet_limits &limits = {});

} // namespace frontal
