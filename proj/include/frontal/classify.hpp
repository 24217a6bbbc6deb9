#pragma once

#include <optional>
#include <string>
#include <vector>

#include <frontal/curves.hpp>
#include <frontal/germ.hpp>
#include <frontal/tangent.hpp>

namespace frontal
{

// "A_{i,j}"
std::string ishikawa_label(unsigned i, unsigned j);

struct slice_candidate {
    curve_branch curve;
    unsigned mult = 0;
    numerical_semigroup semigroup;
    unsigned codim_ae = 0;
    unsigned codim_f = 0;
    unsigned t1_dim = 0;
    std::optional<std::string> label; // A_{mult, t1_dim - (mult - 2)} when t1_dim fits in two parameters
};

struct excluded_curve {
    curve_branch curve;
    std::string reason;
};

struct slice_enumeration {
    std::vector<slice_candidate> gated;    // every candidate with codim_F <= 2, search order
    std::vector<slice_candidate> selected; // one curve per class
    std::vector<excluded_curve> excluded;  // gated candidates that were not selected
};

// Searches (t^a, t^b + c t^b') with 2 <= a <= 4, a < b < b' <= 9, c in {0, 1} and gcd 1.
// Candidates sharing (multiplicity, semigroup, codim_Ae) are merged, keeping the monomial curve or
// else the largest b'; of the curves with a given label, the one with least codim_F is kept.
slice_enumeration enumerate_slices(const jet_limits &limits = {});
std::vector<curve_branch> enumerate_stable_slice_curves(const jet_limits &limits = {});

struct stable_class {
    std::string label;
    curve_branch slice_curve;
    frontal_germ normal_form; // derived and verified
    unsigned params = 2;
    unsigned frontal_codim = 0; // of normal_form; 0 for a stable germ
    bool stable = false;
    unsigned certified_up_to = 0;
    // The normal form as commonly listed for this class, kept for comparison.
    std::string listed_p, listed_q;
    std::string listed_verdict; // check_frontal on the listed form
    bool listed_matches_derived = false;
    std::string note;
};

// Throws error("FrontalityLost") or error("NotStable") if a derived normal form fails verification.
std::vector<stable_class> build_table(const jet_limits &limits = {});

struct identification {
    bool stable = false;
    std::optional<std::string> label;
    std::string verdict; // the label, "NotStable" or "Unrecognized"
    std::string evidence;
    curve_branch slice;
    bool slice_signature_match = false;
};

// Only n = 3 is supported. Stability via the slice, then (multiplicity, semigroup, codim_F) of the slice against the five
// classes; a stable germ whose prenormal slice is not one of them is matched by multiplicity and
// dim T^1_KFe of the slice.
identification identify_stable_germ(const frontal_germ &f, unsigned n = 3, const jet_limits &limits = {});

struct conjecture_report {
    unsigned i = 0; // dim R / f*m R, R the algebra generated by the lift components
    unsigned j = 0; // dim O_n / (lift components) - 1
    unsigned stabilized_at = 0;
    unsigned certified_up_to = 0;
};

// Throws error("NotFinite") when the dimensions do not stabilize below the jet cap.
conjecture_report conjecture_invariants(const frontal_germ &f, const jet_limits &limits = {});

} // namespace frontal
