#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <frontal/errors.hpp>
#include <frontal/germ.hpp>
#include <frontal/jet_space.hpp>
#include <frontal/linalg.hpp>

namespace frontal
{

// Element of theta(f): one polynomial per target coordinate.
using vector_field = std::vector<polynomial>;

struct jet_limits {
    unsigned curve_cap = 40; // maximal jet degree for germs with one source variable
    unsigned germ_cap = 12;  // maximal jet degree for germs with several source variables

    unsigned cap_for(const frontal_germ &f) const
    {
        return f.dimension() == 1 ? curve_cap : germ_cap;
    }
};

enum class subspace_label { tae, frontal, frontal0, tkfe, full };
const char *to_string(subspace_label l);

// A subspace of the N-jets of theta(f), in the coordinates of `space`.
struct jet_subspace {
    vector_jet_space space;
    unsigned degree = 0;
    subspace_label label = subspace_label::full;
    echelon_basis basis;

    std::size_t dim() const
    {
        return basis.size();
    }
    bool contains(const vector_field &v) const
    {
        return basis.contains(space.encode(v));
    }
    std::vector<vector_field> fields() const;
};

// Builds the jet coordinates of theta(f) at degree n.
vector_jet_space theta_space(const frontal_germ &f, unsigned n);

jet_subspace jet_tangent_ae(const frontal_germ &f, unsigned n);
// Jets xi with d xi_q/dy - sum_j P_j d xi_{z_j}/dy - mu d xi_p/dy in (p_y) + m^n.
jet_subspace jet_frontal_space(const frontal_germ &f, unsigned n);
// tf(theta_n) + m_{n+1} F(f), from a previously computed F(f).
jet_subspace jet_tangent_kfe(const frontal_germ &f, const jet_subspace &frontal_space);

// First jet degree tried by the adaptive computations.
unsigned initial_jet_degree(const frontal_germ &f, unsigned cap);

template <typename T>
struct stabilized {
    T value;
    unsigned degree;    // the N at which the value was accepted
    unsigned certified; // N + 4, the largest degree that confirmed it
};

// Evaluates value(N) at N0, N0+2, ... and returns the first value that repeats at N+2 and N+4.
// Throws error("NoStabilization") once N+4 would exceed the cap.
template <typename T>
stabilized<T> stabilize(unsigned n0, unsigned cap, const std::function<T(unsigned)> &value, const std::string &what)
{
    std::map<unsigned, T> seen;
    auto at = [&](unsigned n) -> const T & {
        auto it = seen.find(n);
        if (it == seen.end()) {
            it = seen.emplace(n, value(n)).first;
        }
        return it->second;
    };
    for (unsigned n = n0; n + 4 <= cap; n += 2) {
        if (at(n) == at(n + 2) && at(n + 2) == at(n + 4)) {
            return {at(n), n, n + 4};
        }
    }
    fail("NoStabilization", what + " did not stabilize up to jet degree " + std::to_string(cap));
}

struct codim_report {
    unsigned codim_ae = 0;
    unsigned codim_f = 0;
    unsigned stabilized_at = 0;
    unsigned certified_up_to = 0;
    // Representatives of F(f) / T A_e f.
    std::vector<vector_field> frontal_basis;
};

codim_report codims(const frontal_germ &f, const jet_limits &limits = {});
// dim F(f) / T A_e f on its own, for germs that are not A-finite.
stabilized<unsigned> frontal_codimension(const frontal_germ &f, const jet_limits &limits = {});

// T_j = (t^j, j * int_0^t s^{j-1} mu(s) ds) for j = 1 .. alpha - 2.
std::vector<vector_field> tj_generators(const curve_branch &g);

struct t1_kfe_report {
    std::vector<vector_field> basis;
    unsigned dim = 0;
    unsigned tj_count = 0;         // how many T_j classes were independent (all of them if the lower bound holds)
    bool lower_bound_holds = false; // every T_j class is independent in the quotient
    bool upper_bound_holds = false; // the quotient is spanned by T_j and (0, t^k), alpha <= k <= 2 alpha - 1
    unsigned stabilized_at = 0;
    unsigned certified_up_to = 0;
};

// Basis of F_0(g) / TK_Fe g for a singular branch g; empty for immersions.
t1_kfe_report t1_kfe_basis(const curve_branch &g, const jet_limits &limits = {});

struct tau_report {
    std::vector<std::vector<rational>> basis; // constant vectors in the target, echelon form
    std::size_t ambient = 0;
    unsigned certified_up_to = 0;
};

tau_report tau_subspace(const frontal_germ &f, const jet_limits &limits = {});

// Velocities d/du_k of the (p, q) part at the slice, as vector fields along the generic slice.
std::vector<vector_field> slice_velocities(const frontal_germ &f);

// F(g) = TK_Fe g + K^2 + span(velocities) at stabilized jet degree.
bool unfolding_stable_via_base(const curve_branch &g, const std::vector<vector_field> &velocities,
                               const jet_limits &limits = {});
// F(g) = T A_e g + span(velocities) at stabilized jet degree.
bool unfolding_versal_via_base(const curve_branch &g, const std::vector<vector_field> &velocities,
                               const jet_limits &limits = {});

// Stability of a germ by reduction to its generic slice.
bool is_stable(const frontal_germ &f, const jet_limits &limits = {});

struct multigerm_report {
    bool stable = false;
    std::vector<bool> branch_stable;
    bool general_position = false;
    std::vector<tau_report> taus;
};

multigerm_report multigerm_stable(const std::vector<frontal_germ> &branches, const jet_limits &limits = {});

// General position of subspaces of K^m, each given by a spanning list.
bool general_position(const std::vector<std::vector<std::vector<rational>>> &subspaces, std::size_t ambient);

} // namespace frontal
