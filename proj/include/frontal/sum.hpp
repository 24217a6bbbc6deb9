#pragma once

#include <string>
#include <vector>

#include <frontal/germ.hpp>
#include <frontal/tangent.hpp>

namespace frontal
{

// A frontal germ viewed as an unfolding of its base: setting every transverse variable to 0.
struct summand_unfolding {
    std::vector<std::string> params;
    std::vector<std::string> xs; // non-distinguished source variables
    std::string y;
    polynomial p, q, mu;
    polynomial base_p, base_q, base_mu;

    // Throws error("NotFrontal") when the germ has no certificate.
    static summand_unfolding from_germ(const frontal_germ &f);
    std::vector<std::string> transverse_vars() const;
};

// (params_F, params_G, xs_F, xs_G, P, Q) with P = p_G + p_F - base_p and
// Q = int_0^y (mu_G + mu_F - base_mu) P_y + q_G|_{y=0} + q_F|_{y=0}.
// Throws error("ParamCollision") and error("BaseMismatch"); error("FrontalityLost") if the
// certificate fails to verify.
frontal_germ frontal_sum(const summand_unfolding &f, const summand_unfolding &g);

struct stable_unfolding {
    frontal_germ unfolding;
    std::vector<vector_field> generators_used;
    unsigned minimal_params = 0;
    bool stable = false;
    unsigned certified_up_to = 0;
};

// One-parameter unfoldings (s, p + s a, q + s b) along a basis of F_0 / TK_Fe, summed left to right.
// Parameters are named u, v, w for up to three generators and u1 .. uk beyond.
stable_unfolding stable_unfolding_generator(const curve_branch &g, const jet_limits &limits = {});

} // namespace frontal
