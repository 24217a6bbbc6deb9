#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <frontal/germ.hpp>
#include <frontal/tangent.hpp>

namespace frontal
{

enum class param_role { u_block, v_block, w_block };
const char *to_string(param_role r);

// One-variable unfolding (params, p, q) of a plane curve. Parameters are listed u-block first,
// then v-block, then w-block.
struct unfolding {
    frontal_germ germ;
    std::map<std::string, param_role> roles;

    std::vector<std::string> params_with(param_role r) const;
};

// Roles read off from where each parameter occurs: in p gives u-block, in q below t^alpha gives
// v-block, anything else w-block.
std::map<std::string, param_role> infer_roles(const frontal_germ &g);

// Monomial u- and v-directions plus greedy (0, t^k) directions, k > alpha, completing a basis of
// the A_e normal space. Throws error("NotPuiseuxForm") unless p = t^alpha and ord q > alpha.
unfolding miniversal_unfolding(const curve_branch &g, const jet_limits &limits = {});

struct reduction_result {
    std::vector<polynomial> mu_coeffs;              // mu_0 .. mu_{beta - alpha}
    std::map<std::string, polynomial> eliminations; // v_j in terms of the surviving parameters
    std::optional<unfolding> reduced;
    std::vector<polynomial> residual;
    // Every original parameter as a polynomial in the surviving ones.
    std::map<std::string, polynomial> immersion_h;
    // "NonAffineConstraint" when some equation could not be solved; reduced is then absent.
    std::optional<std::string> failure;

    polynomial mu(const std::string &var) const;
};

// Solves Q_t = mu P_t coefficientwise. Throws error("DegreeOrderViolated") when deg_t P > deg_t Q,
// error("NotPuiseuxForm") when the leading t-coefficient of P is not a nonzero constant and
// error("FrontalityLost") if the reduced unfolding fails the divisibility check.
reduction_result frontal_reduction(const unfolding &gamma);

// F(g) = T A_e g + span of the slice velocities of the reduced unfolding.
bool reduction_is_versal(const reduction_result &r, const jet_limits &limits = {});

} // namespace frontal
