#pragma once

#include <string>

#include <json.hpp>

#include <frontal/classify.hpp>
#include <frontal/curves.hpp>
#include <frontal/germ.hpp>
#include <frontal/reduction.hpp>
#include <frontal/sum.hpp>
#include <frontal/tangent.hpp>

namespace frontal::cli
{

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

json to_json(const polynomial &p);
json to_json(const vector_field &v);
json to_json(const frontal_germ &f);
json to_json(const curve_branch &g);
json to_json(const frontality &f);
json to_json(const nash_lift &l, const lift_rank_report &r);
json to_json(const codim_report &c);
json to_json(const curve_invariant_report &r);
json to_json(const unfolding &u);
json to_json(const reduction_result &r);
json to_json(const stable_unfolding &s);
json to_json(const multigerm_report &m);
json to_json(const slice_enumeration &e);
json to_json(const stable_class &c);
json to_json(const identification &id);
json to_json(const conjecture_report &c);

json error_json(const std::string &kind, const std::string &detail);

// Indented "key: value" rendering of a report for the text output mode.
std::string render_text(const json &j);

} // namespace frontal::cli
