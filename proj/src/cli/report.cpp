#include <algorithm>

#include <frontal/cli/input.hpp>
#include <frontal/cli/report.hpp>

namespace frontal::cli
{

namespace
{

json names(const std::vector<std::string> &v)
{
    json a = json::array();
    for (const auto &s : v) {
        a.push_back(s);
    }
    return a;
}

json polys(const std::vector<polynomial> &v)
{
    json a = json::array();
    for (const auto &p : v) {
        a.push_back(p.to_string());
    }
    return a;
}

json fields(const std::vector<vector_field> &v)
{
    json a = json::array();
    for (const auto &f : v) {
        a.push_back(to_json(f));
    }
    return a;
}

json poly_map(const std::map<std::string, polynomial> &m)
{
    json o = json::object();
    for (const auto &[k, v] : m) {
        o[k] = v.to_string();
    }
    return o;
}

} // namespace

json to_json(const polynomial &p)
{
    return p.to_string();
}

json to_json(const vector_field &v)
{
    return polys(v);
}

json to_json(const frontal_germ &f)
{
    json j;
    j["vars"] = names(f.source_vars);
    j["params"] = names(f.params);
    j["p"] = f.p.to_string();
    j["q"] = f.q.to_string();
    j["mu"] = f.mu ? json(f.mu->to_string()) : json(nullptr);
    j["text"] = to_text(f);
    return j;
}

json to_json(const curve_branch &g)
{
    json j;
    j["var"] = g.var;
    j["p"] = g.p.to_string();
    j["q"] = g.q.to_string();
    j["text"] = to_text(g);
    return j;
}

json to_json(const frontality &f)
{
    json j;
    j["verdict"] = to_string(f.result);
    j["mu"] = f.mu ? json(f.mu->to_string()) : json(nullptr);
    if (f.up_to_degree) {
        j["certified_up_to_degree"] = *f.up_to_degree;
    }
    return j;
}

json to_json(const nash_lift &l, const lift_rank_report &r)
{
    json j;
    j["base"] = to_json(l.base);
    j["fibre"] = polys(l.fibre);
    j["components"] = polys(l.components());
    j["integral_corank"] = r.integral_corank;
    j["wave_front"] = r.wave_front;
    j["singular_locus_generators"] = polys(r.singular_locus_generators);
    return j;
}

json to_json(const codim_report &c)
{
    json j;
    j["codim_Ae"] = c.codim_ae;
    j["codim_F"] = c.codim_f;
    j["stabilized_at"] = c.stabilized_at;
    j["certified_up_to_degree"] = c.certified_up_to;
    j["basis"] = fields(c.frontal_basis);
    return j;
}

json to_json(const curve_invariant_report &r)
{
    json j;
    j["mult"] = r.mult;
    j["semigroup"] = r.semigroup.to_string();
    j["semigroup_generators"] = r.semigroup.generators;
    j["gaps"] = r.semigroup.gaps;
    j["conductor"] = r.semigroup.conductor;
    j["delta"] = r.delta;
    j["milnor"] = r.milnor;
    j["image_milnor"] = r.image_milnor;
    j["codim_Ae"] = r.codim_ae;
    j["codim_F"] = r.codim_f;
    j["frontal_milnor"] = r.frontal_milnor;
    j["tau"] = r.tau_derived;
    j["quasi_homogeneous"] = r.quasi_homogeneous.value;
    if (r.quasi_homogeneous.warning) {
        j["quasi_homogeneity_warning"] = *r.quasi_homogeneous.warning;
    }
    j["mond_frontal_holds"] = r.mond_frontal_holds;
    j["mond_frontal_equality"] = r.mond_frontal_equality;
    j["certified_up_to_degree"] = r.certified_up_to;
    return j;
}

json to_json(const unfolding &u)
{
    json j = to_json(u.germ);
    json roles = json::object();
    for (const auto &name : u.germ.params) {
        auto it = u.roles.find(name);
        roles[name] = it == u.roles.end() ? "?" : to_string(it->second);
    }
    j["roles"] = roles;
    return j;
}

json to_json(const reduction_result &r)
{
    json j;
    j["mu_coeffs"] = polys(r.mu_coeffs);
    j["eliminations"] = poly_map(r.eliminations);
    j["residual"] = polys(r.residual);
    j["immersion_h"] = poly_map(r.immersion_h);
    j["reduced"] = r.reduced ? to_json(*r.reduced) : json(nullptr);
    if (r.failure) {
        j["failure"] = *r.failure;
    }
    return j;
}

json to_json(const stable_unfolding &s)
{
    json j;
    j["unfolding"] = to_json(s.unfolding);
    j["generators_used"] = fields(s.generators_used);
    j["minimal_params"] = s.minimal_params;
    j["stable"] = s.stable;
    j["certified_up_to_degree"] = s.certified_up_to;
    return j;
}

json to_json(const multigerm_report &m)
{
    json j;
    j["stable"] = m.stable;
    j["branch_stable"] = m.branch_stable;
    j["general_position"] = m.general_position;
    json taus = json::array();
    unsigned certified = 0;
    for (const auto &t : m.taus) {
        json rows = json::array();
        for (const auto &v : t.basis) {
            json row = json::array();
            for (const auto &x : v) {
                row.push_back(x.to_string());
            }
            rows.push_back(row);
        }
        taus.push_back(rows);
        certified = std::max(certified, t.certified_up_to);
    }
    j["taus"] = taus;
    j["certified_up_to_degree"] = certified;
    return j;
}

json to_json(const slice_enumeration &e)
{
    auto candidate = [](const slice_candidate &s) {
        json c;
        c["curve"] = to_text(s.curve);
        c["mult"] = s.mult;
        c["semigroup"] = s.semigroup.to_string();
        c["codim_Ae"] = s.codim_ae;
        c["codim_F"] = s.codim_f;
        c["t1_kfe_dim"] = s.t1_dim;
        c["label"] = s.label ? json(*s.label) : json(nullptr);
        return c;
    };
    json j;
    j["selected"] = json::array();
    for (const auto &s : e.selected) {
        j["selected"].push_back(candidate(s));
    }
    j["gated"] = json::array();
    for (const auto &s : e.gated) {
        j["gated"].push_back(candidate(s));
    }
    j["excluded"] = json::array();
    for (const auto &x : e.excluded) {
        j["excluded"].push_back({{"curve", to_text(x.curve)}, {"reason", x.reason}});
    }
    return j;
}

json to_json(const stable_class &c)
{
    json j;
    j["label"] = c.label;
    j["slice_curve"] = to_text(c.slice_curve);
    j["normal_form"] = to_json(c.normal_form);
    j["params"] = c.params;
    j["stable"] = c.stable;
    j["frontal_codim"] = c.frontal_codim;
    j["certified_up_to_degree"] = c.certified_up_to;
    j["listed_form"] = {{"p", c.listed_p}, {"q", c.listed_q}, {"verdict", c.listed_verdict},
                        {"matches_derived", c.listed_matches_derived}};
    j["provenance"] = c.note;
    return j;
}

json to_json(const identification &id)
{
    json j;
    j["verdict"] = id.verdict;
    j["label"] = id.label ? json(*id.label) : json(nullptr);
    j["stable"] = id.stable;
    j["slice"] = to_text(id.slice);
    j["slice_signature_match"] = id.slice_signature_match;
    j["evidence"] = id.evidence;
    return j;
}

json to_json(const conjecture_report &c)
{
    json j;
    j["i"] = c.i;
    j["j"] = c.j;
    j["stabilized_at"] = c.stabilized_at;
    j["certified_up_to_degree"] = c.certified_up_to;
    return j;
}

json error_json(const std::string &kind, const std::string &detail)
{
    json j;
    j["schema"] = schema_version;
    j["error"] = kind;
    j["detail"] = detail;
    return j;
}

namespace
{

void render(const json &j, const std::string &indent, std::string &out)
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json &v = it.value();
        const std::string key = j.is_object() ? it.key() : "-";
        const bool scalar_list =
            v.is_array() && std::all_of(v.begin(), v.end(), [](const json &x) { return x.is_primitive(); });
        if (v.is_structured() && !v.empty() && !scalar_list) {
            out += indent + key + ":\n";
            render(v, indent + "  ", out);
            continue;
        }
        std::string s;
        if (v.is_string()) {
            s = v.get<std::string>();
        } else if (scalar_list) {
            s = "[";
            for (std::size_t i = 0; i < v.size(); ++i) {
                s += (i ? ", " : "") + (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
            }
            s += "]";
        } else {
            s = v.dump();
        }
        out += indent + key + ": " + s + "\n";
    }
}

} // namespace

std::string render_text(const json &j)
{
    std::string out;
    if (j.is_structured()) {
        render(j, "", out);
    } else {
        out = j.dump() + "\n";
    }
    return out;
}

} // namespace frontal::cli
