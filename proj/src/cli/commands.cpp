#include <algorithm>
#include <future>
#include <functional>

#include <frontal/cli/acceptance.hpp>
#include <frontal/cli/commands.hpp>
#include <frontal/cli/input.hpp>
#include <frontal/cli/report.hpp>
#include <frontal/errors.hpp>

namespace frontal::cli
{

void config::validate() const
{
    if (jet_cap < 4 || n3_jet_cap < 4) {
        fail("InvalidConfig", "jet caps must be at least 4");
    }
    if (mode == mode_kind::jet && jet_degree == 0) {
        fail("InvalidConfig", "jet mode needs a positive degree");
    }
}

const std::vector<std::string> &verbs()
{
    static const std::vector<std::string> v = {"check",  "lift",  "codim",  "invariants", "versal",  "reduce",
                                               "sum",    "stable", "classify", "table",     "selftest"};
    return v;
}

namespace
{

constexpr int math_failure = 2;
constexpr int error_exit = 1;

struct item {
    json body;
    int status = 0;
};

void merge(json &into, const json &from)
{
    for (auto it = from.begin(); it != from.end(); ++it) {
        into[it.key()] = it.value();
    }
}

bool is_math_failure(const std::string &kind)
{
    return kind == "NotFrontal" || kind == "NotStable";
}

std::string detail_of(const error &e)
{
    std::string what = e.what();
    if (what.rfind(e.kind(), 0) == 0) {
        what.erase(0, e.kind().size());
        what.erase(0, what.find_first_not_of(": "));
    }
    return what;
}

// Runs body, turning library errors into an error item.
item guarded(const std::function<item()> &body)
{
    try {
        return body();
    } catch (const error &e) {
        json j;
        j["error"] = e.kind();
        j["detail"] = detail_of(e);
        return {j, is_math_failure(e.kind()) ? math_failure : error_exit};
    } catch (const std::exception &e) {
        json j;
        j["error"] = "InternalError";
        j["detail"] = e.what();
        return {j, error_exit};
    }
}

item check_item(const parsed_value &v, const config &cfg)
{
    const frontal_germ f = to_germ(v);
    const jet_mode mode = cfg.mode == config::mode_kind::jet ? jet_mode::up_to(cfg.jet_degree) : jet_mode::exact();
    const auto r = check_frontal(f.p, f.q, f.y(), mode);
    json j;
    j["input"] = to_text(v);
    merge(j, to_json(r));
    return {j, r.result == frontality::verdict::not_frontal ? math_failure : 0};
}

item lift_item(const parsed_value &v, const config &)
{
    const frontal_germ f = require_frontal(to_germ(v));
    json j;
    j["input"] = to_text(v);
    j["lift"] = to_json(make_nash_lift(f), lift_rank(f));
    return {j, 0};
}

item codim_item(const parsed_value &v, const config &cfg)
{
    const frontal_germ f = require_frontal(to_germ(v));
    json j;
    j["input"] = to_text(v);
    merge(j, to_json(codims(f, cfg.limits())));
    return {j, 0};
}

item invariants_item(const parsed_value &v, const config &cfg)
{
    const curve_branch g = to_curve(v);
    require_frontal(g.as_germ());
    json j;
    j["input"] = to_text(v);
    merge(j, to_json(invariant_report(g, cfg.limits())));
    return {j, 0};
}

item versal_item(const parsed_value &v, const config &cfg)
{
    const auto u = miniversal_unfolding(to_curve(v), cfg.limits());
    json j;
    j["input"] = to_text(v);
    j["unfolding"] = to_json(u);
    j["codim_Ae"] = u.germ.params.size();
    return {j, 0};
}

item reduce_item(const parsed_value &v, const config &cfg)
{
    unfolding u;
    if (std::holds_alternative<curve_branch>(v)) {
        u = miniversal_unfolding(std::get<curve_branch>(v), cfg.limits());
    } else {
        u.germ = to_germ(v);
        u.roles = infer_roles(u.germ);
    }
    const auto r = frontal_reduction(u);
    json j;
    j["input"] = to_text(v);
    j["unfolding"] = to_json(u);
    merge(j, to_json(r));
    if (r.failure) {
        j["error"] = *r.failure;
        j["detail"] = "an equation below degree alpha is not affine in the remaining v-block parameters";
        return {j, error_exit};
    }
    j["versal"] = reduction_is_versal(r, cfg.limits());
    return {j, 0};
}

item stable_item(const parsed_value &v, const config &cfg)
{
    json j;
    j["input"] = to_text(v);
    const frontal_germ f = require_frontal(to_germ(v));
    if (f.params.empty() && f.source_vars.size() == 1) {
        const auto s = stable_unfolding_generator(to_curve(v), cfg.limits());
        merge(j, to_json(s));
        return {j, s.stable ? 0 : math_failure};
    }
    const bool stable = is_stable(f, cfg.limits());
    j["stable"] = stable;
    j["slice"] = to_text(generic_slice(f));
    j["verdict"] = stable ? "Stable" : "NotStable";
    return {j, stable ? 0 : math_failure};
}

json conjecture_json(const frontal_germ &f, const std::optional<std::string> &label, const config &cfg)
{
    try {
        const auto c = conjecture_invariants(f, cfg.limits());
        json j = to_json(c);
        if (label) {
            j["agrees_with_label"] = ishikawa_label(c.i, c.j) == *label;
        }
        return j;
    } catch (const error &e) {
        return {{"error", e.kind()}, {"detail", detail_of(e)}};
    }
}

item classify_item(const parsed_value &v, const config &cfg)
{
    const frontal_germ f = to_germ(v);
    const auto id = identify_stable_germ(f, 3, cfg.limits());
    json j;
    j["input"] = to_text(v);
    merge(j, to_json(id));
    if (id.stable) {
        j["conjecture_invariants"] = conjecture_json(require_frontal(f), id.label, cfg);
    }
    return {j, id.stable ? 0 : math_failure};
}

using handler = item (*)(const parsed_value &, const config &);

handler per_input(const std::string &verb)
{
    if (verb == "check") return check_item;
    if (verb == "lift") return lift_item;
    if (verb == "codim") return codim_item;
    if (verb == "invariants") return invariants_item;
    if (verb == "versal") return versal_item;
    if (verb == "reduce") return reduce_item;
    if (verb == "stable") return stable_item;
    if (verb == "classify") return classify_item;
    return nullptr;
}

parsed_value parse_input(const std::string &arg)
{
    return parse_expression(read_input(arg));
}

item sum_item(const command &cmd)
{
    const frontal_germ f = require_frontal(to_germ(parse_input(cmd.inputs[0])));
    const frontal_germ g = require_frontal(to_germ(parse_input(cmd.inputs[1])));
    const frontal_germ s = frontal_sum(summand_unfolding::from_germ(f), summand_unfolding::from_germ(g));
    json j;
    j["summands"] = json::array({to_text(f), to_text(g)});
    j["sum"] = to_json(s);
    j["certificate_verified"] = true;
    return {j, 0};
}

item multigerm_item(const command &cmd, const config &cfg)
{
    std::vector<frontal_germ> branches;
    for (const auto &in : cmd.inputs) {
        branches.push_back(require_frontal(to_germ(parse_input(in))));
    }
    const auto m = multigerm_stable(branches, cfg.limits());
    json j;
    j["branches"] = json::array();
    for (const auto &b : branches) {
        j["branches"].push_back(to_text(b));
    }
    merge(j, to_json(m));
    return {j, m.stable ? 0 : math_failure};
}

item table_item(const config &cfg)
{
    json classes = json::array();
    for (const auto &c : build_table(cfg.limits())) {
        json j = to_json(c);
        j["conjecture_invariants"] = conjecture_json(c.normal_form, c.label, cfg);
        classes.push_back(j);
    }
    return {{{"classes", classes}}, 0};
}

item selftest_item(const config &cfg)
{
    const auto results = run_acceptance(cfg.seed, cfg.limits());
    json list = json::array();
    std::size_t passed = 0;
    for (const auto &r : results) {
        passed += r.pass;
        list.push_back({{"id", r.id},
                        {"name", r.name},
                        {"pass", r.pass},
                        {"detail", r.detail},
                        {"seconds", r.seconds},
                        {"budget_seconds", r.budget_seconds}});
    }
    json j;
    j["criteria"] = list;
    j["passed"] = passed;
    j["total"] = results.size();
    return {j, passed == results.size() ? 0 : error_exit};
}

void validate_arity(const command &cmd)
{
    const auto n = cmd.inputs.size();
    auto need = [&](bool ok, const std::string &what) {
        if (!ok) {
            fail("UsageError", cmd.verb + " " + what + ", got " + std::to_string(n) + " input(s)");
        }
    };
    if (cmd.multigerm && cmd.verb != "stable") {
        fail("UsageError", "--multigerm only applies to stable");
    }
    if (cmd.verb == "sum") {
        need(n == 2, "takes exactly two germs");
    } else if (cmd.verb == "table" || cmd.verb == "selftest") {
        need(n == 0, "takes no inputs");
    } else if (cmd.verb != "classify") {
        need(n >= 1, "needs at least one input");
    }
}

} // namespace

outcome run(const command &cmd, const config &cfg)
{
    std::vector<item> items;
    bool batch = false;
    const item setup = guarded([&]() -> item {
        if (std::find(verbs().begin(), verbs().end(), cmd.verb) == verbs().end()) {
            fail("UsageError", "unknown command '" + cmd.verb + "'");
        }
        cfg.validate();
        validate_arity(cmd);
        return {};
    });
    if (setup.status != 0) {
        items.push_back(setup);
    } else if (cmd.verb == "sum") {
        items.push_back(guarded([&] { return sum_item(cmd); }));
    } else if (cmd.verb == "stable" && cmd.multigerm) {
        items.push_back(guarded([&] { return multigerm_item(cmd, cfg); }));
    } else if (cmd.verb == "table") {
        items.push_back(guarded([&] { return table_item(cfg); }));
    } else if (cmd.verb == "selftest") {
        items.push_back(guarded([&] { return selftest_item(cfg); }));
    } else if (cmd.verb == "classify" && cmd.inputs.empty()) {
        items.push_back(guarded([&]() -> item { return {to_json(enumerate_slices(cfg.limits())), 0}; }));
    } else {
        const handler h = per_input(cmd.verb);
        batch = cmd.inputs.size() > 1;
        std::vector<std::future<item>> jobs;
        for (const auto &in : cmd.inputs) {
            jobs.push_back(std::async(std::launch::async, [h, in, &cfg] {
                return guarded([&] { return h(parse_input(in), cfg); });
            }));
        }
        for (auto &j : jobs) {
            items.push_back(j.get());
        }
    }

    outcome o;
    for (const auto &it : items) {
        if (it.status == error_exit) {
            o.exit_code = error_exit;
        } else if (it.status == math_failure && o.exit_code == 0) {
            o.exit_code = math_failure;
        }
    }
    if (cfg.json) {
        json top;
        top["schema"] = schema_version;
        if (batch) {
            top["results"] = json::array();
            for (const auto &it : items) {
                top["results"].push_back(it.body);
            }
        } else {
            merge(top, items.front().body);
        }
        o.out = top.dump(2) + "\n";
        return o;
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto &b = items[i].body;
        if (i) {
            o.out += "\n";
        }
        if (cmd.verb == "selftest" && b.contains("criteria")) {
            for (const auto &c : b["criteria"]) {
                criterion_result r{c["id"], c["name"], c["pass"], c["detail"], c["seconds"], c["budget_seconds"]};
                o.out += format_result(r) + "\n";
            }
            o.out += std::to_string(b["passed"].get<std::size_t>()) + "/" +
                     std::to_string(b["total"].get<std::size_t>()) + " criteria passed\n";
        } else if (b.contains("error") && !b.contains("mu_coeffs")) {
            o.err += "error: " + b["error"].get<std::string>() + ": " + b["detail"].get<std::string>() + "\n";
            if (b.contains("input")) {
                o.out += render_text(b);
            }
        } else {
            o.out += render_text(b);
        }
    }
    return o;
}

} // namespace frontal::cli
