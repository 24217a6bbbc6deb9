#include <cstdlib>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include <frontal/cli/commands.hpp>
#include <frontal/cli/report.hpp>

namespace
{

const std::map<std::string, std::string> descriptions = {
    {"check", "test a germ or curve for frontality and print mu"},
    {"lift", "Nash lift and integral corank"},
    {"codim", "A_e- and F-codimension with a basis of F / T A_e"},
    {"invariants", "semigroup, delta, Milnor numbers and codimensions of a curve"},
    {"versal", "A_e-miniversal unfolding of a curve (t^a, q)"},
    {"reduce", "frontal reduction of a miniversal unfolding"},
    {"sum", "frontal sum of two unfoldings with the same base"},
    {"stable", "stable unfolding of a curve, or stability of a germ or multigerm"},
    {"classify", "list stable slice curves, or identify stable germs"},
    {"table", "the five stable classes with verification data"},
    {"selftest", "run the acceptance checks"},
};

} // namespace

int main(int argc, char **argv)
{
    using frontal::cli::config;
    config cfg;
    if (const char *env = std::getenv("FRONTAL_JET_CAP")) {
        try {
            cfg.jet_cap = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception &) {
            std::cerr << frontal::cli::error_json("InvalidConfig", "FRONTAL_JET_CAP is not a number").dump() << "\n";
            return 1;
        }
    }

    CLI::App app{"Exact computations with corank-1 frontal map germs"};
    app.require_subcommand(1);
    std::string mode = "exact";
    app.add_flag("--json", cfg.json, "print JSON instead of text");
    app.add_option("--mode", mode, "frontality test: exact or jet")->check(CLI::IsMember({"exact", "jet"}));
    app.add_option("--jet", cfg.jet_degree, "truncation degree for --mode jet");
    app.add_option("--jet-cap", cfg.jet_cap, "jet degree cap for curves (overrides FRONTAL_JET_CAP)");
    app.add_option("--n3-jet-cap", cfg.n3_jet_cap, "jet degree cap for germs in several variables");
    app.add_option("--seed", cfg.seed, "seed for the randomized checks of selftest");

    frontal::cli::command cmd;
    std::vector<std::string> curve_inputs;
    for (const auto &verb : frontal::cli::verbs()) {
        auto *sub = app.add_subcommand(verb, descriptions.at(verb));
        sub->add_option("inputs", cmd.inputs, "expressions, germ blocks or files");
        if (verb == "reduce") {
            sub->add_option("--curve", curve_inputs, "plane curve to unfold and reduce");
        }
        if (verb == "stable") {
            sub->add_flag("--multigerm", cmd.multigerm, "treat the inputs as branches of one multigerm");
        }
        sub->callback([&cmd, verb] { cmd.verb = verb; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << frontal::cli::error_json("UsageError", e.what()).dump() << "\n";
        return 1;
    }
    cfg.mode = mode == "jet" ? config::mode_kind::jet : config::mode_kind::exact;
    cmd.inputs.insert(cmd.inputs.end(), curve_inputs.begin(), curve_inputs.end());

    const auto result = frontal::cli::run(cmd, cfg);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
