#include <fstream>
#include <filesystem>
#include <optional>
#include <set>
#include <sstream>
#include <type_traits>

#include <frontal/cli/input.hpp>
#include <frontal/errors.hpp>
#include <frontal/parser.hpp>

namespace frontal::cli
{

namespace
{

std::vector<std::string> parse_name_list(expr_parser &ps)
{
    std::vector<std::string> names;
    ps.expect("[");
    if (!ps.accept("]")) {
        do {
            names.push_back(ps.expect_identifier());
        } while (ps.accept(","));
        ps.expect("]");
    }
    return names;
}

frontal_germ parse_germ_block(expr_parser &ps)
{
    const token head = ps.peek();
    if (ps.expect_identifier() != "germ") {
        throw parse_error("expected 'germ'", head.line, head.column);
    }
    ps.expect("{");
    std::optional<std::vector<std::string>> vars, params;
    std::optional<polynomial> p, q, mu;
    while (!ps.accept("}")) {
        const token field = ps.peek();
        const std::string name = ps.expect_identifier();
        auto once = [&](bool seen) {
            if (seen) {
                throw parse_error("duplicate field '" + name + "'", field.line, field.column);
            }
        };
        if (name == "vars" || name == "params") {
            auto &slot = name == "vars" ? vars : params;
            once(slot.has_value());
            ps.expect(":");
            slot = parse_name_list(ps);
        } else if (name == "p" || name == "q" || name == "mu") {
            auto &slot = name == "p" ? p : name == "q" ? q : mu;
            once(slot.has_value());
            ps.expect("=");
            slot = ps.parse_expression();
        } else {
            throw parse_error("unknown germ field '" + name + "'", field.line, field.column);
        }
        if (!ps.accept(";") && !(ps.peek().type == token::kind::punct && ps.peek().text == "}")) {
            ps.error_here("expected ';' or '}'");
        }
    }
    if (!vars || vars->empty()) {
        ps.error_here("germ block needs a non-empty 'vars' list");
    }
    if (!p || !q) {
        ps.error_here("germ block needs both 'p' and 'q'");
    }
    std::set<std::string> declared(vars->begin(), vars->end());
    if (params) {
        declared.insert(params->begin(), params->end());
    }
    for (const auto *e : {&*p, &*q}) {
        for (const auto &v : e->variables()) {
            if (!declared.contains(v)) {
                fail("UndeclaredVariable", "'" + v + "' is neither a source variable nor a parameter");
            }
        }
    }
    frontal_germ f = frontal_germ::make(*vars, params.value_or(std::vector<std::string>{}), *p, *q);
    if (mu) {
        if (!(f.q.diff(f.y()) == *mu * f.p.diff(f.y()))) {
            fail("InvalidCertificate", "mu = " + mu->to_string() + " does not satisfy q_y = mu p_y");
        }
        f.mu = *mu;
    }
    return f;
}

std::optional<curve_branch> try_curve(std::string_view text)
{
    expr_parser ps(text);
    if (!ps.accept("(")) {
        return std::nullopt;
    }
    polynomial p = ps.parse_expression();
    if (!ps.accept(",")) {
        return std::nullopt;
    }
    polynomial q = ps.parse_expression();
    ps.expect(")");
    ps.expect_end();
    std::set<std::string> vars = p.variables();
    vars.merge(q.variables());
    if (vars.size() > 1) {
        fail("InvalidCurve", "curve shorthand takes a single variable, found " + std::to_string(vars.size()));
    }
    return curve_branch::make(std::move(p), std::move(q), vars.empty() ? "t" : *vars.begin());
}

std::string join(const std::vector<std::string> &names)
{
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i) {
        s += (i ? ", " : "") + names[i];
    }
    return s;
}

} // namespace

parsed_value parse_expression(std::string_view text)
{
    {
        expr_parser probe(text);
        if (probe.peek().type == token::kind::identifier && probe.peek().text == "germ") {
            probe.next();
            if (probe.peek().type == token::kind::punct && probe.peek().text == "{") {
                return parse_germ(text);
            }
        }
    }
    if (auto c = try_curve(text)) {
        return *c;
    }
    expr_parser ps(text);
    polynomial p = ps.parse_expression();
    ps.expect_end();
    return p;
}

frontal_germ parse_germ(std::string_view text)
{
    expr_parser ps(text);
    frontal_germ f = parse_germ_block(ps);
    ps.expect_end();
    return f;
}

curve_branch parse_curve(std::string_view text)
{
    return to_curve(parse_expression(text));
}

frontal_germ to_germ(const parsed_value &v)
{
    if (const auto *f = std::get_if<frontal_germ>(&v)) {
        return *f;
    }
    if (const auto *c = std::get_if<curve_branch>(&v)) {
        return c->as_germ();
    }
    fail("InvalidArgument", "expected a germ block or a curve, got a polynomial");
}

curve_branch to_curve(const parsed_value &v)
{
    if (const auto *c = std::get_if<curve_branch>(&v)) {
        return *c;
    }
    if (const auto *f = std::get_if<frontal_germ>(&v); f && f->params.empty() && f->source_vars.size() == 1) {
        return curve_branch::make(f->p, f->q, f->y());
    }
    fail("InvalidArgument", "expected a plane curve (p, q) in one variable");
}

std::string to_text(const frontal_germ &f)
{
    std::string s = "germ { vars: [" + join(f.source_vars) + "]; ";
    if (!f.params.empty()) {
        s += "params: [" + join(f.params) + "]; ";
    }
    s += "p = " + f.p.to_string() + "; q = " + f.q.to_string() + "; ";
    if (f.mu) {
        s += "mu = " + f.mu->to_string() + "; ";
    }
    return s + "}";
}

std::string to_text(const curve_branch &g)
{
    return to_string(g);
}

std::string to_text(const parsed_value &v)
{
    return std::visit(
        [](const auto &x) -> std::string {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, polynomial>) {
                return x.to_string();
            } else {
                return to_text(x);
            }
        },
        v);
}

std::string read_input(const std::string &arg)
{
    std::error_code ec;
    if (arg.size() < 4096 && std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

} // namespace frontal::cli
