#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include <frontal/errors.hpp>
#include <frontal/polynomial.hpp>

namespace frontal
{

class parse_error : public error
{
public:
    parse_error(const std::string &detail, std::size_t line, std::size_t column)
        : error("ParseError", "ParseError at " + std::to_string(line) + ":" + std::to_string(column) + ": " + detail),
          line_(line), column_(column)
    {
    }
    std::size_t line() const noexcept
    {
        return line_;
    }
    std::size_t column() const noexcept
    {
        return column_;
    }

private:
    std::size_t line_, column_;
};

struct token {
    enum class kind { identifier, number, punct, end };
    kind type = kind::end;
    std::string text;
    std::size_t line = 1, column = 1;
};

// Recursive-descent parser for polynomial expressions over rational literals:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*        division only by constants
//   unary  := '-' unary | '+' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
// The token interface is exposed so that block grammars can be layered on top.
class expr_parser
{
public:
    explicit expr_parser(std::string_view text);

    // When set, identifiers outside the set raise error("UndeclaredVariable").
    void declare(std::optional<std::set<std::string>> vars)
    {
        declared_ = std::move(vars);
    }

    polynomial parse_expression();

    const token &peek() const noexcept
    {
        return cur_;
    }
    token next();
    bool accept(std::string_view punct);
    void expect(std::string_view punct);
    std::string expect_identifier();
    void expect_end();
    [[noreturn]] void error_here(const std::string &detail) const;

private:
    void advance();
    polynomial parse_term();
    polynomial parse_unary();
    polynomial parse_power();
    polynomial parse_atom();

    std::string_view src_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;
    token cur_;
    std::optional<std::set<std::string>> declared_;
};

} // namespace frontal
