#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <frontal/germ.hpp>
#include <frontal/polynomial.hpp>

namespace frontal::cli
{

using parsed_value = std::variant<polynomial, frontal_germ, curve_branch>;

// Accepts a polynomial, a germ block
//   germ { vars: [x, y]; params: [u, v]; p = ...; q = ...; mu = ...; }
// (params and mu optional, fields separated by ';') or the curve shorthand (p, q) in one variable.
// Throws parse_error and error("UndeclaredVariable").
parsed_value parse_expression(std::string_view text);

frontal_germ parse_germ(std::string_view text);
curve_branch parse_curve(std::string_view text);

// Germ inputs are taken as is; curves become zero-parameter germs.
frontal_germ to_germ(const parsed_value &v);
// Curves as is; germs without parameters in a single variable are converted.
curve_branch to_curve(const parsed_value &v);

// Canonical text forms; parse_expression inverts them exactly.
std::string to_text(const frontal_germ &f);
std::string to_text(const curve_branch &g);
std::string to_text(const parsed_value &v);

// The contents of the file when arg names an existing file, otherwise arg itself.
std::string read_input(const std::string &arg);

} // namespace frontal::cli
