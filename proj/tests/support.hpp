#pragma once

#include <functional>
#include <string>

#include <frontal/errors.hpp>
#include <frontal/germ.hpp>
#include <frontal/polynomial.hpp>

namespace test
{

inline frontal::polynomial P(const char *s)
{
    return frontal::polynomial::parse(s);
}

inline frontal::curve_branch curve(const char *p, const char *q)
{
    return frontal::curve_branch::make(P(p), P(q));
}

inline frontal::frontal_germ germ(std::vector<std::string> vars, std::vector<std::string> params, const char *p,
                                  const char *q)
{
    return frontal::frontal_germ::make(std::move(vars), std::move(params), P(p), P(q));
}

// Kind of the frontal::error thrown by body, or "" when it returns normally.
inline std::string error_kind(const std::function<void()> &body)
{
    try {
        body();
    } catch (const frontal::error &e) {
        return e.kind();
    }
    return "";
}

} // namespace test
