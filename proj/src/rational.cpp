#include <cctype>
#include <ostream>

#include <frontal/errors.hpp>
#include <frontal/rational.hpp>

namespace frontal
{

rational::rational(long n, long d)
{
    if (d == 0) {
        fail("ZeroDivisor", "rational with zero denominator");
    }
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

namespace
{

bool is_decimal(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

rational rational::parse(std::string_view s)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    const auto num = s.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!is_decimal(num) || !is_decimal(den)) {
        fail("ParseError", "malformed rational '" + std::string(s) + "'");
    }
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) {
        fail("ZeroDivisor", "rational with zero denominator");
    }
    mpq_class v(negative ? mpz_class(-n) : n, d);
    return rational(v);
}

rational &rational::operator/=(const rational &o)
{
    if (o.is_zero()) {
        fail("ZeroDivisor", "division of a rational by zero");
    }
    v_ /= o.v_;
    return *this;
}

std::string rational::to_string() const
{
    return v_.get_str();
}

std::ostream &operator<<(std::ostream &os, const rational &r)
{
    return os << r.to_string();
}

} // namespace frontal
