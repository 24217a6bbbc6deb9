#include <algorithm>

#include <frontal/errors.hpp>
#include <frontal/parser.hpp>
#include <frontal/polynomial.hpp>

namespace frontal
{

monomial::monomial(std::vector<factor> factors)
{
    std::sort(factors.begin(), factors.end());
    for (auto &[name, e] : factors) {
        if (e == 0) {
            continue;
        }
        if (!f_.empty() && f_.back().first == name) {
            f_.back().second += e;
        } else {
            f_.emplace_back(std::move(name), e);
        }
    }
}

monomial monomial::variable(std::string name, unsigned e)
{
    return monomial({{std::move(name), e}});
}

unsigned monomial::exponent(std::string_view name) const
{
    for (const auto &[n, e] : f_) {
        if (n == name) {
            return e;
        }
    }
    return 0;
}

unsigned monomial::degree() const
{
    unsigned d = 0;
    for (const auto &fe : f_) {
        d += fe.second;
    }
    return d;
}

monomial monomial::operator*(const monomial &o) const
{
    monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    auto i = f_.begin();
    auto j = o.f_.begin();
    while (i != f_.end() || j != o.f_.end()) {
        if (j == o.f_.end() || (i != f_.end() && i->first < j->first)) {
            r.f_.push_back(*i++);
        } else if (i == f_.end() || j->first < i->first) {
            r.f_.push_back(*j++);
        } else {
            r.f_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return r;
}

monomial monomial::without(std::string_view name) const
{
    monomial r;
    for (const auto &fe : f_) {
        if (fe.first != name) {
            r.f_.push_back(fe);
        }
    }
    return r;
}

bool term_order::operator()(const monomial &a, const monomial &b) const
{
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) {
        return da > db;
    }
    const auto &fa = a.factors();
    const auto &fb = b.factors();
    auto i = fa.begin();
    auto j = fb.begin();
    while (i != fa.end() && j != fb.end()) {
        if (i->first != j->first) {
            // The monomial containing the alphabetically earlier variable comes first.
            return i->first < j->first;
        }
        if (i->second != j->second) {
            return i->second > j->second;
        }
        ++i;
        ++j;
    }
    return i != fa.end() && j == fb.end();
}

polynomial::polynomial(const rational &c)
{
    if (!c.is_zero()) {
        terms_.emplace(monomial(), c);
    }
}

polynomial::polynomial(const rational &c, monomial m)
{
    if (!c.is_zero()) {
        terms_.emplace(std::move(m), c);
    }
}

polynomial polynomial::variable(const std::string &name, unsigned e)
{
    return polynomial(rational(1), monomial::variable(name, e));
}

polynomial polynomial::parse(std::string_view text)
{
    expr_parser p(text);
    polynomial r = p.parse_expression();
    p.expect_end();
    return r;
}

std::set<std::string> polynomial::variables() const
{
    std::set<std::string> vs;
    for (const auto &[m, c] : terms_) {
        for (const auto &fe : m.factors()) {
            vs.insert(fe.first);
        }
    }
    return vs;
}

bool polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

rational polynomial::constant_term() const
{
    return coefficient(monomial());
}

rational polynomial::coefficient(const monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? rational(0) : it->second;
}

unsigned polynomial::degree() const
{
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

unsigned polynomial::degree_in(std::string_view var) const
{
    unsigned d = 0;
    for (const auto &tm : terms_) {
        d = std::max(d, tm.first.exponent(var));
    }
    return d;
}

unsigned polynomial::order() const
{
    return terms_.empty() ? infinite_order : terms_.rbegin()->first.degree();
}

unsigned polynomial::order_in(std::string_view var) const
{
    unsigned o = infinite_order;
    for (const auto &tm : terms_) {
        o = std::min(o, tm.first.exponent(var));
    }
    return o;
}

void polynomial::add_term(const monomial &m, const rational &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

polynomial polynomial::operator-() const
{
    polynomial r(*this);
    for (auto &tm : r.terms_) {
        tm.second = -tm.second;
    }
    return r;
}

polynomial &polynomial::operator+=(const polynomial &o)
{
    for (const auto &[m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

polynomial &polynomial::operator-=(const polynomial &o)
{
    for (const auto &[m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

polynomial operator*(const polynomial &a, const polynomial &b)
{
    polynomial r;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

polynomial &polynomial::operator*=(const polynomial &o)
{
    *this = *this * o;
    return *this;
}

polynomial polynomial::pow(unsigned e) const
{
    polynomial r(1), base(*this);
    while (e > 0) {
        if (e & 1u) {
            r *= base;
        }
        e >>= 1u;
        if (e > 0) {
            base *= base;
        }
    }
    return r;
}

polynomial polynomial::scaled(const rational &c) const
{
    if (c.is_zero()) {
        return {};
    }
    polynomial r(*this);
    for (auto &tm : r.terms_) {
        tm.second *= c;
    }
    return r;
}

polynomial polynomial::diff(std::string_view var) const
{
    polynomial r;
    for (const auto &[m, c] : terms_) {
        const unsigned e = m.exponent(var);
        if (e == 0) {
            continue;
        }
        auto fs = m.factors();
        for (auto &fe : fs) {
            if (fe.first == var) {
                fe.second -= 1;
            }
        }
        r.add_term(monomial(std::move(fs)), c * rational(static_cast<long>(e)));
    }
    return r;
}

polynomial polynomial::integrate(std::string_view var) const
{
    polynomial r;
    for (const auto &[m, c] : terms_) {
        const unsigned e = m.exponent(var);
        r.add_term(m * monomial::variable(std::string(var)), c / rational(static_cast<long>(e) + 1));
    }
    return r;
}

polynomial polynomial::truncate(unsigned n) const
{
    polynomial r;
    for (const auto &[m, c] : terms_) {
        if (m.degree() <= n) {
            r.terms_.emplace_hint(r.terms_.end(), m, c);
        }
    }
    return r;
}

polynomial polynomial::truncate_in(const std::vector<std::string> &vars, unsigned n) const
{
    polynomial r;
    for (const auto &[m, c] : terms_) {
        unsigned d = 0;
        for (const auto &v : vars) {
            d += m.exponent(v);
        }
        if (d <= n) {
            r.terms_.emplace_hint(r.terms_.end(), m, c);
        }
    }
    return r;
}

polynomial polynomial::substitute(std::string_view var, const polynomial &value) const
{
    std::map<std::string, polynomial> vs;
    vs.emplace(std::string(var), value);
    return substitute(vs);
}

polynomial polynomial::substitute(const std::map<std::string, polynomial> &values) const
{
    polynomial r;
    std::map<std::pair<std::string, unsigned>, polynomial> powers;
    for (const auto &[m, c] : terms_) {
        polynomial t(c);
        std::vector<monomial::factor> kept;
        for (const auto &fe : m.factors()) {
            auto it = values.find(fe.first);
            if (it == values.end()) {
                kept.push_back(fe);
                continue;
            }
            auto [pit, inserted] = powers.try_emplace(fe);
            if (inserted) {
                pit->second = it->second.pow(fe.second);
            }
            t *= pit->second;
        }
        r += t * polynomial(rational(1), monomial(std::move(kept)));
    }
    return r;
}

polynomial polynomial::set_zero(const std::vector<std::string> &vars) const
{
    polynomial r;
    for (const auto &[m, c] : terms_) {
        bool keep = true;
        for (const auto &v : vars) {
            if (m.exponent(v) != 0) {
                keep = false;
                break;
            }
        }
        if (keep) {
            r.terms_.emplace_hint(r.terms_.end(), m, c);
        }
    }
    return r;
}

std::map<unsigned, polynomial> polynomial::coefficients_in(std::string_view var) const
{
    std::map<unsigned, polynomial> r;
    for (const auto &[m, c] : terms_) {
        r[m.exponent(var)].add_term(m.without(var), c);
    }
    return r;
}

std::string polynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) {
                s += "-";
            }
        } else {
            s += negative ? " - " : " + ";
        }
        first = false;
        const rational a = negative ? -c : c;
        std::string body;
        for (const auto &[name, e] : m.factors()) {
            if (!body.empty()) {
                body += "*";
            }
            body += name;
            if (e > 1) {
                body += "^" + std::to_string(e);
            }
        }
        if (body.empty()) {
            s += a.to_string();
        } else if (a.is_one()) {
            s += body;
        } else {
            s += a.to_string() + "*" + body;
        }
    }
    return s;
}

namespace
{

std::optional<polynomial> divide_rec(const polynomial &num, const polynomial &den, const std::vector<std::string> &order,
                                     std::size_t level)
{
    if (num.is_zero()) {
        return polynomial();
    }
    if (den.is_constant()) {
        return num.scaled(rational(1) / den.constant_term());
    }
    if (level >= order.size()) {
        return std::nullopt;
    }
    const std::string &v = order[level];
    const unsigned dn = den.degree_in(v);
    const polynomial lc_den = dn == 0 ? den : den.coefficients_in(v).at(dn);
    polynomial r = num, q;
    while (!r.is_zero()) {
        const unsigned k = r.degree_in(v);
        if (k < dn) {
            return std::nullopt;
        }
        const polynomial lc_r = r.coefficients_in(v).at(k);
        auto c = divide_rec(lc_r, lc_den, order, level + 1);
        if (!c) {
            return std::nullopt;
        }
        const polynomial t = *c * polynomial::variable(v, k - dn);
        q += t;
        r -= t * den;
    }
    return q;
}

} // namespace

std::optional<polynomial> div_exact(const polynomial &num, const polynomial &den, std::string_view var)
{
    if (den.is_zero()) {
        fail("ZeroDivisor", "exact division by the zero polynomial");
    }
    std::vector<std::string> order{std::string(var)};
    auto vs = num.variables();
    for (const auto &v : den.variables()) {
        vs.insert(v);
    }
    for (const auto &v : vs) {
        if (v != var) {
            order.push_back(v);
        }
    }
    return divide_rec(num, den, order, 0);
}

jet jet_truncate(const polynomial &p, unsigned n)
{
    return {p.truncate(n), n};
}

} // namespace frontal
