#include <cctype>

#include <frontal/parser.hpp>

namespace frontal
{

expr_parser::expr_parser(std::string_view text) : src_(text)
{
    advance();
}

void expr_parser::error_here(const std::string &detail) const
{
    throw parse_error(detail, cur_.line, cur_.column);
}

void expr_parser::advance()
{
    // Skip whitespace and '#' comments.
    while (pos_ < src_.size()) {
        const char c = src_[pos_];
        if (c == '#') {
            while (pos_ < src_.size() && src_[pos_] != '\n') {
                ++pos_;
                ++col_;
            }
        } else if (c == '\n') {
            ++pos_;
            ++line_;
            col_ = 1;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++pos_;
            ++col_;
        } else {
            break;
        }
    }
    cur_ = token{};
    cur_.line = line_;
    cur_.column = col_;
    if (pos_ >= src_.size()) {
        cur_.type = token::kind::end;
        return;
    }
    const char c = src_[pos_];
    const auto start = pos_;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            ++pos_;
        }
        cur_.type = token::kind::identifier;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        cur_.type = token::kind::number;
    } else if (std::string_view("+-*/^(){}[],;:=").find(c) != std::string_view::npos) {
        ++pos_;
        cur_.type = token::kind::punct;
    } else {
        throw parse_error(std::string("unexpected character '") + c + "'", line_, col_);
    }
    cur_.text = std::string(src_.substr(start, pos_ - start));
    col_ += pos_ - start;
}

token expr_parser::next()
{
    token t = cur_;
    advance();
    return t;
}

bool expr_parser::accept(std::string_view punct)
{
    if (cur_.type == token::kind::punct && cur_.text == punct) {
        advance();
        return true;
    }
    return false;
}

void expr_parser::expect(std::string_view punct)
{
    if (!accept(punct)) {
        error_here("expected '" + std::string(punct) + "'" + (cur_.type == token::kind::end ? " before end of input"
                                                                                             : ", found '" + cur_.text + "'"));
    }
}

std::string expr_parser::expect_identifier()
{
    if (cur_.type != token::kind::identifier) {
        error_here("expected identifier");
    }
    return next().text;
}

void expr_parser::expect_end()
{
    if (cur_.type != token::kind::end) {
        error_here("unexpected '" + cur_.text + "'");
    }
}

polynomial expr_parser::parse_expression()
{
    polynomial r = parse_term();
    while (true) {
        if (accept("+")) {
            r += parse_term();
        } else if (accept("-")) {
            r -= parse_term();
        } else {
            return r;
        }
    }
}

polynomial expr_parser::parse_term()
{
    polynomial r = parse_unary();
    while (true) {
        if (accept("*")) {
            r *= parse_unary();
        } else if (cur_.type == token::kind::punct && cur_.text == "/") {
            const token at = cur_;
            advance();
            const polynomial d = parse_unary();
            if (!d.is_constant()) {
                throw parse_error("division by a non-constant expression", at.line, at.column);
            }
            if (d.is_zero()) {
                throw parse_error("division by zero", at.line, at.column);
            }
            r = r.scaled(rational(1) / d.constant_term());
        } else {
            return r;
        }
    }
}

polynomial expr_parser::parse_unary()
{
    if (accept("-")) {
        return -parse_unary();
    }
    if (accept("+")) {
        return parse_unary();
    }
    return parse_power();
}

polynomial expr_parser::parse_power()
{
    polynomial base = parse_atom();
    if (accept("^")) {
        if (cur_.type != token::kind::number) {
            error_here("expected a nonnegative integer exponent");
        }
        const token t = next();
        if (t.text.size() > 6) {
            throw parse_error("exponent too large", t.line, t.column);
        }
        return base.pow(static_cast<unsigned>(std::stoul(t.text)));
    }
    return base;
}

polynomial expr_parser::parse_atom()
{
    switch (cur_.type) {
        case token::kind::number: {
            const token t = next();
            return polynomial(rational(mpq_class(mpz_class(t.text))));
        }
        case token::kind::identifier: {
            const token t = next();
            if (declared_ && !declared_->contains(t.text)) {
                throw error("UndeclaredVariable", "UndeclaredVariable at " + std::to_string(t.line) + ":"
                                                      + std::to_string(t.column) + ": '" + t.text + "'");
            }
            return polynomial::variable(t.text);
        }
        case token::kind::punct:
            if (accept("(")) {
                polynomial r = parse_expression();
                expect(")");
                return r;
            }
            error_here("unexpected '" + cur_.text + "'");
        case token::kind::end:
            break;
    }
    error_here("unexpected end of input");
}

} // namespace frontal
