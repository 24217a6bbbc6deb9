#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace frontal
{

// Exact rational number, always stored in lowest terms with positive denominator.
class rational
{
public:
    rational() = default;
    rational(long n) : v_(n) {}
    rational(long n, long d);
    explicit rational(const mpq_class &v) : v_(v)
    {
        v_.canonicalize();
    }

    // Accepts "a", "-a" or "a/b" with decimal integers.
    static rational parse(std::string_view s);

    const mpq_class &value() const noexcept
    {
        return v_;
    }
    mpz_class numerator() const
    {
        return v_.get_num();
    }
    mpz_class denominator() const
    {
        return v_.get_den();
    }

    bool is_zero() const noexcept
    {
        return sgn(v_) == 0;
    }
    bool is_one() const noexcept
    {
        return v_ == 1;
    }
    bool is_integer() const noexcept
    {
        return v_.get_den() == 1;
    }
    int sign() const noexcept
    {
        return sgn(v_);
    }

    std::string to_string() const;

    rational operator-() const
    {
        return rational(mpq_class(-v_));
    }
    rational &operator+=(const rational &o)
    {
        v_ += o.v_;
        return *this;
    }
    rational &operator-=(const rational &o)
    {
        v_ -= o.v_;
        return *this;
    }
    rational &operator*=(const rational &o)
    {
        v_ *= o.v_;
        return *this;
    }
    rational &operator/=(const rational &o);

    friend rational operator+(rational a, const rational &b)
    {
        return a += b;
    }
    friend rational operator-(rational a, const rational &b)
    {
        return a -= b;
    }
    friend rational operator*(rational a, const rational &b)
    {
        return a *= b;
    }
    friend rational operator/(rational a, const rational &b)
    {
        return a /= b;
    }

    friend bool operator==(const rational &a, const rational &b)
    {
        return a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const rational &a, const rational &b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

std::ostream &operator<<(std::ostream &, const rational &);

} // namespace frontal
