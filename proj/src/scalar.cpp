#include "t1rigid/scalar.hpp"

#include <limits>

namespace t1rigid {

namespace {

__extension__ typedef __int128 Wide;

Wide wide_gcd(Wide a, Wide b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        const Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(Wide v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v <= std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational arithmetic overflowed 64 bits");
    return static_cast<std::int64_t>(v);
}

void reduce(Wide & n, Wide & d)
{
    if (d == 0)
        throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const Wide g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
}

} // namespace

Rational::Rational(std::int64_t n, std::int64_t d)
{
    Wide wn = n, wd = d;
    reduce(wn, wd);
    num_ = narrow(wn);
    den_ = narrow(wd);
}

Rational & Rational::operator+=(const Rational & o)
{
    Wide n = Wide{num_} * o.den_ + Wide{o.num_} * den_;
    Wide d = Wide{den_} * o.den_;
    reduce(n, d);
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

Rational & Rational::operator*=(const Rational & o)
{
    Wide n = Wide{num_} * o.num_;
    Wide d = Wide{den_} * o.den_;
    reduce(n, d);
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

Rational & Rational::operator/=(const Rational & o)
{
    if (o.num_ == 0)
        throw std::domain_error("rational division by zero");
    Wide n = Wide{num_} * o.den_;
    Wide d = Wide{den_} * o.num_;
    reduce(n, d);
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

Rational operator-(const Rational & a)
{
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
}

std::ostream & operator<<(std::ostream & os, const Rational & r)
{
    os << r.num_;
    if (r.den_ != 1)
        os << '/' << r.den_;
    return os;
}

} // namespace t1rigid
