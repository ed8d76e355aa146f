#ifndef T1RIGID_SCALAR_HPP
#define T1RIGID_SCALAR_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include <Eigen/Core>

namespace t1rigid {

/// Element of the prime field Z/pZ, p < 2^32.
template <std::uint32_t P>
class ModPrime
{
public:
    static constexpr std::uint32_t modulus = P;

    ModPrime() = default;
    ModPrime(std::int64_t v) // NOLINT: implicit from integer literals, like a numeric type
        : value_(static_cast<std::uint32_t>(((v % static_cast<std::int64_t>(P)) + P) % P))
    {
    }

    std::uint32_t value() const { return value_; }

    ModPrime & operator+=(ModPrime o)
    {
        value_ = static_cast<std::uint32_t>((std::uint64_t{value_} + o.value_) % P);
        return *this;
    }
    ModPrime & operator-=(ModPrime o)
    {
        value_ = static_cast<std::uint32_t>((std::uint64_t{value_} + P - o.value_) % P);
        return *this;
    }
    ModPrime & operator*=(ModPrime o)
    {
        value_ = static_cast<std::uint32_t>((std::uint64_t{value_} * o.value_) % P);
        return *this;
    }
    ModPrime & operator/=(ModPrime o) { return *this *= o.inverse(); }

    ModPrime inverse() const
    {
        if (value_ == 0)
            throw std::domain_error("division by zero in a prime field");
        // Fermat: a^(p-2).
        ModPrime result(1), base = *this;
        for (std::uint64_t e = P - 2; e != 0; e >>= 1) {
            if (e & 1u)
                result *= base;
            base *= base;
        }
        return result;
    }

    friend ModPrime operator+(ModPrime a, ModPrime b) { return a += b; }
    friend ModPrime operator-(ModPrime a, ModPrime b) { return a -= b; }
    friend ModPrime operator*(ModPrime a, ModPrime b) { return a *= b; }
    friend ModPrime operator/(ModPrime a, ModPrime b) { return a /= b; }
    friend ModPrime operator-(ModPrime a) { return ModPrime(0) - a; }
    friend bool operator==(ModPrime a, ModPrime b) { return a.value_ == b.value_; }
    friend bool operator!=(ModPrime a, ModPrime b) { return a.value_ != b.value_; }
    friend std::ostream & operator<<(std::ostream & os, ModPrime a) { return os << a.value_; }

private:
    std::uint32_t value_ = 0;
};

/// 2^31 - 1 and 10^9 + 7.
using ModMersenne31 = ModPrime<2147483647u>;
using Mod1e9p7 = ModPrime<1000000007u>;

/**
 * Exact rational with 64-bit numerator and denominator, always reduced
 * with a positive denominator. Every operation checks for overflow and
 * throws std::overflow_error instead of rounding.
 */
class Rational
{
public:
    Rational() = default;
    Rational(std::int64_t n) // NOLINT: implicit from integer literals
        : num_(n)
    {
    }
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    Rational & operator+=(const Rational & o);
    Rational & operator-=(const Rational & o) { return *this += -o; }
    Rational & operator*=(const Rational & o);
    Rational & operator/=(const Rational & o);

    friend Rational operator+(Rational a, const Rational & b) { return a += b; }
    friend Rational operator-(Rational a, const Rational & b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational & b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational & b) { return a /= b; }
    friend Rational operator-(const Rational & a);
    friend bool operator==(const Rational & a, const Rational & b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rational & a, const Rational & b) { return !(a == b); }
    friend std::ostream & operator<<(std::ostream & os, const Rational & r);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace t1rigid

namespace Eigen {

template <std::uint32_t P>
struct NumTraits<t1rigid::ModPrime<P>> : GenericNumTraits<t1rigid::ModPrime<P>>
{
    using Real = t1rigid::ModPrime<P>;
    using NonInteger = t1rigid::ModPrime<P>;
    using Literal = t1rigid::ModPrime<P>;
    using Nested = t1rigid::ModPrime<P>;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 3
    };

    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static Real highest() { return Real(static_cast<std::int64_t>(P) - 1); }
    static Real lowest() { return Real(0); }
    static int digits10() { return 0; }
};

template <>
struct NumTraits<t1rigid::Rational> : GenericNumTraits<t1rigid::Rational>
{
    using Real = t1rigid::Rational;
    using NonInteger = t1rigid::Rational;
    using Literal = t1rigid::Rational;
    using Nested = t1rigid::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 8
    };

    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static Real highest() { return Real(std::numeric_limits<std::int64_t>::max()); }
    static Real lowest() { return Real(std::numeric_limits<std::int64_t>::min() + 1); }
    static int digits10() { return 0; }
};

} // namespace Eigen

#endif
