// arith.hpp
//
// 2-adic combinatorics on arbitrary-precision integers: binary digit
// sums, 2-adic valuations, exact binomial coefficients, and carry
// counts in base-2 addition.  Everything here is pure and total except
// where a precondition is stated.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>

namespace kutoral {

using Int = boost::multiprecision::cpp_int;

// 2-adic valuation.  nu(0) is infinite; keeping the marker explicit
// avoids silent arithmetic on an undefined value.
struct Valuation {
    bool infinite = false;
    long value = 0;

    static Valuation inf() { return Valuation{true, 0}; }
    static Valuation of(long v) { return Valuation{false, v}; }

    bool operator==(const Valuation& o) const
    {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    // infinity dominates every finite value
    bool operator>=(long bound) const { return infinite || value >= bound; }
};

inline std::ostream& operator<<(std::ostream& os, const Valuation& v)
{
    if (v.infinite)
        return os << "inf";
    return os << v.value;
}

// Number of ones in the binary expansion.  Works for any unsigned
// integral type as well as Int.
template <class T>
long alpha(T n)
{
    if (n < 0)
        throw std::invalid_argument("alpha: negative argument");
    long c = 0;
    while (n > 0) {
        c += static_cast<long>(n & 1);
        n >>= 1;
    }
    return c;
}

template <class T>
Valuation nu(T n)
{
    if (n < 0)
        throw std::invalid_argument("nu: negative argument");
    if (n == 0)
        return Valuation::inf();
    long c = 0;
    while ((n & 1) == 0) {
        ++c;
        n >>= 1;
    }
    return Valuation::of(c);
}

// C(a,b) with the convention C(a,b)=0 for b>a, so that sums over
// shifted indices drop their out-of-range terms.
inline Int binom(const Int& a, const Int& b)
{
    if (a < 0 || b < 0)
        throw std::invalid_argument("binom: negative argument");
    if (b > a)
        return 0;
    Int k = b;
    if (a - b < k)
        k = a - b;
    Int num = 1;
    for (Int i = 1; i <= k; ++i) {
        num *= a - k + i;
        num /= i; // exact at every step
    }
    return num;
}

// nu(C(a,b)) via the digit-sum identity alpha(b)+alpha(a-b)-alpha(a).
// Requires b <= a (the zero binomial has no finite valuation).
inline Valuation nu_binom(const Int& a, const Int& b)
{
    if (b > a)
        throw std::invalid_argument("nu_binom: b > a");
    if (a < 0 || b < 0)
        throw std::invalid_argument("nu_binom: negative argument");
    return Valuation::of(alpha(b) + alpha(a - b) - alpha(a));
}

// Number of carries when adding x and y in base 2.  By Kummer's
// theorem this equals nu_binom(x+y, x).
inline long kummer_carries(Int x, Int y)
{
    if (x < 0 || y < 0)
        throw std::invalid_argument("kummer_carries: negative argument");
    long carries = 0;
    int carry = 0;
    while (x > 0 || y > 0 || carry) {
        int s = static_cast<int>(x & 1) + static_cast<int>(y & 1) + carry;
        carry = s >= 2 ? 1 : 0;
        carries += carry;
        x >>= 1;
        y >>= 1;
    }
    return carries;
}

inline Int pow2(long e)
{
    Int r = 1;
    r <<= e;
    return r;
}

} // namespace kutoral
