#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dirres {

// Exact arithmetic carrier. cpp_rational keeps values canonical (gcd-reduced,
// positive denominator), which is exactly the invariant the identity checks
// rely on when comparing with ==.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 2^e for any sign of e. Dyadic factors like 2^{3-n-m} show up with large
// negative exponents, so this has to stay exact.
inline Rational pow2(long e) {
    BigInt num = 1;
    num <<= static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(1, num) : Rational(num);
}

// Binomial coefficient with the out-of-range convention C(n,k) = 0 for k < 0
// or k > n. Sums bounded by floor((m+1)/2) and friends then need no special
// casing at the edges. Multiplicative evaluation keeps intermediates small.
inline BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt c = 1;
    for (long i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i; // exact: c is C(n-k+i, i) after this step
    }
    return c;
}

inline double to_double(const Rational& q) {
    return q.convert_to<double>();
}

// "p/q" for fractions, plain integer rendering when q == 1.
inline std::string to_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace dirres
