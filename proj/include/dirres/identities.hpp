#pragma once

#include "dirres/rational.hpp"

#include <utility>
#include <vector>

namespace dirres {

// Catalog of the exact combinatorial identities the closed forms lean on.
// Every entry is a statement "brute-force sum == closed form" over integer
// parameters; eval_identity returns both sides so callers can compare with ==.
enum class IdentityId {
    PascalRule,      // C(n,k) = C(n-1,k) + C(n-1,k-1)
    BinomialFormula, // (x+y)^n = sum_i C(n,i) x^i y^{n-i}
    SumInt,          // sum k = n(n+1)/2
    SumIntSq,        // sum k^2 = n(n+1)(2n+1)/6
    SumTwos,         // sum 2^{-k} = 1 - 2^{-n}
    SumIntTwos,      // sum k 2^{-k} = 2 - (n+2) 2^{-n}
    SumIntSqTwos,    // sum k^2 2^{-k} = 6 - (n^2+4n+6) 2^{-n}
    BinSumNM,        // sum_i C(m+i, m+1) = C(n+m+1, m+2)
    BinSumNMK,       // sum_i C(m+i, k+i) = C(n+m+1, n+k) - C(m+1, k)
    BinEvenSum,      // sum C(n, 2i) = 2^{n-1}
    BinOddSum,       // sum C(n, 2i+1) = 2^{n-1}
    BinEvenSumI,     // sum 2i C(n, 2i) = n 2^{n-2}
    BinOddSumI,      // sum (2i+1) C(n, 2i+1) = n 2^{n-2}
    IEvenEvenSum4,   // sum i C(2p+4, 2i+2) = p 2^{2p+2} + 1
    IEvenOddSum,     // sum i C(2p+2, 2i+1) = p 2^{2p}
    IEvenOddSum4,    // sum i C(2p+4, 2i+1) = (p+1) 2^{2p+2}
    IOddEvenSum,     // sum i C(2p+3, 2i+2) = (2p-1) 2^{2p} + 1
    IOddOddSum,      // sum i C(2p+3, 2i+1) = (2p+1) 2^{2p} - p - 1
    I2Sum1,          // sum_i sum_{k=2i-1}^{2p}   i 2^{-k} C(k+2, 2i+1) = p^2 + p/2
    I2Sum2,          // sum_i sum_{k=2i-1}^{2p-1} i 2^{-k} C(k+2, 2i+1) = p^2 - p/2
    I2Sum3,          // sum to p+1, k to 2p+1:                          = p^2 + 3p/2 + 1/2
    ManipOdd,        // shifts a 2^{-k} C(n+k+3, n+2i+2) double sum onto C(n+k+2, n+2i+1)
    ManipEven,       // same with both upper limits one lower
};

const char* identity_name(IdentityId id);
const std::vector<IdentityId>& all_identities();

struct IdentityValue {
    Rational lhs; // term-by-term sum
    Rational rhs; // closed form
};

// Parameter layout per identity:
//   PascalRule       (n, k)          1 <= k <= n-1
//   BinomialFormula  (n, xn, xd, yn, yd)  n >= 0, x = xn/xd, y = yn/yd
//   SumInt family    (n)             n >= 1
//   BinSumNM         (n, m)          n >= 1, m >= 0
//   BinSumNMK        (n, m, k)       n >= 1, 0 <= k <= m
//   BinEvenSum/BinOddSum   (n)       n >= 1
//   BinEvenSumI/BinOddSumI (n)       n >= 2
//   IEvenEvenSum4 .. I2Sum3 (p)      p >= 0
//   ManipOdd/ManipEven (n, p)        n >= 0, p >= 0
// Anything outside these ranges (or a wrong tuple size) throws
// OutOfValidityRange. Empty sums evaluate to zero.
IdentityValue eval_identity(IdentityId id, const std::vector<long>& params);

// The documented verification grid for each identity, as the list of
// parameter tuples to sweep. max_n caps the leading bound (sizes below keep
// their stated defaults when max_n is larger).
std::vector<std::vector<long>> default_sweep(IdentityId id, long max_n = 0);

// Two aggregate expressions that collapse entire blocks of the tree-
// resistance derivation; each must evaluate to exactly zero for all
// n >= 0, p >= 0.
Rational g_expression(long n, long p);
Rational h_expression(long n, long p);

// s(n, ell) both ways: the six-sum definition and its simplified form. The
// two must be equal, and both equal the two-branch tree resistance
// r(n, ell+1).
struct SValue {
    Rational definition;
    Rational simplified;
};
SValue s_expression(long n, long ell);

} // namespace dirres
