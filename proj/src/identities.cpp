#include "dirres/identities.hpp"

#include "dirres/errors.hpp"

#include <string>

namespace dirres {

namespace {

Rational C(long n, long k) {
    return Rational(binomial(n, k));
}

Rational rational_pow(const Rational& x, long e) {
    Rational r = 1;
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

void need(bool ok, const char* what) {
    if (!ok) throw OutOfValidityRange(what);
}

} // namespace

const char* identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::PascalRule: return "PascalRule";
        case IdentityId::BinomialFormula: return "BinomialFormula";
        case IdentityId::SumInt: return "SumInt";
        case IdentityId::SumIntSq: return "SumIntSq";
        case IdentityId::SumTwos: return "SumTwos";
        case IdentityId::SumIntTwos: return "SumIntTwos";
        case IdentityId::SumIntSqTwos: return "SumIntSqTwos";
        case IdentityId::BinSumNM: return "BinSumNM";
        case IdentityId::BinSumNMK: return "BinSumNMK";
        case IdentityId::BinEvenSum: return "BinEvenSum";
        case IdentityId::BinOddSum: return "BinOddSum";
        case IdentityId::BinEvenSumI: return "BinEvenSumI";
        case IdentityId::BinOddSumI: return "BinOddSumI";
        case IdentityId::IEvenEvenSum4: return "IEvenEvenSum4";
        case IdentityId::IEvenOddSum: return "IEvenOddSum";
        case IdentityId::IEvenOddSum4: return "IEvenOddSum4";
        case IdentityId::IOddEvenSum: return "IOddEvenSum";
        case IdentityId::IOddOddSum: return "IOddOddSum";
        case IdentityId::I2Sum1: return "I2Sum1";
        case IdentityId::I2Sum2: return "I2Sum2";
        case IdentityId::I2Sum3: return "I2Sum3";
        case IdentityId::ManipOdd: return "ManipOdd";
        case IdentityId::ManipEven: return "ManipEven";
    }
    return "?";
}

const std::vector<IdentityId>& all_identities() {
    static const std::vector<IdentityId> ids = {
        IdentityId::PascalRule,    IdentityId::BinomialFormula, IdentityId::SumInt,
        IdentityId::SumIntSq,      IdentityId::SumTwos,         IdentityId::SumIntTwos,
        IdentityId::SumIntSqTwos,  IdentityId::BinSumNM,        IdentityId::BinSumNMK,
        IdentityId::BinEvenSum,    IdentityId::BinOddSum,       IdentityId::BinEvenSumI,
        IdentityId::BinOddSumI,    IdentityId::IEvenEvenSum4,   IdentityId::IEvenOddSum,
        IdentityId::IEvenOddSum4,  IdentityId::IOddEvenSum,     IdentityId::IOddOddSum,
        IdentityId::I2Sum1,        IdentityId::I2Sum2,          IdentityId::I2Sum3,
        IdentityId::ManipOdd,      IdentityId::ManipEven,
    };
    return ids;
}

IdentityValue eval_identity(IdentityId id, const std::vector<long>& params) {
    const auto arity = [&params](size_t n) {
        if (params.size() != n)
            throw OutOfValidityRange("identity expects " + std::to_string(n) + " parameters, got " +
                                     std::to_string(params.size()));
    };

    switch (id) {
        case IdentityId::PascalRule: {
            arity(2);
            const long n = params[0], k = params[1];
            need(1 <= k && k <= n - 1, "PascalRule needs 1 <= k <= n-1");
            return {C(n, k), C(n - 1, k) + C(n - 1, k - 1)};
        }
        case IdentityId::BinomialFormula: {
            arity(5);
            const long n = params[0];
            need(n >= 0, "BinomialFormula needs n >= 0");
            need(params[2] != 0 && params[4] != 0, "BinomialFormula needs nonzero denominators");
            const Rational x(params[1], params[2]), y(params[3], params[4]);
            Rational sum = 0;
            for (long i = 0; i <= n; ++i)
                sum += C(n, i) * rational_pow(x, i) * rational_pow(y, n - i);
            return {sum, rational_pow(x + y, n)};
        }
        case IdentityId::SumInt: {
            arity(1);
            const long n = params[0];
            need(n >= 1, "SumInt needs n >= 1");
            Rational sum = 0;
            for (long k = 1; k <= n; ++k) sum += k;
            return {sum, Rational(n * (n + 1), 2)};
        }
        case IdentityId::SumIntSq: {
            arity(1);
            const long n = params[0];
            need(n >= 1, "SumIntSq needs n >= 1");
            Rational sum = 0;
            for (long k = 1; k <= n; ++k) sum += k * k;
            return {sum, Rational(n * (n + 1) * (2 * n + 1), 6)};
        }
        case IdentityId::SumTwos: {
            arity(1);
            const long n = params[0];
            need(n >= 1, "SumTwos needs n >= 1");
            Rational sum = 0;
            for (long k = 1; k <= n; ++k) sum += pow2(-k);
            return {sum, 1 - pow2(-n)};
        }
        case IdentityId::SumIntTwos: {
            arity(1);
            const long n = params[0];
            need(n >= 1, "SumIntTwos needs n >= 1");
            Rational sum = 0;
            for (long k = 1; k <= n; ++k) sum += k * pow2(-k);
            return {sum, 2 - (n + 2) * pow2(-n)};
        }
        case IdentityId::SumIntSqTwos: {
            arity(1);
            const long n = params[0];
            need(n >= 1, "SumIntSqTwos needs n >= 1");
            Rational sum = 0;
            for (long k = 1; k <= n; ++k) sum += k * k * pow2(-k);
            return {sum, 6 - (n * n + 4 * n + 6) * pow2(-n)};
        }
        case IdentityId::BinSumNM: {
            arity(2);
            const long n = params[0], m = params[1];
            need(n >= 1 && m >= 0, "BinSumNM needs n >= 1, m >= 0");
            Rational sum = 0;
            for (long i = 1; i <= n; ++i) sum += C(m + i, m + 1);
            return {sum, C(n + m + 1, m + 2)};
        }
        case IdentityId::BinSumNMK: {
            arity(3);
            const long n = params[0], m = params[1], k = params[2];
            need(n >= 1 && m >= 0 && 0 <= k && k <= m, "BinSumNMK needs n >= 1, 0 <= k <= m");
            Rational sum = 0;
            for (long i = 1; i <= n; ++i) sum += C(m + i, k + i);
            return {sum, C(n + m + 1, n + k) - C(m + 1, k)};
        }
        case IdentityId::BinEvenSum: {
            arity(1);
            const long n = params[0];
            need(n >= 1, "BinEvenSum needs n >= 1");
            Rational sum = 0;
            for (long i = 0; i <= n / 2; ++i) sum += C(n, 2 * i);
            return {sum, pow2(n - 1)};
        }
        case IdentityId::BinOddSum: {
            arity(1);
            const long n = params[0];
            need(n >= 1, "BinOddSum needs n >= 1");
            Rational sum = 0;
            for (long i = 0; i <= (n - 1) / 2; ++i) sum += C(n, 2 * i + 1);
            return {sum, pow2(n - 1)};
        }
        case IdentityId::BinEvenSumI: {
            arity(1);
            const long n = params[0];
            need(n >= 2, "BinEvenSumI needs n >= 2");
            Rational sum = 0;
            for (long i = 0; i <= n / 2; ++i) sum += 2 * i * C(n, 2 * i);
            return {sum, n * pow2(n - 2)};
        }
        case IdentityId::BinOddSumI: {
            arity(1);
            const long n = params[0];
            need(n >= 2, "BinOddSumI needs n >= 2");
            Rational sum = 0;
            for (long i = 0; i <= (n - 1) / 2; ++i) sum += (2 * i + 1) * C(n, 2 * i + 1);
            return {sum, n * pow2(n - 2)};
        }
        case IdentityId::IEvenEvenSum4: {
            arity(1);
            const long p = params[0];
            need(p >= 0, "IEvenEvenSum4 needs p >= 0");
            Rational sum = 0;
            for (long i = 1; i <= p + 1; ++i) sum += i * C(2 * p + 4, 2 * i + 2);
            return {sum, p * pow2(2 * p + 2) + 1};
        }
        case IdentityId::IEvenOddSum: {
            arity(1);
            const long p = params[0];
            need(p >= 0, "IEvenOddSum needs p >= 0");
            Rational sum = 0;
            for (long i = 1; i <= p; ++i) sum += i * C(2 * p + 2, 2 * i + 1);
            return {sum, p * pow2(2 * p)};
        }
        case IdentityId::IEvenOddSum4: {
            arity(1);
            const long p = params[0];
            need(p >= 0, "IEvenOddSum4 needs p >= 0");
            Rational sum = 0;
            for (long i = 1; i <= p + 1; ++i) sum += i * C(2 * p + 4, 2 * i + 1);
            return {sum, (p + 1) * pow2(2 * p + 2)};
        }
        case IdentityId::IOddEvenSum: {
            arity(1);
            const long p = params[0];
            need(p >= 0, "IOddEvenSum needs p >= 0");
            Rational sum = 0;
            for (long i = 1; i <= p; ++i) sum += i * C(2 * p + 3, 2 * i + 2);
            return {sum, (2 * p - 1) * pow2(2 * p) + 1};
        }
        case IdentityId::IOddOddSum: {
            arity(1);
            const long p = params[0];
            need(p >= 0, "IOddOddSum needs p >= 0");
            Rational sum = 0;
            for (long i = 1; i <= p; ++i) sum += i * C(2 * p + 3, 2 * i + 1);
            return {sum, (2 * p + 1) * pow2(2 * p) - p - 1};
        }
        case IdentityId::I2Sum1: {
            arity(1);
            const long p = params[0];
            need(p >= 0, "I2Sum1 needs p >= 0");
            Rational sum = 0;
            for (long i = 1; i <= p; ++i)
                for (long k = 2 * i - 1; k <= 2 * p; ++k) sum += i * pow2(-k) * C(k + 2, 2 * i + 1);
            return {sum, Rational(2 * p * p + p, 2)};
        }
        case IdentityId::I2Sum2: {
            arity(1);
            const long p = params[0];
            need(p >= 0, "I2Sum2 needs p >= 0");
            Rational sum = 0;
            for (long i = 1; i <= p; ++i)
                for (long k = 2 * i - 1; k <= 2 * p - 1; ++k)
                    sum += i * pow2(-k) * C(k + 2, 2 * i + 1);
            return {sum, Rational(2 * p * p - p, 2)};
        }
        case IdentityId::I2Sum3: {
            arity(1);
            const long p = params[0];
            need(p >= 0, "I2Sum3 needs p >= 0");
            Rational sum = 0;
            for (long i = 1; i <= p + 1; ++i)
                for (long k = 2 * i - 1; k <= 2 * p + 1; ++k)
                    sum += i * pow2(-k) * C(k + 2, 2 * i + 1);
            return {sum, Rational(2 * p * p + 3 * p + 1, 2)};
        }
        case IdentityId::ManipOdd: {
            arity(2);
            const long n = params[0], p = params[1];
            need(n >= 0 && p >= 0, "ManipOdd needs n >= 0, p >= 0");
            Rational lhs = 0, shifted = 0, tail = 0;
            for (long i = 1; i <= p + 1; ++i) {
                for (long k = 2 * i - 1; k <= 2 * p + 1; ++k) {
                    lhs += i * pow2(-k) * C(n + k + 3, n + 2 * i + 2);
                    shifted += i * pow2(1 - k) * C(n + k + 2, n + 2 * i + 1);
                }
                tail += i * C(n + 2 * p + 4, n + 2 * i + 2);
            }
            return {lhs, shifted - pow2(-2 * p - 1) * tail};
        }
        case IdentityId::ManipEven: {
            arity(2);
            const long n = params[0], p = params[1];
            need(n >= 0 && p >= 0, "ManipEven needs n >= 0, p >= 0");
            Rational lhs = 0, shifted = 0, tail = 0;
            for (long i = 1; i <= p; ++i) {
                for (long k = 2 * i - 1; k <= 2 * p; ++k) {
                    lhs += i * pow2(-k) * C(n + k + 3, n + 2 * i + 2);
                    shifted += i * pow2(1 - k) * C(n + k + 2, n + 2 * i + 1);
                }
                tail += i * C(n + 2 * p + 3, n + 2 * i + 2);
            }
            return {lhs, shifted - pow2(-2 * p) * tail};
        }
    }
    throw OutOfValidityRange("unknown identity");
}

std::vector<std::vector<long>> default_sweep(IdentityId id, long max_n) {
    std::vector<std::vector<long>> grid;
    const auto cap = [max_n](long dflt) { return max_n > 0 ? max_n : dflt; };
    switch (id) {
        case IdentityId::PascalRule:
            for (long n = 2; n <= cap(31); ++n)
                for (long k = 1; k <= n - 1; ++k) grid.push_back({n, k});
            break;
        case IdentityId::BinomialFormula: {
            // x, y from a fixed set of exact rationals, as (num, den) pairs.
            static const long xy[][2] = {{-2, 1}, {-1, 2}, {1, 3}, {1, 1}, {5, 2}};
            for (long n = 0; n <= cap(12); ++n)
                for (const auto& x : xy)
                    for (const auto& y : xy) grid.push_back({n, x[0], x[1], y[0], y[1]});
            break;
        }
        case IdentityId::SumInt:
        case IdentityId::SumIntSq:
        case IdentityId::SumTwos:
        case IdentityId::SumIntTwos:
        case IdentityId::SumIntSqTwos:
            for (long n = 1; n <= cap(40); ++n) grid.push_back({n});
            break;
        case IdentityId::BinSumNM:
            for (long n = 1; n <= cap(25); ++n)
                for (long m = 0; m <= cap(25); ++m) grid.push_back({n, m});
            break;
        case IdentityId::BinSumNMK:
            for (long n = 1; n <= cap(25); ++n)
                for (long m = 0; m <= cap(25); ++m)
                    for (long k = 0; k <= m; ++k) grid.push_back({n, m, k});
            break;
        case IdentityId::BinEvenSum:
        case IdentityId::BinOddSum:
            for (long n = 1; n <= cap(30); ++n) grid.push_back({n});
            break;
        case IdentityId::BinEvenSumI:
        case IdentityId::BinOddSumI:
            for (long n = 2; n <= cap(30); ++n) grid.push_back({n});
            break;
        case IdentityId::IEvenEvenSum4:
        case IdentityId::IEvenOddSum:
        case IdentityId::IEvenOddSum4:
        case IdentityId::IOddEvenSum:
        case IdentityId::IOddOddSum:
        case IdentityId::I2Sum1:
        case IdentityId::I2Sum2:
        case IdentityId::I2Sum3:
            for (long p = 0; p <= cap(15); ++p) grid.push_back({p});
            break;
        case IdentityId::ManipOdd:
        case IdentityId::ManipEven:
            for (long n = 0; n <= cap(15); ++n)
                for (long p = 0; p <= 10; ++p) grid.push_back({n, p});
            break;
    }
    return grid;
}

Rational g_expression(long n, long p) {
    if (n < 0 || p < 0) throw InvalidParam("g_expression needs n >= 0 and p >= 0");
    Rational t = Rational(4 * p * p + 6 * p + 2, n + 2 * p + 2) + 4 * p;
    t += (4 * p * p + 4 * n * p + 4 * n + 10 * p + 6) * pow2(1 - n);
    t += pow2(-2 * p);
    Rational acc = 0;
    for (long i = 1; i <= p + 1; ++i)
        acc += i * (2 * C(n + 2 * p + 4, n + 2 * i + 1) - C(n + 2 * p + 4, n + 2 * i + 2) -
                    (2 * n + 4 * p + 6) * C(2 * p + 4, 2 * i + 1));
    t += pow2(-n - 2 * p) * acc;
    acc = 0;
    for (long i = 1; i <= p + 1; ++i)
        for (long k = 2 * i - 1; k <= 2 * p + 1; ++k)
            acc += i * pow2(-k) *
                   (Rational(n + 2 * p + 1, n + 2 * p + 2) * C(n + k + 2, n + 2 * i + 1) -
                    C(n + k + 2, n + 2 * i) + C(k + 3, 2 * i + 1));
    t += pow2(2 - n) * acc;
    acc = 0;
    for (long i = 1; i <= p + 1; ++i)
        for (long k = 1; k <= n; ++k)
            acc += i * pow2(-k) *
                   (C(k + 2 * p + 4, k + 2 * i + 2) -
                    Rational(2 * n + 4 * p + 6, n + 2 * p + 2) * C(k + 2 * p + 3, k + 2 * i + 1));
    t += pow2(-2 * p) * acc;
    return t;
}

Rational h_expression(long n, long p) {
    if (n < 0 || p < 0) throw InvalidParam("h_expression needs n >= 0 and p >= 0");
    Rational t = Rational(4 * p * p + 2 * p, n + 2 * p + 1) + 4 * p - 2;
    t += (4 * p * p + 4 * n * p + 2 * n + 6 * p + 2) * pow2(1 - n);
    t += pow2(1 - 2 * p);
    t -= (4 * p * p + 2 * n * p + 2 * n + 6 * p + 2) * pow2(1 - n - 2 * p);
    Rational acc = 0;
    for (long i = 1; i <= p; ++i)
        acc += i * (2 * C(n + 2 * p + 3, n + 2 * i + 1) - C(n + 2 * p + 3, n + 2 * i + 2) -
                    (2 * n + 4 * p + 4) * C(2 * p + 3, 2 * i + 1));
    t += pow2(1 - n - 2 * p) * acc;
    acc = 0;
    for (long i = 1; i <= p; ++i)
        for (long k = 2 * i - 1; k <= 2 * p; ++k)
            acc += i * pow2(-k) *
                   (Rational(n + 2 * p, n + 2 * p + 1) * C(n + k + 2, n + 2 * i + 1) -
                    C(n + k + 2, n + 2 * i) + C(k + 3, 2 * i + 1));
    t += pow2(2 - n) * acc;
    acc = 0;
    for (long i = 1; i <= p; ++i)
        for (long k = 1; k <= n; ++k)
            acc += i * pow2(-k) *
                   (C(k + 2 * p + 3, k + 2 * i + 2) -
                    Rational(2 * n + 4 * p + 4, n + 2 * p + 1) * C(k + 2 * p + 2, k + 2 * i + 1));
    t += pow2(1 - 2 * p) * acc;
    return t;
}

SValue s_expression(long n, long ell) {
    if (n < 1 || ell < 1) throw OutOfValidityRange("s_expression needs n >= 1 and ell >= 1");
    const long N = n + ell + 1;

    // Definition: the six partial sums with their prefactors.
    Rational s1 = 0, s2 = 0, s3 = 0, s4 = 0, s5 = 0, s6 = 0;
    for (long k = 1; k <= ell; ++k) {
        const Rational coeff = 4 - Rational(2, N) - pow2(k - ell);
        s1 += coeff * (n - k);
        Rational inner = 0;
        for (long i = 1; i <= (k + 1) / 2; ++i) inner += i * C(n + k + 2, n + 2 * i + 1);
        s2 += coeff * pow2(1 - n - k) * inner;
    }
    for (long k = 1; k <= n; ++k) {
        const Rational coeff = Rational(1, N) - pow2(k - n);
        s3 += coeff * (k - ell);
        Rational inner = 0;
        for (long i = 1; i <= (ell + 1) / 2; ++i) inner += i * C(k + ell + 2, k + 2 * i + 1);
        s4 += coeff * pow2(2 - k - ell) * inner;
    }
    for (long k = 1; k <= n; ++k)
        for (long j = 1; j <= ell; ++j) {
            const Rational coeff = pow2(1 + k - n) - pow2(j - ell);
            s5 += coeff * (k - j);
            Rational inner = 0;
            for (long i = 1; i <= (j + 1) / 2; ++i) inner += i * C(k + j + 2, k + 2 * i + 1);
            s6 += coeff * pow2(1 - k - j) * inner;
        }
    Rational definition =
        Rational(-3 * n * n + 3 * ell * ell - 2 * n * ell - n + 5 * ell + 2, 2 * N * N);
    definition += Rational(ell * ell + 2 * n * ell + 2 * n + 3 * ell, N) * pow2(-n);
    definition += Rational(n * n + n + 2, 2 * N) * pow2(-ell);
    definition += s1 / (2 * N) + s2 / N - Rational(N + 1, N) * (s3 + s4) - s5 / (2 * N) - s6 / N;

    // Simplified form.
    Rational simplified = 2 * (n - ell - 1);
    {
        Rational acc = 0;
        for (long i = 1; i <= (ell + 1) / 2; ++i) acc += i * C(n + ell + 3, n + 2 * i + 1);
        simplified += pow2(2 - n - ell) * acc;
    }
    Rational inner = Rational(ell * ell + ell, N) + 2 * ell - 2 + pow2(1 - ell);
    inner += (ell * ell + 2 * n * ell + 2 * n + 3 * ell + 2) * pow2(1 - n);
    {
        Rational acc = 0;
        for (long i = 1; i <= (ell + 1) / 2; ++i)
            for (long k = 1; k <= n; ++k)
                acc += i * pow2(-k) *
                       (C(k + ell + 3, k + 2 * i + 2) -
                        Rational(2 * n + 2 * ell + 4, N) * C(k + ell + 2, k + 2 * i + 1));
        inner += pow2(1 - ell) * acc;
        acc = 0;
        for (long i = 1; i <= (ell + 1) / 2; ++i)
            acc += i * (2 * C(n + ell + 3, n + 2 * i + 1) - C(n + ell + 3, n + 2 * i + 2) -
                        (2 * n + 2 * ell + 4) * C(ell + 3, 2 * i + 1));
        inner += pow2(1 - n - ell) * acc;
        acc = 0;
        for (long i = 1; i <= (ell + 1) / 2; ++i)
            for (long k = 2 * i - 1; k <= ell; ++k)
                acc += i * pow2(-k) *
                       (Rational(n + ell, N) * C(n + k + 2, n + 2 * i + 1) -
                        C(n + k + 2, n + 2 * i) + C(k + 3, 2 * i + 1));
        inner += pow2(2 - n) * acc;
    }
    simplified += inner / N;

    return {definition, simplified};
}

} // namespace dirres
