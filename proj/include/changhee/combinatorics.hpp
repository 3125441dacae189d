#pragma once

#include <changhee/polynomial.hpp>
#include <changhee/rational.hpp>

#include <vector>

namespace changhee {

enum class StirlingKind { first_signed, second };

/// Precomputed triangle of Stirling numbers, indexed (n, l) with l <= n.
/// Built once, read-only afterwards; value() of an out-of-triangle (n, l)
/// with l > n is 0 by convention.
class StirlingTriangle {
public:
    StirlingTriangle(StirlingKind kind, unsigned max_n);

    StirlingKind kind() const { return kind_; }
    unsigned max_n() const { return max_n_; }

    const BigInt& value(unsigned n, unsigned l) const;

private:
    StirlingKind kind_;
    unsigned max_n_;
    std::vector<std::vector<BigInt>> rows_;
    static const BigInt zero_;
};

/// Signed Stirling number of the first kind: coefficient of x^l in (x)_n.
BigInt stirling_first_signed(unsigned n, unsigned l);

/// Stirling number of the second kind S2(l, n): partitions of an l-set
/// into n nonempty blocks. Argument order follows the EGF convention
/// (e^t - 1)^n = n! sum_l S2(l, n) t^l / l!.
BigInt stirling_second(unsigned l, unsigned n);

BigInt factorial(unsigned n);

/// Generalized binomial C(n, m) = n(n-1)...(n-m+1)/m! for any integer
/// upper argument, so C(1, 2) = 0 and C(-1, 2) = 1.
BigInt binomial(const BigInt& n, unsigned m);

inline BigInt binomial(long long n, unsigned m) { return binomial(BigInt(n), m); }

/// n! / (parts[0]! ... parts[k-1]!); the parts must compose n.
BigInt multinomial(unsigned n, const std::vector<unsigned>& parts);

/// a(a+1)...(a+n-1); empty product for n = 0.
Rational rising_factorial(const Rational& a, unsigned n);

/// a(a-1)...(a-n+1); empty product for n = 0.
Rational falling_factorial_value(const Rational& a, unsigned n);

}  // namespace changhee
