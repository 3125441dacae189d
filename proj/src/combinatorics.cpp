#include <changhee/combinatorics.hpp>

#include <stdexcept>

namespace changhee {

const BigInt StirlingTriangle::zero_ = 0;

StirlingTriangle::StirlingTriangle(StirlingKind kind, unsigned max_n) : kind_(kind), max_n_(max_n) {
    rows_.resize(max_n + 1);
    rows_[0] = {BigInt(1)};
    for (unsigned n = 1; n <= max_n; ++n) {
        rows_[n].assign(n + 1, BigInt(0));
        for (unsigned l = 1; l <= n; ++l) {
            const BigInt& diag = rows_[n - 1][l - 1];
            BigInt same = l < n ? rows_[n - 1][l] : BigInt(0);
            if (kind == StirlingKind::first_signed)
                rows_[n][l] = diag - BigInt(n - 1) * same;
            else
                rows_[n][l] = BigInt(l) * same + diag;
        }
    }
}

const BigInt& StirlingTriangle::value(unsigned n, unsigned l) const {
    if (n > max_n_) throw std::out_of_range("StirlingTriangle: index beyond precomputed rows");
    if (l > n) return zero_;
    return rows_[n][l];
}

BigInt stirling_first_signed(unsigned n, unsigned l) {
    if (l > n) return 0;
    return StirlingTriangle(StirlingKind::first_signed, n).value(n, l);
}

BigInt stirling_second(unsigned l, unsigned n) {
    if (n > l) return 0;
    return StirlingTriangle(StirlingKind::second, l).value(l, n);
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(const BigInt& n, unsigned m) {
    BigInt num = 1;
    for (unsigned i = 0; i < m; ++i) num *= n - BigInt(i);
    return num / factorial(m);
}

BigInt multinomial(unsigned n, const std::vector<unsigned>& parts) {
    unsigned long long sum = 0;
    for (unsigned p : parts) sum += p;
    if (sum != n) throw std::invalid_argument("multinomial: parts do not compose n");
    BigInt r = factorial(n);
    for (unsigned p : parts) r /= factorial(p);
    return r;
}

Rational rising_factorial(const Rational& a, unsigned n) {
    Rational r(1);
    for (unsigned i = 0; i < n; ++i) r *= a + Rational(static_cast<BigInt>(i));
    return r;
}

Rational falling_factorial_value(const Rational& a, unsigned n) {
    Rational r(1);
    for (unsigned i = 0; i < n; ++i) r *= a - Rational(static_cast<BigInt>(i));
    return r;
}

}  // namespace changhee
