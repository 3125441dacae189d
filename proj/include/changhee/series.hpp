#pragma once

#include <changhee/polynomial.hpp>
#include <changhee/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace changhee {

/// Formal power series in t modulo t^{order+1} over a coefficient ring R
/// (Rational or Polynomial). Binary operations demand equal truncation
/// orders; mixing orders is a caller bug, not a math question.
///
/// Coefficients are ordinary: a series written as sum a_n t^n / n! stores
/// c_n = a_n / n!, and egf_coefficient recovers a_n.
template <typename R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : c_(order + 1, R(0)) {}

    static TruncatedSeries constant(const R& value, std::size_t order) {
        TruncatedSeries s(order);
        s.c_[0] = value;
        return s;
    }

    static TruncatedSeries unit(std::size_t order) { return constant(R(1), order); }

    /// The series t (truncates to zero when order = 0).
    static TruncatedSeries shift(std::size_t order) {
        TruncatedSeries s(order);
        if (order >= 1) s.c_[1] = R(1);
        return s;
    }

    /// Low-order coefficients given explicitly, the rest zero.
    static TruncatedSeries from_coefficients(std::vector<R> low, std::size_t order) {
        if (low.size() > order + 1)
            throw std::invalid_argument("TruncatedSeries: more coefficients than truncation allows");
        TruncatedSeries s(order);
        for (std::size_t i = 0; i < low.size(); ++i) s.c_[i] = std::move(low[i]);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }

    const R& coeff(std::size_t n) const {
        if (n >= c_.size()) throw std::out_of_range("TruncatedSeries: coefficient beyond truncation");
        return c_[n];
    }

    void set_coeff(std::size_t n, R value) {
        if (n >= c_.size()) throw std::out_of_range("TruncatedSeries: coefficient beyond truncation");
        c_[n] = std::move(value);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_orders(a, b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_orders(a, b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_orders(a, b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero_coeff(a.c_[i])) continue;
            for (std::size_t j = 0; i + j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r(order());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }

    TruncatedSeries scale(const R& s) const {
        TruncatedSeries r(order());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
        return r;
    }

    /// Multiplicative inverse mod t^{order+1}; the constant term must be
    /// invertible in R (reciprocal throws std::domain_error otherwise).
    TruncatedSeries invert() const {
        TruncatedSeries g(order());
        R inv0 = reciprocal(c_[0]);
        g.c_[0] = inv0;
        for (std::size_t n = 1; n < c_.size(); ++n) {
            R acc(0);
            for (std::size_t i = 1; i <= n; ++i) acc += c_[i] * g.c_[n - i];
            g.c_[n] = -(inv0 * acc);
        }
        return g;
    }

    TruncatedSeries pow(unsigned k) const {
        TruncatedSeries acc = unit(order());
        TruncatedSeries b = *this;
        for (unsigned e = k; e > 0; e >>= 1) {
            if (e & 1) acc = acc * b;
            if (e > 1) b = b * b;
        }
        return acc;
    }

    /// this ∘ inner, by Horner over the series ring. inner must have zero
    /// constant term or the truncated composite is not well defined.
    TruncatedSeries compose(const TruncatedSeries& inner) const {
        check_orders(*this, inner);
        if (!is_zero_coeff(inner.c_[0]))
            throw std::domain_error("TruncatedSeries: compose requires zero constant term in inner series");
        TruncatedSeries acc = constant(c_.back(), order());
        for (std::size_t i = c_.size() - 1; i-- > 0;)
            acc = acc * inner + constant(c_[i], order());
        return acc;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

private:
    static void check_orders(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order())
            throw std::invalid_argument("TruncatedSeries: truncation order mismatch");
    }
    static bool is_zero_coeff(const R& v) { return v.is_zero(); }
    std::vector<R> c_;
};

/// e^t - 1: c_0 = 0, c_n = 1/n!.
inline TruncatedSeries<Rational> exp_minus_one(std::size_t order) {
    TruncatedSeries<Rational> s(order);
    Rational c(1);
    for (std::size_t n = 1; n <= order; ++n) {
        c = c / Rational(static_cast<BigInt>(n));
        s.set_coeff(n, c);
    }
    return s;
}

/// e^{a t}: c_n = a^n / n!, for a in the coefficient ring (e^{xt} uses
/// a = the polynomial x). Built directly, no transcendental machinery.
template <typename R>
TruncatedSeries<R> exp_series(const R& a, std::size_t order) {
    TruncatedSeries<R> s(order);
    R c(1);
    s.set_coeff(0, c);
    for (std::size_t n = 1; n <= order; ++n) {
        c = c * a * R(Rational(BigInt(1), BigInt(n)));
        s.set_coeff(n, c);
    }
    return s;
}

/// (1+t)^a = sum C(a, n) t^n with C(a, n) = a(a-1)...(a-n+1)/n!, for a in
/// the coefficient ring; agrees with pow(1+t, m) when a is the integer m.
template <typename R>
TruncatedSeries<R> binomial_series(const R& a, std::size_t order) {
    TruncatedSeries<R> s(order);
    R c(1);
    s.set_coeff(0, c);
    for (std::size_t n = 1; n <= order; ++n) {
        c = c * (a - R(Rational(static_cast<BigInt>(n - 1)))) * R(Rational(BigInt(1), BigInt(n)));
        s.set_coeff(n, c);
    }
    return s;
}

/// a_n = n! c_n, the coefficient of t^n/n!.
template <typename R>
R egf_coefficient(const TruncatedSeries<R>& f, std::size_t n) {
    Rational fact(1);
    for (std::size_t i = 2; i <= n; ++i) fact *= Rational(static_cast<BigInt>(i));
    return f.coeff(n) * R(fact);
}

inline TruncatedSeries<Polynomial> lift_to_polynomial(const TruncatedSeries<Rational>& f) {
    TruncatedSeries<Polynomial> s(f.order());
    for (std::size_t n = 0; n <= f.order(); ++n) s.set_coeff(n, Polynomial(f.coeff(n)));
    return s;
}

}  // namespace changhee
