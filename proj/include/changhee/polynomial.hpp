#pragma once

#include <changhee/rational.hpp>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace changhee {

/// Dense univariate polynomial over Rational, coefficients stored ascending.
/// The zero polynomial is the empty coefficient vector; trailing zeros are
/// stripped after every operation so operator== is structural equality.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant) {
        if (!constant.is_zero()) c_.push_back(constant);
    }
    Polynomial(int constant) : Polynomial(Rational(constant)) {}

    static Polynomial from_coefficients(std::vector<Rational> ascending) {
        Polynomial p;
        p.c_ = std::move(ascending);
        p.normalize();
        return p;
    }

    static Polynomial variable() {
        return from_coefficients({Rational(0), Rational(1)});
    }

    /// Degree of the zero polynomial is unrepresentable, hence nullopt.
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }

    bool is_zero() const { return c_.empty(); }

    Rational coefficient(std::size_t i) const {
        return i < c_.size() ? c_[i] : Rational(0);
    }

    const std::vector<Rational>& coefficients() const { return c_; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coefficient(i) + b.coefficient(i);
        r.normalize();
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coefficient(i) - b.coefficient(i);
        r.normalize();
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Polynomial r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        r.normalize();
        return r;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Conventional rendering, descending powers: "x^2 - 2x + 1/2", "0".
    std::string str() const;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// p(x + c)
Polynomial shift_argument(const Polynomial& p, const Rational& c);

/// p(-x)
Polynomial negate_argument(const Polynomial& p);

/// x(x-1)...(x-n+1); the empty product for n = 0.
Polynomial falling_factorial_poly(unsigned n);

/// C(x, n) = falling_factorial_poly(n) / n!
Polynomial binomial_poly(unsigned n);

/// Ascending coefficient strings, degree 0 first; {"0"} for the zero
/// polynomial. Shared by the JSON and CSV emitters.
std::vector<std::string> coefficient_strings(const Polynomial& p);

/// Inverse of a nonzero constant; anything else has none.
Polynomial reciprocal(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

inline Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial acc(1);
    Polynomial b = base;
    for (unsigned e = exponent; e > 0; e >>= 1) {
        if (e & 1) acc *= b;
        if (e > 1) b *= b;
    }
    return acc;
}

}  // namespace changhee
