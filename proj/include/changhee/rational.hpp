#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace changhee {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1 and
/// den > 0 after every operation, so operator== is structural equality.
/// Renders as "p/q", with "/q" omitted when q = 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(static_cast<BigInt>(n)) {}
    Rational(const BigInt& n) : v_(n) {}

    Rational(BigInt num, BigInt den) {
        if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
    }

    /// Accepts "p", "-p", "p/q" with optional sign on the numerator.
    static Rational parse(std::string_view text) {
        auto malformed = [&] {
            return std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        };
        std::string_view num = text;
        std::string_view den = "1";
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            num = text.substr(0, slash);
            den = text.substr(slash + 1);
        }
        auto digits = [](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s)
                if (!std::isdigit(static_cast<unsigned char>(c))) return false;
            return true;
        };
        std::string_view mag = num;
        bool neg = false;
        if (!mag.empty() && (mag.front() == '-' || mag.front() == '+')) {
            neg = mag.front() == '-';
            mag.remove_prefix(1);
        }
        if (!digits(mag) || !digits(den)) throw malformed();
        BigInt n{std::string(mag)};
        BigInt d{std::string(den)};
        if (d.is_zero()) throw malformed();
        return Rational(neg ? -n : n, d);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(denominator(), numerator());
    }

    std::string str() const { return v_.str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) return pow(base.reciprocal(), -exponent);
    Rational acc(1);
    Rational b = base;
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1) acc *= b;
        if (e > 1) b *= b;
    }
    return acc;
}

/// Multiplicative inverse; customization point shared with Polynomial so the
/// series engine can invert constant terms in either coefficient ring.
inline Rational reciprocal(const Rational& r) { return r.reciprocal(); }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace changhee
