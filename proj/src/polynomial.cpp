#include <changhee/polynomial.hpp>

#include <sstream>

namespace changhee {

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& a = c_[i];
        if (a.is_zero()) continue;
        Rational mag = a;
        if (first) {
            if (a < Rational(0)) {
                out << "-";
                mag = -a;
            }
            first = false;
        } else {
            out << (a < Rational(0) ? " - " : " + ");
            if (a < Rational(0)) mag = -a;
        }
        bool unit = mag == Rational(1);
        if (i == 0 || !unit) out << mag.str();
        if (i > 0) {
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

Polynomial shift_argument(const Polynomial& p, const Rational& c) {
    // Horner in the shifted variable: p(x+c) = (...(a_d (x+c) + a_{d-1})(x+c) + ...).
    auto deg = p.degree();
    if (!deg) return {};
    Polynomial step = Polynomial::variable() + Polynomial(c);
    Polynomial acc(p.coefficient(*deg));
    for (std::size_t i = *deg; i-- > 0;) acc = acc * step + Polynomial(p.coefficient(i));
    return acc;
}

Polynomial negate_argument(const Polynomial& p) {
    std::vector<Rational> c;
    auto deg = p.degree();
    if (!deg) return {};
    c.reserve(*deg + 1);
    for (std::size_t i = 0; i <= *deg; ++i) {
        Rational a = p.coefficient(i);
        c.push_back(i % 2 == 0 ? a : -a);
    }
    return Polynomial::from_coefficients(std::move(c));
}

Polynomial falling_factorial_poly(unsigned n) {
    Polynomial acc(1);
    Polynomial x = Polynomial::variable();
    for (unsigned i = 0; i < n; ++i) acc *= x - Polynomial(Rational(static_cast<int>(i)));
    return acc;
}

Polynomial binomial_poly(unsigned n) {
    Rational inv_fact(1);
    for (unsigned i = 2; i <= n; ++i) inv_fact *= Rational(static_cast<int>(i));
    return falling_factorial_poly(n) * Polynomial(inv_fact.reciprocal());
}

std::vector<std::string> coefficient_strings(const Polynomial& p) {
    auto deg = p.degree();
    if (!deg) return {"0"};
    std::vector<std::string> out;
    out.reserve(*deg + 1);
    for (std::size_t i = 0; i <= *deg; ++i) out.push_back(p.coefficient(i).str());
    return out;
}

Polynomial reciprocal(const Polynomial& p) {
    auto deg = p.degree();
    if (!deg || *deg != 0) throw std::domain_error("Polynomial: reciprocal requires a nonzero constant");
    return Polynomial(p.coefficient(0).reciprocal());
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace changhee
