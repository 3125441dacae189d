#pragma once

#include <changhee/polynomial.hpp>
#include <changhee/rational.hpp>
#include <changhee/series.hpp>

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace changhee {

/// The six sequence families. Numbers are Rational-valued, polynomials
/// Polynomial-valued; each polynomial family specializes at x = 0 to its
/// number family.
enum class Family {
    changhee1_number,
    changhee1_poly,
    changhee2_number,
    changhee2_poly,
    euler_number,
    euler_poly,
};

inline constexpr std::array<Family, 6> all_families = {
    Family::changhee1_number, Family::changhee1_poly, Family::changhee2_number,
    Family::changhee2_poly,   Family::euler_number,   Family::euler_poly,
};

bool is_polynomial_family(Family f);
std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

using SequenceValue = std::variant<Rational, Polynomial>;

struct SequenceTable {
    Family family;
    unsigned k;
    std::vector<SequenceValue> values;  // index n, 0..n_max
};

SequenceTable make_table(Family family, unsigned k, unsigned n_max);

/// JSON: {"family": ..., "k": ..., "values": [...]}; number families emit
/// rational strings, polynomial families ascending coefficient arrays.
nlohmann::ordered_json table_to_json(const SequenceTable& table);

/// CSV with header "n,value"; polynomial cells join ascending coefficients
/// with ';'. Rational strings are identical to the JSON encoding.
std::string table_to_csv(const SequenceTable& table);

nlohmann::ordered_json value_to_json(const SequenceValue& v);
std::string value_to_csv(const SequenceValue& v);

// Generating functions, truncated at the given order. These are the series
// the number/polynomial families are EGF coefficients of.
TruncatedSeries<Rational> changhee1_gf(unsigned k, std::size_t order);         // (2/(2+t))^k
TruncatedSeries<Rational> changhee2_gf(unsigned k, std::size_t order);         // (2/(2+t))^k (1+t)^k
TruncatedSeries<Rational> euler_gf(unsigned k, std::size_t order);             // (2/(e^t+1))^k
TruncatedSeries<Polynomial> changhee1_poly_gf(unsigned k, std::size_t order);  // (2/(2+t))^k (1+t)^x
TruncatedSeries<Polynomial> changhee2_poly_gf(unsigned k, std::size_t order);  // (2/(2+t))^k (1+t)^{x+k}
TruncatedSeries<Polynomial> euler_poly_gf(unsigned k, std::size_t order);      // (2/(e^t+1))^k e^{xt}

// Whole rows n = 0..n_max for one order k; the scalar accessors below are
// conveniences over these.
std::vector<Rational> euler_number_row(unsigned k, unsigned n_max);
std::vector<Polynomial> euler_poly_row(unsigned k, unsigned n_max);
std::vector<Rational> changhee1_number_row(unsigned k, unsigned n_max);
std::vector<Polynomial> changhee1_poly_row(unsigned k, unsigned n_max);
std::vector<Rational> changhee2_number_row(unsigned k, unsigned n_max);
std::vector<Polynomial> changhee2_poly_row(unsigned k, unsigned n_max);

Rational euler_number(unsigned n, unsigned k);
Polynomial euler_poly(unsigned n, unsigned k);

/// Closed form (-1/2)^n n! C(n+k-1, n).
Rational changhee1_number(unsigned n, unsigned k);

/// Stirling route: sum_l S1(n, l) E_l^{(k)}.
Rational changhee1_number_via_euler(unsigned n, unsigned k);

/// Multinomial convolution of k copies of the order-1 sequence.
Rational changhee1_number_via_convolution(unsigned n, unsigned k);

Polynomial changhee1_poly(unsigned n, unsigned k);
Rational changhee2_number(unsigned n, unsigned k);
Polynomial changhee2_poly(unsigned n, unsigned k);

/// Moment oracle: the value of the k-variate alternating-sum functional on
/// (x_1+...+x_k)^n, realized through its generating function (2/(e^t+1))^k.
Rational fermionic_moment(unsigned n, unsigned k);

}  // namespace changhee
