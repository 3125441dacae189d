#include <changhee/sequences.hpp>

#include <changhee/combinatorics.hpp>

#include <sstream>
#include <stdexcept>

namespace changhee {

namespace {

struct FamilyName {
    Family family;
    std::string_view name;
};

constexpr std::array<FamilyName, 6> family_names = {{
    {Family::changhee1_number, "changhee1-number"},
    {Family::changhee1_poly, "changhee1-poly"},
    {Family::changhee2_number, "changhee2-number"},
    {Family::changhee2_poly, "changhee2-poly"},
    {Family::euler_number, "euler-number"},
    {Family::euler_poly, "euler-poly"},
}};

Rational minus_half() { return Rational(BigInt(-1), BigInt(2)); }

}  // namespace

bool is_polynomial_family(Family f) {
    return f == Family::changhee1_poly || f == Family::changhee2_poly || f == Family::euler_poly;
}

std::string_view family_name(Family f) {
    for (const auto& e : family_names)
        if (e.family == f) return e.name;
    throw std::logic_error("family_name: unhandled family");
}

std::optional<Family> family_from_name(std::string_view name) {
    for (const auto& e : family_names)
        if (e.name == name) return e.family;
    return std::nullopt;
}

TruncatedSeries<Rational> changhee1_gf(unsigned k, std::size_t order) {
    // constant + shift instead of from_coefficients so order 0 stays legal
    auto two_plus_t =
        TruncatedSeries<Rational>::constant(Rational(2), order) + TruncatedSeries<Rational>::shift(order);
    return two_plus_t.invert().scale(Rational(2)).pow(k);
}

TruncatedSeries<Rational> changhee2_gf(unsigned k, std::size_t order) {
    auto one_plus_t =
        TruncatedSeries<Rational>::unit(order) + TruncatedSeries<Rational>::shift(order);
    return changhee1_gf(k, order) * one_plus_t.pow(k);
}

TruncatedSeries<Rational> euler_gf(unsigned k, std::size_t order) {
    // 2/(e^t+1) = (1 + (e^t-1)/2)^{-1}
    auto half_em1 = exp_minus_one(order).scale(Rational(BigInt(1), BigInt(2)));
    auto base = TruncatedSeries<Rational>::unit(order) + half_em1;
    return base.invert().pow(k);
}

TruncatedSeries<Polynomial> changhee1_poly_gf(unsigned k, std::size_t order) {
    return lift_to_polynomial(changhee1_gf(k, order)) * binomial_series(Polynomial::variable(), order);
}

TruncatedSeries<Polynomial> changhee2_poly_gf(unsigned k, std::size_t order) {
    Polynomial x_plus_k = Polynomial::variable() + Polynomial(Rational(static_cast<BigInt>(k)));
    return lift_to_polynomial(changhee1_gf(k, order)) * binomial_series(x_plus_k, order);
}

TruncatedSeries<Polynomial> euler_poly_gf(unsigned k, std::size_t order) {
    return lift_to_polynomial(euler_gf(k, order)) * exp_series(Polynomial::variable(), order);
}

std::vector<Rational> euler_number_row(unsigned k, unsigned n_max) {
    auto gf = euler_gf(k, n_max);
    std::vector<Rational> row;
    row.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) row.push_back(egf_coefficient(gf, n));
    return row;
}

std::vector<Polynomial> euler_poly_row(unsigned k, unsigned n_max) {
    auto gf = euler_poly_gf(k, n_max);
    std::vector<Polynomial> row;
    row.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) row.push_back(egf_coefficient(gf, n));
    return row;
}

Rational changhee1_number(unsigned n, unsigned k) {
    return pow(minus_half(), static_cast<int>(n)) * Rational(factorial(n)) *
           Rational(binomial(BigInt(n) + BigInt(k) - 1, n));
}

std::vector<Rational> changhee1_number_row(unsigned k, unsigned n_max) {
    std::vector<Rational> row;
    row.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) row.push_back(changhee1_number(n, k));
    return row;
}

Polynomial changhee1_poly(unsigned n, unsigned k) {
    // sum_m C(x, m) n!/(n-m)! Ch_{n-m}^{(k)}
    Polynomial acc;
    for (unsigned m = 0; m <= n; ++m) {
        Rational scale = Rational(factorial(n)) / Rational(factorial(n - m));
        acc += binomial_poly(m) * Polynomial(scale * changhee1_number(n - m, k));
    }
    return acc;
}

std::vector<Polynomial> changhee1_poly_row(unsigned k, unsigned n_max) {
    std::vector<Polynomial> row;
    row.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) row.push_back(changhee1_poly(n, k));
    return row;
}

Rational changhee2_number(unsigned n, unsigned k) {
    // sum_m m! C(k, m) C(n, m) Ch_{n-m}^{(k)}
    Rational acc(0);
    for (unsigned m = 0; m <= n; ++m) {
        Rational c = Rational(factorial(m)) * Rational(binomial(BigInt(k), m)) *
                     Rational(binomial(BigInt(n), m));
        acc += c * changhee1_number(n - m, k);
    }
    return acc;
}

std::vector<Rational> changhee2_number_row(unsigned k, unsigned n_max) {
    std::vector<Rational> row;
    row.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) row.push_back(changhee2_number(n, k));
    return row;
}

Polynomial changhee2_poly(unsigned n, unsigned k) {
    // sum_m m! C(x, m) C(n, m) over the second-kind numbers at index n-m;
    // the EGF factors as (1+t)^x times the second-kind number series.
    Polynomial acc;
    for (unsigned m = 0; m <= n; ++m) {
        Rational c = Rational(factorial(m)) * Rational(binomial(BigInt(n), m));
        acc += binomial_poly(m) * Polynomial(c * changhee2_number(n - m, k));
    }
    return acc;
}

std::vector<Polynomial> changhee2_poly_row(unsigned k, unsigned n_max) {
    std::vector<Polynomial> row;
    row.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) row.push_back(changhee2_poly(n, k));
    return row;
}

Rational euler_number(unsigned n, unsigned k) { return euler_number_row(k, n)[n]; }

Polynomial euler_poly(unsigned n, unsigned k) { return euler_poly_row(k, n)[n]; }

Rational changhee1_number_via_euler(unsigned n, unsigned k) {
    StirlingTriangle s1(StirlingKind::first_signed, n);
    auto euler = euler_number_row(k, n);
    Rational acc(0);
    for (unsigned l = 0; l <= n; ++l) acc += Rational(s1.value(n, l)) * euler[l];
    return acc;
}

Rational changhee1_number_via_convolution(unsigned n, unsigned k) {
    std::vector<Rational> order1;
    order1.reserve(n + 1);
    for (unsigned l = 0; l <= n; ++l) order1.push_back(changhee1_number(l, 1));

    Rational acc(0);
    std::vector<unsigned> parts(k, 0);
    // Enumerate compositions of n into k nonnegative parts.
    auto recurse = [&](auto&& self, unsigned pos, unsigned remaining) -> void {
        if (pos + 1 == k) {
            parts[pos] = remaining;
            Rational term(multinomial(n, parts));
            for (unsigned p : parts) term *= order1[p];
            acc += term;
            return;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
            parts[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    recurse(recurse, 0, n);
    return acc;
}

Rational fermionic_moment(unsigned n, unsigned k) {
    return egf_coefficient(euler_gf(k, n), n);
}

SequenceTable make_table(Family family, unsigned k, unsigned n_max) {
    SequenceTable t{family, k, {}};
    t.values.reserve(n_max + 1);
    auto push_numbers = [&](std::vector<Rational> row) {
        for (auto& v : row) t.values.emplace_back(std::move(v));
    };
    auto push_polys = [&](std::vector<Polynomial> row) {
        for (auto& v : row) t.values.emplace_back(std::move(v));
    };
    switch (family) {
        case Family::changhee1_number: push_numbers(changhee1_number_row(k, n_max)); break;
        case Family::changhee1_poly: push_polys(changhee1_poly_row(k, n_max)); break;
        case Family::changhee2_number: push_numbers(changhee2_number_row(k, n_max)); break;
        case Family::changhee2_poly: push_polys(changhee2_poly_row(k, n_max)); break;
        case Family::euler_number: push_numbers(euler_number_row(k, n_max)); break;
        case Family::euler_poly: push_polys(euler_poly_row(k, n_max)); break;
    }
    return t;
}

nlohmann::ordered_json value_to_json(const SequenceValue& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return r->str();
    const auto& p = std::get<Polynomial>(v);
    return nlohmann::ordered_json(coefficient_strings(p));
}

std::string value_to_csv(const SequenceValue& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return r->str();
    const auto& p = std::get<Polynomial>(v);
    std::string out;
    for (const auto& c : coefficient_strings(p)) {
        if (!out.empty()) out += ';';
        out += c;
    }
    return out;
}

nlohmann::ordered_json table_to_json(const SequenceTable& table) {
    nlohmann::ordered_json j;
    j["family"] = std::string(family_name(table.family));
    j["k"] = table.k;
    auto values = nlohmann::ordered_json::array();
    for (const auto& v : table.values) values.push_back(value_to_json(v));
    j["values"] = values;
    return j;
}

std::string table_to_csv(const SequenceTable& table) {
    std::ostringstream out;
    out << "n,value\n";
    for (std::size_t n = 0; n < table.values.size(); ++n)
        out << n << "," << value_to_csv(table.values[n]) << "\n";
    return out.str();
}

}  // namespace changhee
