#include <changhee/identities.hpp>

#include <array>
#include <sstream>
#include <stdexcept>

namespace changhee {

namespace {

struct IdName {
    IdentityId id;
    std::string_view name;
};

constexpr std::array<IdName, 19> id_names = {{
    {IdentityId::thm1, "thm1"},
    {IdentityId::thm2, "thm2"},
    {IdentityId::thm3, "thm3"},
    {IdentityId::cor4, "cor4"},
    {IdentityId::thm5, "thm5"},
    {IdentityId::thm6, "thm6"},
    {IdentityId::thm7, "thm7"},
    {IdentityId::thm8, "thm8"},
    {IdentityId::thm9, "thm9"},
    {IdentityId::thm10, "thm10"},
    {IdentityId::thm11, "thm11"},
    {IdentityId::eq11, "eq11"},
    {IdentityId::eq13, "eq13"},
    {IdentityId::eq16, "eq16"},
    {IdentityId::eq22, "eq22"},
    {IdentityId::eq28, "eq28"},
    {IdentityId::eq31, "eq31"},
    {IdentityId::eq37, "eq37"},
    {IdentityId::eq40, "eq40"},
}};

Rational minus_one_pow(unsigned n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

Rational inv_factorial(unsigned n) { return Rational(BigInt(1), factorial(n)); }

bool expect(SequenceValue lhs, SequenceValue rhs, Witness& w) {
    if (values_equal(lhs, rhs)) return true;
    w.lhs = std::move(lhs);
    w.rhs = std::move(rhs);
    return false;
}

// One function per identity; each returns false and fills the witness
// values on the first failing comparison at grid cell (n, k).

bool check_thm1(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext& ctx,
                Witness& w) {
    Rational base(BigInt(k) + BigInt(n) - 1);
    Rational acc(0);
    for (unsigned l = 0; l <= n; ++l)
        acc += Rational(ctx.s1().value(n, l)) * pow(base, static_cast<int>(l));
    Rational rhs = pow(Rational(BigInt(-1), BigInt(2)), static_cast<int>(n)) * acc;
    return expect(t.ch1num[k - 1][n], rhs, w);
}

bool check_thm2(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext& ctx,
                Witness& w) {
    Rational rhs(0);
    for (unsigned l = 0; l <= n; ++l)
        rhs += Rational(ctx.s1().value(n, l)) * t.eulnum[k - 1][l];
    return expect(t.ch1num[k - 1][n], rhs, w);
}

bool check_thm3(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext& ctx,
                Witness& w) {
    Rational rhs(0);
    for (unsigned j = 0; j <= n; ++j)
        rhs += t.ch1num[k - 1][j] * Rational(ctx.s2().value(n, j));
    if (!expect(t.eulnum[k - 1][n], rhs, w)) return false;
    return expect(t.eulnum[k - 1][n], ctx.euler_compose_ref()[k - 1][n], w);
}

bool check_cor4(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext& ctx,
                Witness& w) {
    Polynomial rhs;
    for (unsigned l = 0; l <= n; ++l)
        rhs += t.eulpoly[k - 1][l] * Polynomial(Rational(ctx.s1().value(n, l)));
    return expect(t.ch1poly[k - 1][n], rhs, w);
}

bool check_thm5(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext& ctx,
                Witness& w) {
    Polynomial rhs;
    for (unsigned j = 0; j <= n; ++j)
        rhs += t.ch1poly[k - 1][j] * Polynomial(Rational(ctx.s2().value(n, j)));
    return expect(t.eulpoly[k - 1][n], rhs, w);
}

bool check_thm6(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext& ctx,
                Witness& w) {
    return expect(t.ch2num[k - 1][n], ctx.ch2num_ref()[k - 1][n], w);
}

bool check_thm7(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext& ctx,
                Witness& w) {
    Rational lhs = t.eulpoly[k - 1][n].eval(Rational(static_cast<BigInt>(k)));
    Rational rhs(0);
    for (unsigned j = 0; j <= n; ++j)
        rhs += t.ch2num[k - 1][j] * Rational(ctx.s2().value(n, j));
    return expect(lhs, rhs, w);
}

bool check_thm8(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext& ctx,
                Witness& w) {
    return expect(t.ch2poly[k - 1][n], ctx.ch2poly_ref()[k - 1][n], w);
}

bool check_thm9(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext& ctx,
                Witness& w) {
    Polynomial lhs = shift_argument(t.eulpoly[k - 1][n], Rational(static_cast<BigInt>(k)));
    Polynomial rhs;
    for (unsigned j = 0; j <= n; ++j)
        rhs += t.ch2poly[k - 1][j] * Polynomial(Rational(ctx.s2().value(n, j)));
    return expect(lhs, rhs, w);
}

// Shared by thm10, thm11 and eq40: C(n-1, n-m)/m!.
Rational inversion_weight(unsigned n, unsigned m) {
    return Rational(binomial(BigInt(n) - 1, n - m)) * inv_factorial(m);
}

bool check_thm10(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext&,
                 Witness& w) {
    Polynomial lhs = t.ch2poly[k - 1][n] * Polynomial(minus_one_pow(n) * inv_factorial(n));
    Polynomial rhs;
    for (unsigned m = 1; m <= n; ++m)
        rhs += negate_argument(t.ch1poly[k - 1][m]) * Polynomial(inversion_weight(n, m));
    return expect(lhs, rhs, w);
}

bool check_thm11(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext&,
                 Witness& w) {
    Polynomial lhs = t.ch1poly[k - 1][n] * Polynomial(minus_one_pow(n) * inv_factorial(n));
    Polynomial rhs;
    for (unsigned m = 1; m <= n; ++m)
        rhs += negate_argument(t.ch2poly[k - 1][m]) * Polynomial(inversion_weight(n, m));
    return expect(lhs, rhs, w);
}

bool check_eq11(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext&,
                Witness& w) {
    return expect(t.ch1num[k - 1][n], changhee1_number_via_convolution(n, k), w);
}

bool check_eq13(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext& ctx,
                Witness& w) {
    Rational sign = minus_one_pow(n);
    Rational r_binom = sign * Rational(factorial(n)) * Rational(binomial(BigInt(n) + BigInt(k) - 1, n));
    Rational r_falling = sign * falling_factorial_value(Rational(BigInt(k) + BigInt(n) - 1), n);
    Rational acc(0);
    Rational base(BigInt(k) + BigInt(n) - 1);
    for (unsigned l = 0; l <= n; ++l)
        acc += Rational(ctx.s1().value(n, l)) * pow(base, static_cast<int>(l));
    Rational r_stirling = sign * acc;
    if (!expect(r_binom, r_falling, w)) return false;
    if (!expect(r_binom, r_stirling, w)) return false;
    Rational lhs = t.ch1num[k - 1][n] * pow(Rational(2), static_cast<int>(n));
    return expect(lhs, r_binom, w);
}

bool check_eq16(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext& ctx,
                Witness& w) {
    Rational rhs(0);
    for (unsigned l = 0; l <= n; ++l)
        rhs += Rational(ctx.s1().value(n, l)) * ctx.euler_ref()[k - 1][l];
    return expect(t.ch1num[k - 1][n], rhs, w);
}

bool check_eq22(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext& ctx,
                Witness& w) {
    if (!expect(t.ch1poly[k - 1][n], ctx.ch1poly_ref()[k - 1][n], w)) return false;
    Polynomial sum1;
    for (unsigned m = 0; m <= n; ++m) {
        Rational c = Rational(factorial(n)) / Rational(factorial(n - m));
        sum1 += binomial_poly(m) * Polynomial(c * t.ch1num[k - 1][n - m]);
    }
    if (!expect(ctx.ch1poly_ref()[k - 1][n], sum1, w)) return false;
    Polynomial sum2;
    for (unsigned m = 0; m <= n; ++m) {
        Rational c = Rational(factorial(n)) / Rational(factorial(m));
        sum2 += binomial_poly(n - m) * Polynomial(c * t.ch1num[k - 1][m]);
    }
    return expect(sum1, sum2, w);
}

bool check_eq28(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext& ctx,
                Witness& w) {
    Rational rhs(0);
    for (unsigned l = 0; l <= n; ++l)
        rhs += minus_one_pow(l) * Rational(ctx.s1().value(n, l)) * t.eulnum[k - 1][l];
    return expect(t.ch2num[k - 1][n], rhs, w);
}

bool check_eq31(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext&,
                Witness& w) {
    Rational rhs(0);
    for (unsigned m = 0; m <= n; ++m) {
        Rational c = Rational(factorial(m)) * Rational(binomial(BigInt(k), m)) *
                     Rational(binomial(BigInt(n), m));
        rhs += c * t.ch1num[k - 1][n - m];
    }
    return expect(t.ch2num[k - 1][n], rhs, w);
}

bool check_eq37(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext& ctx,
                Witness& w) {
    Polynomial rhs;
    for (unsigned l = 0; l <= n; ++l) {
        Rational c = Rational(ctx.s1().value(n, l)) * minus_one_pow(l);
        rhs += negate_argument(t.eulpoly[k - 1][l]) * Polynomial(c);
    }
    return expect(t.ch2poly[k - 1][n], rhs, w);
}

bool check_eq40(unsigned n, unsigned k, const SequenceTables& t, const VerificationContext&,
                Witness& w) {
    // The m = 0 weight is C(n-1, n), which must vanish for n >= 1; that is
    // what lets the sum start at m = 1.
    if (!expect(Rational(binomial(BigInt(n) - 1, n)), Rational(0), w)) return false;
    Polynomial lhs = t.ch2poly[k - 1][n] * Polynomial(minus_one_pow(n) * inv_factorial(n));
    Polynomial rhs;
    for (unsigned m = 0; m <= n; ++m)
        rhs += negate_argument(t.ch1poly[k - 1][m]) * Polynomial(inversion_weight(n, m));
    return expect(lhs, rhs, w);
}

using CheckFn = bool (*)(unsigned, unsigned, const SequenceTables&, const VerificationContext&,
                         Witness&);

CheckFn checker_for(IdentityId id) {
    switch (id) {
        case IdentityId::thm1: return check_thm1;
        case IdentityId::thm2: return check_thm2;
        case IdentityId::thm3: return check_thm3;
        case IdentityId::cor4: return check_cor4;
        case IdentityId::thm5: return check_thm5;
        case IdentityId::thm6: return check_thm6;
        case IdentityId::thm7: return check_thm7;
        case IdentityId::thm8: return check_thm8;
        case IdentityId::thm9: return check_thm9;
        case IdentityId::thm10: return check_thm10;
        case IdentityId::thm11: return check_thm11;
        case IdentityId::eq11: return check_eq11;
        case IdentityId::eq13: return check_eq13;
        case IdentityId::eq16: return check_eq16;
        case IdentityId::eq22: return check_eq22;
        case IdentityId::eq28: return check_eq28;
        case IdentityId::eq31: return check_eq31;
        case IdentityId::eq37: return check_eq37;
        case IdentityId::eq40: return check_eq40;
    }
    throw std::logic_error("checker_for: unhandled identity");
}

}  // namespace

const std::vector<IdentityId>& all_identity_ids() {
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> v;
        for (const auto& e : id_names) v.push_back(e.id);
        return v;
    }();
    return ids;
}

std::string_view identity_name(IdentityId id) {
    for (const auto& e : id_names)
        if (e.id == id) return e.name;
    throw std::logic_error("identity_name: unhandled identity");
}

std::optional<IdentityId> identity_from_name(std::string_view name) {
    for (const auto& e : id_names)
        if (e.name == name) return e.id;
    return std::nullopt;
}

unsigned identity_n_start(IdentityId id) {
    switch (id) {
        case IdentityId::thm10:
        case IdentityId::thm11:
        case IdentityId::eq40:
            return 1;
        default:
            return 0;
    }
}

SequenceTables SequenceTables::build(unsigned n_max, unsigned k_max) {
    SequenceTables t;
    t.n_max = n_max;
    t.k_max = k_max;
    for (unsigned k = 1; k <= k_max; ++k) {
        t.ch1num.push_back(changhee1_number_row(k, n_max));
        t.ch2num.push_back(changhee2_number_row(k, n_max));
        t.eulnum.push_back(euler_number_row(k, n_max));
        t.ch1poly.push_back(changhee1_poly_row(k, n_max));
        t.ch2poly.push_back(changhee2_poly_row(k, n_max));
        t.eulpoly.push_back(euler_poly_row(k, n_max));
    }
    return t;
}

void SequenceTables::perturb(Family family, unsigned k, unsigned n) {
    switch (family) {
        case Family::changhee1_number: ch1num[k - 1][n] += Rational(1); break;
        case Family::changhee2_number: ch2num[k - 1][n] += Rational(1); break;
        case Family::euler_number: eulnum[k - 1][n] += Rational(1); break;
        case Family::changhee1_poly: ch1poly[k - 1][n] += Polynomial(1); break;
        case Family::changhee2_poly: ch2poly[k - 1][n] += Polynomial(1); break;
        case Family::euler_poly: eulpoly[k - 1][n] += Polynomial(1); break;
    }
}

VerificationContext::VerificationContext(const GridSpec& grid)
    : grid_(grid),
      s1_(StirlingKind::first_signed, grid.n_max),
      s2_(StirlingKind::second, grid.n_max) {
    if (grid.k_max < 1) throw std::invalid_argument("GridSpec: k_max must be positive");
    if (grid.truncation < grid.n_max)
        throw std::invalid_argument("GridSpec: truncation must be at least n_max");
    const std::size_t N = grid.truncation;
    auto em1 = exp_minus_one(N);
    for (unsigned k = 1; k <= grid.k_max; ++k) {
        auto gf1 = changhee1_gf(k, N);
        auto gf2 = changhee2_gf(k, N);
        auto gfe = euler_gf(k, N);
        auto gfc = gf1.compose(em1);
        auto gf1p = changhee1_poly_gf(k, N);
        auto gf2p = changhee2_poly_gf(k, N);
        std::vector<Rational> r1, r2, re, rc;
        std::vector<Polynomial> p1, p2;
        for (unsigned n = 0; n <= grid.n_max; ++n) {
            r1.push_back(egf_coefficient(gf1, n));
            r2.push_back(egf_coefficient(gf2, n));
            re.push_back(egf_coefficient(gfe, n));
            rc.push_back(egf_coefficient(gfc, n));
            p1.push_back(egf_coefficient(gf1p, n));
            p2.push_back(egf_coefficient(gf2p, n));
        }
        ch1num_ref_.push_back(std::move(r1));
        ch2num_ref_.push_back(std::move(r2));
        euler_ref_.push_back(std::move(re));
        euler_compose_ref_.push_back(std::move(rc));
        ch1poly_ref_.push_back(std::move(p1));
        ch2poly_ref_.push_back(std::move(p2));
    }
}

bool values_equal(const SequenceValue& a, const SequenceValue& b) {
    if (a.index() != b.index()) return false;
    if (const auto* ra = std::get_if<Rational>(&a)) return *ra == std::get<Rational>(b);
    const auto& pa = std::get<Polynomial>(a);
    const auto& pb = std::get<Polynomial>(b);
    bool coefficient_wise = pa == pb;
    static const std::array<Rational, 5> samples = {
        Rational(0), Rational(1), Rational(-1), Rational(BigInt(1), BigInt(2)),
        Rational(BigInt(-2), BigInt(3))};
    bool pointwise = true;
    for (const auto& s : samples)
        if (pa.eval(s) != pb.eval(s)) {
            pointwise = false;
            break;
        }
    if (coefficient_wise != pointwise)
        throw std::logic_error("values_equal: coefficient-wise and pointwise comparison disagree");
    return coefficient_wise;
}

IdentityReport verify_identity(IdentityId id, const SequenceTables& tables,
                               const VerificationContext& ctx) {
    const GridSpec& grid = ctx.grid();
    if (tables.n_max != grid.n_max || tables.k_max != grid.k_max)
        throw std::invalid_argument("verify_identity: tables and context grids differ");
    IdentityReport report{id, grid, true, std::nullopt};
    CheckFn check = checker_for(id);
    for (unsigned n = identity_n_start(id); n <= grid.n_max; ++n) {
        for (unsigned k = 1; k <= grid.k_max; ++k) {
            Witness w;
            if (!check(n, k, tables, ctx, w)) {
                w.n = n;
                w.k = k;
                report.pass = false;
                report.witness = std::move(w);
                return report;
            }
        }
    }
    return report;
}

std::vector<IdentityReport> verify_suite(const std::vector<IdentityId>& ids, const GridSpec& grid) {
    VerificationContext ctx(grid);
    SequenceTables tables = SequenceTables::build(grid.n_max, grid.k_max);
    std::vector<IdentityReport> reports;
    reports.reserve(ids.size());
    for (IdentityId id : ids) reports.push_back(verify_identity(id, tables, ctx));
    return reports;
}

nlohmann::ordered_json report_to_json(const IdentityReport& report) {
    nlohmann::ordered_json j;
    j["id"] = std::string(identity_name(report.id));
    j["verdict"] = report.pass ? "pass" : "fail";
    j["grid"] = {{"n_max", report.grid.n_max}, {"k_max", report.grid.k_max}};
    if (report.witness) {
        nlohmann::ordered_json w;
        w["n"] = report.witness->n;
        w["k"] = report.witness->k;
        w["lhs"] = value_to_json(report.witness->lhs);
        w["rhs"] = value_to_json(report.witness->rhs);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

nlohmann::ordered_json reports_to_json(const std::vector<IdentityReport>& reports) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return arr;
}

std::string reports_to_csv(const std::vector<IdentityReport>& reports) {
    std::ostringstream out;
    out << "id,verdict,witness_n,witness_k,lhs,rhs\n";
    for (const auto& r : reports) {
        out << identity_name(r.id) << "," << (r.pass ? "pass" : "fail") << ",";
        if (r.witness) {
            out << r.witness->n << "," << r.witness->k << "," << value_to_csv(r.witness->lhs)
                << "," << value_to_csv(r.witness->rhs);
        } else {
            out << ",,,";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace changhee
