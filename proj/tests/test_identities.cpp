#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <changhee/combinatorics.hpp>
#include <changhee/identities.hpp>
#include <changhee/sequences.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

using namespace changhee;

namespace {

Rational rat(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

const GridSpec small_grid{6, 3, 10};

// Context/tables shared across cases; checkers treat them as read-only.
const VerificationContext& small_ctx() {
    static VerificationContext ctx(small_grid);
    return ctx;
}

const SequenceTables& small_tables() {
    static SequenceTables t = SequenceTables::build(small_grid.n_max, small_grid.k_max);
    return t;
}

IdentityReport verify_perturbed(IdentityId id, Family family, unsigned k, unsigned n) {
    SequenceTables t = small_tables();
    t.perturb(family, k, n);
    return verify_identity(id, t, small_ctx());
}

}  // namespace

TEST_CASE("identity names") {
    CHECK(all_identity_ids().size() == 19);
    CHECK(identity_name(IdentityId::thm1) == "thm1");
    CHECK(identity_name(IdentityId::eq40) == "eq40");
    for (IdentityId id : all_identity_ids())
        CHECK(identity_from_name(identity_name(id)) == id);
    CHECK_FALSE(identity_from_name("nosuch").has_value());
}

TEST_CASE("identity index ranges") {
    CHECK(identity_n_start(IdentityId::thm10) == 1);
    CHECK(identity_n_start(IdentityId::thm11) == 1);
    CHECK(identity_n_start(IdentityId::eq40) == 1);
    CHECK(identity_n_start(IdentityId::thm1) == 0);
    CHECK(identity_n_start(IdentityId::eq37) == 0);
}

TEST_CASE("all identities pass on the default grid") {
    auto reports = verify_suite(all_identity_ids(), GridSpec{});
    REQUIRE(reports.size() == 19);
    for (const auto& r : reports) {
        CAPTURE(identity_name(r.id));
        CHECK(r.pass);
        CHECK_FALSE(r.witness.has_value());
    }
}

TEST_CASE("degenerate grid passes") {
    GridSpec grid{0, 1, 0};
    auto reports = verify_suite(all_identity_ids(), grid);
    for (const auto& r : reports) {
        CAPTURE(identity_name(r.id));
        CHECK(r.pass);
    }
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(VerificationContext(GridSpec{12, 0, 16}), std::invalid_argument);
    CHECK_THROWS_AS(VerificationContext(GridSpec{12, 6, 11}), std::invalid_argument);

    VerificationContext ctx(GridSpec{2, 1, 2});
    SequenceTables wrong = SequenceTables::build(3, 1);
    CHECK_THROWS_AS(verify_identity(IdentityId::thm1, wrong, ctx), std::invalid_argument);
}

TEST_CASE("values_equal") {
    CHECK(values_equal(SequenceValue(rat(1, 2)), SequenceValue(rat(1, 2))));
    CHECK_FALSE(values_equal(SequenceValue(rat(1, 2)), SequenceValue(rat(1, 3))));
    CHECK_FALSE(values_equal(SequenceValue(rat(1)), SequenceValue(Polynomial(1))));

    Polynomial x = Polynomial::variable();
    CHECK(values_equal(SequenceValue(x * x), SequenceValue(x * x)));
    CHECK_FALSE(values_equal(SequenceValue(x * x), SequenceValue(x * x + Polynomial(1))));
}

TEST_CASE("dropping the sign factor breaks the closed form at n=1") {
    // Mutated right side: the Stirling sum without its (-1/2)^n prefactor.
    StirlingTriangle s1(StirlingKind::first_signed, 4);
    unsigned first_fail_n = 99;
    for (unsigned n = 0; n <= 4 && first_fail_n == 99; ++n)
        for (unsigned k = 1; k <= 2; ++k) {
            Rational mutated(0);
            for (unsigned l = 0; l <= n; ++l)
                mutated += Rational(s1.value(n, l)) * pow(rat(k + n - 1), static_cast<int>(l));
            if (mutated != changhee1_number(n, k)) {
                first_fail_n = n;
                break;
            }
        }
    CHECK(first_fail_n == 1);
}

TEST_CASE("each checker fails under a targeted perturbation") {
    struct Probe {
        IdentityId id;
        Family family;
        unsigned k;
        unsigned n;
    };
    const std::vector<Probe> probes = {
        {IdentityId::thm1, Family::changhee1_number, 1, 1},
        {IdentityId::thm2, Family::euler_number, 1, 1},
        {IdentityId::thm3, Family::euler_number, 2, 1},
        {IdentityId::cor4, Family::euler_poly, 1, 1},
        {IdentityId::thm5, Family::euler_poly, 2, 2},
        {IdentityId::thm6, Family::changhee2_number, 1, 1},
        {IdentityId::thm7, Family::changhee2_number, 2, 1},
        {IdentityId::thm8, Family::changhee2_poly, 1, 1},
        {IdentityId::thm9, Family::changhee2_poly, 2, 1},
        {IdentityId::thm10, Family::changhee1_poly, 1, 1},
        {IdentityId::thm11, Family::changhee2_poly, 1, 1},
        {IdentityId::eq11, Family::changhee1_number, 1, 1},
        {IdentityId::eq13, Family::changhee1_number, 2, 1},
        {IdentityId::eq16, Family::changhee1_number, 1, 2},
        {IdentityId::eq22, Family::changhee1_poly, 1, 1},
        {IdentityId::eq28, Family::changhee2_number, 1, 2},
        {IdentityId::eq31, Family::changhee2_number, 2, 1},
        {IdentityId::eq37, Family::euler_poly, 1, 1},
        {IdentityId::eq40, Family::changhee1_poly, 1, 1},
    };
    CHECK(probes.size() == all_identity_ids().size());
    for (const auto& p : probes) {
        CAPTURE(identity_name(p.id));
        IdentityReport report = verify_perturbed(p.id, p.family, p.k, p.n);
        CHECK_FALSE(report.pass);
        REQUIRE(report.witness.has_value());
        CHECK(report.witness->n <= p.n);
        CHECK_FALSE(values_equal(report.witness->lhs, report.witness->rhs));
    }
}

TEST_CASE("witness pinpoints the perturbed cell") {
    IdentityReport report = verify_perturbed(IdentityId::thm1, Family::changhee1_number, 1, 1);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->n == 1);
    CHECK(report.witness->k == 1);
    CHECK(std::get<Rational>(report.witness->lhs) == rat(1, 2));   // -1/2 + 1
    CHECK(std::get<Rational>(report.witness->rhs) == rat(-1, 2));
}

TEST_CASE("designated checker per family catches a mid-grid perturbation") {
    const std::vector<std::pair<Family, IdentityId>> designated = {
        {Family::changhee1_number, IdentityId::thm1},
        {Family::euler_number, IdentityId::thm2},
        {Family::changhee1_poly, IdentityId::eq22},
        {Family::euler_poly, IdentityId::cor4},
        {Family::changhee2_number, IdentityId::thm6},
        {Family::changhee2_poly, IdentityId::thm8},
    };
    for (const auto& [family, id] : designated) {
        CAPTURE(family_name(family));
        IdentityReport report = verify_perturbed(id, family, 2, 3);
        CHECK_FALSE(report.pass);
        REQUIRE(report.witness.has_value());
        CHECK(report.witness->n <= 3);
    }
}

TEST_CASE("report serialization") {
    auto reports = verify_suite({IdentityId::thm1}, GridSpec{2, 1, 4});
    auto j = reports_to_json(reports);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["id"] == "thm1");
    CHECK(j[0]["verdict"] == "pass");
    CHECK(j[0]["grid"]["n_max"] == 2);
    CHECK(j[0]["grid"]["k_max"] == 1);
    CHECK(j[0]["witness"].is_null());

    std::string csv = reports_to_csv(reports);
    CHECK(csv == "id,verdict,witness_n,witness_k,lhs,rhs\nthm1,pass,,,,\n");
}

TEST_CASE("failing report carries the witness in both encodings") {
    SequenceTables t = SequenceTables::build(small_grid.n_max, small_grid.k_max);
    t.perturb(Family::changhee2_number, 1, 0);
    std::vector<IdentityReport> reports = {verify_identity(IdentityId::thm6, t, small_ctx())};
    auto j = reports_to_json(reports);
    CHECK(j[0]["verdict"] == "fail");
    CHECK(j[0]["witness"]["n"] == 0);
    CHECK(j[0]["witness"]["k"] == 1);
    CHECK(j[0]["witness"]["lhs"] == "2");
    CHECK(j[0]["witness"]["rhs"] == "1");

    std::string csv = reports_to_csv(reports);
    CHECK(csv == "id,verdict,witness_n,witness_k,lhs,rhs\nthm6,fail,0,1,2,1\n");
}

TEST_CASE("verdict matches witness presence under many perturbations") {
    for (Family f : all_families)
        for (unsigned n = 0; n <= 3; ++n) {
            SequenceTables t = small_tables();
            t.perturb(f, 1, n);
            for (IdentityId id : all_identity_ids()) {
                IdentityReport r = verify_identity(id, t, small_ctx());
                CHECK(r.pass == !r.witness.has_value());
            }
        }
}
