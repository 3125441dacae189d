// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Everything is exact arithmetic; there are no tolerances anywhere.

#include <changhee/combinatorics.hpp>
#include <changhee/gfparse.hpp>
#include <changhee/identities.hpp>
#include <changhee/polynomial.hpp>
#include <changhee/sequences.hpp>
#include <changhee/series.hpp>

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace changhee;

namespace {

constexpr unsigned grid_n_max = 12;
constexpr unsigned grid_k_max = 6;
constexpr unsigned grid_truncation = 16;

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail << "\n";
    if (!pass) ++failures;
}

// Criterion 1: the full suite through the CLI, timed, on the default grid.
void criterion1_full_suite() {
    const char* bin = std::getenv("CHANGHEE_BIN");
    if (!bin) {
        report(1, false, "full identity suite (CHANGHEE_BIN is not set)");
        return;
    }
    std::string cmd = std::string("'") + bin + "' verify --ids all >/dev/null";
    auto start = std::chrono::steady_clock::now();
    int status = std::system(cmd.c_str());
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool exited_ok = status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0;
    bool in_budget = elapsed < 10.0;
    std::ostringstream detail;
    detail << "full identity suite, 19 checkers on n<=12 k<=6, " << std::fixed
           << std::setprecision(2) << elapsed << "s (budget 10s)";
    report(1, exited_ok && in_budget, detail.str());
}

// Criterion 2: the four independent first-kind computations agree pairwise.
void criterion2_four_paths() {
    unsigned mismatches = 0;
    for (unsigned k = 1; k <= grid_k_max; ++k) {
        auto gf = changhee1_gf(k, grid_n_max);
        for (unsigned n = 0; n <= grid_n_max; ++n) {
            Rational closed = changhee1_number(n, k);
            Rational stirling = changhee1_number_via_euler(n, k);
            Rational convolution = changhee1_number_via_convolution(n, k);
            Rational extracted = egf_coefficient(gf, n);
            if (!(closed == stirling && closed == convolution && closed == extracted &&
                  stirling == convolution && stirling == extracted && convolution == extracted))
                ++mismatches;
        }
    }
    std::ostringstream detail;
    detail << "four-path agreement for first-kind numbers, " << (grid_n_max + 1) * grid_k_max
           << " grid cells, " << mismatches << " mismatches";
    report(2, mismatches == 0, detail.str());
}

// Criterion 3: substituting e^t - 1 into the first-kind series yields the
// Euler numbers.
void criterion3_composition_oracle() {
    unsigned mismatches = 0;
    auto em1 = exp_minus_one(grid_truncation);
    for (unsigned k = 1; k <= grid_k_max; ++k) {
        auto composed = changhee1_gf(k, grid_truncation).compose(em1);
        for (unsigned m = 0; m <= grid_n_max; ++m)
            if (egf_coefficient(composed, m) != euler_number(m, k)) ++mismatches;
    }
    std::ostringstream detail;
    detail << "composition oracle vs Euler numbers, m<=12 k<=6, " << mismatches << " mismatches";
    report(3, mismatches == 0, detail.str());
}

// Criterion 4: both Stirling triangles against independent routes plus the
// inversion relation.
void criterion4_stirling() {
    StirlingTriangle s1(StirlingKind::first_signed, grid_n_max);
    StirlingTriangle s2(StirlingKind::second, grid_n_max);
    unsigned mismatches = 0;

    for (unsigned n = 0; n <= grid_n_max; ++n) {
        Polynomial fp = falling_factorial_poly(n);
        for (unsigned l = 0; l <= n; ++l)
            if (fp.coefficient(l) != Rational(s1.value(n, l))) ++mismatches;
    }

    for (unsigned n = 1; n <= grid_n_max; ++n) {
        auto powered = exp_minus_one(grid_n_max).pow(n);
        Rational n_fact(factorial(n));
        for (unsigned l = n; l <= grid_n_max; ++l)
            if (egf_coefficient(powered, l) / n_fact != Rational(s2.value(l, n))) ++mismatches;
    }

    for (unsigned l = 0; l <= grid_n_max; ++l)
        for (unsigned m = 0; m <= grid_n_max; ++m) {
            BigInt sum = 0;
            for (unsigned j = 0; j <= l; ++j) sum += s2.value(l, j) * s1.value(j, m);
            if (sum != BigInt(l == m ? 1 : 0)) ++mismatches;
        }

    std::ostringstream detail;
    detail << "Stirling triangles vs factorial expansion, series extraction and inversion, "
           << mismatches << " mismatches";
    report(4, mismatches == 0, detail.str());
}

// Criterion 5: x = 0 specialization for every polynomial family, the shifted
// Euler identity, and the negated-argument identity, all coefficient-wise.
void criterion5_specializations() {
    StirlingTriangle s1(StirlingKind::first_signed, grid_n_max);
    StirlingTriangle s2(StirlingKind::second, grid_n_max);
    unsigned mismatches = 0;
    for (unsigned k = 1; k <= grid_k_max; ++k) {
        auto ch1p = changhee1_poly_row(k, grid_n_max);
        auto ch2p = changhee2_poly_row(k, grid_n_max);
        auto eulp = euler_poly_row(k, grid_n_max);
        auto ch1n = changhee1_number_row(k, grid_n_max);
        auto ch2n = changhee2_number_row(k, grid_n_max);
        auto euln = euler_number_row(k, grid_n_max);
        for (unsigned n = 0; n <= grid_n_max; ++n) {
            if (ch1p[n].eval(Rational(0)) != ch1n[n]) ++mismatches;
            if (ch2p[n].eval(Rational(0)) != ch2n[n]) ++mismatches;
            if (eulp[n].eval(Rational(0)) != euln[n]) ++mismatches;

            Polynomial shifted = shift_argument(eulp[n], Rational(static_cast<BigInt>(k)));
            Polynomial stirling_sum;
            for (unsigned j = 0; j <= n; ++j)
                stirling_sum += ch2p[j] * Polynomial(Rational(s2.value(n, j)));
            if (shifted != stirling_sum) ++mismatches;

            Polynomial negated_sum;
            for (unsigned l = 0; l <= n; ++l) {
                Rational c = Rational(s1.value(n, l)) * (l % 2 == 0 ? Rational(1) : Rational(-1));
                negated_sum += negate_argument(eulp[l]) * Polynomial(c);
            }
            if (ch2p[n] != negated_sum) ++mismatches;
        }
    }
    std::ostringstream detail;
    detail << "x=0 specializations plus shifted and negated polynomial identities, " << mismatches
           << " mismatches";
    report(5, mismatches == 0, detail.str());
}

// Criterion 6: the four generating functions written as expression strings
// reproduce the sequence families, and the strings round-trip through the
// pretty-printer.
void criterion6_expressions() {
    unsigned mismatches = 0;
    for (unsigned k = 1; k <= 3; ++k) {
        std::string ks = std::to_string(k);
        std::string e_ch1num = "(2/(2+t))^" + ks;
        std::string e_ch1poly = "(2/(2+t))^" + ks + " * (1+t)^x";
        std::string e_ch2num = "(2/(2+t))^" + ks + " * (1+t)^" + ks;
        std::string e_ch2poly = "(2/(2+t))^" + ks + " * (1+t)^(x+" + ks + ")";
        for (const auto& text : {e_ch1num, e_ch1poly, e_ch2num, e_ch2poly}) {
            auto tree = parse(text);
            auto reparsed = parse(pretty_print(*tree));
            if (!structurally_equal(*tree, *reparsed)) ++mismatches;
        }
        auto s_ch1num = eval_series(*parse(e_ch1num), grid_n_max);
        auto s_ch1poly = eval_series(*parse(e_ch1poly), grid_n_max);
        auto s_ch2num = eval_series(*parse(e_ch2num), grid_n_max);
        auto s_ch2poly = eval_series(*parse(e_ch2poly), grid_n_max);
        for (unsigned n = 0; n <= grid_n_max; ++n) {
            if (egf_coefficient(s_ch1num, n) != Polynomial(changhee1_number(n, k))) ++mismatches;
            if (egf_coefficient(s_ch1poly, n) != changhee1_poly(n, k)) ++mismatches;
            if (egf_coefficient(s_ch2num, n) != Polynomial(changhee2_number(n, k))) ++mismatches;
            if (egf_coefficient(s_ch2poly, n) != changhee2_poly(n, k)) ++mismatches;
        }
    }
    std::ostringstream detail;
    detail << "expression strings reproduce all four generating functions for k<=3, " << mismatches
           << " mismatches";
    report(6, mismatches == 0, detail.str());
}

// Criterion 7: every single-entry +1 perturbation of any table is caught by
// at least one checker.
void criterion7_sensitivity() {
    GridSpec grid{grid_n_max, grid_k_max, grid_truncation};
    VerificationContext ctx(grid);
    SequenceTables clean = SequenceTables::build(grid_n_max, grid_k_max);

    // The checker that reads each family's table against an independent
    // reference goes first; the rest are fallback.
    auto ordered_ids = [](IdentityId designated) {
        std::vector<IdentityId> ids = {designated};
        for (IdentityId id : all_identity_ids())
            if (id != designated) ids.push_back(id);
        return ids;
    };
    const std::vector<std::pair<Family, IdentityId>> designated = {
        {Family::changhee1_number, IdentityId::thm1},
        {Family::euler_number, IdentityId::thm2},
        {Family::changhee1_poly, IdentityId::eq22},
        {Family::euler_poly, IdentityId::cor4},
        {Family::changhee2_number, IdentityId::thm6},
        {Family::changhee2_poly, IdentityId::thm8},
    };

    unsigned slots = 0;
    unsigned undetected = 0;
    for (const auto& [family, first_id] : designated) {
        std::vector<IdentityId> ids = ordered_ids(first_id);
        for (unsigned k = 1; k <= grid_k_max; ++k)
            for (unsigned n = 0; n <= grid_n_max; ++n) {
                ++slots;
                SequenceTables perturbed = clean;
                perturbed.perturb(family, k, n);
                bool caught = false;
                for (IdentityId id : ids) {
                    IdentityReport r = verify_identity(id, perturbed, ctx);
                    if (!r.pass) {
                        caught = true;
                        break;
                    }
                }
                if (!caught) ++undetected;
            }
    }
    std::ostringstream detail;
    detail << "perturbation sensitivity, " << slots << " single-entry perturbations, "
           << undetected << " undetected";
    report(7, undetected == 0, detail.str());
}

}  // namespace

int main() {
    criterion1_full_suite();
    criterion2_four_paths();
    criterion3_composition_oracle();
    criterion4_stirling();
    criterion5_specializations();
    criterion6_expressions();
    criterion7_sensitivity();
    if (failures == 0) {
        std::cout << "acceptance: all 7 criteria pass\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria failed\n";
    return 1;
}
