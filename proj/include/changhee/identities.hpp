#pragma once

#include <changhee/combinatorics.hpp>
#include <changhee/sequences.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace changhee {

enum class IdentityId {
    thm1,
    thm2,
    thm3,
    cor4,
    thm5,
    thm6,
    thm7,
    thm8,
    thm9,
    thm10,
    thm11,
    eq11,
    eq13,
    eq16,
    eq22,
    eq28,
    eq31,
    eq37,
    eq40,
};

const std::vector<IdentityId>& all_identity_ids();
std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

/// Index range the identity is checked on: thm10, thm11 and eq40 start at
/// n = 1, everything else at n = 0.
unsigned identity_n_start(IdentityId id);

struct GridSpec {
    unsigned n_max = 12;
    unsigned k_max = 6;
    unsigned truncation = 16;  // must be >= n_max
};

struct Witness {
    unsigned n = 0;
    unsigned k = 0;
    SequenceValue lhs;
    SequenceValue rhs;
};

struct IdentityReport {
    IdentityId id;
    GridSpec grid;
    bool pass = false;
    std::optional<Witness> witness;  // first failure in (n, k) order, n outer
};

/// All six family tables over one grid, the objects the checkers consume.
/// Rows are indexed [k-1][n]. perturb() adds 1 to a single entry, the knob
/// the sensitivity sweep turns.
struct SequenceTables {
    unsigned n_max = 0;
    unsigned k_max = 0;
    std::vector<std::vector<Rational>> ch1num, ch2num, eulnum;
    std::vector<std::vector<Polynomial>> ch1poly, ch2poly, eulpoly;

    static SequenceTables build(unsigned n_max, unsigned k_max);
    void perturb(Family family, unsigned k, unsigned n);
};

/// Read-only reference data shared by every checker: Stirling triangles and
/// generating-function extractions recomputed independently of the tables.
/// Built once per grid; safe to reuse across many verify_identity calls.
class VerificationContext {
public:
    explicit VerificationContext(const GridSpec& grid);

    const GridSpec& grid() const { return grid_; }
    const StirlingTriangle& s1() const { return s1_; }
    const StirlingTriangle& s2() const { return s2_; }

    // [k-1][n], EGF coefficients of the respective generating functions.
    const std::vector<std::vector<Rational>>& ch1num_ref() const { return ch1num_ref_; }
    const std::vector<std::vector<Rational>>& ch2num_ref() const { return ch2num_ref_; }
    const std::vector<std::vector<Rational>>& euler_ref() const { return euler_ref_; }
    // EGF coefficients of the first-kind series composed with e^t - 1.
    const std::vector<std::vector<Rational>>& euler_compose_ref() const { return euler_compose_ref_; }
    const std::vector<std::vector<Polynomial>>& ch1poly_ref() const { return ch1poly_ref_; }
    const std::vector<std::vector<Polynomial>>& ch2poly_ref() const { return ch2poly_ref_; }

private:
    GridSpec grid_;
    StirlingTriangle s1_;
    StirlingTriangle s2_;
    std::vector<std::vector<Rational>> ch1num_ref_, ch2num_ref_, euler_ref_, euler_compose_ref_;
    std::vector<std::vector<Polynomial>> ch1poly_ref_, ch2poly_ref_;
};

/// Exact comparison. Polynomials are compared coefficient-wise and, as a
/// harness invariant, pointwise at five fixed rationals; a disagreement
/// between the two methods throws std::logic_error.
bool values_equal(const SequenceValue& a, const SequenceValue& b);

IdentityReport verify_identity(IdentityId id, const SequenceTables& tables,
                               const VerificationContext& ctx);

/// Builds tables and context for the grid, runs the listed checkers.
std::vector<IdentityReport> verify_suite(const std::vector<IdentityId>& ids, const GridSpec& grid);

nlohmann::ordered_json report_to_json(const IdentityReport& report);
nlohmann::ordered_json reports_to_json(const std::vector<IdentityReport>& reports);
std::string reports_to_csv(const std::vector<IdentityReport>& reports);

}  // namespace changhee
