#pragma once

#include "mzv/identities.hpp"
#include "mzv/mzv_numeric.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace mzv::verify {

/// Uniform record emitted by every check; this is the CLI's JSON report shape.
struct CheckReport {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    bool passed = false;
    std::string lhs;
    std::string rhs;
    std::string abs_error;
    std::string tolerance;
    double runtime_ms = 0.0;

    [[nodiscard]] nlohmann::json to_json() const;
};

struct Thm1Report {
    int m = 0;
    int n = 0;
    numeric::BigFloat lhs_value;
    numeric::BigFloat rhs_value;
    numeric::BigFloat abs_error;
    numeric::BigFloat tolerance;
    std::size_t n_terms = 0;
    bool passed = false;

    [[nodiscard]] CheckReport to_check_report() const;
};

/// Result of a numeric comparison of two evaluated expressions.
struct NumericReport {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    numeric::BigFloat lhs_value;
    numeric::BigFloat rhs_value;
    numeric::BigFloat abs_error;
    numeric::BigFloat tolerance;
    std::size_t n_terms = 0;  ///< monomials evaluated on the expanded side
    bool passed = false;

    [[nodiscard]] CheckReport to_check_report() const;
};

CheckReport to_check_report(const identities::IdentityReport& r);

/// Sum of Z over z2^m sh~ (z3 z1)^n against C(m+2n, m) pi^(2m+4n) / ((2n+1)(2m+4n+1)!),
/// with tolerance 10^-(p-5) * max(1, |rhs|).
Thm1Report check_thm1(int m, int n, int digits, numeric::Method method = numeric::Method::hoelder);

/// Z(w1 sh w2) against Z(w1) Z(w2) with tolerance 10^-(p-10). Throws
/// DivergentError for non-admissible inputs.
NumericReport check_homomorphism(const Composition& c1, const Composition& c2, int digits);

/// Z applied to both sides of eq1 with tolerance 10^-(p-10). The eq2 words
/// start with z_1 and are rejected with DomainError.
NumericReport check_prop2_numeric(int n, int N, int digits,
                                  identities::Prop2Variant v = identities::Prop2Variant::eq1);

/// Uniform composition of the given weight (>= 2) with first part >= 2.
Composition random_admissible(std::mt19937_64& rng, int weight);

/// `count` pairs; first weight uniform in [2, max_total - 2], second uniform
/// in [2, max_total - first].
std::vector<std::pair<Composition, Composition>> random_admissible_pairs(std::uint64_t seed, int count,
                                                                         int max_total_weight);

enum class SweepKind { prop2_exact, eq3, thm1_numeric, homomorphism_random };

std::string to_string(SweepKind k);
/// prop2-exact | eq3 | thm1-numeric | homomorphism-random. Throws ParseError.
SweepKind parse_sweep_kind(std::string_view text);

struct SweepBounds {
    int max = 0;  ///< prop2-exact: n+N; eq3: max(m, n); thm1-numeric: 2m+4n; homomorphism: total weight
    int count = 50;  ///< homomorphism-random only
    std::optional<identities::Prop2Variant> variant;  ///< prop2-exact; both when empty
};

struct SweepSummary {
    std::string kind;
    nlohmann::json grid;
    std::vector<CheckReport> cells;  ///< ordered by grid index
    std::vector<std::size_t> failures;
    std::string worst_abs_error = "0";
    double total_runtime_ms = 0.0;

    [[nodiscard]] bool all_passed() const { return failures.empty(); }
    [[nodiscard]] nlohmann::json to_json() const;
};

/// Runs every cell of the grid. Cells are independent and may execute on
/// several threads; results are merged by grid index. With record_timing off
/// all runtimes are reported as 0 so that output is byte-for-byte
/// reproducible.
SweepSummary sweep(SweepKind kind, const SweepBounds& bounds, int digits, std::uint64_t seed,
                   bool record_timing = true);

}  // namespace mzv::verify
