#pragma once

#include "mzv/big_rational.hpp"
#include "mzv/poly.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace mzv::identities {

/// Which of the two shuffle identities for z_2^n sh z_2^N is meant:
///   eq1:      z2^n sh z2^N
///             = sum_k 4^k C(N+n-2k, n-k) { z2^(N+n-2k) sh~ (z3 z1)^k }
///   eq2:  z1 z2^n sh z1 z2^N
///             = 2 sum_k 4^k C(N+n-2k, n-k) z1 { z2^(N+n-2k) sh~ z1 (z3 z1)^k }
enum class Prop2Variant { eq1, eq2 };

/// Exact value coeff * pi^pi_exponent.
struct PiMultiple {
    BigRational coeff;
    int pi_exponent = 0;

    friend bool operator==(const PiMultiple&, const PiMultiple&) = default;
};

struct IdentityReport {
    std::string identity;
    nlohmann::json params;
    bool holds = false;
    std::string lhs;
    std::string rhs;
    std::string difference;  // "0" iff holds

    [[nodiscard]] nlohmann::json to_json() const;
};

/// Polynomials with more terms than this are abbreviated inside reports.
inline constexpr std::size_t kReportTermLimit = 32;

/// Canonical text of p, truncated after `limit` terms with a term count.
std::string abbreviated(const WordPoly& p, std::size_t limit = kReportTermLimit);

WordPoly prop2_lhs(int n, int N, Prop2Variant v);
WordPoly prop2_rhs(int n, int N, Prop2Variant v);

/// The k-th summand of prop2_rhs, including the factor 2 for eq2.
WordPoly prop2_rhs_term(int n, int N, int k, Prop2Variant v);

/// Exact comparison of prop2_lhs and prop2_rhs in the {x,y} normal form.
IdentityReport verify_prop2(int n, int N, Prop2Variant v);

/// Both sides of
///   1/((2n+1)! (2m+2n+1)!)
///     = sum_{k=0}^{n} 4^k C(m+2n-2k, n-k) C(m+2n, 2k) / ((2k+1) (2m+4n+1)!)
std::pair<BigRational, BigRational> eq3_transformed_sides(int m, int n);

/// Both sides of the coefficient comparison of x^(2n+1) in
/// (x+1)^(2m+4n+2) = (x^2+2x+1)^(m+2n+1):
///   C(2m+4n+2, 2n+1) = sum_k 2^(2k+1) (m+2n+1)! / ((n-k)! (2k+1)! (m+n-k)!)
std::pair<BigInt, BigInt> eq3_binomial_sides(int m, int n);

/// Checks both forms above exactly.
IdentityReport eq3_check(int m, int n);

/// Terms of z2^m sh~ (z3 z1)^n as compositions, in canonical order.
std::vector<std::pair<Composition, BigRational>> thm1_expansion(int m, int n);

/// C(m+2n, m) pi^(2m+4n) / ((2n+1) (2m+4n+1)!).
PiMultiple thm1_rhs_exact(int m, int n);

/// z2^a as a composition.
Composition twos(int a);
/// (z3 z1)^k as a composition.
Composition three_ones(int k);

}  // namespace mzv::identities
