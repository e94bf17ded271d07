#pragma once

#include "mzv/big_float.hpp"
#include "mzv/identities.hpp"
#include "mzv/poly.hpp"
#include "mzv/word.hpp"

#include <string>

namespace mzv::numeric {

enum class Method { hoelder, truncated };

std::string to_string(Method m);
/// "hoelder" or "truncated"; throws ParseError otherwise.
Method parse_method(std::string_view text);

struct EvalResult {
    BigFloat value;
    Method method = Method::hoelder;
    BigFloat error_bound;  ///< upper estimate of the absolute error, >= 0
};

/// Default cutoff for the truncated evaluator.
inline constexpr long kDefaultTruncation = 100000;

/// pi from Machin's formula pi/4 = 4 atan(1/5) - atan(1/239).
BigFloat pi(int digits);

/// Embedded 50-digit reference value of pi.
extern const char* const kPiReference50;

/// Number of series terms used by polylog_half so that the first discarded
/// term bound 2^-M (1 + ln M)^depth is below 10^-target_digits.
long polylog_half_cutoff(std::size_t depth, int target_digits);

/// L_{1/2}(s_1, ..., s_k) = sum_{m_1 > ... > m_k > 0} 2^{-m_1} prod m_i^{-s_i},
/// accurate to 10^{-digits-2}. Any composition is allowed; () gives 1.
BigFloat polylog_half(const Composition& c, int digits);

/// zeta(w) = sum over factorizations w = u v of L_{1/2}(sigma(u)) L_{1/2}(v),
/// with w = encode_z(c). Geometric convergence; accurate to 10^{-digits}.
/// Throws DivergentError for non-admissible c.
EvalResult zeta_hoelder(const Composition& c, int digits);

/// Partial sum of the defining series over m_1 <= cutoff. The error bound is
/// the integral-comparison estimate
///   int_M^inf x^{-k_1} (1 + ln x)^{depth-1} dx
///     = M^{1-k_1} / (k_1 - 1) * sum_i j!/(j-i)! (1 + ln M)^{j-i} / (k_1 - 1)^i,
/// j = depth - 1, whose leading term is M^{1-k_1} (1 + ln M)^j / (k_1 - 1).
/// Only used for cross-checks.
EvalResult zeta_truncated(const Composition& c, long cutoff, int digits);

/// Evaluation map Z on a composition; () maps to exactly 1.
EvalResult zeta(const Composition& c, int digits, Method method = Method::hoelder, long cutoff = kDefaultTruncation);

/// Z applied termwise to a polynomial. Every monomial must decode to an
/// admissible composition. The error bound is sum |coeff| * bound.
EvalResult evaluate(const ZPoly& p, int digits, Method method = Method::hoelder);
EvalResult evaluate(const WordPoly& p, int digits, Method method = Method::hoelder);

/// zeta({2}_m) = pi^{2m} / (2m+1)!
BigFloat closed_form_2m(int m, int digits);
/// zeta({3,1}_n) = 2 pi^{4n} / (4n+2)!
BigFloat closed_form_31n(int n, int digits);

/// coeff * pi^exponent.
BigFloat realize(const identities::PiMultiple& v, int digits);

}  // namespace mzv::numeric
