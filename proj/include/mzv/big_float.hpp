#pragma once

#include "mzv/big_rational.hpp"

#include <mpfr.h>

#include <string>
#include <string_view>

namespace mzv::numeric {

/// Minimum supported precision in decimal digits.
inline constexpr int kMinDigits = 10;
/// Extra decimal digits carried by every intermediate computation.
inline constexpr int kGuardDigits = 10;

/// Working precision in bits for a value tagged with `digits` decimal digits.
mpfr_prec_t working_bits(int digits);

/// Arbitrary-precision real tagged with a decimal precision p. Arithmetic is
/// carried out at p + kGuardDigits digits with round-to-nearest. Binary
/// operations run at the larger of the two operands' precisions.
///
/// Ordering is not exposed; use within() or is_within() for comparisons.
class BigFloat {
public:
    explicit BigFloat(int digits = kMinDigits);
    BigFloat(long value, int digits);
    BigFloat(const BigRational& value, int digits);
    ~BigFloat();

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;

    /// Decimal literal such as "3.14159" or "1e-30". Throws ParseError.
    static BigFloat parse(std::string_view text, int digits);
    /// 10^exponent.
    static BigFloat pow10(long exponent, int digits);

    [[nodiscard]] int digits() const { return digits_; }
    [[nodiscard]] mpfr_srcptr get() const { return value_; }
    [[nodiscard]] mpfr_ptr get() { return value_; }

    /// `significant` significant digits (default: digits()). Fixed notation
    /// for moderate magnitudes, scientific otherwise.
    [[nodiscard]] std::string to_string(int significant = 0) const;
    [[nodiscard]] double to_double() const;
    [[nodiscard]] bool is_zero() const;

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
    BigFloat operator-() const;

private:
    void raise_precision(int digits);
    mpfr_t value_;
    int digits_;
};

BigFloat abs(const BigFloat& a);
BigFloat pow(const BigFloat& base, long exponent);
BigFloat abs_diff(const BigFloat& a, const BigFloat& b);
/// |a - b| <= tol
bool within(const BigFloat& a, const BigFloat& b, const BigFloat& tol);
/// |a| <= bound
bool is_within(const BigFloat& a, const BigFloat& bound);

}  // namespace mzv::numeric
