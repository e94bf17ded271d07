#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mzv {

/// Unbounded integer. Plain alias; GMP already gives value semantics.
using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& numerator, const BigInt& denominator);

    /// Parses "a" or "a/b" with an optional leading sign. Throws ParseError.
    static BigRational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    /// "n" for integers, "n/d" otherwise.
    [[nodiscard]] std::string to_string() const;

    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
    friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
    friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
    friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }
    BigRational operator-() const;

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

private:
    explicit BigRational(mpq_class value);
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);  // 0 when k < 0 or k > n
BigInt power(const BigInt& base, unsigned long exponent);

}  // namespace mzv
