#include "mzv/big_rational.hpp"

#include "mzv/errors.hpp"

#include <cctype>
#include <ostream>

namespace mzv {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

BigRational::BigRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) throw DomainError("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("invalid rational: '" + std::string(text) + "'");
    }
    BigInt n{std::string(num)};
    BigInt d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return {n, d};
}

std::string BigRational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational& BigRational::operator+=(const BigRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

BigInt factorial(unsigned long n) {
    BigInt result = 1;
    for (unsigned long i = 2; i <= n; ++i) result *= i;
    return result;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    // C(n, i+1) = C(n, i) * (n - i) / (i + 1); each step divides exactly.
    BigInt result = 1;
    for (long i = 0; i < k; ++i) {
        result *= static_cast<unsigned long>(n - i);
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i + 1));
    }
    return result;
}

BigInt power(const BigInt& base, unsigned long exponent) {
    BigInt result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

}  // namespace mzv
