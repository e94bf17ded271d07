#include "mzv/big_float.hpp"

#include "mzv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace mzv::numeric {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;

void require_digits(int digits) {
    if (digits < kMinDigits) throw DomainError("precision must be at least " + std::to_string(kMinDigits) + " digits");
}

}  // namespace

mpfr_prec_t working_bits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil((digits + kGuardDigits) * kLog2Of10)) + 8;
}

BigFloat::BigFloat(int digits) : digits_(digits) {
    require_digits(digits);
    mpfr_init2(value_, working_bits(digits));
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, int digits) : BigFloat(digits) { mpfr_set_si(value_, value, MPFR_RNDN); }

BigFloat::BigFloat(const BigRational& value, int digits) : BigFloat(digits) {
    mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::~BigFloat() {
    if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
}

BigFloat::BigFloat(const BigFloat& other) : digits_(other.digits_) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : digits_(other.digits_) {
    // Steal the limbs; leave `other` in a destructible empty state.
    *value_ = *other.value_;
    other.value_->_mpfr_d = nullptr;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
        digits_ = other.digits_;
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    if (this != &other) {
        if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
        *value_ = *other.value_;
        other.value_->_mpfr_d = nullptr;
        digits_ = other.digits_;
    }
    return *this;
}

BigFloat BigFloat::parse(std::string_view text, int digits) {
    BigFloat out(digits);
    std::string s(text);
    char* end = nullptr;
    if (!s.empty()) mpfr_strtofr(out.value_, s.c_str(), &end, 10, MPFR_RNDN);
    if (s.empty() || end != s.c_str() + s.size()) throw ParseError("invalid decimal number '" + s + "'");
    return out;
}

BigFloat BigFloat::pow10(long exponent, int digits) {
    BigFloat out(10, digits);
    mpfr_pow_si(out.value_, out.value_, exponent, MPFR_RNDN);
    return out;
}

void BigFloat::raise_precision(int digits) {
    if (digits <= digits_) return;
    mpfr_prec_round(value_, working_bits(digits), MPFR_RNDN);
    digits_ = digits;
}

std::string BigFloat::to_string(int significant) const {
    if (significant <= 0) significant = digits_;
    if (mpfr_nan_p(value_)) return "nan";
    if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(value_)) return "0";

    mpfr_exp_t exp10 = 0;
    std::unique_ptr<char, void (*)(char*)> raw(mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(significant),
                                                            value_, MPFR_RNDN),
                                               mpfr_free_str);
    std::string mant(raw.get());
    bool negative = !mant.empty() && mant.front() == '-';
    if (negative) mant.erase(0, 1);
    // value = 0.mant * 10^exp10

    std::string out;
    if (exp10 > -5 && exp10 <= significant) {
        if (exp10 <= 0) {
            out = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + mant;
        } else {
            out = mant.substr(0, static_cast<std::size_t>(exp10));
            if (static_cast<std::size_t>(exp10) < mant.size()) out += "." + mant.substr(static_cast<std::size_t>(exp10));
        }
    } else {
        out = mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(exp10 - 1);
    }
    return negative ? "-" + out : out;
}

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

bool BigFloat::is_zero() const { return mpfr_zero_p(value_) != 0; }

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    raise_precision(rhs.digits_);
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    raise_precision(rhs.digits_);
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    raise_precision(rhs.digits_);
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    raise_precision(rhs.digits_);
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(*this);
    mpfr_neg(out.value_, out.value_, MPFR_RNDN);
    return out;
}

BigFloat abs(const BigFloat& a) {
    BigFloat out(a);
    mpfr_abs(out.get(), out.get(), MPFR_RNDN);
    return out;
}

BigFloat pow(const BigFloat& base, long exponent) {
    BigFloat out(base);
    mpfr_pow_si(out.get(), base.get(), exponent, MPFR_RNDN);
    return out;
}

BigFloat abs_diff(const BigFloat& a, const BigFloat& b) { return abs(a - b); }

bool within(const BigFloat& a, const BigFloat& b, const BigFloat& tol) { return is_within(a - b, tol); }

bool is_within(const BigFloat& a, const BigFloat& bound) { return mpfr_cmpabs(a.get(), bound.get()) <= 0 && !mpfr_nan_p(a.get()); }

}  // namespace mzv::numeric
