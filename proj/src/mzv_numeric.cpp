#include "mzv/mzv_numeric.hpp"

#include "mzv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mzv::numeric {

const char* const kPiReference50 = "3.14159265358979323846264338327950288419716939937510";

std::string to_string(Method m) { return m == Method::hoelder ? "hoelder" : "truncated"; }

Method parse_method(std::string_view text) {
    if (text == "hoelder") return Method::hoelder;
    if (text == "truncated") return Method::truncated;
    throw ParseError("unknown method '" + std::string(text) + "' (expected hoelder or truncated)");
}

namespace {

void require_digits(int digits) {
    if (digits < kMinDigits) throw DomainError("precision must be at least " + std::to_string(kMinDigits) + " digits");
}

// atan(1/x) = sum_k (-1)^k / ((2k+1) x^(2k+1)), summed until terms drop below
// 10^-(digits + kGuardDigits).
BigFloat atan_inverse(unsigned long x, int digits) {
    BigFloat sum(digits);
    BigFloat power(1, digits);  // x^-(2k+1)
    mpfr_div_ui(power.get(), power.get(), x, MPFR_RNDN);
    const BigFloat eps = BigFloat::pow10(-(digits + kGuardDigits), digits);
    BigFloat term(digits);
    for (unsigned long k = 0;; ++k) {
        mpfr_div_ui(term.get(), power.get(), 2 * k + 1, MPFR_RNDN);
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
        if (is_within(term, eps)) break;
        mpfr_div_ui(power.get(), power.get(), x * x, MPFR_RNDN);
    }
    return sum;
}

// Nested partial sums A_d(m) = m^{-s_d} * sum_{m' < m} A_{d+1}(m'),
// A_k(m) = m^{-s_k}, accumulated as sum_{m=1}^{cutoff} weight(m) * A_1(m).
// With half_weight set, weight(m) = 2^{-m}; otherwise weight(m) = 1.
BigFloat nested_series(const Composition& c, long cutoff, int digits, bool half_weight) {
    const std::size_t depth = c.depth();
    const int max_part = *std::max_element(c.parts().begin(), c.parts().end());

    std::vector<BigFloat> acc(depth + 1, BigFloat(digits));  // acc[d] = sum_{m'<m} A_d(m'), 0-based d
    std::vector<BigFloat> current(depth, BigFloat(digits));
    std::vector<BigFloat> inv_pow(static_cast<std::size_t>(max_part) + 1, BigFloat(digits));
    BigFloat total(digits);
    BigFloat weight(1, digits);

    for (long m = 1; m <= cutoff; ++m) {
        mpfr_set_ui(inv_pow[1].get(), static_cast<unsigned long>(m), MPFR_RNDN);
        mpfr_ui_div(inv_pow[1].get(), 1, inv_pow[1].get(), MPFR_RNDN);
        for (int e = 2; e <= max_part; ++e) {
            mpfr_mul(inv_pow[static_cast<std::size_t>(e)].get(), inv_pow[static_cast<std::size_t>(e) - 1].get(),
                     inv_pow[1].get(), MPFR_RNDN);
        }
        for (std::size_t d = depth; d-- > 0;) {
            const BigFloat& f = inv_pow[static_cast<std::size_t>(c[d])];
            if (d + 1 == depth) {
                mpfr_set(current[d].get(), f.get(), MPFR_RNDN);
            } else {
                mpfr_mul(current[d].get(), f.get(), acc[d + 1].get(), MPFR_RNDN);
            }
        }
        if (half_weight) mpfr_div_2ui(weight.get(), weight.get(), 1, MPFR_RNDN);
        if (half_weight) {
            mpfr_fma(total.get(), weight.get(), current[0].get(), total.get(), MPFR_RNDN);
        } else {
            total += current[0];
        }
        for (std::size_t d = 1; d < depth; ++d) acc[d] += current[d];
    }
    return total;
}

BigFloat polylog_half_to(const Composition& c, int target_digits, int digits) {
    if (c.empty()) return {1, digits};
    return nested_series(c, polylog_half_cutoff(c.depth(), target_digits), digits, true);
}

void require_admissible(const Composition& c) {
    if (!is_admissible(c)) throw DivergentError();
}

}  // namespace

BigFloat pi(int digits) {
    require_digits(digits);
    BigFloat result = BigFloat(16, digits) * atan_inverse(5, digits) - BigFloat(4, digits) * atan_inverse(239, digits);
    const int checked = std::min(digits, 48);
    const BigFloat reference = BigFloat::parse(kPiReference50, digits);
    if (!within(result, reference, BigFloat::pow10(-checked, digits))) {
        throw std::logic_error("pi: Machin series disagrees with the embedded reference");
    }
    return result;
}

long polylog_half_cutoff(std::size_t depth, int target_digits) {
    auto cutoff = static_cast<long>(std::ceil(3.33 * (target_digits + kGuardDigits))) + 20;
    // log10 of 2^-M (1 + ln M)^depth
    auto log_bound = [depth](long m) {
        return -static_cast<double>(m) * std::log10(2.0) +
               static_cast<double>(depth) * std::log10(1.0 + std::log(static_cast<double>(m)));
    };
    while (log_bound(cutoff) >= -(target_digits + 2)) cutoff += cutoff / 2;
    return cutoff;
}

BigFloat polylog_half(const Composition& c, int digits) {
    require_digits(digits);
    return polylog_half_to(c, digits, digits);
}

EvalResult zeta_hoelder(const Composition& c, int digits) {
    require_digits(digits);
    require_admissible(c);
    if (c.empty()) return {BigFloat(1, digits), Method::hoelder, BigFloat(digits)};

    const Word w = encode_z(c);
    const std::size_t splits = w.size() + 1;
    // Each factor is within 10^-t of a value in [0, 1]; a product therefore
    // carries at most 2*10^-t + 10^-2t. Choose t so splits * 3*10^-t <= 10^-digits.
    const int extra = static_cast<int>(std::ceil(std::log10(3.0 * static_cast<double>(splits))));
    const int target = digits + std::max(extra, 2);
    const int work = target - 2;  // polylog_half_to(., work) is accurate to 10^-(work+2)

    BigFloat sum(work);
    for (std::size_t i = 0; i < splits; ++i) {
        const Composition upper = decode_z(sigma_dual(w.substr(0, i)));
        const Composition lower = decode_z(w.substr(i));
        sum += polylog_half_to(upper, work, work) * polylog_half_to(lower, work, work);
    }

    BigFloat bound = BigFloat(static_cast<long>(3 * splits), digits) * BigFloat::pow10(-target, digits);
    bound += BigFloat::pow10(-(digits + kGuardDigits - 1), digits);  // rounding in the final sum
    BigFloat value(digits);
    mpfr_set(value.get(), sum.get(), MPFR_RNDN);
    return {value, Method::hoelder, bound};
}

EvalResult zeta_truncated(const Composition& c, long cutoff, int digits) {
    require_digits(digits);
    require_admissible(c);
    if (cutoff < static_cast<long>(c.depth()) || cutoff < 0) {
        throw DomainError("truncation cutoff must be at least the depth");
    }
    if (c.empty()) return {BigFloat(1, digits), Method::truncated, BigFloat(digits)};

    BigFloat value = nested_series(c, cutoff, digits, false);

    // Integral of x^{-k1} (1 + ln x)^j over [M, inf), j = depth - 1, using
    // H_{m-1} <= 1 + ln m for the inner sums.
    const double k1 = c[0];
    const double m = static_cast<double>(std::max(cutoff, 1L));
    const int j = static_cast<int>(c.depth()) - 1;
    const double log_term = 1.0 + std::log(m);
    double series = 0.0;
    double falling = 1.0;
    for (int i = 0; i <= j; ++i) {
        series += falling * std::pow(log_term, j - i) / std::pow(k1 - 1.0, i);
        falling *= j - i;
    }
    const double tail = std::pow(m, 1.0 - k1) / (k1 - 1.0) * series;
    BigFloat bound(digits);
    mpfr_set_d(bound.get(), tail, MPFR_RNDU);
    return {value, Method::truncated, bound};
}

EvalResult zeta(const Composition& c, int digits, Method method, long cutoff) {
    if (method == Method::hoelder) return zeta_hoelder(c, digits);
    return zeta_truncated(c, cutoff, digits);
}

EvalResult evaluate(const ZPoly& p, int digits, Method method) {
    require_digits(digits);
    EvalResult out{BigFloat(digits), method, BigFloat(digits)};
    for (const auto& [c, coeff] : p) {
        EvalResult term = zeta(c, digits, method);
        BigFloat q(coeff, digits);
        out.value += q * term.value;
        out.error_bound += abs(q) * term.error_bound;
    }
    return out;
}

EvalResult evaluate(const WordPoly& p, int digits, Method method) { return evaluate(decode_wordpoly(p), digits, method); }

BigFloat closed_form_2m(int m, int digits) {
    if (m < 0) throw DomainError("closed_form_2m: m must be non-negative");
    return realize({BigRational(BigInt(1), factorial(static_cast<unsigned long>(2 * m + 1))), 2 * m}, digits);
}

BigFloat closed_form_31n(int n, int digits) {
    if (n < 0) throw DomainError("closed_form_31n: n must be non-negative");
    return realize({BigRational(BigInt(2), factorial(static_cast<unsigned long>(4 * n + 2))), 4 * n}, digits);
}

BigFloat realize(const identities::PiMultiple& v, int digits) {
    if (v.pi_exponent == 0) return {v.coeff, digits};
    return BigFloat(v.coeff, digits) * pow(pi(digits), v.pi_exponent);
}

}  // namespace mzv::numeric
