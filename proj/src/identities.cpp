#include "mzv/identities.hpp"

#include "mzv/errors.hpp"
#include "mzv/shuffle.hpp"
#include "mzv/text_format.hpp"

#include <string>

namespace mzv::identities {

namespace {

void require_prop2_range(int n, int N) {
    if (n < 0 || N < 0) throw DomainError("prop2: n and N must be non-negative");
    if (n > N) throw DomainError("prop2: requires n <= N");
}

void require_non_negative(int m, int n, const char* what) {
    if (m < 0 || n < 0) throw DomainError(std::string(what) + ": m and n must be non-negative");
}

const char* variant_name(Prop2Variant v) { return v == Prop2Variant::eq1 ? "eq1" : "eq2"; }

const Word kY{Letter::y};

}  // namespace

nlohmann::json IdentityReport::to_json() const {
    return {{"identity", identity}, {"params", params}, {"holds", holds}, {"difference", difference}};
}

std::string abbreviated(const WordPoly& p, std::size_t limit) {
    if (p.size() <= limit) return to_string(p);
    WordPoly head;
    std::size_t i = 0;
    for (const auto& [w, c] : p) {
        if (i++ == limit) break;
        head.add_term(w, c);
    }
    return to_string(head) + " + ... (" + std::to_string(p.size()) + " terms)";
}

Composition twos(int a) { return repeat(Composition{2}, static_cast<std::size_t>(a)); }

Composition three_ones(int k) { return repeat(Composition{3, 1}, static_cast<std::size_t>(k)); }

WordPoly prop2_lhs(int n, int N, Prop2Variant v) {
    require_prop2_range(n, N);
    Composition left = twos(n);
    Composition right = twos(N);
    if (v == Prop2Variant::eq2) {
        left = Composition{1} + left;
        right = Composition{1} + right;
    }
    return shuffle_xy(encode_z(left), encode_z(right));
}

WordPoly prop2_rhs_term(int n, int N, int k, Prop2Variant v) {
    require_prop2_range(n, N);
    if (k < 0 || k > n) throw DomainError("prop2: summand index k must satisfy 0 <= k <= n");
    BigRational coeff(BigInt(power(4, static_cast<unsigned long>(k)) * binomial(N + n - 2 * k, n - k)));
    Composition inner = three_ones(k);
    if (v == Prop2Variant::eq2) inner = Composition{1} + inner;
    WordPoly bracket = encode_zpoly(shuffle_z(twos(N + n - 2 * k), inner));
    if (v == Prop2Variant::eq1) return coeff * bracket;
    return (BigRational(2) * coeff) * concat(WordPoly(kY), bracket);
}

WordPoly prop2_rhs(int n, int N, Prop2Variant v) {
    require_prop2_range(n, N);
    WordPoly out;
    for (int k = 0; k <= n; ++k) out += prop2_rhs_term(n, N, k, v);
    return out;
}

IdentityReport verify_prop2(int n, int N, Prop2Variant v) {
    WordPoly lhs = prop2_lhs(n, N, v);
    WordPoly rhs = prop2_rhs(n, N, v);
    WordPoly diff = lhs - rhs;
    IdentityReport r;
    r.identity = std::string("prop2-") + variant_name(v);
    r.params = {{"n", n}, {"N", N}};
    r.holds = diff.is_zero();
    r.lhs = abbreviated(lhs);
    r.rhs = abbreviated(rhs);
    r.difference = abbreviated(diff);
    return r;
}

std::pair<BigRational, BigRational> eq3_transformed_sides(int m, int n) {
    require_non_negative(m, n, "eq3");
    const auto um = static_cast<unsigned long>(m);
    const auto un = static_cast<unsigned long>(n);
    BigRational lhs(BigInt(1), factorial(2 * un + 1) * factorial(2 * um + 2 * un + 1));
    const BigInt big_fact = factorial(2 * um + 4 * un + 1);
    BigRational rhs;
    for (int k = 0; k <= n; ++k) {
        BigInt num = power(4, static_cast<unsigned long>(k)) * binomial(m + 2 * n - 2 * k, n - k) *
                     binomial(m + 2 * n, 2 * k);
        rhs += BigRational(num, BigInt(2 * k + 1) * big_fact);
    }
    return {lhs, rhs};
}

std::pair<BigInt, BigInt> eq3_binomial_sides(int m, int n) {
    require_non_negative(m, n, "eq3");
    BigInt lhs = binomial(2 * m + 4 * n + 2, 2 * n + 1);
    const BigInt top = factorial(static_cast<unsigned long>(m + 2 * n + 1));
    BigInt rhs = 0;
    for (int k = 0; k <= n; ++k) {
        BigInt den = factorial(static_cast<unsigned long>(n - k)) * factorial(static_cast<unsigned long>(2 * k + 1)) *
                     factorial(static_cast<unsigned long>(m + n - k));
        BigInt term = power(2, static_cast<unsigned long>(2 * k + 1)) * top;
        // Multinomial coefficients: the division is exact.
        mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), den.get_mpz_t());
        rhs += term;
    }
    return {lhs, rhs};
}

IdentityReport eq3_check(int m, int n) {
    auto [tl, tr] = eq3_transformed_sides(m, n);
    auto [bl, br] = eq3_binomial_sides(m, n);
    BigRational d_transformed = tl - tr;
    BigInt d_binomial = bl - br;

    IdentityReport r;
    r.identity = "eq3";
    r.params = {{"m", m}, {"n", n}};
    r.holds = d_transformed.is_zero() && d_binomial == 0;
    r.lhs = tl.to_string();
    r.rhs = tr.to_string();
    if (r.holds) {
        r.difference = "0";
    } else {
        r.difference = "transformed: " + d_transformed.to_string() + "; binomial: " + d_binomial.get_str();
    }
    return r;
}

std::vector<std::pair<Composition, BigRational>> thm1_expansion(int m, int n) {
    require_non_negative(m, n, "thm1");
    ZPoly p = shuffle_z(twos(m), three_ones(n));
    return {p.begin(), p.end()};
}

PiMultiple thm1_rhs_exact(int m, int n) {
    require_non_negative(m, n, "thm1");
    BigInt den = BigInt(2 * n + 1) * factorial(static_cast<unsigned long>(2 * m + 4 * n + 1));
    return {BigRational(binomial(m + 2 * n, m), den), 2 * m + 4 * n};
}

}  // namespace mzv::identities
