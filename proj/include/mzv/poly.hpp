#pragma once

#include "mzv/big_rational.hpp"
#include "mzv/word.hpp"

#include <cstddef>
#include <map>
#include <utility>

namespace mzv {

/// Finite formal Q-linear combination of monomials (Words or Compositions).
///
/// Terms are kept in CanonicalOrder and no stored coefficient is ever zero, so
/// two polynomials are equal exactly when their term maps are equal.
template <class Monomial>
class LinearCombination {
public:
    using TermMap = std::map<Monomial, BigRational, CanonicalOrder>;
    using const_iterator = typename TermMap::const_iterator;

    LinearCombination() = default;
    LinearCombination(const Monomial& m) { terms_.emplace(m, BigRational(1)); }  // NOLINT(google-explicit-constructor)
    LinearCombination(const Monomial& m, const BigRational& coeff) { add_term(m, coeff); }

    /// The constant polynomial c * 1.
    static LinearCombination constant(const BigRational& c) { return LinearCombination(Monomial{}, c); }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const_iterator begin() const { return terms_.begin(); }
    [[nodiscard]] const_iterator end() const { return terms_.end(); }
    [[nodiscard]] const TermMap& terms() const { return terms_; }

    [[nodiscard]] BigRational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    void add_term(const Monomial& m, const BigRational& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LinearCombination& operator+=(const LinearCombination& rhs) {
        for (const auto& [m, c] : rhs.terms_) add_term(m, c);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& rhs) {
        for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
        return *this;
    }
    LinearCombination& operator*=(const BigRational& s) {
        if (s.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= s;
        }
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(const BigRational& s, LinearCombination p) { return p *= s; }
    friend LinearCombination operator*(LinearCombination p, const BigRational& s) { return p *= s; }

    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
    TermMap terms_;
};

using WordPoly = LinearCombination<Word>;
using ZPoly = LinearCombination<Composition>;

/// Concatenation product, extended bilinearly.
template <class Monomial>
LinearCombination<Monomial> concat(const LinearCombination<Monomial>& a, const LinearCombination<Monomial>& b) {
    LinearCombination<Monomial> out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) out.add_term(ma + mb, ca * cb);
    }
    return out;
}

inline WordPoly add(const WordPoly& a, const WordPoly& b) { return a + b; }
inline ZPoly add(const ZPoly& a, const ZPoly& b) { return a + b; }
inline WordPoly scale(const BigRational& s, const WordPoly& p) { return s * p; }
inline ZPoly scale(const BigRational& s, const ZPoly& p) { return s * p; }

/// Termwise encode_z; coefficients preserved.
WordPoly encode_zpoly(const ZPoly& p);

/// Termwise decode_z. Throws DomainError if any monomial ends in x.
ZPoly decode_wordpoly(const WordPoly& p);

/// Sum of all coefficients.
template <class Monomial>
BigRational coefficient_sum(const LinearCombination<Monomial>& p) {
    BigRational s;
    for (const auto& [m, c] : p) s += c;
    return s;
}

}  // namespace mzv
