#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

enum class Letter : char { x = 'x', y = 'y' };

/// A monomial of Q<x,y>: a finite word over {x, y}. The empty word is the
/// unit 1.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters);

    /// Accepts only the characters 'x' and 'y'. Throws ParseError.
    static Word parse(std::string_view text);

    [[nodiscard]] std::size_t size() const { return letters_.size(); }
    [[nodiscard]] bool empty() const { return letters_.empty(); }
    [[nodiscard]] Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
    [[nodiscard]] Letter front() const { return static_cast<Letter>(letters_.front()); }
    [[nodiscard]] Letter back() const { return static_cast<Letter>(letters_.back()); }
    [[nodiscard]] std::size_t count(Letter l) const;

    [[nodiscard]] Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
    void push_back(Letter l) { letters_.push_back(static_cast<char>(l)); }
    Word& operator+=(const Word& rhs);
    friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

    /// Letters as a string over {x, y}; empty for the unit.
    [[nodiscard]] const std::string& str() const { return letters_; }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    explicit Word(std::string letters) : letters_(std::move(letters)) {}
    std::string letters_;
};

/// w repeated `times` times.
Word repeat(const Word& w, std::size_t times);

/// Reverse the word and exchange x <-> y. An involution.
Word sigma_dual(const Word& w);

/// A finite sequence of positive integers: the argument list of an MZV and a
/// monomial z_{k1}...z_{kn} of Q<z_1, z_2, ...>.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts);
    explicit Composition(std::vector<int> parts);

    /// Grammar: part(,part)* where a part is an integer >= 1 or a repetition
    /// macro {k}^r (r >= 0). Whitespace is ignored; "" and "()" are the empty
    /// composition. Throws ParseError.
    static Composition parse(std::string_view text);

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] std::size_t depth() const { return parts_.size(); }
    [[nodiscard]] long weight() const;
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }
    [[nodiscard]] std::size_t size() const { return parts_.size(); }

    void push_back(int part);
    Composition& operator+=(const Composition& rhs);
    friend Composition operator+(Composition lhs, const Composition& rhs) { return lhs += rhs; }

    /// Comma separated parts; "()" for the empty composition.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

Composition repeat(const Composition& c, std::size_t times);

/// z_k = x^{k-1} y, extended to compositions by concatenation.
Word encode_z(const Composition& c);

/// Inverse of encode_z. Throws DomainError unless w is empty or ends in y.
Composition decode_z(const Word& w);

/// True iff c is empty or its first part is at least 2 (the word lies in
/// Q + xHy).
bool is_admissible(const Composition& c);

std::ostream& operator<<(std::ostream& os, const Word& w);
std::ostream& operator<<(std::ostream& os, const Composition& c);

/// Canonical term orders used for serialization. Words: shorter first, then
/// lexicographic with y < x. Compositions: smaller depth first, then
/// lexicographic on parts.
struct CanonicalOrder {
    bool operator()(const Word& a, const Word& b) const;
    bool operator()(const Composition& a, const Composition& b) const;
};

}  // namespace mzv

template <>
struct std::hash<mzv::Word> {
    std::size_t operator()(const mzv::Word& w) const noexcept { return std::hash<std::string>{}(w.str()); }
};

template <>
struct std::hash<mzv::Composition> {
    std::size_t operator()(const mzv::Composition& c) const noexcept {
        std::size_t h = c.depth();
        for (int p : c.parts()) h = h * 1000003u ^ static_cast<std::size_t>(p);
        return h;
    }
};
