#include "mzv/shuffle.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace mzv {

namespace {

struct IntSeqHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = v.size();
        for (int p : v) h = h * 1000003u ^ static_cast<std::size_t>(p);
        return h;
    }
};

template <class Seq>
using SeqHash = std::conditional_t<std::is_same_v<Seq, std::string>, std::hash<std::string>, IntSeqHash>;

template <class Seq, class Count>
using ReversedTerms = std::unordered_map<Seq, Count, SeqHash<Seq>>;

// Shuffle of two monomials by dynamic programming over suffix pairs.
// Cell (i, j) holds a[i:] sh b[j:]; words are stored reversed so that
// prepending a letter is a push_back. Only two rows are live at a time.
template <class Seq, class Count>
ReversedTerms<Seq, Count> shuffle_suffix_table(const Seq& a, const Seq& b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    using Terms = ReversedTerms<Seq, Count>;

    auto prepend_into = [](Terms& dst, const Terms& src, typename Seq::value_type letter) {
        for (const auto& [w, c] : src) {
            Seq extended;
            extended.reserve(w.size() + 1);
            extended = w;
            extended.push_back(letter);
            dst[std::move(extended)] += c;
        }
    };

    // Row i = n: a[n:] is empty, so cell (n, j) is the single word b[j:].
    std::vector<Terms> next(m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
        Seq rev(b.rbegin(), b.rend() - static_cast<std::ptrdiff_t>(j));
        next[j].emplace(std::move(rev), Count(1));
    }
    for (std::size_t i = n; i-- > 0;) {
        std::vector<Terms> row(m + 1);
        Seq rev(a.rbegin(), a.rend() - static_cast<std::ptrdiff_t>(i));
        row[m].emplace(std::move(rev), Count(1));
        for (std::size_t j = m; j-- > 0;) {
            Terms cell;
            cell.reserve(next[j].size() + row[j + 1].size());
            prepend_into(cell, next[j], a[i]);
            prepend_into(cell, row[j + 1], b[j]);
            row[j] = std::move(cell);
        }
        next = std::move(row);
    }
    return std::move(next[0]);
}

BigRational to_rational(std::uint64_t c) { return BigRational(BigInt(static_cast<unsigned long>(c))); }
BigRational to_rational(const BigInt& c) { return BigRational(c); }

// Counts are bounded by C(n + m, n); C(60, 30) < 2^64.
constexpr std::size_t kMaxMachineCountLength = 60;

template <class Seq, class Monomial, class Make>
LinearCombination<Monomial> shuffle_monomials(const Seq& a, const Seq& b, Make make) {
    LinearCombination<Monomial> out;
    auto emit = [&](const auto& table) {
        for (const auto& [rev, c] : table) out.add_term(make(Seq(rev.rbegin(), rev.rend())), to_rational(c));
    };
    if (a.size() + b.size() <= kMaxMachineCountLength) {
        emit(shuffle_suffix_table<Seq, std::uint64_t>(a, b));
    } else {
        emit(shuffle_suffix_table<Seq, BigInt>(a, b));
    }
    return out;
}

template <class Monomial, class Kernel>
LinearCombination<Monomial> bilinear(const LinearCombination<Monomial>& u, const LinearCombination<Monomial>& v,
                                     Kernel kernel) {
    LinearCombination<Monomial> out;
    for (const auto& [mu, cu] : u) {
        for (const auto& [mv, cv] : v) {
            BigRational c = cu * cv;
            for (const auto& [w, k] : kernel(mu, mv)) out.add_term(w, c * k);
        }
    }
    return out;
}

}  // namespace

WordPoly shuffle_xy(const Word& u, const Word& v) {
    return shuffle_monomials<std::string, Word>(u.str(), v.str(), [](const std::string& s) { return Word::parse(s); });
}

WordPoly shuffle_xy(const WordPoly& u, const WordPoly& v) {
    return bilinear(u, v, [](const Word& a, const Word& b) { return shuffle_xy(a, b); });
}

ZPoly shuffle_z(const Composition& u, const Composition& v) {
    return shuffle_monomials<std::vector<int>, Composition>(u.parts(), v.parts(),
                                                             [](std::vector<int> s) { return Composition(std::move(s)); });
}

ZPoly shuffle_z(const ZPoly& u, const ZPoly& v) {
    return bilinear(u, v, [](const Composition& a, const Composition& b) { return shuffle_z(a, b); });
}

}  // namespace mzv
