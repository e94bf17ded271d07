#pragma once

// Independent reference implementations used only by tests. Nothing here
// calls into the shuffle kernel or the MZV evaluators.

#include "mzv/big_rational.hpp"
#include "mzv/word.hpp"

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

/// Shuffle of two sequences by enumerating every choice of the positions
/// taken by `a` among |a|+|b| slots (all C(|a|+|b|, |a|) interleavings).
template <class T>
std::map<std::vector<T>, long> brute_force_shuffle(const std::vector<T>& a, const std::vector<T>& b) {
    const std::size_t n = a.size() + b.size();
    std::map<std::vector<T>, long> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != a.size()) continue;
        std::vector<T> w;
        std::size_t ia = 0;
        std::size_t ib = 0;
        for (std::size_t pos = 0; pos < n; ++pos) {
            if (mask >> pos & 1u) {
                w.push_back(a[ia++]);
            } else {
                w.push_back(b[ib++]);
            }
        }
        ++out[w];
    }
    return out;
}

inline std::vector<char> letters(const std::string& s) { return {s.begin(), s.end()}; }

/// Pascal's triangle row-by-row.
inline std::vector<std::vector<mpz_class>> pascal(int rows) {
    std::vector<std::vector<mpz_class>> t(static_cast<std::size_t>(rows) + 1);
    for (int r = 0; r <= rows; ++r) {
        t[r].assign(static_cast<std::size_t>(r) + 1, 1);
        for (int k = 1; k < r; ++k) t[r][k] = t[r - 1][k - 1] + t[r - 1][k];
    }
    return t;
}

/// All (j_0, ..., j_{parts-1}) with j_i >= 0 summing to total.
inline void weak_compositions(int total, int parts, std::vector<int>& prefix,
                              const std::function<void(const std::vector<int>&)>& visit) {
    if (parts == 1) {
        prefix.push_back(total);
        visit(prefix);
        prefix.pop_back();
        return;
    }
    for (int j = 0; j <= total; ++j) {
        prefix.push_back(j);
        weak_compositions(total - j, parts - 1, prefix, visit);
        prefix.pop_back();
    }
}

/// ({2}_{j0}, 3, {2}_{j1}, 1, {2}_{j2}, ..., 3, {2}_{j_{2n-1}}, 1, {2}_{j_{2n}})
inline mzv::Composition thm1_index_composition(const std::vector<int>& j) {
    std::vector<int> parts;
    for (std::size_t i = 0; i < j.size(); ++i) {
        for (int r = 0; r < j[i]; ++r) parts.push_back(2);
        if (i + 1 < j.size()) parts.push_back(i % 2 == 0 ? 3 : 1);
    }
    return mzv::Composition(parts);
}

/// Random composition with parts in [1, max_part] and depth in [0, max_depth].
inline mzv::Composition random_composition(std::mt19937_64& rng, int max_depth, int max_part) {
    std::uniform_int_distribution<int> depth(0, max_depth);
    std::uniform_int_distribution<int> part(1, max_part);
    std::vector<int> parts(static_cast<std::size_t>(depth(rng)));
    for (int& p : parts) p = part(rng);
    return mzv::Composition(parts);
}

inline mzv::Word random_word(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    mzv::Word w;
    for (int i = len(rng); i > 0; --i) w.push_back(bit(rng) ? mzv::Letter::y : mzv::Letter::x);
    return w;
}

/// Every composition of `weight` (all 2^(weight-1) of them), weight >= 1.
inline std::vector<mzv::Composition> compositions_of(int weight) {
    std::vector<mzv::Composition> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (weight - 1)); ++mask) {
        std::vector<int> parts{1};
        for (int gap = 0; gap < weight - 1; ++gap) {
            if (mask >> gap & 1u) {
                parts.push_back(1);
            } else {
                ++parts.back();
            }
        }
        out.emplace_back(parts);
    }
    return out;
}

/// Decimal string of an MPFR constant computed directly by the library.
struct MpfrValue {
    explicit MpfrValue(mpfr_prec_t bits) { mpfr_init2(v, bits); }
    ~MpfrValue() { mpfr_clear(v); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
    mpfr_t v;
};

}  // namespace oracle
