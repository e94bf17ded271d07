#include "mzv/errors.hpp"
#include "mzv/shuffle.hpp"
#include "mzv/text_format.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using mzv::BigRational;
using mzv::Composition;
using mzv::Word;
using mzv::WordPoly;
using mzv::ZPoly;

namespace {

WordPoly from_oracle(const std::map<std::vector<char>, long>& table) {
    WordPoly p;
    for (const auto& [w, c] : table) p.add_term(Word::parse(std::string(w.begin(), w.end())), BigRational(c));
    return p;
}

ZPoly from_oracle(const std::map<std::vector<int>, long>& table) {
    ZPoly p;
    for (const auto& [w, c] : table) p.add_term(Composition(w), BigRational(c));
    return p;
}

WordPoly brute_xy(const Word& a, const Word& b) {
    return from_oracle(oracle::brute_force_shuffle(oracle::letters(a.str()), oracle::letters(b.str())));
}

bool no_zero_coefficients(const WordPoly& p) {
    for (const auto& [w, c] : p) {
        if (c.is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST(ShuffleXY, UnitIsNeutral) {
    Word w = Word::parse("xxyxy");
    EXPECT_EQ(mzv::shuffle_xy(Word(), w), WordPoly(w));
    EXPECT_EQ(mzv::shuffle_xy(w, Word()), WordPoly(w));
    EXPECT_EQ(mzv::shuffle_xy(Word(), Word()), WordPoly(Word()));
}

TEST(ShuffleXY, SingleLetters) {
    EXPECT_EQ(mzv::to_string(mzv::shuffle_xy(Word::parse("x"), Word::parse("y"))), "yx + xy");
    EXPECT_EQ(mzv::shuffle_xy(Word::parse("x"), Word::parse("y")), mzv::parse_wordpoly("xy + yx"));
}

TEST(ShuffleXY, XyShuffleXyAgainstEnumeration) {
    const Word xy = Word::parse("xy");
    const WordPoly expected = brute_xy(xy, xy);
    ASSERT_EQ(expected, mzv::parse_wordpoly("2*xyxy + 4*xxyy"));  // frozen from the enumeration
    EXPECT_EQ(mzv::shuffle_xy(xy, xy), expected);
    EXPECT_EQ(mzv::to_string(mzv::shuffle_xy(xy, xy)), "2*xyxy + 4*xxyy");
}

TEST(ShuffleXY, MatchesEnumerationOnRandomPairs) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 150; ++i) {
        Word a = oracle::random_word(rng, 7);
        Word b = oracle::random_word(rng, 7);
        ASSERT_EQ(mzv::shuffle_xy(a, b), brute_xy(a, b)) << a << " " << b;
    }
}

TEST(ShuffleXY, BilinearExtension) {
    WordPoly u = mzv::parse_wordpoly("2*x - 1/2*yy");
    WordPoly v = mzv::parse_wordpoly("xy + 3");
    WordPoly expected;
    for (const auto& [a, ca] : u) {
        for (const auto& [b, cb] : v) expected += (ca * cb) * brute_xy(a, b);
    }
    EXPECT_EQ(mzv::shuffle_xy(u, v), expected);
    EXPECT_TRUE(mzv::shuffle_xy(u, WordPoly()).is_zero());
}

TEST(ShuffleZ, PaperExamples) {
    // z_m sh~ z_n = z_m z_n + z_n z_m, with m != n and m == n.
    EXPECT_EQ(mzv::shuffle_z(Composition{4}, Composition{7}), mzv::parse_zpoly("4,7 + 7,4"));
    EXPECT_EQ(mzv::shuffle_z(Composition{2}, Composition{2}), mzv::parse_zpoly("2*2,2"));
    // z_m sh~ z_n z_l = z_m z_n z_l + z_n z_m z_l + z_n z_l z_m
    EXPECT_EQ(mzv::shuffle_z(Composition{5}, Composition{3, 1}), mzv::parse_zpoly("5,3,1 + 3,5,1 + 3,1,5"));
    EXPECT_EQ(mzv::shuffle_z(Composition{}, Composition{3, 1}), ZPoly(Composition{3, 1}));
    EXPECT_EQ(mzv::shuffle_z(Composition{3, 1}, Composition{}), ZPoly(Composition{3, 1}));
}

TEST(ShuffleZ, LettersAreAtomic) {
    // z_2 sh~ z_2 keeps the two z_2 whole; the {x,y} shuffle of xy with xy
    // does not.
    ZPoly z = mzv::shuffle_z(Composition{2}, Composition{2});
    EXPECT_EQ(mzv::encode_zpoly(z), mzv::parse_wordpoly("2*xyxy"));
    EXPECT_NE(mzv::encode_zpoly(z), mzv::shuffle_xy(Word::parse("xy"), Word::parse("xy")));
}

TEST(ShuffleZ, MatchesEnumerationOnRandomPairs) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 150; ++i) {
        Composition a = oracle::random_composition(rng, 6, 4);
        Composition b = oracle::random_composition(rng, 6, 4);
        ASSERT_EQ(mzv::shuffle_z(a, b), from_oracle(oracle::brute_force_shuffle(a.parts(), b.parts())));
    }
}

TEST(ShuffleProperties, CommutativityXY) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Word u = oracle::random_word(rng, 8);
        Word v = oracle::random_word(rng, 8);
        ASSERT_EQ(mzv::shuffle_xy(u, v), mzv::shuffle_xy(v, u));
    }
}

TEST(ShuffleProperties, CommutativityZ) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        Composition u = oracle::random_composition(rng, 8, 4);
        Composition v = oracle::random_composition(rng, 8, 4);
        ASSERT_EQ(mzv::shuffle_z(u, v), mzv::shuffle_z(v, u));
    }
}

TEST(ShuffleProperties, AssociativityXY) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        WordPoly u(oracle::random_word(rng, 5));
        WordPoly v(oracle::random_word(rng, 5));
        WordPoly w(oracle::random_word(rng, 5));
        ASSERT_EQ(mzv::shuffle_xy(mzv::shuffle_xy(u, v), w), mzv::shuffle_xy(u, mzv::shuffle_xy(v, w)));
    }
}

TEST(ShuffleProperties, AssociativityZ) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 200; ++i) {
        ZPoly u(oracle::random_composition(rng, 5, 3));
        ZPoly v(oracle::random_composition(rng, 5, 3));
        ZPoly w(oracle::random_composition(rng, 5, 3));
        ASSERT_EQ(mzv::shuffle_z(mzv::shuffle_z(u, v), w), mzv::shuffle_z(u, mzv::shuffle_z(v, w)));
    }
}

TEST(ShuffleProperties, CoefficientMassAndHomogeneity) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        Word u = oracle::random_word(rng, 10);
        Word v = oracle::random_word(rng, 10);
        WordPoly p = mzv::shuffle_xy(u, v);
        ASSERT_EQ(mzv::coefficient_sum(p), BigRational(mzv::binomial(static_cast<long>(u.size() + v.size()),
                                                                        static_cast<long>(u.size()))));
        ASSERT_TRUE(no_zero_coefficients(p));
        for (const auto& [w, c] : p) {
            ASSERT_EQ(w.size(), u.size() + v.size());
            ASSERT_EQ(w.count(mzv::Letter::x), u.count(mzv::Letter::x) + v.count(mzv::Letter::x));
            ASSERT_GT(c.sign(), 0);
        }

        Composition a = oracle::random_composition(rng, 7, 4);
        Composition b = oracle::random_composition(rng, 7, 4);
        ZPoly q = mzv::shuffle_z(a, b);
        ASSERT_EQ(mzv::coefficient_sum(q),
                  BigRational(mzv::binomial(static_cast<long>(a.depth() + b.depth()), static_cast<long>(a.depth()))));
        for (const auto& [c, coeff] : q) ASSERT_EQ(c.weight(), a.weight() + b.weight());
    }
}

TEST(ShuffleXY, LongWordsUseUnboundedCounts) {
    // 62 letters exceed the machine-word counting path.
    Word a = mzv::repeat(Word::parse("x"), 31);
    Word b = mzv::repeat(Word::parse("x"), 31);
    WordPoly p = mzv::shuffle_xy(a, b);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p.coefficient(a + b), BigRational(mzv::binomial(62, 31)));
}

TEST(PolyOps, ConcatAddScale) {
    WordPoly y = mzv::parse_wordpoly("y");
    EXPECT_EQ(mzv::concat(y, mzv::parse_wordpoly("xyxy")), mzv::parse_wordpoly("yxyxy"));
    EXPECT_TRUE(mzv::add(mzv::parse_wordpoly("2*xy"), mzv::parse_wordpoly("-2*xy")).is_zero());
    EXPECT_EQ(mzv::scale(4, mzv::parse_wordpoly("xxyy")), mzv::parse_wordpoly("4*xxyy"));
    EXPECT_TRUE(mzv::scale(0, mzv::parse_wordpoly("xxyy")).is_zero());
    EXPECT_EQ(mzv::concat(mzv::parse_zpoly("1 + 2"), mzv::parse_zpoly("3")), mzv::parse_zpoly("1,3 + 2,3"));
}

TEST(PolyOps, EncodeZPoly) {
    EXPECT_EQ(mzv::encode_zpoly(mzv::parse_zpoly("2*2 + 3*3,1")), mzv::parse_wordpoly("2*xy + 3*xxyy"));
    EXPECT_EQ(mzv::encode_zpoly(mzv::shuffle_z(Composition{2}, Composition{2})), mzv::parse_wordpoly("2*xyxy"));
    EXPECT_TRUE(mzv::encode_zpoly(ZPoly()).is_zero());
    EXPECT_EQ(mzv::decode_wordpoly(mzv::parse_wordpoly("2*xy + 3*xxyy")), mzv::parse_zpoly("2*2 + 3*3,1"));
}

TEST(TextFormat, Serialization) {
    EXPECT_EQ(mzv::to_string(WordPoly()), "0");
    EXPECT_EQ(mzv::to_string(mzv::parse_wordpoly("-xy + 1/2*yy - 3")), "-3 + 1/2*yy - xy");
    EXPECT_EQ(mzv::to_string(mzv::parse_wordpoly("")), "1");
    EXPECT_EQ(mzv::to_string(mzv::parse_zpoly("{2}^2 + 2*() - 3,1")), "2*() + 2,2 - 3,1");
    EXPECT_EQ(mzv::to_string(mzv::parse_zpoly("0")), "0");
    EXPECT_EQ(mzv::to_string(mzv::shuffle_z(Composition{2}, Composition{3, 1})), "2,3,1 + 3,1,2 + 3,2,1");
}

TEST(TextFormat, ParseSerializeRoundtrip) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int i = 0; i < 100; ++i) {
        WordPoly p;
        ZPoly q;
        for (int t = 0; t < 6; ++t) {
            p.add_term(oracle::random_word(rng, 5), BigRational(coeff(rng)) / BigRational(1 + t));
            q.add_term(oracle::random_composition(rng, 4, 6), BigRational(coeff(rng)));
        }
        ASSERT_EQ(mzv::parse_wordpoly(mzv::to_string(p)), p);
        ASSERT_EQ(mzv::parse_zpoly(mzv::to_string(q)), q);
    }
}

TEST(TextFormat, ParseErrors) {
    EXPECT_THROW(mzv::parse_wordpoly("2*xq"), mzv::ParseError);
    EXPECT_THROW(mzv::parse_wordpoly("xy +"), mzv::ParseError);
    EXPECT_THROW(mzv::parse_wordpoly("x +- y"), mzv::ParseError);
    EXPECT_THROW(mzv::parse_wordpoly("2**x"), mzv::ParseError);
    EXPECT_THROW(mzv::parse_zpoly("2,0"), mzv::ParseError);
    EXPECT_THROW(mzv::parse_zpoly("a*2"), mzv::ParseError);
}
