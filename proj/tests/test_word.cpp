#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fga/enumerate.hpp"
#include "fga/word.hpp"

using namespace fga;

namespace {

Word W(std::initializer_list<int> codes, std::size_t rank) {
  std::vector<Letter> raw;
  for (int c : codes) raw.push_back(Letter::from_code(c));
  return Word::reduce(raw, rank);
}

std::vector<Letter> random_letters(std::mt19937& rng, std::size_t rank, std::size_t len) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(Letter(static_cast<std::uint32_t>(rng() % rank), rng() % 2 == 1));
  }
  return out;
}

// Oracle: repeatedly cancel adjacent pairs, then strip matching ends, then
// take the least rotation by comparing all of them.
std::vector<Letter> oracle_cyclic(std::vector<Letter> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].cancels(w[i + 1])) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
    if (!changed && w.size() >= 2 && w.front().cancels(w.back())) {
      w.erase(w.begin());
      w.pop_back();
      changed = true;
    }
  }
  std::vector<Letter> best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::vector<Letter> rot(w.begin() + static_cast<long>(r), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
    if (std::lexicographical_compare(rot.begin(), rot.end(), best.begin(), best.end())) best = rot;
  }
  return best;
}

}  // namespace

TEST(Letter, OrderPutsGeneratorBeforeItsInverse) {
  const Letter a(0, false), A(0, true), b(1, false);
  EXPECT_LT(a, A);
  EXPECT_LT(A, b);
  EXPECT_EQ(a.inverse(), A);
  EXPECT_TRUE(a.cancels(A));
  EXPECT_EQ(Letter::from_key(A.key()), A);
}

TEST(Word, ReduceCancelsAdjacentPairs) {
  EXPECT_EQ(W({1, 2, -2, -1}, 2).length(), 0u);
  EXPECT_EQ(W({1, 2, -2, 2}, 2), W({1, 2}, 2));
  EXPECT_THROW(W({3}, 2), RankError);
}

TEST(Word, ProductAndInverse) {
  const Word x = W({1, 2, -1}, 2);
  EXPECT_TRUE((x * x.inverse()).empty());
  EXPECT_EQ(x * W({1, 1}, 2), W({1, 2, 1}, 2));
  EXPECT_THROW(x * W({1}, 3), RankError);
}

TEST(Word, CommutatorOfGenerators) {
  EXPECT_EQ(commutator(Word::generator(0, 2), Word::generator(1, 2)), W({1, 2, -1, -2}, 2));
}

TEST(CyclicWord, StripsConjugation) {
  EXPECT_EQ(CyclicWord(W({1, 2, -1}, 2)).word(), W({2}, 2));
  EXPECT_EQ(CyclicWord(W({1, 2}, 2)).word(), W({1, 2}, 2));
  EXPECT_EQ(W({1, 2, -1}, 2).cyclic_length(), 1u);
}

TEST(CyclicWord, MatchesStripAndRotateOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t rank = 1 + rng() % 3;
    const auto raw = random_letters(rng, rank, rng() % 12);
    const CyclicWord c(Word::reduce(raw, rank));
    const auto expect = oracle_cyclic(raw);
    ASSERT_EQ(std::vector<Letter>(c.letters().begin(), c.letters().end()), expect);
  }
}

TEST(CyclicWord, LengthIsConjugacyInvariant) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = Word::reduce(random_letters(rng, 3, 1 + rng() % 10), 3);
    const Word g = Word::reduce(random_letters(rng, 3, rng() % 8), 3);
    const Word conj = g * w * g.inverse();
    EXPECT_EQ(conj.cyclic_length(), w.cyclic_length());
    EXPECT_EQ(CyclicWord(conj), CyclicWord(w));
  }
}

TEST(CyclicWord, ShortlexOrder) {
  EXPECT_LT(CyclicWord(W({2}, 2)), CyclicWord(W({1, 1}, 2)));
  EXPECT_LT(CyclicWord(W({1, 2}, 2)), CyclicWord(W({1, -2}, 2)));
}

TEST(LeastRotation, AgreesWithBruteForce) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto w = random_letters(rng, 2, 1 + rng() % 9);
    const std::size_t k = least_rotation(w);
    for (std::size_t r = 0; r < w.size(); ++r) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        const Letter x = w[(k + i) % w.size()], y = w[(r + i) % w.size()];
        if (x != y) {
          ASSERT_LT(x, y);
          break;
        }
      }
    }
  }
}

TEST(Enumerate, ReducedWordCounts) {
  // 2n (2n-1)^(L-1) words of length L; rank 2: 4, 12, 36.
  EXPECT_EQ(reduced_words(2, 1).size(), 4u);
  EXPECT_EQ(reduced_words(2, 2).size(), 12u);
  EXPECT_EQ(reduced_words(2, 3).size(), 36u);
  EXPECT_EQ(reduced_word_count(2, 3), 1u + 4u + 12u + 36u);
}

TEST(Enumerate, ClassesAreCanonicalDistinctAndOrdered) {
  const auto classes = enumerate_classes(2, 4);
  std::vector<CyclicWord> seen;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const CyclicWord c(classes[i]);
    EXPECT_EQ(c.word(), classes[i]);
    if (i > 0) {
      EXPECT_LT(CyclicWord(classes[i - 1]), c);
    }
    for (const CyclicWord& s : seen) {
      EXPECT_NE(s, c);
      EXPECT_NE(s, c.inverse());
    }
    seen.push_back(c);
  }
  // Oracle: canonical forms of every reduced word, merged with inverses.
  std::vector<CyclicWord> all;
  for (std::size_t len = 1; len <= 4; ++len) {
    for (const Word& w : reduced_words(2, len)) {
      const CyclicWord c(w);
      if (c.length() != len) continue;
      const CyclicWord key = std::min(c, c.inverse());
      if (std::find(all.begin(), all.end(), key) == all.end()) all.push_back(key);
    }
  }
  EXPECT_EQ(all.size(), classes.size());
}
