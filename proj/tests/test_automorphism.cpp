#include <gtest/gtest.h>

#include <random>

#include "fga/automorphism.hpp"
#include "fga/io.hpp"

using namespace fga;

namespace {

const Alphabet kAb = Alphabet::standard(2);

Word w2(const std::string& s) { return kAb.parse_word(s); }

Automorphism tau() { return Automorphism({w2("a b a"), w2("b a")}, {w2("a B"), w2("b b A")}); }

// Oracle: letter-by-letter substitution with an explicit stack.
Word substitute(const Automorphism& a, const Word& w) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    const Word img = l.is_inverse() ? a.image(l.index()).inverse() : a.image(l.index());
    for (Letter x : img.letters()) {
      if (!out.empty() && out.back().cancels(x)) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
  }
  return Word::reduce(out, w.rank());
}

long long permutation_det(const std::vector<std::vector<long long>>& m) {
  std::vector<std::size_t> p(m.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  long long total = 0;
  do {
    long long term = 1;
    for (std::size_t i = 0; i < p.size(); ++i) term *= m[i][p[i]];
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST(Automorphism, TauSquaredOnA) {
  const Automorphism t2 = compose(tau(), tau());
  EXPECT_EQ(t2.apply(w2("a")), w2("a b a b a a b a"));
  EXPECT_EQ(power(tau(), 2), t2);
}

TEST(Automorphism, ApplyMatchesSubstitution) {
  std::mt19937 rng(5);
  const Automorphism t = tau();
  const std::vector<std::string> letters = {"a", "A", "b", "B"};
  for (int trial = 0; trial < 300; ++trial) {
    std::string s;
    for (std::size_t i = 0; i < rng() % 10; ++i) s += letters[rng() % 4] + " ";
    const Word w = w2(s);
    EXPECT_EQ(t.apply(w), substitute(t, w));
  }
}

TEST(Automorphism, FixesCommutator) {
  const Word c = commutator(w2("a"), w2("b"));
  EXPECT_EQ(tau().apply(c), c);
}

TEST(Automorphism, InverseIsVerified) {
  const Automorphism t = tau();
  ASSERT_TRUE(t.has_inverse());
  EXPECT_EQ(compose(t, t.inverse()), Automorphism::identity(2));
  EXPECT_THROW(Automorphism({w2("a b a"), w2("b a")}, {w2("a"), w2("b")}), InvalidAutomorphism);
  EXPECT_THROW((void)Automorphism({w2("a"), w2("b")}).inverse(), std::logic_error);
}

TEST(Automorphism, RejectsNonUnimodularImages) {
  EXPECT_THROW(Automorphism({w2("a a"), w2("b")}), InvalidAutomorphism);
  EXPECT_THROW(Automorphism({w2("a"), w2("1")}), InvalidAutomorphism);
}

TEST(Automorphism, AbelianizationAndDeterminant) {
  const auto m = tau().abelianization();
  EXPECT_EQ(m, (std::vector<std::vector<long long>>{{2, 1}, {1, 1}}));
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
    for (auto& row : a) {
      for (auto& x : row) x = static_cast<long long>(rng() % 11) - 5;
    }
    EXPECT_EQ(integer_determinant(a), BigInt(permutation_det(a)));
  }
}

TEST(Automorphism, InnerAndFreeProduct) {
  const Automorphism i = inner(w2("a"));
  EXPECT_EQ(i.apply(w2("b")), w2("a b A"));
  const Automorphism fp = free_product(tau(), Automorphism::identity(1));
  ASSERT_EQ(fp.rank(), 3u);
  const Alphabet abc = Alphabet::standard(3);
  EXPECT_EQ(fp.apply(abc.parse_word("a c")), abc.parse_word("a b a c"));
  EXPECT_TRUE(fp.has_inverse());
}

TEST(Automorphism, WithFixedGenerator) {
  const Automorphism e = tau().with_fixed_generator();
  ASSERT_EQ(e.rank(), 3u);
  EXPECT_EQ(e.image(2), Word::generator(2, 3));
  EXPECT_EQ(e.max_image_length(), 3u);
}
