#include <gtest/gtest.h>

#include <cmath>

#include "fga/growth.hpp"
#include "fga/io.hpp"

using namespace fga;

namespace {

const long double kMu = (3 + std::sqrt(5.0L)) / 2;
const long double kNu = (1 + std::sqrt(5.0L)) / 2;

Automorphism from_text(const std::string& text) { return parse_automorphism(text).automorphism; }

Word word(const Automorphism& a, const std::string& s) { return Alphabet::standard(a.rank()).parse_word(s); }

const char* kTau = "rank 2\na -> a b a\nb -> b a\n";

// Oracle: integer matrix powers of the transition matrix, summed.
std::vector<BigInt> matrix_oracle(const TransitionMatrix& m, std::vector<BigInt> v, std::size_t steps) {
  std::vector<BigInt> out;
  for (std::size_t p = 0; p < steps; ++p) {
    std::vector<BigInt> next(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) next[i] += m[i][j] * v[j];
    }
    v = next;
    BigInt total = 0;
    for (const BigInt& x : v) total += x;
    out.push_back(total);
  }
  return out;
}

}  // namespace

TEST(TransitionMatrix, CountsLetters) {
  const auto m = transition_matrix(from_text(kTau));
  EXPECT_EQ(m, (TransitionMatrix{{2, 1}, {1, 1}}));
}

TEST(Lengths, TauOnA) {
  const Automorphism t = from_text(kTau);
  const auto seq = iterate_lengths(t, word(t, "a"), false, 6, 1000);
  EXPECT_EQ(seq.values, (std::vector<BigInt>{3, 8, 21, 55, 144, 377}));
  const auto capped = iterate_lengths(t, word(t, "a"), false, 10, 100);
  EXPECT_TRUE(capped.truncated);
  EXPECT_EQ(capped.values.size(), 4u);
}

TEST(Lengths, ClassLengthsCyclicallyReduce) {
  const Automorphism i = inner(Alphabet::standard(2).parse_word("a"));
  const auto seq = iterate_lengths(i, word(i, "b"), true, 5, 1000);
  EXPECT_EQ(seq.values, (std::vector<BigInt>{1, 1, 1, 1, 1}));
  const auto elem = iterate_lengths(i, word(i, "b"), false, 3, 1000);
  EXPECT_EQ(elem.values, (std::vector<BigInt>{3, 5, 7}));
}

TEST(Certificate, ExactMatchesDirectAndMatrixOracle) {
  const Automorphism t = from_text(kTau);
  const Word s = word(t, "a b b");
  const auto cert = certify_no_cancellation(t, s, true);
  ASSERT_TRUE(cert.valid);
  const auto exact = exact_lengths(t, s, cert, 10);
  const auto direct = iterate_lengths(t, s, true, 10, 10'000'000);
  EXPECT_EQ(exact.values, direct.values);
  EXPECT_EQ(exact.values, matrix_oracle(transition_matrix(t), {1, 2}, 10));
}

TEST(Certificate, DetectsCancellation) {
  const Automorphism a = from_text("rank 2\na -> a b\nb -> B a b\n");
  EXPECT_FALSE(certify_no_cancellation(a, word(a, "a b"), true).valid);
  EXPECT_TRUE(certify_no_cancellation(from_text(kTau), word(a, "a b"), true).valid);
}

TEST(Pf, TauEigenpair) {
  const PfResult r = pf_eigenvalue(transition_matrix(from_text(kTau)));
  EXPECT_NEAR(static_cast<double>(r.lambda), static_cast<double>(kMu), 1e-12);
  EXPECT_LT(r.residual, 1e-10L);
  EXPECT_LE(r.error_bound, 1e-10L);
}

TEST(Pf, ReducibleTakesLargestComponent) {
  const TransitionMatrix m{{1, 1, 0}, {1, 0, 0}, {5, 0, 3}};
  const PfResult r = pf_eigenvalue(m);
  EXPECT_NEAR(static_cast<double>(r.lambda), 3.0, 1e-10);
  EXPECT_THROW(pf_eigenvalue(TransitionMatrix{{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST(Classify, TauIsExact) {
  const Automorphism t = from_text(kTau);
  const GrowthResult r = growth_of_class(t, word(t, "a"));
  EXPECT_TRUE(r.certified);
  EXPECT_EQ(r.type.provenance, Provenance::exact);
  EXPECT_NEAR(static_cast<double>(r.type.lambda), static_cast<double>(kMu), 1e-12);
  EXPECT_EQ(r.type.m, 0);
  ASSERT_TRUE(r.type.lambda_exact);
  EXPECT_EQ(r.type.lambda_exact->poly, IntPoly::from_leading({1, -3, 1}));
}

TEST(Classify, IdentityIsConstant) {
  const Automorphism id = Automorphism::identity(3);
  const GrowthType g = growth_of_class(id, word(id, "a b")).type;
  EXPECT_FALSE(g.exponential());
  EXPECT_EQ(g.m, 0);
}

TEST(Classify, LinearGrowthUnderTwist) {
  // a -> a, b -> b a, c -> c b: c grows quadratically.
  const Automorphism a = from_text("rank 3\na -> a\nb -> b a\nc -> c b\n");
  EXPECT_EQ(growth_of_class(a, word(a, "b")).type.m, 1);
  EXPECT_EQ(growth_of_class(a, word(a, "c")).type.m, 2);
}

TEST(Classify, ElementGrowthUnderInner) {
  const Automorphism i = inner(Alphabet::standard(2).parse_word("a"));
  const GrowthType cls = growth_of_class(i, word(i, "b")).type;
  const GrowthType elem = growth_of_element(i, word(i, "b")).type;
  EXPECT_EQ(cls.m, 0);
  EXPECT_FALSE(elem.exponential());
  EXPECT_EQ(elem.m, 1);
}

TEST(Classify, ClassVersusElementWhenCancellationOccurs) {
  // a -> b a B, b -> b b a B: cancellation defeats the certificate; the class
  // of b grows linearly and the element b quadratically.
  const Automorphism a = from_text("rank 2\na -> b a B\nb -> b b a B\n");
  const GrowthResult cls = growth_of_class(a, word(a, "b"));
  EXPECT_FALSE(cls.certified);
  EXPECT_FALSE(cls.type.exponential());
  EXPECT_EQ(cls.type.m, 1);
  EXPECT_EQ(growth_of_element(a, word(a, "b")).type.m, 2);
}

TEST(Classify, NestedLaminationsInRankFour) {
  // Letters a b c d stand for a b a' b'.
  struct Case {
    const char* text;
    long double lambda;
    int m;
  };
  const Case cases[] = {
      {"rank 4\na -> a b a c\nb -> b a\nc -> c d\nd -> c\n", kMu, 0},
      {"rank 4\na -> a b c\nb -> a\nc -> c d c\nd -> c d\n", kMu, 0},
      {"rank 4\na -> a b c\nb -> a\nc -> c d\nd -> c\n", kNu, 1},
  };
  for (const Case& c : cases) {
    const Automorphism a = from_text(c.text);
    const GrowthType g = growth_of_class(a, word(a, "a")).type;
    EXPECT_NEAR(static_cast<double>(g.lambda), static_cast<double>(c.lambda), 1e-9) << c.text;
    EXPECT_EQ(g.m, c.m) << c.text;
  }
}

TEST(Classify, FittedFallbackOnSequences) {
  LengthSequence s;
  s.initial = 1;
  for (int p = 1; p <= 30; ++p) {
    // Quadratic growth with a bounded wobble that blocks exact detection.
    s.values.push_back(BigInt(p * p + static_cast<int>(std::sqrt(static_cast<double>(p)))));
  }
  const GrowthType g = classify_growth(s);
  EXPECT_EQ(g.provenance, Provenance::fitted);
  EXPECT_FALSE(g.exponential());
  EXPECT_EQ(g.m, 2);
  EXPECT_TRUE(g.conclusive);
  LengthSequence tiny;
  tiny.initial = 1;
  tiny.values = {2, 3};
  EXPECT_THROW(classify_growth(tiny), GrowthError);
}

TEST(Classify, SameRateTolerance) {
  GrowthType a, b;
  a.lambda = 2.0L;
  b.lambda = 2.0L * (1 + 1e-7L);
  EXPECT_TRUE(same_rate(a, b));
  b.lambda = 2.0L * (1 + 1e-5L);
  EXPECT_FALSE(same_rate(a, b));
  EXPECT_LT(compare_growth(a, b), 0);
}

TEST(Classify, ErrorsOnBadSubjects) {
  const Automorphism t = from_text(kTau);
  EXPECT_THROW(growth_of_class(t, Word(2)), GrowthError);
  EXPECT_THROW(growth_of_class(t, Word::generator(0, 3)), RankError);
}

TEST(MeasurementLog, RecordsEveryClassification) {
  MeasurementLog::clear();
  const Automorphism t = from_text(kTau);
  (void)growth_of_class(t, word(t, "a"));
  (void)growth_of_element(t, word(t, "b"));
  const auto log = MeasurementLog::snapshot();
  ASSERT_EQ(log.size(), 2u);
  EXPECT_EQ(log[0].first, 2u);
  EXPECT_EQ(log[1].first, 3u);
}
