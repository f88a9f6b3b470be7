#include <gtest/gtest.h>

#include <sstream>

#include "fga/constructions.hpp"
#include "fga/io.hpp"

using namespace fga;

namespace {

std::vector<ConstructedAutomorphism> every_family() {
  std::vector<ConstructedAutomorphism> out = {make_identity(3), make_tau(), make_sigma(3), make_alpha_poly(5),
                                              make_beta(2, false), make_beta(2, true), make_nested(3),
                                              make_theta(5), make_theta(6), make_theta_varied(5),
                                              free_product(make_tau(), make_alpha_poly(3)),
                                              construct_optimal(7, 2, 2), construct_optimal(6, 3, 0)};
  return out;
}

std::size_t error_line(const std::string& text) {
  try {
    (void)parse_automorphism(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Alphabet, StandardNames) {
  const Alphabet a = Alphabet::standard(3);
  EXPECT_EQ(a.names(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(a.is_standard());
  EXPECT_EQ(Alphabet::standard(28).names()[26], "x26");
  EXPECT_FALSE(Alphabet({"a", "c"}).is_standard());
  EXPECT_THROW(Alphabet({"A"}), ParseError);
  EXPECT_THROW(Alphabet({"a", "a"}), ParseError);
}

TEST(Alphabet, InverseSpellings) {
  const Alphabet a = Alphabet::standard(2);
  EXPECT_EQ(a.parse_word("a B"), a.parse_word("a b^-1"));
  EXPECT_EQ(a.parse_word("aB"), a.parse_word("a B"));
  EXPECT_EQ(a.parse_word("1"), Word(2));
  EXPECT_EQ(a.word(Word(2)), "1");
  EXPECT_EQ(a.word(a.parse_word("a B b A b")), "b");
  EXPECT_THROW((void)a.parse_word("c"), ParseError);

  const Alphabet multi({"x1", "x2"});
  EXPECT_EQ(multi.word(multi.parse_word("x1 X2")), "x1 X2");
  EXPECT_EQ(multi.parse_word("X2"), multi.parse_word("x2^-1"));
  EXPECT_THROW((void)multi.parse_word("x1x2"), ParseError);
}

TEST(AutomorphismText, CommentsNamesAndInverseLines) {
  const std::string text =
      "# the standard example\n"
      "rank 2\n"
      "names u v   # custom names\n"
      "v -> v u\n"
      "u -> u v u\n"
      "inv u -> u V\n"
      "inv v -> v v U\n";
  const AutomorphismFile f = parse_automorphism(text);
  EXPECT_TRUE(f.explicit_names);
  EXPECT_EQ(f.alphabet.names(), (std::vector<std::string>{"u", "v"}));
  EXPECT_EQ(f.automorphism, make_tau().automorphism);
  EXPECT_TRUE(f.automorphism.has_inverse());
  EXPECT_EQ(print_automorphism(parse_automorphism(print_automorphism(f))), print_automorphism(f));
}

TEST(AutomorphismText, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("rank 2\na -> a b\nb -> c\n"), 3u);
  EXPECT_EQ(error_line("rank x\n"), 1u);
  EXPECT_EQ(error_line("rank 2\na -> b\na -> a\nb -> a\n"), 3u);
  EXPECT_EQ(error_line("rank 2\n\n# nothing\na => b\n"), 4u);
  EXPECT_THROW(parse_automorphism("rank 2\na -> a b\n"), ParseError);
  EXPECT_THROW(parse_automorphism("a -> a\n"), ParseError);
  // a -> a a is not invertible on abelianization.
  EXPECT_ANY_THROW(parse_automorphism("rank 1\na -> a a\n"));
}

TEST(AutomorphismText, EveryFamilyRoundTrips) {
  for (const ConstructedAutomorphism& c : every_family()) {
    const AutomorphismFile f = file_of(c);
    const std::string once = print_automorphism(f);
    const AutomorphismFile back = parse_automorphism(once);
    EXPECT_EQ(back.automorphism, c.automorphism) << c.family;
    EXPECT_EQ(back.alphabet.names(), c.names) << c.family;
    EXPECT_EQ(print_automorphism(back), once) << c.family;
    EXPECT_EQ(back.automorphism.has_inverse(), c.automorphism.has_inverse()) << c.family;
  }
}

TEST(PosetText, RoundTrip) {
  const std::string text =
      "node top lambda [1, -3, 1]\n"
      "node mid lambda 2.5\n"
      "node low lambda [1, -1, -1]\n"
      "edge low < mid\n"
      "edge mid < top\n";
  const LaminationPoset p = parse_poset(text);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p.label(1), "mid");
  EXPECT_NEAR(static_cast<double>(p.lambda0(0).approx), 2.6180339887498949, 1e-15);
  EXPECT_NEAR(static_cast<double>(p.lambda0(1).approx), 2.5, 1e-18);
  EXPECT_FALSE(p.lambda0(1).exact.has_value());
  const std::string once = print_poset(p);
  const LaminationPoset back = parse_poset(once);
  EXPECT_EQ(print_poset(back), once);
  EXPECT_EQ(back.edges(), p.edges());
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(back.lambda0(i).approx, p.lambda0(i).approx);
  EXPECT_THROW(parse_poset("node x lambda 0.5\n"), std::exception);
  EXPECT_THROW(parse_poset("node x lambda 2\nedge x < y\n"), ParseError);
}

TEST(Json, GrowthReportUsesStringLengths) {
  const auto c = make_tau();
  const GrowthResult r = growth_of_class(c.automorphism, alphabet_of(c).parse_word("a"));
  const Json j = growth_json(r, alphabet_of(c));
  EXPECT_EQ(j["subject"], "a");
  ASSERT_TRUE(j["lengths"].is_array());
  EXPECT_EQ(j["lengths"][0], "3");
  EXPECT_EQ(j["lengths"][1], "8");
  EXPECT_EQ(j["provenance"], "exact");
  EXPECT_EQ(j["m"], 0);
  EXPECT_EQ(j["lambda"]["minpoly"], Json::parse(R"(["1", "-3", "1"])"));

  std::istringstream tsv(growth_tsv(r.sequence));
  std::string line;
  std::getline(tsv, line);
  EXPECT_EQ(line, "p\tlength");
  std::getline(tsv, line);
  EXPECT_EQ(line, "0\t1");
  std::getline(tsv, line);
  EXPECT_EQ(line, "1\t3");
}

TEST(Json, ChecksAndSidecar) {
  const auto checks = check_ed(4, 3, 1);
  const Json j = checks_json(checks);
  ASSERT_EQ(j.size(), checks.size());
  EXPECT_EQ(j[0]["pass"], false);
  EXPECT_NE(checks_tsv(checks).find("FAIL"), std::string::npos);

  const auto c = make_theta_varied(5);
  const Json sidecar = construction_json(c);
  EXPECT_EQ(sidecar["family"], c.family);
  EXPECT_EQ(sidecar["rank"], 5);
  const ExpectedInvariants e = expected_from_json(sidecar);
  EXPECT_EQ(e.e_prime, c.expected.e_prime);
  EXPECT_EQ(e.d, c.expected.d);
  EXPECT_EQ(e.fix_rank, c.expected.fix_rank);
  const auto words = witnesses_from_json(Json::parse(sidecar.dump()), alphabet_of(c));
  ASSERT_EQ(words.size(), c.witnesses.size());
  for (std::size_t i = 0; i < words.size(); ++i) EXPECT_EQ(words[i], c.witnesses[i].word);
  EXPECT_EQ(construction_json(c).dump(), sidecar.dump());
}
