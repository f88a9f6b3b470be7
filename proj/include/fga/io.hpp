#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fga/constructions.hpp"
#include "fga/growth.hpp"
#include "fga/invariants.hpp"
#include "fga/lamination.hpp"
#include "fga/sweep.hpp"

namespace fga {

/// Malformed input text; carries the 1-based line when known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0);
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Generator names of one free basis. Names start with a lowercase letter;
/// the inverse of `g` is written with the first letter uppercased, or as
/// `g^-1` when that spelling is taken by another name.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  /// a..z up to rank 26, x0, x1, ... beyond.
  static Alphabet standard(std::size_t rank);

  [[nodiscard]] std::size_t rank() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] bool is_standard() const;

  [[nodiscard]] Letter parse_letter(const std::string& token) const;
  /// Whitespace-separated letters; "1" or an empty string is the identity.
  /// With single-character names a token may also run letters together.
  [[nodiscard]] Word parse_word(const std::string& text) const;

  [[nodiscard]] std::string letter(Letter l) const;
  /// Space-separated; the identity prints as "1".
  [[nodiscard]] std::string word(const Word& w) const;

 private:
  [[nodiscard]] std::string inverse_spelling(std::size_t i) const;
  std::vector<std::string> names_;
};

/// Contents of an automorphism file.
struct AutomorphismFile {
  Automorphism automorphism;
  Alphabet alphabet;
  bool explicit_names = false;  ///< print a names line
};

/// Line format:
///   rank <n>
///   names <g1> ... <gn>     (optional)
///   <gi> -> <word>          (one per generator, any order)
///   inv <gi> -> <word>      (optional; all or none)
/// '#' starts a comment.
AutomorphismFile parse_automorphism(const std::string& text);
/// Canonical text; parse_automorphism(print_automorphism(f)) == f and
/// printing again reproduces the same bytes.
std::string print_automorphism(const AutomorphismFile& file);
AutomorphismFile read_automorphism_file(const std::string& path);

/// Lines `node <label> lambda <decimal | [c_d, ..., c_0]>` and
/// `edge <sub> < <super>`; a bracketed value is a polynomial, leading
/// coefficient first, whose largest root is the expansion factor.
LaminationPoset parse_poset(const std::string& text);
std::string print_poset(const LaminationPoset& poset);
LaminationPoset read_poset_file(const std::string& path);

using Json = nlohmann::ordered_json;

Json rate_json(long double approx, const std::optional<AlgebraicReal>& exact);
Json growth_type_json(const GrowthType& g);
/// {subject, lengths, lambda, m, provenance, confidence, ...}; lengths are
/// decimal strings for L_1..L_P.
Json growth_json(const GrowthResult& r, const Alphabet& alphabet);
/// Two-column table p, L_p from p = 0.
std::string growth_tsv(const LengthSequence& seq);

Json checks_json(const std::vector<Check>& checks);
std::string checks_tsv(const std::vector<Check>& checks);

Json expected_json(const ExpectedInvariants& e);
Json poset_json(const LaminationPoset& poset);
/// Sidecar written next to a constructed automorphism file.
Json construction_json(const ConstructedAutomorphism& c);
/// Reads the declared invariants back from a sidecar.
ExpectedInvariants expected_from_json(const Json& sidecar);
/// Witness words from a sidecar, parsed in the given alphabet.
std::vector<Word> witnesses_from_json(const Json& sidecar, const Alphabet& alphabet);

/// Names of a constructed automorphism as an alphabet.
Alphabet alphabet_of(const ConstructedAutomorphism& c);
AutomorphismFile file_of(const ConstructedAutomorphism& c);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace fga
