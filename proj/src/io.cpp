#include "fga/io.hpp"

#include <cctype>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace fga {

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char ch : s) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  }
  return true;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string decimal(long double v) {
  std::ostringstream out;
  out << std::setprecision(21) << v;
  return out.str();
}

std::string upper_first(std::string s) {
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const std::string& n : names_) {
    if (!valid_name(n)) throw ParseError("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw ParseError("duplicate generator name '" + n + "'");
  }
}

Alphabet Alphabet::standard(std::size_t rank) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) {
    names.push_back(rank <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
  }
  return Alphabet(std::move(names));
}

bool Alphabet::is_standard() const { return names_ == standard(rank()).names_; }

std::string Alphabet::inverse_spelling(std::size_t i) const {
  // Names are lowercase-initial, so the uppercased form never collides.
  return upper_first(names_[i]);
}

Letter Alphabet::parse_letter(const std::string& token) const {
  std::string body = token;
  bool inverse = false;
  if (body.size() > 3 && body.compare(body.size() - 3, 3, "^-1") == 0) {
    body.resize(body.size() - 3);
    inverse = true;
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (body == names_[i]) return Letter(static_cast<std::uint32_t>(i), inverse);
    if (!inverse && body == inverse_spelling(i)) return Letter(static_cast<std::uint32_t>(i), true);
  }
  throw ParseError("unknown letter '" + token + "'");
}

Word Alphabet::parse_word(const std::string& text) const {
  std::vector<Letter> raw;
  bool single_chars = true;
  for (const std::string& n : names_) single_chars = single_chars && n.size() == 1;
  for (const std::string& t : tokens(text)) {
    if (t == "1") continue;
    try {
      raw.push_back(parse_letter(t));
    } catch (const ParseError&) {
      if (!single_chars || t.find('^') != std::string::npos) throw;
      for (char ch : t) raw.push_back(parse_letter(std::string(1, ch)));
    }
  }
  return Word::reduce(raw, rank());
}

std::string Alphabet::letter(Letter l) const {
  if (l.index() >= names_.size()) throw RankError("letter outside the alphabet");
  return l.is_inverse() ? inverse_spelling(l.index()) : names_[l.index()];
}

std::string Alphabet::word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += letter(l);
  }
  return out;
}

AutomorphismFile parse_automorphism(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> rank;
  std::optional<Alphabet> alphabet;
  bool explicit_names = false;
  std::map<std::size_t, std::pair<std::string, std::size_t>> images, inverses;

  auto ensure_alphabet = [&](std::size_t at) {
    if (!rank) throw ParseError("missing 'rank' header", at);
    if (!alphabet) alphabet = Alphabet::standard(*rank);
  };

  while (std::getline(in, line)) {
    ++lineno;
    const std::vector<std::string> tok = tokens(strip_comment(line));
    if (tok.empty()) continue;
    if (tok[0] == "rank") {
      if (rank) throw ParseError("repeated 'rank' header", lineno);
      if (tok.size() != 2) throw ParseError("expected 'rank <n>'", lineno);
      std::size_t used = 0;
      long long n = 0;
      try {
        n = std::stoll(tok[1], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok[1].size() || n < 1) throw ParseError("rank must be a positive integer", lineno);
      rank = static_cast<std::size_t>(n);
      continue;
    }
    if (tok[0] == "names") {
      if (!rank) throw ParseError("'names' before 'rank'", lineno);
      if (alphabet) throw ParseError("'names' must precede the generator lines", lineno);
      if (tok.size() != *rank + 1) throw ParseError("expected " + std::to_string(*rank) + " names", lineno);
      try {
        alphabet = Alphabet(std::vector<std::string>(tok.begin() + 1, tok.end()));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno);
      }
      explicit_names = true;
      continue;
    }
    ensure_alphabet(lineno);
    const bool inv = tok[0] == "inv";
    const std::size_t head = inv ? 1 : 0;
    if (tok.size() < head + 2 || tok[head + 1] != "->") {
      throw ParseError("expected '<generator> -> <word>'", lineno);
    }
    Letter g;
    try {
      g = alphabet->parse_letter(tok[head]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
    if (g.is_inverse()) throw ParseError("left side must be a generator", lineno);
    std::string rhs;
    for (std::size_t i = head + 2; i < tok.size(); ++i) rhs += tok[i] + ' ';
    auto& target = inv ? inverses : images;
    if (!target.emplace(g.index(), std::make_pair(rhs, lineno)).second) {
      throw ParseError("generator '" + tok[head] + "' given twice", lineno);
    }
  }
  ensure_alphabet(lineno);
  if (images.size() != *rank) throw ParseError("expected an image for each of the " + std::to_string(*rank) + " generators");
  if (!inverses.empty() && inverses.size() != *rank) throw ParseError("inverse images must be given for all generators or none");

  auto parse_all = [&](const auto& lines) {
    std::vector<Word> out;
    for (const auto& [index, entry] : lines) {
      try {
        out.push_back(alphabet->parse_word(entry.first));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), entry.second);
      }
    }
    return out;
  };
  AutomorphismFile f;
  f.alphabet = *alphabet;
  f.explicit_names = explicit_names;
  try {
    std::vector<Word> img = parse_all(images);
    if (inverses.empty()) {
      f.automorphism = Automorphism(std::move(img));
    } else {
      f.automorphism = Automorphism(std::move(img), parse_all(inverses));
    }
  } catch (const InvalidAutomorphism& e) {
    throw ParseError(e.what());
  }
  return f;
}

std::string print_automorphism(const AutomorphismFile& f) {
  const Alphabet& al = f.alphabet;
  if (al.rank() != f.automorphism.rank()) throw RankError("alphabet and automorphism ranks differ");
  std::ostringstream out;
  out << "rank " << al.rank() << '\n';
  if (f.explicit_names) {
    out << "names";
    for (const std::string& n : al.names()) out << ' ' << n;
    out << '\n';
  }
  for (std::size_t i = 0; i < al.rank(); ++i) {
    out << al.names()[i] << " -> " << al.word(f.automorphism.image(i)) << '\n';
  }
  if (const auto& inv = f.automorphism.inverse_images()) {
    for (std::size_t i = 0; i < al.rank(); ++i) {
      out << "inv " << al.names()[i] << " -> " << al.word((*inv)[i]) << '\n';
    }
  }
  return out.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

AutomorphismFile read_automorphism_file(const std::string& path) {
  return parse_automorphism(read_text(path));
}

namespace {

ExpansionFactor parse_factor(const std::string& value, std::size_t lineno) {
  try {
    if (!value.empty() && value.front() == '[') {
      if (value.back() != ']') throw ParseError("unterminated coefficient list", lineno);
      std::string inner = value.substr(1, value.size() - 2);
      for (char& ch : inner) {
        if (ch == ',') ch = ' ';
      }
      std::vector<BigInt> leading;
      for (const std::string& t : tokens(inner)) leading.emplace_back(t);
      if (leading.size() < 2) throw ParseError("polynomial must have degree >= 1", lineno);
      return ExpansionFactor::largest_root(IntPoly(std::vector<BigInt>(leading.rbegin(), leading.rend())));
    }
    std::size_t used = 0;
    const long double v = std::stold(value, &used);
    if (used != value.size()) throw ParseError("bad number '" + value + "'", lineno);
    return ExpansionFactor::numeric(v);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad expansion factor '") + value + "': " + e.what(), lineno);
  }
}

}  // namespace

LaminationPoset parse_poset(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  LaminationPoset poset;
  std::set<std::string> labels;
  std::vector<std::tuple<std::string, std::string, std::size_t>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokens(strip_comment(line));
    if (tok.empty()) continue;
    if (tok[0] == "node") {
      if (tok.size() < 4 || tok[2] != "lambda") throw ParseError("expected 'node <label> lambda <value>'", lineno);
      if (!labels.insert(tok[1]).second) throw ParseError("duplicate node '" + tok[1] + "'", lineno);
      std::string value;
      for (std::size_t i = 3; i < tok.size(); ++i) value += tok[i];
      poset.add_node(tok[1], parse_factor(value, lineno));
    } else if (tok[0] == "edge") {
      if (tok.size() != 4 || tok[2] != "<") throw ParseError("expected 'edge <sub> < <super>'", lineno);
      edges.emplace_back(tok[1], tok[3], lineno);
    } else {
      throw ParseError("unknown directive '" + tok[0] + "'", lineno);
    }
  }
  for (const auto& [sub, super, at] : edges) {
    if (!labels.count(sub)) throw ParseError("unknown node '" + sub + "'", at);
    if (!labels.count(super)) throw ParseError("unknown node '" + super + "'", at);
    if (sub == super) throw ParseError("node below itself", at);
    poset.add_edge(sub, super);
  }
  return poset;
}

std::string print_poset(const LaminationPoset& poset) {
  std::ostringstream out;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const ExpansionFactor& f = poset.lambda0(i);
    out << "node " << poset.label(i) << " lambda ";
    if (f.exact) {
      out << '[';
      const auto coeffs = f.exact->poly.leading_coeff_strings();
      for (std::size_t k = 0; k < coeffs.size(); ++k) out << (k ? "," : "") << coeffs[k];
      out << ']';
    } else {
      out << decimal(f.approx);
    }
    out << '\n';
  }
  for (const auto& [sub, super] : poset.edges()) {
    out << "edge " << poset.label(sub) << " < " << poset.label(super) << '\n';
  }
  return out.str();
}

LaminationPoset read_poset_file(const std::string& path) { return parse_poset(read_text(path)); }

Json rate_json(long double approx, const std::optional<AlgebraicReal>& exact) {
  Json j;
  j["approx"] = static_cast<double>(approx);
  if (exact && exact->minimal && exact->poly.degree() >= 1) {
    j["minpoly"] = exact->poly.leading_coeff_strings();
  }
  return j;
}

Json growth_type_json(const GrowthType& g) {
  Json j;
  j["lambda"] = rate_json(g.lambda, g.lambda_exact);
  j["m"] = g.m;
  j["provenance"] = g.provenance == Provenance::exact ? "exact" : "fitted";
  j["confidence"] = g.confidence;
  j["conclusive"] = g.conclusive;
  return j;
}

Json growth_json(const GrowthResult& r, const Alphabet& alphabet) {
  Json j;
  j["subject"] = alphabet.word(r.sequence.subject);
  j["cyclic"] = r.sequence.cyclic;
  j["initial"] = r.sequence.initial.str();
  Json lengths = Json::array();
  for (const BigInt& v : r.sequence.values) lengths.push_back(v.str());
  j["lengths"] = std::move(lengths);
  j["truncated"] = r.sequence.truncated;
  j["certified"] = r.certified;
  const Json type = growth_type_json(r.type);
  for (const auto& [k, v] : type.items()) j[k] = v;
  return j;
}

std::string growth_tsv(const LengthSequence& seq) {
  std::ostringstream out;
  out << "p\tlength\n";
  out << 0 << '\t' << seq.initial.str() << '\n';
  for (std::size_t p = 0; p < seq.values.size(); ++p) out << p + 1 << '\t' << seq.values[p].str() << '\n';
  return out.str();
}

Json checks_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const Check& c : checks) {
    Json j;
    j["name"] = c.name;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["pass"] = c.pass;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string checks_tsv(const std::vector<Check>& checks) {
  std::ostringstream out;
  out << "name\tlhs\trhs\tpass\n";
  for (const Check& c : checks) {
    out << c.name << '\t' << c.lhs << '\t' << c.rhs << '\t' << (c.pass ? "pass" : "FAIL") << '\n';
  }
  return out.str();
}

Json expected_json(const ExpectedInvariants& e) {
  Json j = Json::object();
  if (e.e_prime) j["ePrime"] = *e.e_prime;
  if (e.d) j["d"] = *e.d;
  if (e.fix_rank) j["fixRank"] = *e.fix_rank;
  if (e.s) j["s"] = *e.s;
  return j;
}

Json poset_json(const LaminationPoset& poset) {
  Json j;
  Json nodes = Json::array();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    Json n;
    n["label"] = poset.label(i);
    const ExpansionFactor& f = poset.lambda0(i);
    n["lambda"] = rate_json(f.approx, f.exact);
    nodes.push_back(std::move(n));
  }
  Json edges = Json::array();
  for (const auto& [sub, super] : poset.edges()) edges.push_back({poset.label(sub), poset.label(super)});
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  return j;
}

Alphabet alphabet_of(const ConstructedAutomorphism& c) { return Alphabet(c.names); }

AutomorphismFile file_of(const ConstructedAutomorphism& c) {
  AutomorphismFile f;
  f.automorphism = c.automorphism;
  f.alphabet = alphabet_of(c);
  f.explicit_names = !f.alphabet.is_standard();
  return f;
}

Json construction_json(const ConstructedAutomorphism& c) {
  const Alphabet al = alphabet_of(c);
  Json j;
  j["family"] = c.family;
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  j["params"] = std::move(params);
  j["rank"] = c.rank();
  j["names"] = al.names();
  j["expected"] = expected_json(c.expected);
  Json witnesses = Json::array();
  for (const Witness& w : c.witnesses) {
    Json wj;
    wj["class"] = al.word(w.word);
    const Json type = growth_type_json(w.growth);
    wj["lambda"] = type.at("lambda");
    wj["m"] = type.at("m");
    witnesses.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(witnesses);
  Json fixed = Json::array();
  for (const Word& w : c.fixed_generators) fixed.push_back(al.word(w));
  j["fixedGenerators"] = std::move(fixed);
  if (c.poset) j["poset"] = poset_json(*c.poset);
  if (c.solution) {
    j["solution"] = {{"w", c.solution->w}, {"x", c.solution->x}, {"y", c.solution->y}, {"z", c.solution->z}};
  }
  if (!c.region.empty()) j["region"] = c.region;
  return j;
}

ExpectedInvariants expected_from_json(const Json& sidecar) {
  ExpectedInvariants e;
  try {
    const Json& j = sidecar.contains("expected") ? sidecar.at("expected") : sidecar;
    if (j.contains("ePrime")) e.e_prime = j.at("ePrime").get<std::size_t>();
    if (j.contains("d")) e.d = j.at("d").get<std::size_t>();
    if (j.contains("fixRank")) e.fix_rank = j.at("fixRank").get<std::size_t>();
    if (j.contains("s")) e.s = j.at("s").get<std::size_t>();
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("bad expected invariants: ") + ex.what());
  }
  return e;
}

std::vector<Word> witnesses_from_json(const Json& sidecar, const Alphabet& alphabet) {
  std::vector<Word> out;
  if (!sidecar.contains("witnesses")) return out;
  try {
    for (const Json& w : sidecar.at("witnesses")) out.push_back(alphabet.parse_word(w.at("class").get<std::string>()));
  } catch (const Json::exception& ex) {
    throw ParseError(std::string("bad witness list: ") + ex.what());
  }
  return out;
}

}  // namespace fga
