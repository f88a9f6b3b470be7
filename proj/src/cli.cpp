#include "fga/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>

#include "fga/constructions.hpp"
#include "fga/growth.hpp"
#include "fga/invariants.hpp"
#include "fga/io.hpp"
#include "fga/lamination.hpp"
#include "fga/sweep.hpp"

namespace fga {

namespace {

struct RunConfig {
  std::size_t max_iter = 40;
  std::size_t cap = 10'000'000;
  std::size_t max_len = 6;
  std::size_t max_period = 4;
  std::size_t class_len = 2;
  std::string format = "json";
  int jobs = 0;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--max-iter", cfg.max_iter, "iterations P")->check(CLI::PositiveNumber);
  cmd->add_option("--cap", cfg.cap, "length cap")->check(CLI::Range(std::size_t{10}, std::size_t{1} << 40));
  cmd->add_option("--max-len", cfg.max_len, "word length for the fixed and periodic searches")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-period", cfg.max_period, "period limit for the periodic search")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  cmd->add_option("--jobs", cfg.jobs, "threads (0: default)")->check(CLI::NonNegativeNumber);
}

GrowthOptions growth_options(const RunConfig& cfg) {
  GrowthOptions g;
  g.max_iter = cfg.max_iter;
  g.cap = cfg.cap;
  return g;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Element growth is measured on the class of t g, so the report needs a
// name for t.
Alphabet with_extra_name(const Alphabet& alphabet) {
  std::vector<std::string> names = alphabet.names();
  std::string t = "t";
  while (std::find(names.begin(), names.end(), t) != names.end()) t += "_";
  names.push_back(t);
  return Alphabet(names);
}

int cmd_growth(const RunConfig& cfg, const std::string& file, const std::string& subject_text,
               bool element, std::ostream& out, std::ostream& err) {
  const AutomorphismFile f = read_automorphism_file(file);
  const Word subject = f.alphabet.parse_word(subject_text);
  const GrowthOptions opts = growth_options(cfg);
  GrowthResult r;
  std::string failure;
  try {
    r = element ? growth_of_element(f.automorphism, subject, opts) : growth_of_class(f.automorphism, subject, opts);
  } catch (const GrowthError& e) {
    failure = e.what();
    r.sequence = element ? iterate_lengths(f.automorphism.with_fixed_generator(),
                                           Word::generator(static_cast<std::uint32_t>(f.automorphism.rank()),
                                                           f.automorphism.rank() + 1) *
                                               subject.promoted(f.automorphism.rank() + 1),
                                           true, cfg.max_iter, cfg.cap)
                         : iterate_lengths(f.automorphism, subject, true, cfg.max_iter, cfg.cap);
    r.sequence.subject = subject;
    r.type.conclusive = false;
    r.type.provenance = Provenance::fitted;
    r.type.confidence = 0;
  }
  if (cfg.format == "tsv") {
    out << growth_tsv(r.sequence);
  } else {
    Json j = growth_json(r, element ? with_extra_name(f.alphabet) : f.alphabet);
    j["element"] = element;
    if (!failure.empty()) {
      j.erase("lambda");
      j.erase("m");
      j["error"] = failure;
    }
    print_json(out, j);
  }
  if (!failure.empty()) {
    err << "inconclusive: " << failure << '\n';
    return kExitInconclusive;
  }
  if (!r.type.conclusive) {
    err << "inconclusive: fitted degree or rate is not reliable\n";
    return kExitInconclusive;
  }
  return kExitOk;
}

struct MeasuredReport {
  Json json;
  bool pass = true;
};

MeasuredReport measure(const RunConfig& cfg, const AutomorphismFile& f, const std::string& expected_path,
                       bool per_class) {
  const Automorphism& a = f.automorphism;
  const long long n = static_cast<long long>(a.rank());
  std::optional<Json> sidecar;
  SweepOptions sopts;
  sopts.growth = growth_options(cfg);
  sopts.max_len = cfg.class_len;
  sopts.jobs = cfg.jobs;
  if (!expected_path.empty()) {
    try {
      sidecar = Json::parse(read_text(expected_path));
    } catch (const Json::exception& e) {
      throw ParseError(std::string("bad sidecar: ") + e.what());
    }
    sopts.extra_classes = witnesses_from_json(*sidecar, f.alphabet);
  }
  std::vector<ClassResult> results;
  const SweepSummary summary = sweep(a, sopts, &results);
  SearchOptions search;
  search.jobs = cfg.jobs;
  const std::size_t fix = fix_rank_lower_bound(a, cfg.max_len, search);
  PeriodicSearchStats kstats;
  const std::size_t k = k_lower_bound(a, cfg.max_len, cfg.max_period, search, &kstats);

  const long long e = static_cast<long long>(summary.e_prime);
  const long long d = summary.d;
  std::vector<Check> checks = check_ed(n, e, d);
  for (Check& c : check_fix_rank(n, e, d, static_cast<long long>(fix))) checks.push_back(std::move(c));
  std::optional<ExpectedInvariants> declared;
  if (sidecar) declared = expected_from_json(*sidecar);
  if (declared && declared->s && *declared->s >= 1) {
    // r is not measured; 0 is its trivial lower bound.
    for (Check& c : check_chain_bound(n, static_cast<long long>(*declared->s), d, 0)) checks.push_back(std::move(c));
  }

  MeasuredReport rep;
  Json& j = rep.json;
  j["n"] = n;
  j["measured"] = {{"ePrime", summary.e_prime}, {"d", summary.d}, {"fixRankLower", fix}, {"kLower", k}};
  if (declared) j["declaredExpected"] = expected_json(*declared);
  Json sw;
  sw["classLength"] = cfg.class_len;
  sw["classes"] = summary.classes;
  sw["failed"] = summary.failed;
  sw["inconclusive"] = summary.inconclusive;
  Json types = Json::array();
  for (const GrowthType& g : summary.exponential_types) types.push_back(growth_type_json(g));
  sw["exponentialTypes"] = std::move(types);
  sw["periodicClasses"] = kstats.periodic;
  sw["periodicSkipped"] = kstats.skipped;
  j["sweep"] = std::move(sw);
  if (per_class) {
    Json cls = Json::array();
    for (const ClassResult& r : results) {
      Json c;
      if (r.ok) {
        c = growth_json(r.result, f.alphabet);
        c.erase("cyclic");
        c.erase("lengths");
      } else {
        c["subject"] = f.alphabet.word(r.subject);
        c["error"] = r.error;
      }
      cls.push_back(std::move(c));
    }
    j["classes"] = std::move(cls);
  }
  j["checks"] = checks_json(checks);
  rep.pass = all_pass(checks);
  return rep;
}

int cmd_sweep(const RunConfig& cfg, const std::string& file, const std::string& expected, bool per_class,
              std::ostream& out) {
  const AutomorphismFile f = read_automorphism_file(file);
  const MeasuredReport rep = measure(cfg, f, expected, per_class);
  if (cfg.format == "tsv") {
    const Json& m = rep.json.at("measured");
    out << "quantity\tvalue\n";
    for (const char* key : {"ePrime", "d", "fixRankLower", "kLower"}) out << key << '\t' << m.at(key).dump() << '\n';
    std::vector<Check> checks;
    for (const Json& c : rep.json.at("checks")) {
      checks.push_back({c.at("name"), c.at("lhs"), c.at("rhs"), c.at("pass")});
    }
    out << checks_tsv(checks);
  } else {
    print_json(out, rep.json);
  }
  return rep.pass ? kExitOk : kExitCheckFailed;
}

// Named after the parameters given on the command line.
std::string file_stem(const std::string& family, const std::map<std::string, long long>& params) {
  std::string stem = family;
  for (const char* key : {"n", "l", "k", "e", "d", "t"}) {
    const auto it = params.find(key);
    if (it != params.end()) stem += std::string("_") + key + std::to_string(it->second);
  }
  return stem;
}

int cmd_construct(const RunConfig& cfg, const std::string& family, const std::map<std::string, long long>& params,
                  const std::string& dir, std::ostream& out) {
  const ConstructedAutomorphism c = make_family(family, params);
  std::filesystem::create_directories(dir);
  const std::string stem = (std::filesystem::path(dir) / file_stem(family, params)).string();
  const std::string aut_path = stem + ".aut";
  const std::string json_path = stem + ".json";
  write_text(aut_path, print_automorphism(file_of(c)));
  write_text(json_path, construction_json(c).dump(2) + "\n");
  if (cfg.format == "json") {
    Json j;
    j["family"] = c.family;
    j["rank"] = c.rank();
    j["automorphism"] = aut_path;
    j["sidecar"] = json_path;
    if (c.solution) {
      j["solution"] = {{"w", c.solution->w}, {"x", c.solution->x}, {"y", c.solution->y}, {"z", c.solution->z}};
    }
    print_json(out, j);
  } else {
    out << "file\t" << aut_path << "\nsidecar\t" << json_path << '\n';
    if (c.solution) {
      out << "w\t" << c.solution->w << "\nx\t" << c.solution->x << "\ny\t" << c.solution->y << "\nz\t"
          << c.solution->z << '\n';
    }
  }
  return kExitOk;
}

struct CheckInput {
  std::optional<long long> n, e, d, fix, s, r;
  std::string report;
};

int cmd_check(const RunConfig& cfg, CheckInput in, std::ostream& out, std::ostream& err) {
  if (!in.report.empty()) {
    Json rep;
    try {
      rep = Json::parse(read_text(in.report));
      if (!in.n) in.n = rep.at("n").get<long long>();
      const Json& m = rep.at("measured");
      if (!in.e) in.e = m.at("ePrime").get<long long>();
      if (!in.d) in.d = m.at("d").get<long long>();
      if (!in.fix && m.contains("fixRankLower")) in.fix = m.at("fixRankLower").get<long long>();
      if (!in.s && rep.contains("declaredExpected") && rep["declaredExpected"].contains("s")) {
        in.s = rep["declaredExpected"]["s"].get<long long>();
      }
    } catch (const Json::exception& e) {
      throw ParseError(std::string("bad report: ") + e.what());
    }
  }
  if (!in.n || !in.e || !in.d) throw ParseError("check needs --n, --e and --d (or --report)");
  const long long n = *in.n, e = *in.e, d = *in.d;
  Json j;
  j["n"] = n;
  j["e"] = e;
  j["d"] = d;
  if (n < 1 || e < 0 || d < 0 || (in.fix && *in.fix < 0) || (in.s && *in.s < 0) || (in.r && *in.r < 0)) {
    err << "inadmissible input: n must be positive and all other values non-negative\n";
    return kExitCheckFailed;
  }
  std::vector<Check> checks = check_ed(n, e, d);
  if (in.fix) {
    j["fix"] = *in.fix;
    for (Check& c : check_fix_rank(n, e, d, *in.fix)) checks.push_back(std::move(c));
  }
  if (in.s && *in.s >= 1) {
    j["s"] = *in.s;
    for (Check& c : check_chain_bound(n, *in.s, d, in.r.value_or(0))) checks.push_back(std::move(c));
  }
  const bool pass = all_pass(checks);
  if (cfg.format == "tsv") {
    out << checks_tsv(checks);
  } else {
    j["admissible"] = admissible(n, e, d);
    j["checks"] = checks_json(checks);
    j["pass"] = pass;
    print_json(out, j);
  }
  if (!pass) err << "inequality violated\n";
  return pass ? kExitOk : kExitCheckFailed;
}

int cmd_poset(const RunConfig& cfg, const std::string& file, std::ostream& out) {
  const LaminationPoset poset = read_poset_file(file);
  PosetReport rep;
  try {
    rep = poset_invariants(poset);
  } catch (const CycleError& e) {
    throw ParseError(e.what());
  }
  const bool ok = check_m_le_s(rep);
  if (cfg.format == "tsv") {
    out << "node\tlambda\tm\n";
    for (std::size_t i = 0; i < poset.size(); ++i) {
      std::ostringstream lam;
      lam.precision(12);
      lam << static_cast<double>(rep.types[i].lambda);
      out << poset.label(i) << '\t' << lam.str() << '\t' << rep.types[i].m << '\n';
    }
  } else {
    Json j = poset_json(poset);
    for (std::size_t i = 0; i < poset.size(); ++i) {
      j["nodes"][i]["growth"] = {{"lambda", rate_json(rep.types[i].lambda, rep.types[i].lambda_exact)},
                                 {"m", rep.types[i].m}};
    }
    j["e"] = rep.e;
    j["s"] = rep.s;
    j["ePrime"] = rep.e_prime;
    j["mAtMostS"] = ok;
    print_json(out, j);
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth of free group automorphisms"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string file, subject, expected, family, dir = ".";
  bool element = false;

  auto* growth = app.add_subcommand("growth", "classify the growth of one class or element");
  growth->add_option("file", file, "automorphism file")->required();
  growth->add_option("subject", subject, "word, e.g. \"a b A\"")->required();
  growth->add_flag("--element", element, "element length instead of class length");
  add_common(growth, cfg);

  auto add_sweep = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", file, "automorphism file")->required();
    cmd->add_option("--class-len", cfg.class_len, "length of the swept classes")->check(CLI::PositiveNumber);
    cmd->add_option("--expected", expected, "sidecar JSON with declared invariants and witnesses");
    add_common(cmd, cfg);
    return cmd;
  };
  auto* sweep_cmd = add_sweep("sweep", "measure d, e' and the search bounds, then check the inequalities");
  auto* analyze = add_sweep("analyze", "sweep, with the growth of every class");

  std::map<std::string, long long> params;
  std::map<std::string, long long> raw;
  auto* construct = app.add_subcommand("construct", "write an automorphism family member and its sidecar");
  construct->add_option("family", family, "family id")->required()->check(CLI::IsMember(family_ids()));
  for (const char* key : {"n", "e", "d", "l", "k", "t"}) {
    construct->add_option(std::string("--") + key, raw[key])->check(CLI::NonNegativeNumber);
  }
  construct->add_option("--out", dir, "output directory");
  add_common(construct, cfg);

  CheckInput check_in;
  auto* check = app.add_subcommand("check", "evaluate the inequalities on a tuple or a report");
  check->add_option("--n", check_in.n);
  check->add_option("--e", check_in.e);
  check->add_option("--d", check_in.d);
  check->add_option("--fix", check_in.fix);
  check->add_option("--s", check_in.s);
  check->add_option("--r", check_in.r);
  check->add_option("--report", check_in.report, "report JSON from sweep");
  add_common(check, cfg);

  auto* poset = app.add_subcommand("poset", "growth types of a declared lamination poset");
  poset->add_option("file", file, "poset file")->required();
  add_common(poset, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (*growth) return cmd_growth(cfg, file, subject, element, out, err);
    if (*sweep_cmd) return cmd_sweep(cfg, file, expected, false, out);
    if (*analyze) return cmd_sweep(cfg, file, expected, true, out);
    if (*construct) {
      for (const auto& [key, value] : raw) {
        if (construct->count(std::string("--") + key)) params[key] = value;
      }
      return cmd_construct(cfg, family, params, dir, out);
    }
    if (*check) return cmd_check(cfg, check_in, out, err);
    if (*poset) return cmd_poset(cfg, file, out);
  } catch (const UnsupportedRegion& e) {
    err << "unsupported region: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const InadmissibleError& e) {
    err << "inadmissible: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const RankError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const InvalidAutomorphism& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const GrowthError& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitParseError;
  }
  return kExitParseError;
}

}  // namespace fga
