// One line per acceptance criterion; exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fga/constructions.hpp"
#include "fga/growth.hpp"
#include "fga/invariants.hpp"
#include "fga/lamination.hpp"
#include "fga/sweep.hpp"

using namespace fga;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const long double kGolden = (1 + std::sqrt(5.0L)) / 2;
const long double kTau = (3 + std::sqrt(5.0L)) / 2;

// Every fixed-rank bound computed here, for the global audit.
std::vector<std::pair<std::size_t, std::size_t>> g_fix_bounds;

std::size_t audited_fix_bound(const Automorphism& a, std::size_t len) {
  const std::size_t r = fix_rank_lower_bound(a, len);
  g_fix_bounds.emplace_back(a.rank(), r);
  return r;
}

Word gen(std::size_t i, std::size_t n) { return Word::generator(static_cast<std::uint32_t>(i), n); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

bool run(int id, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double dt = seconds_since(t0);
  std::printf("criterion %2d %s (%.2fs)%s%s\n", id, o.pass ? "PASS" : "FAIL", dt,
              o.detail.str().empty() ? "" : ": ", o.detail.str().c_str());
  std::fflush(stdout);
  return o.pass;
}

std::string fmt(const GrowthType& g) {
  std::ostringstream s;
  s.precision(10);
  s << "(" << static_cast<double>(g.lambda) << ", " << g.m << ")";
  return s.str();
}

void criterion1(Outcome& o) {
  const auto t0 = Clock::now();
  const ConstructedAutomorphism tau = make_tau();
  const GrowthResult r = growth_of_class(tau.automorphism, gen(0, 2));
  const double dt = seconds_since(t0);
  o.require(r.type.exponential() && std::fabs(static_cast<double>(r.type.lambda - kTau)) < 1e-6,
            "rate " + fmt(r.type));
  o.require(r.type.m == 0, "m = " + std::to_string(r.type.m));
  o.require(r.type.provenance == Provenance::exact && r.type.lambda_exact.has_value(), "not exact");
  o.require(dt < 1.0, "took " + std::to_string(dt) + "s");
  o.detail << (o.pass ? "lambda = " + fmt(r.type) : "");
}

void criterion2(Outcome& o) {
  const Automorphism tau = make_tau().automorphism;
  const Word c = commutator(gen(0, 2), gen(1, 2));
  o.require(tau.apply(c) == c, "[a,b] not fixed");
  const std::size_t fix = audited_fix_bound(tau, 4);
  o.require(fix >= 1, "fix bound " + std::to_string(fix));
  if (o.pass) o.detail << "fix lower bound " << fix;
}

void criterion3(Outcome& o) {
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const Automorphism a = make_alpha_poly(n).automorphism;
    for (std::size_t i = 1; i <= n; ++i) {
      const GrowthType g = growth_of_class(a, gen(i - 1, n)).type;
      ++checked;
      o.require(!g.exponential() && g.m == static_cast<int>(i) - 1 && g.conclusive,
                "alpha_" + std::to_string(n) + " a" + std::to_string(i) + " -> " + fmt(g));
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < 10.0, "took " + std::to_string(dt) + "s");
  if (o.pass) o.detail << checked << " classes";
}

void criterion4(Outcome& o) {
  for (std::size_t ell = 1; ell <= 3; ++ell) {
    const ConstructedAutomorphism b = make_beta(ell, true);
    const std::size_t n = b.rank();
    const Word aal = gen(0, n) * gen(ell + 1, n);  // a a_l
    const Word t = gen(n - 1, n);
    const std::string tag = "l=" + std::to_string(ell);
    const GrowthType g1 = growth_of_class(b.automorphism, aal).type;
    o.require(!g1.exponential() && g1.m == static_cast<int>(ell) + 1, tag + " a a_l -> " + fmt(g1));
    const GrowthType g2 = growth_of_class(b.automorphism, t).type;
    o.require(!g2.exponential() && g2.m == static_cast<int>(ell) + 2, tag + " t -> " + fmt(g2));
    for (const Word& w : {aal, t}) {
      const CancellationCertificate cert = certify_no_cancellation(b.automorphism, w, true);
      o.require(cert.valid, tag + " certification failed: " + cert.failure);
      if (!cert.valid) continue;
      const LengthSequence exact = exact_lengths(b.automorphism, w, cert, 12);
      const LengthSequence direct = iterate_lengths(b.automorphism, w, true, 12, 10'000'000);
      o.require(!direct.truncated && exact.values == direct.values, tag + " exact and direct lengths differ");
    }
  }
  if (o.pass) o.detail << "degrees l+1, l+2 and exact = direct for p <= 12";
}

void criterion5(Outcome& o) {
  for (std::size_t ell = 2; ell <= 3; ++ell) {
    const ConstructedAutomorphism c = make_nested(ell);
    // Generators a1 b1 a2 b2 ...: a_l is index 2(l-1).
    const GrowthType g = growth_of_class(c.automorphism, gen(2 * (ell - 1), c.rank())).type;
    o.require(std::fabs(static_cast<double>(g.lambda - kGolden)) < 1e-6 && g.m == static_cast<int>(ell) - 1,
              "l=" + std::to_string(ell) + " -> " + fmt(g));
    if (o.pass) o.detail << "l=" << ell << " " << fmt(g) << " ";
  }
}

SweepSummary sweep_with_witnesses(const ConstructedAutomorphism& c, std::size_t max_len) {
  SweepOptions opts;
  opts.max_len = max_len;
  for (const Witness& w : c.witnesses) opts.extra_classes.push_back(w.word);
  return sweep(c.automorphism, opts);
}

void criterion6(Outcome& o) {
  const SweepSummary t5 = sweep_with_witnesses(make_theta(5), 2);
  o.require(t5.d == 2 && t5.e_prime == 1,
            "theta_5 d=" + std::to_string(t5.d) + " e'=" + std::to_string(t5.e_prime));
  const SweepSummary t6 = sweep_with_witnesses(make_theta(6), 2);
  o.require(t6.d == 3, "theta_6 d=" + std::to_string(t6.d));
  const SweepSummary tv = sweep_with_witnesses(make_theta_varied(5), 2);
  o.require(tv.e_prime == 2, "theta_varied(5) e'=" + std::to_string(tv.e_prime));
  if (tv.e_prime == 2) {
    std::vector<long double> rates;
    for (const GrowthType& g : tv.exponential_types) rates.push_back(g.lambda);
    std::sort(rates.begin(), rates.end());
    const long double err1 = std::fabs(rates[0] - kTau) / kTau;
    const long double err2 = std::fabs(rates[1] - kTau * kTau) / (kTau * kTau);
    o.require(err1 < 1e-6L && err2 < 1e-6L, "rates not lambda and lambda^2");
  }
  if (o.pass) {
    o.detail << "theta_5 (d, e') = (2, 1), theta_6 d = 3, theta_varied(5) rates lambda, lambda^2";
  }
}

void criterion7(Outcome& o) {
  const auto t0 = Clock::now();
  std::size_t points = 0;
  for (long long n = 1; n <= 12; ++n) {
    for (long long e = 0; e <= n; ++e) {
      for (long long d = 0; d <= n; ++d) {
        ++points;
        if (admissible(n, e, d) != in_quadrilateral(n, BigRational(e), BigRational(d))) {
          o.require(false, "mismatch at n=" + std::to_string(n) + " (" + std::to_string(e) + ", " +
                               std::to_string(d) + ")");
        }
      }
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < 1.0, "took " + std::to_string(dt) + "s");
  if (o.pass) o.detail << points << " integer points";
}

void criterion8(Outcome& o) {
  std::size_t built = 0, skipped = 0;
  const auto t0 = Clock::now();
  for (std::size_t n = 1; n <= 9; ++n) {
    const long long N = static_cast<long long>(n);
    for (std::size_t e = 0; e <= n; ++e) {
      for (std::size_t d = 0; d <= n; ++d) {
        const long long E = static_cast<long long>(e), D = static_cast<long long>(d);
        if (!admissible(N, E, D)) continue;
        const std::string tag = "(n,e,d)=(" + std::to_string(n) + "," + std::to_string(e) + "," +
                                std::to_string(d) + ")";
        if (!optimal_region_covered(n, e, d)) {
          bool threw = false;
          try {
            (void)construct_optimal(n, e, d);
          } catch (const UnsupportedRegion&) {
            threw = true;
          }
          o.require(threw, tag + " should be unsupported");
          ++skipped;
          continue;
        }
        const ConstructedAutomorphism c = construct_optimal(n, e, d);
        ++built;
        const long long rho0 = max_fixed_rank(N, E, D);
        o.require(c.rank() == n, tag + " wrong rank");
        if (c.solution) {
          const OptimalSolution& s = *c.solution;
          const bool eqs = s.w >= 0 && s.x >= 0 && s.y >= 0 && s.z >= 0 && s.w + 1 + s.x == D &&
                           s.w + 1 + s.z == E && 2 + s.y + s.z == rho0 &&
                           2 * s.w + 3 + s.x + s.y + 2 * s.z == N;
          o.require(eqs, tag + " solver values violate the defining equations");
        } else {
          o.require(e == 0 || d == 0, tag + " mixed point without solver values");
        }
        const SweepSummary s = sweep_with_witnesses(c, 1);
        o.require(s.e_prime == e && s.d == static_cast<int>(d),
                  tag + " measured (e',d)=(" + std::to_string(s.e_prime) + "," + std::to_string(s.d) + ")");
        const std::size_t fix = audited_fix_bound(c.automorphism, 6);
        o.require(static_cast<long long>(fix) == rho0,
                  tag + " fix bound " + std::to_string(fix) + " vs " + std::to_string(rho0));
      }
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < 300.0, "took " + std::to_string(dt) + "s");
  o.detail << built << " constructed, " << skipped << " geometric points skipped";
}

void criterion9(Outcome& o) {
  std::mt19937_64 rng(20240611);
  const ExpansionFactor phi = ExpansionFactor::largest_root(IntPoly::from_leading({1, -1, -1}));
  const ExpansionFactor mu = ExpansionFactor::largest_root(IntPoly::from_leading({1, -3, 1}));
  std::size_t nodes_checked = 0;
  for (int inst = 0; inst < 200; ++inst) {
    const std::size_t size = 1 + rng() % 8;
    const double density = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
    LaminationPoset poset;
    for (std::size_t i = 0; i < size; ++i) poset.add_node("L" + std::to_string(i), rng() % 2 ? phi : mu);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        if (std::uniform_real_distribution<double>(0, 1)(rng) < density) poset.add_edge(i, j);
      }
    }
    const std::vector<GrowthType> memo = growth_types(poset);
    const std::vector<GrowthType> brute = growth_types_brute_force(poset);
    for (std::size_t i = 0; i < size; ++i) {
      ++nodes_checked;
      if (!same_type(memo[i], brute[i])) {
        o.require(false, "instance " + std::to_string(inst) + " node " + std::to_string(i) + ": " +
                             fmt(memo[i]) + " vs " + fmt(brute[i]));
      }
      const std::vector<std::size_t> below = poset.strictly_below(i);
      if (below.empty()) continue;
      // The node's type dominates every sub-node, and equals their maximum
      // whenever that maximum beats the node's own rate.
      std::size_t arg = below.front();
      for (std::size_t j : below) {
        if (compare_growth(memo[j], memo[arg]) > 0) arg = j;
        if (compare_growth(memo[i], memo[j]) < 0) {
          o.require(false, "instance " + std::to_string(inst) + " node below exceeds its super");
        }
      }
      const GrowthType own = poset.lambda0(i).as_growth(0);
      if (!same_rate(memo[arg], own) && memo[arg].lambda > own.lambda && !same_type(memo[i], memo[arg])) {
        o.require(false, "instance " + std::to_string(inst) + " c differs from the sub maximum");
      }
    }
  }
  if (o.pass) o.detail << "200 posets, " << nodes_checked << " nodes";
}

void criterion10(Outcome& o) {
  const auto log = MeasurementLog::snapshot();
  std::size_t checked = 0, inconclusive = 0;
  for (const auto& [rank, g] : log) {
    if (!g.conclusive) {
      ++inconclusive;
      continue;
    }
    ++checked;
    const long long n = static_cast<long long>(rank);
    if (!g.exponential() && g.m > n - 1) o.require(false, "polynomial degree above n-1 in rank " + std::to_string(n));
    if (g.exponential() && 2LL * g.m > n - 2) o.require(false, "exponential m above n/2-1 in rank " + std::to_string(n));
  }
  for (const auto& [rank, fix] : g_fix_bounds) {
    if (fix > rank) o.require(false, "fixed rank bound above n in rank " + std::to_string(rank));
  }
  o.require(checked > 0, "no measurements recorded");
  if (o.pass) {
    o.detail << checked << " measurements (" << inconclusive << " inconclusive not bounded), " << g_fix_bounds.size()
             << " fixed-rank bounds";
  }
}

}  // namespace

int main() {
  MeasurementLog::clear();
  bool ok = true;
  ok &= run(1, criterion1);
  ok &= run(2, criterion2);
  ok &= run(3, criterion3);
  ok &= run(4, criterion4);
  ok &= run(5, criterion5);
  ok &= run(6, criterion6);
  ok &= run(7, criterion7);
  ok &= run(8, criterion8);
  ok &= run(9, criterion9);
  ok &= run(10, criterion10);
  std::printf("%s\n", ok ? "all criteria pass" : "some criteria FAIL");
  return ok ? 0 : 1;
}
