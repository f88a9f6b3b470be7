#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fga/automorphism.hpp"
#include "fga/lamination.hpp"

namespace fga {

/// Raised for (n, e, d) whose realization needs the geometric blocks that
/// have no explicit words.
class UnsupportedRegion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExpectedInvariants {
  std::optional<std::size_t> e_prime;
  std::optional<std::size_t> d;
  std::optional<std::size_t> fix_rank;
  std::optional<std::size_t> s;
};

/// A class whose growth the family claims.
struct Witness {
  Word word;
  GrowthType growth;
};

struct OptimalSolution {
  int w = 0;
  int x = 0;
  int y = 0;
  int z = 0;
};

struct ConstructedAutomorphism {
  std::string family;
  std::map<std::string, long long> params;
  Automorphism automorphism;
  std::vector<std::string> names;
  ExpectedInvariants expected;
  std::optional<LaminationPoset> poset;
  std::vector<Witness> witnesses;
  std::vector<Word> fixed_generators;  ///< declared generators of (part of) Fix
  std::optional<OptimalSolution> solution;
  std::string region;

  [[nodiscard]] std::size_t rank() const { return automorphism.rank(); }
};

/// Rate of the rank-2 block a -> a(ba)^k, b -> ba: largest root of
/// x^2 - (k+2)x + 1. k = 1 is tau.
ExpansionFactor block_rate(int k);
/// Rate of tau^k: largest root of x^2 - tr(M^k) x + 1.
ExpansionFactor tau_power_rate(int k);

ConstructedAutomorphism make_identity(std::size_t n);
ConstructedAutomorphism make_tau();
/// a -> a(ba)^k, b -> ba; fixes [a, b].
ConstructedAutomorphism make_sigma(int k);
ConstructedAutomorphism make_alpha_poly(std::size_t n);
ConstructedAutomorphism make_beta(std::size_t ell, bool with_t = false);
ConstructedAutomorphism make_nested(std::size_t ell);
/// theta_n; odd n = 2l+3, even n = 2l+4 with t -> t u_l u.
ConstructedAutomorphism make_theta(std::size_t n);
/// theta_n (n odd) with tau^(i+1) on the i-th torus block.
ConstructedAutomorphism make_theta_varied(std::size_t n);
ConstructedAutomorphism make_inner(const Word& x);
ConstructedAutomorphism free_product(const ConstructedAutomorphism& a,
                                     const ConstructedAutomorphism& b);

/// Adds a generator t -> t w. When `t_degree` is given it is recorded as
/// the expected polynomial degree of the class of t.
ConstructedAutomorphism add_twist_generator(const ConstructedAutomorphism& base, const Word& w,
                                            std::optional<std::size_t> t_degree = std::nullopt);

/// Realizes (e, d) with rk Fix = max_fixed_rank(n, e, d) and e distinct
/// exponential rates, in the regions that need no geometric block.
ConstructedAutomorphism construct_optimal(std::size_t n, std::size_t e, std::size_t d);

/// True when construct_optimal covers (n, e, d) (assumed admissible).
bool optimal_region_covered(std::size_t n, std::size_t e, std::size_t d);

/// Family ids accepted by make_family.
std::vector<std::string> family_ids();
/// Dispatch by id; params use keys n, l, e, d, t.
ConstructedAutomorphism make_family(const std::string& id,
                                    const std::map<std::string, long long>& params);

}  // namespace fga
