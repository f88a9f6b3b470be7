#include "fga/constructions.hpp"

#include <algorithm>
#include <set>

#include "fga/invariants.hpp"

namespace fga {

namespace {

Word gen(std::size_t i, std::size_t n) { return Word::generator(static_cast<std::uint32_t>(i), n); }

// Substitutes images for letters: letter i of w goes to images[i].
Word substitute(const Word& w, const std::vector<Word>& images, std::size_t rank) {
  Word out(rank);
  for (Letter l : w.letters()) {
    const Word& img = images.at(l.index());
    out *= l.is_inverse() ? img.inverse() : img;
  }
  return out;
}

// Moves a word of a smaller free group onto the given generator indices.
Word embed(const Word& w, const std::vector<std::size_t>& indices, std::size_t rank) {
  std::vector<Word> images;
  for (std::size_t i : indices) images.push_back(gen(i, rank));
  return substitute(w, images, rank);
}

Word shift(const Word& w, std::size_t offset, std::size_t rank) {
  std::vector<std::size_t> idx(w.rank());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i + offset;
  return embed(w, idx, rank);
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
  }
  return names;
}

ExpansionFactor quadratic_rate(long long trace) {
  return ExpansionFactor::largest_root(IntPoly({BigInt(1), BigInt(-trace), BigInt(1)}));
}

std::size_t distinct_exponential(const std::vector<Witness>& ws) {
  std::vector<GrowthType> types;
  for (const Witness& w : ws) {
    if (w.growth.exponential()) types.push_back(w.growth);
  }
  return count_distinct_types(types);
}

// Rank-2 block a -> a(ba)^k, b -> ba, built as R o L^k (L: a -> ab,
// R: b -> ba) so that the inverse comes along.
Automorphism sigma_block(int k) {
  if (k < 1) throw std::invalid_argument("block exponent must be >= 1");
  const Word a = gen(0, 2);
  const Word b = gen(1, 2);
  const Automorphism left({a * b, b}, {a * b.inverse(), b});
  const Automorphism right({a, b * a}, {a, b * a.inverse()});
  return compose(right, power(left, static_cast<unsigned>(k)));
}

Automorphism tau_block() {
  const Word a = gen(0, 2);
  const Word b = gen(1, 2);
  return Automorphism({a * b * a, b * a}, {a * b.inverse(), b * b * a.inverse()});
}

struct ThetaBlock {
  Automorphism map;       // rank 2, fixes [a, b]
  ExpansionFactor rate;
};

// theta with torus blocks blocks[0] on (a, b) and blocks[i] on (a_i, b_i),
// followed by `chain` generators t_1 -> t_1 u_l u, t_i -> t_i t_{i-1}.
ConstructedAutomorphism theta_general(const std::vector<ThetaBlock>& blocks, std::size_t chain) {
  if (blocks.empty()) throw std::invalid_argument("theta needs at least one block");
  const std::size_t ell = blocks.size() - 1;
  const std::size_t n = 2 * ell + 3 + chain;
  const std::size_t ia = 0, ib = 1, ia0 = 2;
  auto ai = [](std::size_t i) { return 2 * i + 1; };
  auto bi = [](std::size_t i) { return 2 * i + 2; };
  auto ti = [&](std::size_t i) { return 2 * ell + 2 + i; };  // i = 1..chain

  std::vector<std::string> names{"a", "b", "a0"};
  for (std::size_t i = 1; i <= ell; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  for (std::size_t i = 1; i <= chain; ++i) names.push_back(chain == 1 ? "t" : "t" + std::to_string(i));

  const Word u = commutator(gen(ia, n), gen(ib, n));
  auto ui = [&](std::size_t i) {
    return i == 0 ? gen(ia0, n) : commutator(gen(ai(i), n), gen(bi(i), n));
  };

  std::vector<Word> img(n, Word(n)), inv(n, Word(n));
  auto block_image = [&](const Automorphism& s, std::size_t x, std::size_t y, bool inverse,
                         std::size_t which) {
    const auto& src = inverse ? *s.inverse_images() : s.images();
    return embed(src[which], {x, y}, n);
  };
  img[ia] = block_image(blocks[0].map, ia, ib, false, 0);
  img[ib] = block_image(blocks[0].map, ia, ib, false, 1);
  inv[ia] = block_image(blocks[0].map, ia, ib, true, 0);
  inv[ib] = block_image(blocks[0].map, ia, ib, true, 1);
  img[ia0] = gen(ia0, n) * u;
  inv[ia0] = gen(ia0, n) * u.inverse();

  for (std::size_t i = 1; i <= ell; ++i) {
    const Word c = (i == 1 ? gen(ia0, n) : ui(i - 1)) * u;
    const Word dc = substitute(c, inv, n);  // theta^-1 of the conjugator
    for (std::size_t which = 0; which < 2; ++which) {
      const std::size_t g = which == 0 ? ai(i) : bi(i);
      img[g] = c * block_image(blocks[i].map, ai(i), bi(i), false, which) * c.inverse();
      inv[g] = dc.inverse() * block_image(blocks[i].map, ai(i), bi(i), true, which) * dc;
    }
  }
  for (std::size_t i = 1; i <= chain; ++i) {
    const Word tail = i == 1 ? ui(ell) * u : gen(ti(i - 1), n);
    img[ti(i)] = gen(ti(i), n) * tail;
    inv[ti(i)] = gen(ti(i), n) * substitute(tail, inv, n).inverse();
  }

  ConstructedAutomorphism c;
  c.automorphism = Automorphism(std::move(img), std::move(inv));
  c.names = std::move(names);
  c.params["l"] = static_cast<long long>(ell);
  c.params["chain"] = static_cast<long long>(chain);

  LaminationPoset poset;
  c.witnesses.push_back({gen(ia, n), blocks[0].rate.as_growth(0)});
  poset.add_node("L0", blocks[0].rate);
  for (std::size_t i = 1; i <= ell; ++i) {
    c.witnesses.push_back({gen(ai(i), n), blocks[i].rate.as_growth(0)});
    poset.add_node("L" + std::to_string(i), blocks[i].rate);
  }
  const std::size_t degree = ell + 1 + chain;
  const Word poly_witness = chain > 0 ? gen(ti(chain), n) : (ell == 0 ? gen(ia0, n) : u * ui(ell));
  c.witnesses.push_back({poly_witness, GrowthType::polynomial(static_cast<int>(degree))});
  c.poset = std::move(poset);
  c.fixed_generators = {u, gen(ia0, n) * u * gen(ia0, n).inverse()};
  c.expected.e_prime = distinct_exponential(c.witnesses);
  c.expected.d = degree;
  c.expected.fix_rank = 2;
  c.expected.s = 0;
  return c;
}

// Two-generator block family member with the given map and rate.
ConstructedAutomorphism rank_two_block(std::string family, Automorphism map, ExpansionFactor rate) {
  ConstructedAutomorphism c;
  c.family = std::move(family);
  c.automorphism = std::move(map);
  c.names = {"a", "b"};
  c.witnesses.push_back({gen(0, 2), rate.as_growth(0)});
  LaminationPoset poset;
  poset.add_node("L0", rate);
  c.poset = std::move(poset);
  c.fixed_generators = {commutator(gen(0, 2), gen(1, 2))};
  c.expected.e_prime = 1;
  c.expected.d = 0;
  c.expected.fix_rank = 1;
  c.expected.s = 0;
  return c;
}

std::string unique_label(const std::set<std::string>& used, const std::string& label) {
  if (!used.count(label)) return label;
  for (int k = 2;; ++k) {
    std::string candidate = label + "_" + std::to_string(k);
    if (!used.count(candidate)) return candidate;
  }
}

}  // namespace

ExpansionFactor block_rate(int k) { return quadratic_rate(k + 2); }

ExpansionFactor tau_power_rate(int k) {
  if (k < 1) throw std::invalid_argument("power must be >= 1");
  // Traces of M^k for M = [[2,1],[1,1]]: t_1 = 3, t_2 = 7, t_{k+1} = 3 t_k - t_{k-1}.
  long long prev = 2, cur = 3;
  for (int i = 1; i < k; ++i) {
    const long long next = 3 * cur - prev;
    prev = cur;
    cur = next;
  }
  return quadratic_rate(cur);
}

ConstructedAutomorphism make_identity(std::size_t n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  ConstructedAutomorphism c;
  c.family = "identity";
  c.params["n"] = static_cast<long long>(n);
  c.automorphism = Automorphism::identity(n);
  c.names = default_names(n);
  for (std::size_t i = 0; i < n; ++i) c.fixed_generators.push_back(gen(i, n));
  c.expected.e_prime = 0;
  c.expected.d = 0;
  c.expected.fix_rank = n;
  return c;
}

ConstructedAutomorphism make_tau() { return rank_two_block("tau", tau_block(), block_rate(1)); }

ConstructedAutomorphism make_sigma(int k) {
  ConstructedAutomorphism c = rank_two_block("sigma", sigma_block(k), block_rate(k));
  c.params["k"] = k;
  return c;
}

ConstructedAutomorphism make_alpha_poly(std::size_t n) {
  if (n < 2) throw std::invalid_argument("alpha_poly needs n >= 2");
  std::vector<Word> img, inv;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      img.push_back(gen(0, n));
      inv.push_back(gen(0, n));
    } else {
      img.push_back(gen(i, n) * gen(i - 1, n));
      inv.push_back(gen(i, n) * inv[i - 1].inverse());
    }
  }
  ConstructedAutomorphism c;
  c.family = "alpha_poly";
  c.params["n"] = static_cast<long long>(n);
  c.automorphism = Automorphism(std::move(img), std::move(inv));
  for (std::size_t i = 1; i <= n; ++i) c.names.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    c.witnesses.push_back({gen(i, n), GrowthType::polynomial(static_cast<int>(i))});
  }
  c.fixed_generators = {gen(0, n), gen(1, n) * gen(0, n) * gen(1, n).inverse()};
  c.expected.e_prime = 0;
  c.expected.d = n - 1;
  c.expected.fix_rank = 2;
  return c;
}

ConstructedAutomorphism make_beta(std::size_t ell, bool with_t) {
  if (ell < 1) throw std::invalid_argument("beta needs l >= 1");
  const std::size_t n = ell + 2 + (with_t ? 1 : 0);
  // Generators a, a0, ..., a_l, then t.
  auto ai = [](std::size_t i) { return i + 1; };
  const Word a = gen(0, n);
  std::vector<Word> img(n, Word(n)), inv(n, Word(n));
  img[0] = a;
  inv[0] = a;
  img[ai(0)] = gen(ai(0), n) * a;
  inv[ai(0)] = gen(ai(0), n) * a.inverse();
  for (std::size_t i = 1; i <= ell; ++i) {
    const Word c = gen(ai(i - 1), n) * a;
    const Word dc = inv[ai(i - 1)] * a;
    img[ai(i)] = c * gen(ai(i), n) * c.inverse();
    inv[ai(i)] = dc.inverse() * gen(ai(i), n) * dc;
  }
  if (with_t) {
    const std::size_t t = n - 1;
    img[t] = gen(t, n) * gen(ai(ell), n) * a;
    inv[t] = gen(t, n) * (inv[ai(ell)] * a).inverse();
  }
  ConstructedAutomorphism c;
  c.family = "beta";
  c.params["l"] = static_cast<long long>(ell);
  c.params["t"] = with_t ? 1 : 0;
  c.automorphism = Automorphism(std::move(img), std::move(inv));
  c.names = {"a"};
  for (std::size_t i = 0; i <= ell; ++i) c.names.push_back("a" + std::to_string(i));
  if (with_t) c.names.push_back("t");
  c.witnesses.push_back({a * gen(ai(ell), n), GrowthType::polynomial(static_cast<int>(ell + 1))});
  if (with_t) c.witnesses.push_back({gen(n - 1, n), GrowthType::polynomial(static_cast<int>(ell + 2))});
  c.expected.e_prime = 0;
  c.expected.d = ell + (with_t ? 2 : 1);
  return c;
}

ConstructedAutomorphism make_nested(std::size_t ell) {
  if (ell < 1) throw std::invalid_argument("nested needs l >= 1");
  const std::size_t n = 2 * ell;
  auto ai = [](std::size_t i) { return 2 * (i - 1); };
  auto bi = [](std::size_t i) { return 2 * (i - 1) + 1; };
  std::vector<Word> img(n, Word(n)), inv(n, Word(n));
  for (std::size_t i = 1; i <= ell; ++i) {
    const Word A = gen(ai(i), n);
    const Word B = gen(bi(i), n);
    img[ai(i)] = i == 1 ? A * B : A * B * gen(ai(i - 1), n);
    img[bi(i)] = A;
    inv[ai(i)] = B;
    inv[bi(i)] = i == 1 ? B.inverse() * A : B.inverse() * A * gen(bi(i - 1), n).inverse();
  }
  ConstructedAutomorphism c;
  c.family = "nested";
  c.params["l"] = static_cast<long long>(ell);
  c.automorphism = Automorphism(std::move(img), std::move(inv));
  for (std::size_t i = 1; i <= ell; ++i) {
    c.names.push_back("a" + std::to_string(i));
    c.names.push_back("b" + std::to_string(i));
  }
  const ExpansionFactor golden = ExpansionFactor::largest_root(IntPoly({BigInt(-1), BigInt(-1), BigInt(1)}));
  LaminationPoset poset;
  for (std::size_t i = 1; i <= ell; ++i) {
    poset.add_node("L" + std::to_string(i), golden);
    if (i > 1) poset.add_edge(i - 2, i - 1);
    c.witnesses.push_back({gen(ai(i), n), golden.as_growth(static_cast<int>(i - 1))});
  }
  c.poset = std::move(poset);
  c.expected.e_prime = ell;
  c.expected.d = 0;
  c.expected.s = ell - 1;
  return c;
}

ConstructedAutomorphism make_theta(std::size_t n) {
  if (n < 3) throw std::invalid_argument("theta needs n >= 3");
  const bool even = n % 2 == 0;
  const std::size_t ell = even ? (n - 4) / 2 : (n - 3) / 2;
  std::vector<ThetaBlock> blocks(ell + 1, ThetaBlock{tau_block(), block_rate(1)});
  ConstructedAutomorphism c = theta_general(blocks, even ? 1 : 0);
  c.family = even ? "theta_even" : "theta";
  c.params["n"] = static_cast<long long>(n);
  return c;
}

ConstructedAutomorphism make_theta_varied(std::size_t n) {
  if (n < 3) throw std::invalid_argument("theta_varied needs n >= 3");
  if (n % 2 == 0) throw std::invalid_argument("theta_varied is defined for odd n only");
  const std::size_t ell = (n - 3) / 2;
  std::vector<ThetaBlock> blocks;
  for (std::size_t i = 0; i <= ell; ++i) {
    blocks.push_back({power(tau_block(), static_cast<unsigned>(i + 1)),
                      tau_power_rate(static_cast<int>(i + 1))});
  }
  ConstructedAutomorphism c = theta_general(blocks, 0);
  c.family = "theta_varied";
  c.params["n"] = static_cast<long long>(n);
  return c;
}

ConstructedAutomorphism make_inner(const Word& x) {
  ConstructedAutomorphism c;
  c.family = "inner";
  c.automorphism = inner(x);
  c.names = default_names(x.rank());
  c.expected.e_prime = 0;
  c.expected.d = 0;
  return c;
}

ConstructedAutomorphism free_product(const ConstructedAutomorphism& a,
                                     const ConstructedAutomorphism& b) {
  ConstructedAutomorphism c;
  c.family = a.family + "*" + b.family;
  const std::size_t n = a.rank() + b.rank();
  c.automorphism = fga::free_product(a.automorphism, b.automorphism);
  std::set<std::string> used(a.names.begin(), a.names.end());
  c.names = a.names;
  for (const std::string& name : b.names) {
    c.names.push_back(unique_label(used, name));
    used.insert(c.names.back());
  }
  for (const Witness& w : a.witnesses) c.witnesses.push_back({shift(w.word, 0, n), w.growth});
  for (const Witness& w : b.witnesses) c.witnesses.push_back({shift(w.word, a.rank(), n), w.growth});
  for (const Word& w : a.fixed_generators) c.fixed_generators.push_back(shift(w, 0, n));
  for (const Word& w : b.fixed_generators) c.fixed_generators.push_back(shift(w, a.rank(), n));
  if (a.poset || b.poset) {
    LaminationPoset p;
    std::set<std::string> labels;
    for (const ConstructedAutomorphism* part : {&a, &b}) {
      if (!part->poset) continue;
      const std::size_t base = p.size();
      for (std::size_t i = 0; i < part->poset->size(); ++i) {
        const std::string label = unique_label(labels, part->poset->label(i));
        labels.insert(label);
        p.add_node(label, part->poset->lambda0(i));
      }
      for (const auto& [sub, super] : part->poset->edges()) p.add_edge(base + sub, base + super);
    }
    c.poset = std::move(p);
  }
  auto combine = [](const std::optional<std::size_t>& x, const std::optional<std::size_t>& y,
                    bool add) -> std::optional<std::size_t> {
    if (!x || !y) return std::nullopt;
    return add ? *x + *y : std::max(*x, *y);
  };
  if (a.expected.e_prime && b.expected.e_prime) c.expected.e_prime = distinct_exponential(c.witnesses);
  c.expected.d = combine(a.expected.d, b.expected.d, false);
  c.expected.fix_rank = combine(a.expected.fix_rank, b.expected.fix_rank, true);
  if (a.expected.s || b.expected.s) {
    c.expected.s = std::max(a.expected.s.value_or(0), b.expected.s.value_or(0));
  }
  return c;
}

ConstructedAutomorphism add_twist_generator(const ConstructedAutomorphism& base, const Word& w,
                                            std::optional<std::size_t> t_degree) {
  if (w.rank() != base.rank()) throw RankError("twist word has the wrong rank");
  if (w.empty()) throw std::invalid_argument("twist word must be nontrivial");
  const Automorphism ext = base.automorphism.with_fixed_generator();
  const std::size_t n = ext.rank();
  const Word t = gen(n - 1, n);
  const Word wp = w.promoted(n);
  std::vector<Word> img = ext.images();
  img[n - 1] = t * wp;
  ConstructedAutomorphism c;
  if (ext.has_inverse()) {
    std::vector<Word> inv = *ext.inverse_images();
    inv[n - 1] = t * ext.inverse().apply(wp).inverse();
    c.automorphism = Automorphism(std::move(img), std::move(inv));
  } else {
    c.automorphism = Automorphism(std::move(img));
  }
  c.family = base.family + "+twist";
  c.params = base.params;
  c.names = base.names;
  std::set<std::string> used(c.names.begin(), c.names.end());
  c.names.push_back(unique_label(used, "t"));
  for (const Witness& x : base.witnesses) c.witnesses.push_back({x.word.promoted(n), x.growth});
  for (const Word& x : base.fixed_generators) c.fixed_generators.push_back(x.promoted(n));
  c.poset = base.poset;
  c.expected.e_prime = base.expected.e_prime;
  c.expected.s = base.expected.s;
  if (t_degree) {
    c.witnesses.push_back({t, GrowthType::polynomial(static_cast<int>(*t_degree))});
    if (base.expected.d) c.expected.d = std::max(*base.expected.d, *t_degree);
  }
  return c;
}

bool optimal_region_covered(std::size_t n, std::size_t e, std::size_t d) {
  if (e == 0) return true;
  if (d == 0) return 2 * e <= n;
  return 2 * e <= n - 1;
}

ConstructedAutomorphism construct_optimal(std::size_t n, std::size_t e, std::size_t d) {
  const long long N = static_cast<long long>(n);
  const long long E = static_cast<long long>(e);
  const long long D = static_cast<long long>(d);
  if (n < 1 || !admissible(N, E, D)) {
    throw InadmissibleError("(e, d) = (" + std::to_string(e) + ", " + std::to_string(d) +
                            ") is not admissible for n = " + std::to_string(n));
  }
  const long long rho0 = max_fixed_rank(N, E, D);
  if (!optimal_region_covered(n, e, d)) {
    throw UnsupportedRegion(d == 0 ? "e > n/2 with d = 0 needs the geometric block phi"
                                   : "e > (n-1)/2 with d >= 1 needs the geometric block phi");
  }

  auto identity_part = [](std::size_t k) {
    ConstructedAutomorphism c = make_identity(k);
    c.names.clear();
    for (std::size_t i = 1; i <= k; ++i) c.names.push_back("c" + std::to_string(i));
    return c;
  };
  auto block_part = [](int k, std::size_t index) {
    ConstructedAutomorphism c = make_sigma(k);
    c.names = {"e" + std::to_string(index), "f" + std::to_string(index)};
    return c;
  };

  ConstructedAutomorphism out;
  if (e == 0 && d == 0) {
    out = identity_part(n);
    out.region = "identity";
  } else if (e == 0) {
    out = make_alpha_poly(d + 1);
    if (n > d + 1) out = free_product(out, identity_part(n - d - 1));
    out.region = "polynomial";
  } else if (d == 0) {
    std::optional<ConstructedAutomorphism> acc;
    if (n > 2 * e) acc = identity_part(n - 2 * e);
    for (std::size_t i = 1; i <= e; ++i) {
      ConstructedAutomorphism blk = block_part(static_cast<int>(i), i);
      acc = acc ? free_product(*acc, blk) : blk;
    }
    out = *acc;
    out.region = "blocks";
  } else {
    OptimalSolution s;
    s.w = static_cast<int>(std::max(0LL, E - rho0 + 1));
    s.x = static_cast<int>(D - s.w - 1);
    s.y = static_cast<int>(rho0 - E + s.w - 1);
    s.z = static_cast<int>(E - s.w - 1);
    if (s.x < 0 || s.y < 0 || s.z < 0) throw std::logic_error("optimal solver produced a negative parameter");
    std::vector<ThetaBlock> blocks;
    for (int i = 0; i <= s.w; ++i) blocks.push_back({sigma_block(i + 1), block_rate(i + 1)});
    out = theta_general(blocks, static_cast<std::size_t>(s.x));
    out.family = "theta";
    if (s.y > 0) out = free_product(out, identity_part(static_cast<std::size_t>(s.y)));
    for (int i = 0; i < s.z; ++i) {
      out = free_product(out, block_part(s.w + 2 + i, static_cast<std::size_t>(i + 1)));
    }
    out.solution = s;
    out.region = "mixed";
  }
  if (out.rank() != n) throw std::logic_error("optimal construction has the wrong rank");
  out.family = "optimal";
  out.params = {{"n", N}, {"e", E}, {"d", D}};
  out.expected.e_prime = e;
  out.expected.d = d;
  out.expected.fix_rank = static_cast<std::size_t>(rho0);
  return out;
}

std::vector<std::string> family_ids() {
  return {"identity", "tau", "sigma", "alpha_poly", "beta", "nested", "theta", "theta_even",
          "theta_varied", "optimal"};
}

ConstructedAutomorphism make_family(const std::string& id, const std::map<std::string, long long>& p) {
  auto need = [&](const char* key) {
    const auto it = p.find(key);
    if (it == p.end()) throw std::invalid_argument("family " + id + " needs parameter --" + key);
    if (it->second < 0) throw std::invalid_argument(std::string("parameter --") + key + " must be >= 0");
    return it->second;
  };
  auto get = [&](const char* key, long long fallback) {
    const auto it = p.find(key);
    return it == p.end() ? fallback : it->second;
  };
  if (id == "identity") return make_identity(static_cast<std::size_t>(need("n")));
  if (id == "tau") return make_tau();
  if (id == "sigma") return make_sigma(static_cast<int>(need("k")));
  if (id == "alpha_poly") return make_alpha_poly(static_cast<std::size_t>(need("n")));
  if (id == "beta") return make_beta(static_cast<std::size_t>(need("l")), get("t", 0) != 0);
  if (id == "nested") return make_nested(static_cast<std::size_t>(need("l")));
  if (id == "theta" || id == "theta_even") return make_theta(static_cast<std::size_t>(need("n")));
  if (id == "theta_varied") return make_theta_varied(static_cast<std::size_t>(need("n")));
  if (id == "optimal") {
    return construct_optimal(static_cast<std::size_t>(need("n")), static_cast<std::size_t>(need("e")),
                             static_cast<std::size_t>(need("d")));
  }
  throw std::invalid_argument("unknown family " + id);
}

}  // namespace fga
