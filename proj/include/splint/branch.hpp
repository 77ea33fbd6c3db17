#pragma once

// Splint embeddings and the character-restriction oracle.
//
// For the equal-rank cases the two Cartan tori coincide and the embedding is
// the identity on coordinates; only the fundamental-weight labels change.
// Type I drops one rank: A_r -> A_{r-1} keeps L_1..L_{r-1} and recentres.

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "splint/chars.hpp"
#include "splint/error.hpp"
#include "splint/rootsys.hpp"
#include "splint/weightlat.hpp"

namespace splint {

struct SplintCase {
  std::string tag;
  std::string ambient;
  std::string sub;
  LatticeMap embedding;
};

using Summands = std::map<std::vector<int>, std::int64_t>;

struct BranchingResult {
  std::string case_tag;
  DominantWeight ambient_weight;
  std::string sub;
  Summands summands;
  std::int64_t coefficient_sum = 0;
  bool dim_check = false;
};

inline const std::vector<std::string>& case_tags() {
  static const std::vector<std::string> tags{"I2", "I3", "I4", "II2", "II3", "II4", "III",
                                             "IV", "V_F4_B4", "V_B4_D4", "V_F4_D4"};
  return tags;
}

/// Accepts "II2" and "II(2)" spellings; returns the canonical tag.
inline std::string canonical_case_tag(std::string tag) {
  std::string out;
  for (char ch : tag)
    if (ch != '(' && ch != ')' && ch != ' ') out += ch;
  if (out == "III3") out = "III";
  for (const auto& t : case_tags())
    if (t == out) return out;
  throw Error(ErrorCode::UnsupportedCase, "unknown splint case '" + tag + "'");
}

inline LatticeMap type_one_map(int r) {
  // A_r coordinates (c_1..c_r) -> A_{r-1} coordinates (c_i - c_r)_{i<r}.
  std::vector<Rational> e(static_cast<std::size_t>((r - 1) * r), Rational(0));
  for (int i = 0; i + 1 < r; ++i) {
    e[static_cast<std::size_t>(i * r + i)] = 1;
    e[static_cast<std::size_t>(i * r + r - 1)] = -1;
  }
  return LatticeMap(r - 1, r, std::move(e), "A" + std::to_string(r), "A" + std::to_string(r - 1));
}

inline SplintCase splint_case(const std::string& tag_in) {
  const std::string tag = canonical_case_tag(tag_in);
  auto equal_rank = [&](std::string amb, std::string sub) {
    const int r = catalog(amb).rank();
    return SplintCase{tag, amb, sub, LatticeMap::identity(r, amb, sub)};
  };
  if (tag.size() == 2 && tag[0] == 'I' && std::isdigit(static_cast<unsigned char>(tag[1]))) {
    const int r = tag[1] - '0';
    return SplintCase{tag, "A" + std::to_string(r), "A" + std::to_string(r - 1), type_one_map(r)};
  }
  if (tag.rfind("II", 0) == 0 && tag.size() == 3 && std::isdigit(static_cast<unsigned char>(tag[2]))) {
    const std::string r(1, tag[2]);
    return equal_rank("B" + r, "D" + r);
  }
  if (tag == "III") return equal_rank("C3", "A1^3");
  if (tag == "IV") return equal_rank("G2", "A2");
  if (tag == "V_F4_B4") return equal_rank("F4", "B4");
  if (tag == "V_B4_D4") return equal_rank("B4", "D4");
  if (tag == "V_F4_D4") return equal_rank("F4", "D4");
  throw Error(ErrorCode::UnsupportedCase, "no embedding for '" + tag + "'");
}

inline LatticeMap embedding_map(const SplintCase& c) { return c.embedding; }

namespace detail {

inline Summands peel(const FormalCharacter& c, const RootSystem& sub, CharacterCache& cache, bool virtual_ok) {
  if (c.rank() != sub.rank()) {
    throw Error(ErrorCode::RankMismatch, "character rank does not match " + sub.label());
  }
  FormalCharacter rem = c;
  Summands out;
  const WeightVector& rho = sub.rho();
  while (!rem.empty()) {
    const WeightVector* best = nullptr;
    long best_key = 0;
    for (const auto& [mu, coeff] : rem.terms()) {
      const long key = sub.ip2(mu, rho);
      if (!best || key > best_key || (key == best_key && *best < mu)) {
        best = &mu;
        best_key = key;
      }
    }
    const WeightVector lead = *best;
    if (!sub.is_dominant(lead)) {
      throw Error(ErrorCode::NondominantLeadingTerm, lead.to_string() + " in " + sub.label());
    }
    const std::int64_t m = rem[lead];
    if (m < 0 && !virtual_ok) {
      throw Error(ErrorCode::NegativeMultiplicity,
                  std::to_string(m) + " at " + lead.to_string() + " in " + sub.label());
    }
    const DominantWeight nu = sub.from_lattice(lead);
    rem.add_scaled(cache.get(sub, nu)->character, -m);
    out[nu.coeffs] += m;
  }
  return out;
}

}  // namespace detail

/// Greedy highest-weight peeling. The leading term is the support weight of
/// largest (mu, rho_sub), ties broken towards the lexicographically larger
/// weight; it must be dominant with positive coefficient.
inline Summands decompose(const FormalCharacter& c, const RootSystem& sub,
                          CharacterCache& cache = default_character_cache()) {
  return detail::peel(c, sub, cache, false);
}

/// Same peeling, allowing negative coefficients (virtual characters).
inline Summands decompose_virtual(const FormalCharacter& c, const RootSystem& sub,
                                  CharacterCache& cache = default_character_cache()) {
  return detail::peel(c, sub, cache, true);
}

/// Fills coefficient_sum and dim_check (sum of m * dim(nu) == dim(lambda)).
inline void finalize(BranchingResult& r) {
  const RootSystem& amb = catalog(r.ambient_weight.system);
  const RootSystem& sub = catalog(r.sub);
  r.coefficient_sum = 0;
  std::int64_t total = 0;
  for (const auto& [nu, m] : r.summands) {
    r.coefficient_sum += m;
    total += m * dim_weyl(sub, sub.to_lattice(nu));
  }
  r.dim_check = total == dim_weyl(amb, r.ambient_weight);
}

inline BranchingResult make_result(const SplintCase& c, const std::vector<int>& lambda, Summands s) {
  BranchingResult r;
  r.case_tag = c.tag;
  r.ambient_weight = DominantWeight{lambda, c.ambient};
  r.sub = c.sub;
  r.summands = std::move(s);
  finalize(r);
  return r;
}

/// Restrict the ambient character along the embedding and decompose.
inline BranchingResult branch_oracle(const SplintCase& c, const std::vector<int>& lambda,
                                     CharacterCache& cache = default_character_cache()) {
  const RootSystem& amb = catalog(c.ambient);
  const RootSystem& sub = catalog(c.sub);
  const auto chi = cache.get(amb, DominantWeight{lambda, c.ambient});
  return make_result(c, lambda, decompose(apply_map(c.embedding, chi->character), sub, cache));
}

struct CoefficientSumReport {
  std::int64_t coefficient_sum = 0;
  std::int64_t aux_dimension = 0;
  bool equal = false;
};

/// Compares the number of irreducible summands with the dimension of an
/// auxiliary module.
inline CoefficientSumReport coefficient_sum_report(const BranchingResult& r, const RootSystem& aux,
                                                   const std::vector<int>& omega) {
  CoefficientSumReport rep;
  rep.coefficient_sum = r.coefficient_sum;
  rep.aux_dimension = dim_weyl(aux, aux.to_lattice(omega));
  rep.equal = rep.coefficient_sum == rep.aux_dimension;
  return rep;
}

}  // namespace splint
