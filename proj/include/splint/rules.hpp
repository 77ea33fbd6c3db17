#pragma once

// Closed-form branching rules for the splint cases, and a harness that checks
// each one against the character-restriction oracle.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "splint/branch.hpp"
#include "splint/chars.hpp"
#include "splint/error.hpp"
#include "splint/rootsys.hpp"
#include "splint/schur.hpp"

namespace splint {

// ---------------------------------------------------------------------------
// Gelfand-Tsetlin interlacing (Types I and II)

/// A_r -> A_{r-1}: all mu with lambda_i >= mu_i >= lambda_{i+1}
/// (lambda_{r+1} = 0), reduced to sl_r labels. Distinct GL_r patterns that
/// differ by a multiple of the determinant land on the same label and add up.
inline BranchingResult rule_gt_typeI(int r, const std::vector<int>& partition) {
  if (r < 2 || r > 4 || static_cast<int>(partition.size()) != r) {
    throw Error(ErrorCode::InvalidPartition, "need a partition with " + std::to_string(r) + " parts");
  }
  for (int i = 0; i < r; ++i) {
    const int next = i + 1 < r ? partition[static_cast<std::size_t>(i + 1)] : 0;
    if (partition[static_cast<std::size_t>(i)] < next) {
      throw Error(ErrorCode::InvalidPartition, "parts must be nonincreasing and nonnegative");
    }
  }
  const SplintCase c = splint_case("I" + std::to_string(r));
  const RootSystem& amb = catalog(c.ambient);
  const RootSystem& sub = catalog(c.sub);
  WeightVector top(r);
  for (int i = 0; i < r; ++i) top.set_doubled(i, 2 * partition[static_cast<std::size_t>(i)]);

  Summands out;
  std::vector<int> mu(static_cast<std::size_t>(r));
  std::function<void(int)> rec = [&](int i) {
    if (i == r) {
      WeightVector w(r - 1);
      for (int j = 0; j + 1 < r; ++j) w.set_doubled(j, 2 * (mu[static_cast<std::size_t>(j)] - mu.back()));
      out[sub.from_lattice(w).coeffs] += 1;
      return;
    }
    const int hi = partition[static_cast<std::size_t>(i)];
    const int lo = i + 1 < r ? partition[static_cast<std::size_t>(i + 1)] : 0;
    for (int v = lo; v <= hi; ++v) {
      mu[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return make_result(c, amb.from_lattice(top).coeffs, std::move(out));
}

/// B_r label of the module with highest weight f (epsilon coordinates):
/// (f1-f2, ..., f_{r-1}-f_r, 2 f_r).
inline std::vector<int> b_label_from_f(const WeightVector& f) {
  const int r = f.rank();
  std::vector<int> out(static_cast<std::size_t>(r));
  for (int i = 0; i + 1 < r; ++i) out[static_cast<std::size_t>(i)] = (f.doubled(i) - f.doubled(i + 1)) / 2;
  out.back() = f.doubled(r - 1);
  return out;
}

inline WeightVector f_from_b_label(const std::vector<int>& label) {
  const int r = static_cast<int>(label.size());
  WeightVector f(r);
  int acc = label.back();
  f.set_doubled(r - 1, acc);
  for (int i = r - 2; i >= 0; --i) {
    acc += 2 * label[static_cast<std::size_t>(i)];
    f.set_doubled(i, acc);
  }
  return f;
}

/// D_r label of highest weight g: (g1-g2, ..., g_{r-1}-g_r, g_{r-1}+g_r).
inline std::vector<int> d_label_from_g(const WeightVector& g) {
  const int r = g.rank();
  std::vector<int> out(static_cast<std::size_t>(r));
  for (int i = 0; i + 1 < r; ++i) out[static_cast<std::size_t>(i)] = (g.doubled(i) - g.doubled(i + 1)) / 2;
  out.back() = (g.doubled(r - 2) + g.doubled(r - 1)) / 2;
  return out;
}

/// B_r -> D_r: f1 >= g1 >= f2 >= ... >= g_{r-1} >= f_r >= |g_r|, f_i - g_i integral.
inline Summands gt_typeII_summands(const WeightVector& f) {
  const int r = f.rank();
  bool integral = f.doubled(0) % 2 == 0;
  for (int i = 0; i < r; ++i) {
    const int next = i + 1 < r ? f.doubled(i + 1) : 0;
    if (f.doubled(i) < next || (f.doubled(i) % 2 == 0) != integral) {
      throw Error(ErrorCode::InvalidLabel, "f = " + f.to_string() +
                                               " must be nonincreasing, nonnegative, all integers or all half-integers");
    }
  }
  Summands out;
  WeightVector g(r);
  std::function<void(int)> rec = [&](int i) {
    if (i == r) {
      out[d_label_from_g(g)] += 1;
      return;
    }
    const int hi = f.doubled(i);
    const int lo = i + 1 < r ? f.doubled(i + 1) : -f.doubled(i);
    for (int v = hi; v >= lo; v -= 2) {
      g.set_doubled(i, v);
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

inline BranchingResult rule_gt_typeII(int r, const WeightVector& f) {
  if (f.rank() != r || r < 2 || r > 4) throw Error(ErrorCode::InvalidLabel, "need r in 2..4 coordinates");
  Summands s = gt_typeII_summands(f);
  return make_result(splint_case("II" + std::to_string(r)), b_label_from_f(f), std::move(s));
}

/// B3 -> D3 in fundamental labels: sum over t <= a, r <= b, s <= c of
/// pi_{a+b-t-r, r+s, r+c-s}.
inline BranchingResult rule_b3_d3(int a, int b, int c) {
  Summands out;
  for (int t = 0; t <= a; ++t)
    for (int r = 0; r <= b; ++r)
      for (int s = 0; s <= c; ++s) out[{a + b - t - r, r + s, r + c - s}] += 1;
  return make_result(splint_case("II3"), {a, b, c}, std::move(out));
}

/// B2 -> D2: sum over r <= k, s <= l of pi_{r+s, r+l-s}.
inline BranchingResult rule_b2_d2(int k, int l) {
  Summands out;
  for (int r = 0; r <= k; ++r)
    for (int s = 0; s <= l; ++s) out[{r + s, r + l - s}] += 1;
  return make_result(splint_case("II2"), {k, l}, std::move(out));
}

/// B4 -> D4 by interlacing, converting labels through f and g.
inline BranchingResult rule_b4_d4(const std::vector<int>& label) {
  if (label.size() != 4) throw Error(ErrorCode::InvalidLabel, "B4 label needs four entries");
  return make_result(splint_case("V_B4_D4"), label, gt_typeII_summands(f_from_b_label(label)));
}

// ---------------------------------------------------------------------------
// G2 -> A2 hexagon

struct HexagonSpec {
  int k = 0;
  int l = 0;
  int m() const { return std::min(k, l); }
  std::array<LatticePoint, 6> vertices() const {
    return {{{k + l, l}, {k + l, 0}, {l, 0}, {0, l}, {0, k + l}, {l, k + l}}};
  }
};

/// 1 + min(depth, m) inside the hexagon, 0 outside.
inline int hexagon_multiplicity(const HexagonSpec& h, int alpha, int beta) {
  const int j = hexagon_depth(h.k, h.l, alpha, beta);
  return j < 0 ? 0 : 1 + std::min(j, h.m());
}

inline BranchingResult rule_g2_a2(int k, int l) {
  const HexagonSpec h{k, l};
  Summands out;
  for (int a = 0; a <= k + l; ++a)
    for (int b = 0; b <= k + l; ++b)
      if (const int n = hexagon_multiplicity(h, a, b); n > 0) out[{a, b}] = n;
  return make_result(splint_case("IV"), {k, l}, std::move(out));
}

// ---------------------------------------------------------------------------
// C3 -> A1^3

namespace detail {

/// Triples 0 <= r,s,t <= k with r+s+t = 2k.
inline std::vector<std::array<int, 3>> triples_t(int k) {
  std::vector<std::array<int, 3>> out;
  for (int r = 0; r <= k; ++r)
    for (int s = 0; s <= k; ++s)
      if (const int t = 2 * k - r - s; t >= 0 && t <= k) out.push_back({r, s, t});
  return out;
}

}  // namespace detail

/// Supported patterns (a,0,0), (0,b,0), (a,b,0), (0,0,c).
inline BranchingResult rule_c3(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw Error(ErrorCode::InvalidLabel, "negative C3 label");
  Summands out;
  if (b == 0 && c == 0) {
    for (int r = 0; r <= a; ++r)
      for (int s = 0; r + s <= a; ++s) out[{r, s, a - r - s}] += 1;
  } else if (a == 0 && c == 0) {
    for (int k = 0; k <= b; ++k)
      for (const auto& t : detail::triples_t(k)) out[{t[0], t[1], t[2]}] += b - k + 1;
  } else if (c == 0) {
    // Nested hexagons, one per level k, in the planes x+y+z = a+2b-2k.
    for (int k = 0; k <= b; ++k) {
      const int big = a + b - k;
      const int sum = a + 2 * b - 2 * k;
      const int cap = std::min(b - k, a);
      for (int x = 0; x <= big; ++x)
        for (int y = 0; y <= big; ++y) {
          const int z = sum - x - y;
          if (z < 0 || z > big) continue;
          const int j = std::min({x, y, z, big - x, big - y, big - z});
          out[{x, y, z}] += static_cast<std::int64_t>(k + 1) * (1 + std::min(j, cap));
        }
    }
  } else if (a == 0 && b == 0) {
    for (int k = 0; k <= c; ++k)
      for (const auto& t : detail::triples_t(k)) out[{c - t[0], c - t[1], c - t[2]}] += 1;
  } else {
    throw Error(ErrorCode::UnsupportedPattern, "no closed form for C3 label (" + std::to_string(a) + "," +
                                                   std::to_string(b) + "," + std::to_string(c) + ")");
  }
  return make_result(splint_case("III"), {a, b, c}, std::move(out));
}

// ---------------------------------------------------------------------------
// F4 -> B4 -> D4

enum class Series { First, Last };

inline Series parse_series(const std::string& s) {
  if (s == "first") return Series::First;
  if (s == "last") return Series::Last;
  throw Error(ErrorCode::InvalidLabel, "series must be 'first' or 'last'");
}

inline std::vector<int> series_label(Series s, int k) {
  return s == Series::First ? std::vector<int>{k, 0, 0, 0} : std::vector<int>{0, 0, 0, k};
}

/// F4 -> B4 for Pi_{k,0,0,0} and Pi_{0,0,0,k}.
inline BranchingResult rule_f4(Series series, int k) {
  Summands out;
  for (int s = 0; s <= k; ++s) {
    if (series == Series::First) {
      out[{0, s, 0, k - s}] += 1;
    } else {
      for (int t = 0; s + t <= k; ++t) out[{s, 0, 0, t}] += 1;
    }
  }
  return make_result(splint_case("V_F4_B4"), series_label(series, k), std::move(out));
}

/// F4 -> D4 for the same two series, via the composite formulas.
inline BranchingResult rule_f4_d4(Series series, int k) {
  Summands out;
  for (int s1 = 0; s1 <= k; ++s1)
    for (int s2 = 0; s1 + s2 <= k; ++s2)
      for (int t = 0; s1 + s2 + t <= k; ++t) {
        if (series == Series::First) {
          out[{s1, s2, t, k - s1 - s2 - t}] += 1;
        } else {
          // here (s1, s2, t) play the roles of (s', t', t'')
          out[{s1, 0, s2, t}] += k + 1 - s1 - s2 - t;
        }
      }
  return make_result(splint_case("V_F4_D4"), series_label(series, k), std::move(out));
}

/// Tabulated F4 -> D4 decompositions of Pi_{0,0,0,1}, Pi_{1,0,0,0},
/// Pi_{2,0,0,0} and Pi_{0,0,1,0}.
inline const std::map<std::vector<int>, Summands>& f4_d4_examples() {
  static const std::map<std::vector<int>, Summands> table{
      {{0, 0, 0, 1}, {{{0, 0, 0, 0}, 2}, {{1, 0, 0, 0}, 1}, {{0, 0, 1, 0}, 1}, {{0, 0, 0, 1}, 1}}},
      {{1, 0, 0, 0}, {{{0, 1, 0, 0}, 1}, {{1, 0, 0, 0}, 1}, {{0, 0, 1, 0}, 1}, {{0, 0, 0, 1}, 1}}},
      {{2, 0, 0, 0},
       {{{0, 2, 0, 0}, 1},
        {{2, 0, 0, 0}, 1},
        {{0, 0, 2, 0}, 1},
        {{0, 0, 0, 2}, 1},
        {{1, 1, 0, 0}, 1},
        {{0, 1, 1, 0}, 1},
        {{0, 1, 0, 1}, 1},
        {{1, 0, 1, 0}, 1},
        {{1, 0, 0, 1}, 1},
        {{0, 0, 1, 1}, 1}}},
      {{0, 0, 1, 0},
       {{{0, 1, 0, 0}, 2},
        {{1, 0, 0, 0}, 2},
        {{0, 0, 1, 0}, 2},
        {{0, 0, 0, 1}, 2},
        {{1, 0, 1, 0}, 1},
        {{1, 0, 0, 1}, 1},
        {{0, 0, 1, 1}, 1},
        {{0, 0, 0, 0}, 1}}},
  };
  return table;
}

inline BranchingResult rule_f4_d4_example(const std::vector<int>& lambda) {
  const auto& t = f4_d4_examples();
  auto it = t.find(lambda);
  if (it == t.end()) throw Error(ErrorCode::UnsupportedPattern, "no tabulated F4 -> D4 decomposition");
  return make_result(splint_case("V_F4_D4"), lambda, it->second);
}

/// Multiplicities invariant under permuting positions 1, 3, 4 of pi_{a,b,c,d}.
inline bool has_triality_symmetry(const Summands& s) {
  for (const auto& [nu, m] : s) {
    std::array<int, 3> outer{nu[0], nu[2], nu[3]};
    std::sort(outer.begin(), outer.end());
    do {
      auto it = s.find({outer[0], nu[1], outer[1], outer[2]});
      if (it == s.end() || it->second != m) return false;
    } while (std::next_permutation(outer.begin(), outer.end()));
  }
  return true;
}

// ---------------------------------------------------------------------------
// Verification harness

struct RuleReport {
  std::string case_tag;
  std::vector<int> lambda;
  std::string rule;
  BranchingResult rule_result;
  BranchingResult oracle_result;
  bool equal = false;
  std::string expected;  // "theorem" or "conjecture"
};

inline std::string expected_status(const std::string& tag) {
  if (tag == "III" || tag == "V_F4_B4" || tag == "V_F4_D4") return "conjecture";
  return "theorem";
}

namespace detail {

inline bool all_zero_except(const std::vector<int>& v, std::size_t keep) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != keep && v[i] != 0) return false;
  return true;
}

}  // namespace detail

/// The closed-form rule for (case, lambda) together with its name.
inline std::pair<std::string, BranchingResult> apply_rule(const std::string& tag_in, const std::vector<int>& lambda) {
  const SplintCase c = splint_case(tag_in);
  const RootSystem& amb = catalog(c.ambient);
  if (static_cast<int>(lambda.size()) != amb.rank()) {
    throw Error(ErrorCode::RankMismatch, c.ambient + " weights have " + std::to_string(amb.rank()) + " labels");
  }
  for (int x : lambda)
    if (x < 0) throw Error(ErrorCode::NotDominant, "labels must be nonnegative");
  const std::string& t = c.tag;
  if (t.size() == 2 && t[0] == 'I' && std::isdigit(static_cast<unsigned char>(t[1]))) {
    const WeightVector w = amb.to_lattice(lambda);
    std::vector<int> part;
    for (int i = 0; i < w.rank(); ++i) part.push_back(w.doubled(i) / 2);
    return {"gt_type_I", rule_gt_typeI(amb.rank(), part)};
  }
  if (t == "II2") return {"b2_d2", rule_b2_d2(lambda[0], lambda[1])};
  if (t == "II3") return {"b3_d3", rule_b3_d3(lambda[0], lambda[1], lambda[2])};
  if (t == "II4") return {"gt_type_II", rule_gt_typeII(4, f_from_b_label(lambda))};
  if (t == "III") return {"c3_a1a1a1", rule_c3(lambda[0], lambda[1], lambda[2])};
  if (t == "IV") return {"g2_a2_hexagon", rule_g2_a2(lambda[0], lambda[1])};
  if (t == "V_B4_D4") return {"b4_d4_gt", rule_b4_d4(lambda)};
  if (t == "V_F4_B4" || t == "V_F4_D4") {
    const bool to_b4 = t == "V_F4_B4";
    if (detail::all_zero_except(lambda, 0)) {
      return {to_b4 ? "f4_b4_first" : "f4_d4_first",
              to_b4 ? rule_f4(Series::First, lambda[0]) : rule_f4_d4(Series::First, lambda[0])};
    }
    if (detail::all_zero_except(lambda, 3)) {
      return {to_b4 ? "f4_b4_last" : "f4_d4_last",
              to_b4 ? rule_f4(Series::Last, lambda[3]) : rule_f4_d4(Series::Last, lambda[3])};
    }
    if (!to_b4 && f4_d4_examples().count(lambda)) return {"f4_d4_example", rule_f4_d4_example(lambda)};
  }
  throw Error(ErrorCode::UnsupportedPattern, "no closed-form rule for " + t + " at this weight");
}

inline RuleReport verify_rule(const std::string& tag, const std::vector<int>& lambda,
                              CharacterCache& cache = default_character_cache()) {
  RuleReport rep;
  auto [name, result] = apply_rule(tag, lambda);
  rep.case_tag = result.case_tag;
  rep.lambda = lambda;
  rep.rule = std::move(name);
  rep.rule_result = std::move(result);
  rep.oracle_result = branch_oracle(splint_case(tag), lambda, cache);
  rep.equal = rep.rule_result.summands == rep.oracle_result.summands;
  rep.expected = expected_status(rep.case_tag);
  return rep;
}

}  // namespace splint
