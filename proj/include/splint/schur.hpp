#pragma once

// Schur functions in three variables modulo x1 x2 x3 = 1, kept in the
// normalized basis s_{a,b,0}. Used to check the hexagon identity for G2 -> A2
// at the level of symmetric functions.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splint/branch.hpp"
#include "splint/chars.hpp"
#include "splint/error.hpp"
#include "splint/rootsys.hpp"

namespace splint {

struct SchurIndex {
  int a = 0;
  int b = 0;
  auto operator<=>(const SchurIndex&) const = default;
};

/// s_{a,b,c} -> s_{a-c,b-c,0}; nullopt unless a >= b >= c >= 0.
inline std::optional<SchurIndex> schur_normalize(int a, int b, int c) {
  if (a >= b && b >= c && c >= 0) return SchurIndex{a - c, b - c};
  return std::nullopt;
}

class SchurSum {
 public:
  using Map = std::map<SchurIndex, std::int64_t>;

  void add(const SchurIndex& s, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }
  void add(const std::optional<SchurIndex>& s, std::int64_t c) {
    if (s) add(*s, c);
  }
  void add_scaled(const SchurSum& o, std::int64_t f) {
    for (const auto& [s, c] : o.terms_) add(s, c * f);
  }

  const Map& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::int64_t operator[](const SchurIndex& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? 0 : it->second;
  }
  bool operator==(const SchurSum&) const = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      const std::int64_t a = c < 0 ? -c : c;
      if (a != 1) out += std::to_string(a);
      out += "s(" + std::to_string(s.a) + "," + std::to_string(s.b) + ",0)";
    }
    return out;
  }

 private:
  Map terms_;
};

inline SchurSum operator-(const SchurSum& x, const SchurSum& y) {
  SchurSum out = x;
  out.add_scaled(y, -1);
  return out;
}

inline SchurSum operator+(const SchurSum& x, const SchurSum& y) {
  SchurSum out = x;
  out.add_scaled(y, 1);
  return out;
}

/// e_2 * s_{a,b,0}: one box in each of two distinct rows.
inline SchurSum pieri_e2(const SchurIndex& s) {
  SchurSum out;
  out.add(schur_normalize(s.a + 1, s.b + 1, 0), 1);
  out.add(schur_normalize(s.a + 1, s.b, 1), 1);
  out.add(schur_normalize(s.a, s.b + 1, 1), 1);
  return out;
}

/// e_1 * s_{a,b,0}.
inline SchurSum pieri_e1(const SchurIndex& s) {
  SchurSum out;
  out.add(schur_normalize(s.a + 1, s.b, 0), 1);
  out.add(schur_normalize(s.a, s.b + 1, 0), 1);
  out.add(schur_normalize(s.a, s.b, 1), 1);
  return out;
}

/// H_{alpha,beta}, the six-term sum attached to a hexagon point; equal to
/// (s_{1,1,0} - s_{1,0,0}) s_{alpha+beta,alpha,0}.
inline SchurSum h_point(int alpha, int beta) {
  const int s = alpha + beta;
  SchurSum out;
  out.add(schur_normalize(s + 1, alpha + 1, 0), 1);
  out.add(schur_normalize(s, alpha + 1, 0), -1);
  out.add(schur_normalize(s - 1, alpha, 0), 1);
  out.add(schur_normalize(s - 1, alpha - 1, 0), -1);
  out.add(schur_normalize(s, alpha - 1, 0), 1);
  out.add(schur_normalize(s + 1, alpha, 0), -1);
  return out;
}

/// Six-term closed form for the sum of H over the i-th layer; the layer past
/// the last one is zero.
inline SchurSum h_layer(int i, int k, int l) {
  const int m = std::min(k, l);
  if (k < 0 || l < 0 || i < 0 || i > m + 1) {
    throw Error(ErrorCode::LayerOutOfRange, "layer " + std::to_string(i) + " of hexagon (" +
                                                std::to_string(k) + "," + std::to_string(l) + ")");
  }
  SchurSum out;
  if (i == m + 1) return out;
  out.add(schur_normalize(k + 2 * l - i + 1, k + l - i + 1, 0), 1);
  out.add(schur_normalize(k + l, k + l - i + 1, 0), -1);
  out.add(schur_normalize(l + i - 1, l, 0), 1);
  out.add(schur_normalize(l + i - 1, i - 1, 0), -1);
  out.add(schur_normalize(k + l, i - 1, 0), 1);
  out.add(schur_normalize(k + 2 * l - i + 1, l, 0), -1);
  return out;
}

using LatticePoint = std::pair<int, int>;

/// Depth of (alpha, beta) inside hexagon (k,l): the smallest of the six
/// defining functionals, negative outside.
inline int hexagon_depth(int k, int l, int alpha, int beta) {
  return std::min({alpha, beta, k + l - alpha, k + l - beta, alpha + beta - l, k + 2 * l - alpha - beta});
}

/// Points of the i-th layer of hexagon (k,l), sorted. Layer min(k,l) is the
/// whole innermost triangle.
inline std::vector<LatticePoint> layer_points(int i, int k, int l) {
  const int m = std::min(k, l);
  if (k < 0 || l < 0 || i < 0 || i > m) {
    throw Error(ErrorCode::LayerOutOfRange, "layer " + std::to_string(i) + " of hexagon (" +
                                                std::to_string(k) + "," + std::to_string(l) + ")");
  }
  std::vector<LatticePoint> pts;
  if (k < l) {
    // (alpha, beta) -> (k+l-alpha, k+l-beta) carries hexagon (l,k) onto (k,l).
    for (const auto& [a, b] : layer_points(i, l, k)) pts.emplace_back(k + l - a, k + l - b);
  } else if (i == l) {
    for (int a = l; a <= k; ++a)
      for (int b = l; a + b <= k + l; ++b) pts.emplace_back(a, b);
  } else {
    const int n = k + l - i;
    const LatticePoint vs[6] = {{n, l}, {n, i}, {l, i}, {i, l}, {i, n}, {l, n}};
    for (int v = 0; v < 6; ++v) {
      const auto [x0, y0] = vs[v];
      const auto [x1, y1] = vs[(v + 1) % 6];
      const int len = std::max(std::abs(x1 - x0), std::abs(y1 - y0));
      const int dx = (x1 > x0) - (x1 < x0);
      const int dy = (y1 > y0) - (y1 < y0);
      for (int t = 0; t < len; ++t) pts.emplace_back(x0 + t * dx, y0 + t * dy);
    }
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

inline SchurSum sum_h(const std::vector<LatticePoint>& pts) {
  SchurSum out;
  for (const auto& [a, b] : pts) out.add_scaled(h_point(a, b), 1);
  return out;
}

/// Innermost layer: the H's over the triangle sum to the layer closed form.
inline bool verify_lemma_triangle(int k, int l) {
  const int m = std::min(k, l);
  return sum_h(layer_points(m, k, l)) == h_layer(m, k, l);
}

/// Outer layers: sum over L_i equals H_{L_{i+2}} - 2 H_{L_{i+1}} + H_{L_i}.
inline bool verify_lemma_hex(int i, int k, int l) {
  SchurSum rhs = h_layer(i, k, l);
  rhs.add_scaled(h_layer(i + 1, k, l), -2);
  rhs.add_scaled(h_layer(i + 2, k, l), 1);
  return sum_h(layer_points(i, k, l)) == rhs;
}

/// sum_{alpha,beta} n_{alpha,beta} H_{alpha,beta}, with n = i+1 on layer i.
inline SchurSum theorem_lhs(int k, int l) {
  SchurSum out;
  for (int i = 0; i <= std::min(k, l); ++i) out.add_scaled(sum_h(layer_points(i, k, l)), i + 1);
  return out;
}

inline SchurSum theorem_rhs(int k, int l) {
  SchurSum out;
  out.add(schur_normalize(k + 2 * l + 1, k + l + 1, 0), 1);
  out.add(schur_normalize(k + 2 * l + 1, l, 0), -1);
  return out;
}

inline bool verify_theorem(int k, int l) { return theorem_lhs(k, l) == theorem_rhs(k, l); }

/// chi(pi_{alpha,beta}) = s_{alpha+beta,alpha,0}, so s_{a,b,0} is pi_{b,a-b}.
inline FormalCharacter schur_to_a2_character(const SchurIndex& s,
                                             CharacterCache& cache = default_character_cache()) {
  if (s.b < 0 || s.a < s.b) {
    throw Error(ErrorCode::InvalidLabel, "s(" + std::to_string(s.a) + "," + std::to_string(s.b) + ",0)");
  }
  const RootSystem& a2 = catalog("A2");
  return cache.get(a2, DominantWeight{{s.b, s.a - s.b}, "A2"})->character;
}

inline FormalCharacter schur_to_a2_character(const SchurSum& s, CharacterCache& cache = default_character_cache()) {
  FormalCharacter out(2);
  for (const auto& [idx, c] : s.terms()) out.add_scaled(schur_to_a2_character(idx, cache), c);
  return out;
}

/// Inverse of schur_to_a2_character on virtual characters.
inline SchurSum a2_character_to_schur(const FormalCharacter& c, CharacterCache& cache = default_character_cache()) {
  const RootSystem& a2 = catalog("A2");
  if (c.rank() != 2) throw Error(ErrorCode::NotACharacter, "not on the A2 lattice");
  SchurSum out;
  try {
    for (const auto& [nu, m] : decompose_virtual(c, a2, cache)) out.add(SchurIndex{nu[0] + nu[1], nu[0]}, m);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotACharacter, e.what());
  }
  return out;
}

}  // namespace splint
