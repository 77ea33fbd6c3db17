#pragma once

// Root systems of the splint table with explicit realizations.
//
// Coordinates:
//   A_r      L_1..L_r with L_{r+1} = -(L_1+...+L_r) eliminated
//   G2       L_1, L_2 with L_3 eliminated (same lattice as A2)
//   B, C, D  orthonormal epsilon coordinates
//   F4       epsilon coordinates, roots e_i, e_i +- e_j, (e_1 +- e_2 +- e_3 +- e_4)/2
//   A1^r     one L-coordinate per A1 factor
//
// A2 uses the simple-root order in which the fundamental weights are
// L_1+L_2 and L_1, so that the label (a,b) is the weight (a+b)L_1 + aL_2.
// All other types use Bourbaki ordering.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "splint/error.hpp"
#include "splint/weightlat.hpp"

namespace splint {

/// Weyl group element acting on doubled coordinates: w(v) = (m2 * v) / 2.
struct WeylElement {
  std::array<int, kMaxRank * kMaxRank> m2{};
  int rank = 0;
  int length = 0;

  int sign() const noexcept { return (length % 2 == 0) ? 1 : -1; }
  int entry2(int r, int c) const noexcept { return m2[static_cast<std::size_t>(r * kMaxRank + c)]; }

  WeightVector apply(const WeightVector& v) const {
    WeightVector out(rank);
    for (int r = 0; r < rank; ++r) {
      long acc = 0;
      for (int c = 0; c < rank; ++c) acc += static_cast<long>(entry2(r, c)) * v.doubled(c);
      if (acc % 2 != 0) throw Error(ErrorCode::NonIntegral, "Weyl image leaves the lattice");
      out.set_doubled(r, static_cast<int>(acc / 2));
    }
    return out;
  }

  /// Matrix product (this * other).
  WeylElement operator*(const WeylElement& o) const {
    WeylElement out;
    out.rank = rank;
    for (int r = 0; r < rank; ++r)
      for (int c = 0; c < rank; ++c) {
        int acc = 0;
        for (int k = 0; k < rank; ++k) acc += entry2(r, k) * o.entry2(k, c);
        out.m2[static_cast<std::size_t>(r * kMaxRank + c)] = acc / 2;
      }
    return out;
  }

  bool same_matrix(const WeylElement& o) const noexcept { return m2 == o.m2; }
};

struct WeylGroup {
  int rank = 0;
  std::vector<WeylElement> elements;  // elements[0] is the identity

  std::size_t order() const noexcept { return elements.size(); }
};

/// Highest weight in the fundamental-weight basis.
struct DominantWeight {
  std::vector<int> coeffs;
  std::string system;

  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
  friend auto operator<=>(const DominantWeight& a, const DominantWeight& b) {
    return a.coeffs <=> b.coeffs;
  }
};

class RootSystem;
WeylGroup weyl_group(const RootSystem& rs, std::size_t guard = 10000);

class RootSystem {
 public:
  /// Generic constructor from simple roots (doubled coordinates) and the
  /// invariant form gram = form / form_scale on true coordinates.
  RootSystem(std::string label, std::vector<WeightVector> simple_roots, std::vector<int> form_matrix,
             int form_scale)
      : label_(std::move(label)),
        rank_(static_cast<int>(simple_roots.size())),
        simple_(std::move(simple_roots)),
        form_(std::move(form_matrix)),
        form_scale_(form_scale) {
    for (const auto& a : simple_) {
      if (a.rank() != rank_) throw Error(ErrorCode::RankMismatch, "simple root rank in " + label_);
    }
    for (const auto& a : simple_) {
      std::array<long, kMaxRank> fa{};
      for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) fa[i] += static_cast<long>(form(i, j)) * a.doubled(j);
      form_simple_.push_back(fa);
      simple_norm2_.push_back(ip2(a, a));
    }
    compute_fundamental_weights();
    weyl_ = weyl_group(*this);
    compute_roots();
  }

  const std::string& label() const noexcept { return label_; }
  int rank() const noexcept { return rank_; }
  const std::vector<WeightVector>& simple_roots() const noexcept { return simple_; }
  const std::vector<WeightVector>& positive_roots() const noexcept { return positive_; }
  const std::vector<WeightVector>& fundamental_weights() const noexcept { return fundamental_; }
  const WeightVector& rho() const noexcept { return rho_; }
  const WeylGroup& weyl() const noexcept { return weyl_; }
  int form(int i, int j) const { return form_[static_cast<std::size_t>(i * rank_ + j)]; }
  int form_scale() const noexcept { return form_scale_; }
  Rational gram(int i, int j) const { return Rational(form(i, j), form_scale_); }

  /// Integer multiple (4 * form_scale) of the invariant inner product.
  long ip2(const WeightVector& u, const WeightVector& v) const {
    long acc = 0;
    for (int i = 0; i < rank_; ++i) {
      if (u.doubled(i) == 0) continue;
      long row = 0;
      for (int j = 0; j < rank_; ++j) row += static_cast<long>(form(i, j)) * v.doubled(j);
      acc += static_cast<long>(u.doubled(i)) * row;
    }
    return acc;
  }

  /// True inner product.
  Rational inner(const WeightVector& u, const WeightVector& v) const {
    return Rational(ip2(u, v), 4L * form_scale_);
  }

  /// 2 * <v, alpha_j> / <alpha_j, alpha_j> times the returned denominator
  /// check; throws NotIntegral when v is off the weight lattice.
  int pairing(const WeightVector& v, int j) const {
    long num = 0;
    const auto& fa = form_simple_[static_cast<std::size_t>(j)];
    for (int i = 0; i < rank_; ++i) num += fa[i] * v.doubled(i);
    num *= 2;
    const long den = simple_norm2_[static_cast<std::size_t>(j)];
    if (num % den != 0) {
      throw Error(ErrorCode::NotIntegral, v.to_string() + " is not integral for " + label_);
    }
    return static_cast<int>(num / den);
  }

  std::vector<int> dynkin_labels(const WeightVector& v) const {
    check(v);
    std::vector<int> out(static_cast<std::size_t>(rank_));
    for (int j = 0; j < rank_; ++j) out[static_cast<std::size_t>(j)] = pairing(v, j);
    return out;
  }

  bool is_dominant(const WeightVector& v) const {
    check(v);
    for (int j = 0; j < rank_; ++j)
      if (pairing(v, j) < 0) return false;
    return true;
  }

  WeightVector reflect(const WeightVector& v, int j) const {
    const int p = pairing(v, j);
    return p == 0 ? v : v - p * simple_[static_cast<std::size_t>(j)];
  }

  /// The unique dominant weight in the Weyl orbit of v.
  WeightVector dominant_representative(WeightVector v) const {
    for (bool moved = true; moved;) {
      moved = false;
      for (int j = 0; j < rank_; ++j) {
        const int p = pairing(v, j);
        if (p < 0) {
          v -= p * simple_[static_cast<std::size_t>(j)];
          moved = true;
        }
      }
    }
    return v;
  }

  /// Weyl orbit of v, generated by simple reflections.
  std::vector<WeightVector> orbit(const WeightVector& v) const {
    std::vector<WeightVector> out{v};
    std::unordered_set<WeightVector, WeightHash> seen{v};
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (int j = 0; j < rank_; ++j) {
        WeightVector w = reflect(out[i], j);
        if (seen.insert(w).second) out.push_back(w);
      }
    }
    return out;
  }

  WeightVector to_lattice(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != rank_) {
      throw Error(ErrorCode::RankMismatch, label_ + " needs " + std::to_string(rank_) +
                                               " labels, got " + std::to_string(coeffs.size()));
    }
    WeightVector v = WeightVector::zero(rank_);
    for (int i = 0; i < rank_; ++i) {
      if (coeffs[static_cast<std::size_t>(i)] < 0) {
        throw Error(ErrorCode::NotDominant, "negative label for " + label_);
      }
      v += coeffs[static_cast<std::size_t>(i)] * fundamental_[static_cast<std::size_t>(i)];
    }
    return v;
  }
  WeightVector to_lattice(const DominantWeight& w) const { return to_lattice(w.coeffs); }

  DominantWeight from_lattice(const WeightVector& v) const {
    auto labels = dynkin_labels(v);
    for (int x : labels)
      if (x < 0) throw Error(ErrorCode::NotDominant, v.to_string() + " is not dominant in " + label_);
    return DominantWeight{std::move(labels), label_};
  }

  void check(const WeightVector& v) const {
    if (v.rank() != rank_) {
      throw Error(ErrorCode::RankMismatch, "weight of rank " + std::to_string(v.rank()) + " in " + label_);
    }
  }

  /// Coroot rows a_j with <v, alpha_j^vee> = a_j . v on true coordinates.
  std::vector<Rational> coroot_matrix() const {
    std::vector<Rational> a(static_cast<std::size_t>(rank_ * rank_));
    for (int j = 0; j < rank_; ++j)
      for (int i = 0; i < rank_; ++i)
        a[static_cast<std::size_t>(j * rank_ + i)] =
            Rational(2L * 2L * form_simple_[static_cast<std::size_t>(j)][i], simple_norm2_[static_cast<std::size_t>(j)]);
    return a;
  }

 private:
  void compute_fundamental_weights() {
    // Rows of A are the coroots; columns of A^{-1} are the fundamental weights.
    const LatticeMap inv = LatticeMap(rank_, rank_, coroot_matrix()).inverse();
    for (int i = 0; i < rank_; ++i) {
      WeightVector w(rank_);
      for (int r = 0; r < rank_; ++r) {
        const Rational x = inv.at(r, i) * 2;
        if (x.denominator() != 1) {
          throw Error(ErrorCode::NonIntegral, "fundamental weight off the half-lattice in " + label_);
        }
        w.set_doubled(r, static_cast<int>(x.numerator()));
      }
      fundamental_.push_back(w);
    }
  }

  void compute_roots() {
    WeightVector rho_dir = WeightVector::zero(rank_);
    for (const auto& w : fundamental_) rho_dir += w;
    std::vector<WeightVector> all;
    std::unordered_set<WeightVector, WeightHash> seen;
    for (const auto& a : simple_)
      for (const auto& r : orbit(a))
        if (seen.insert(r).second) all.push_back(r);
    for (const auto& r : all)
      if (ip2(r, rho_dir) > 0) positive_.push_back(r);
    std::sort(positive_.begin(), positive_.end());
    WeightVector twice = WeightVector::zero(rank_);
    for (const auto& r : positive_) twice += r;
    rho_ = WeightVector(rank_);
    for (int i = 0; i < rank_; ++i) {
      // twice holds doubled coordinates of 2*rho.
      rho_.set_doubled(i, twice.doubled(i) / 2);
    }
  }

  std::string label_;
  int rank_;
  std::vector<WeightVector> simple_;
  std::vector<int> form_;
  int form_scale_;
  std::vector<std::array<long, kMaxRank>> form_simple_;
  std::vector<long> simple_norm2_;
  std::vector<WeightVector> fundamental_;
  std::vector<WeightVector> positive_;
  WeightVector rho_;
  WeylGroup weyl_;
};

/// Closure of the simple reflections. Lengths come from breadth-first depth,
/// which is the Coxeter length.
inline WeylGroup weyl_group(const RootSystem& rs, std::size_t guard) {
  const int n = rs.rank();
  WeylGroup g;
  g.rank = n;
  WeylElement id;
  id.rank = n;
  for (int i = 0; i < n; ++i) id.m2[static_cast<std::size_t>(i * kMaxRank + i)] = 2;

  std::vector<WeylElement> gens;
  for (int j = 0; j < n; ++j) {
    WeylElement s;
    s.rank = n;
    s.length = 1;
    for (int c = 0; c < n; ++c) {
      WeightVector e(n);
      e.set_doubled(c, 2);
      const WeightVector img = rs.reflect(e, j);
      for (int r = 0; r < n; ++r) s.m2[static_cast<std::size_t>(r * kMaxRank + c)] = img.doubled(r);
    }
    gens.push_back(s);
  }

  struct ArrHash {
    std::size_t operator()(const std::array<int, kMaxRank * kMaxRank>& a) const noexcept {
      std::uint64_t h = 1469598103934665603ULL;
      for (int x : a) {
        h ^= static_cast<std::uint32_t>(x);
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };
  std::unordered_set<std::array<int, kMaxRank * kMaxRank>, ArrHash> seen{id.m2};
  g.elements.push_back(id);
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (const auto& s : gens) {
      WeylElement w = s * g.elements[i];
      w.rank = n;
      w.length = g.elements[i].length + 1;
      if (seen.insert(w.m2).second) {
        g.elements.push_back(w);
        if (g.elements.size() > guard) {
          throw Error(ErrorCode::ClosureOverflow, "Weyl group of " + rs.label() + " exceeds " +
                                                      std::to_string(guard) + " elements");
        }
      }
    }
  }
  return g;
}

namespace detail {

inline WeightVector doubled_vec(int rank, std::initializer_list<std::pair<int, int>> entries) {
  WeightVector v(rank);
  for (auto [i, x] : entries) v.set_doubled(i, x);
  return v;
}

inline std::vector<int> scaled_identity(int n) {
  std::vector<int> f(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) f[static_cast<std::size_t>(i * n + i)] = 1;
  return f;
}

inline RootSystem build_a(int r) {
  std::vector<WeightVector> simple;
  for (int i = 0; i + 1 < r; ++i) simple.push_back(doubled_vec(r, {{i, 2}, {i + 1, -2}}));
  WeightVector last(r);
  for (int j = 0; j < r; ++j) last.set_doubled(j, 2);
  last.set_doubled(r - 1, 4);
  simple.push_back(last);
  if (r == 2) std::swap(simple[0], simple[1]);
  std::vector<int> f(static_cast<std::size_t>(r * r), -1);
  for (int i = 0; i < r; ++i) f[static_cast<std::size_t>(i * r + i)] = r;
  return RootSystem("A" + std::to_string(r), std::move(simple), std::move(f), r + 1);
}

inline std::vector<WeightVector> chain(int r) {
  std::vector<WeightVector> simple;
  for (int i = 0; i + 1 < r; ++i) simple.push_back(doubled_vec(r, {{i, 2}, {i + 1, -2}}));
  return simple;
}

inline RootSystem build_b(int r) {
  auto simple = chain(r);
  simple.push_back(doubled_vec(r, {{r - 1, 2}}));
  return RootSystem("B" + std::to_string(r), std::move(simple), scaled_identity(r), 1);
}

inline RootSystem build_c(int r) {
  auto simple = chain(r);
  simple.push_back(doubled_vec(r, {{r - 1, 4}}));
  return RootSystem("C" + std::to_string(r), std::move(simple), scaled_identity(r), 2);
}

inline RootSystem build_d(int r) {
  auto simple = chain(r);
  simple.push_back(doubled_vec(r, {{r - 2, 2}, {r - 1, 2}}));
  return RootSystem("D" + std::to_string(r), std::move(simple), scaled_identity(r), 1);
}

inline RootSystem build_g2() {
  // alpha_1 = L_2 (short), alpha_2 = L_1 - L_2 (long).
  std::vector<WeightVector> simple{WeightVector::from_integers({0, 1}),
                                   WeightVector::from_integers({1, -1})};
  return RootSystem("G2", std::move(simple), {2, -1, -1, 2}, 3);
}

inline RootSystem build_f4() {
  std::vector<WeightVector> simple{
      WeightVector::from_integers({0, 1, -1, 0}), WeightVector::from_integers({0, 0, 1, -1}),
      WeightVector::from_integers({0, 0, 0, 1}), WeightVector::from_doubled({1, -1, -1, -1})};
  return RootSystem("F4", std::move(simple), scaled_identity(4), 1);
}

inline RootSystem build_a1_power(int r) {
  std::vector<WeightVector> simple;
  for (int i = 0; i < r; ++i) simple.push_back(doubled_vec(r, {{i, 4}}));
  return RootSystem("A1^" + std::to_string(r), std::move(simple), scaled_identity(r), 2);
}

}  // namespace detail

inline const std::vector<std::string>& catalog_labels() {
  static const std::vector<std::string> labels{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2",
                                               "C3", "D2", "D3", "D4", "G2", "F4", "A1^2",
                                               "A1^3", "A1^4"};
  return labels;
}

inline RootSystem build(const std::string& label) {
  auto bad = [&]() { return Error(ErrorCode::UnsupportedLabel, "no root system '" + label + "'"); };
  if (label == "G2") return detail::build_g2();
  if (label == "F4") return detail::build_f4();
  if (label.rfind("A1^", 0) == 0 && label.size() == 4) {
    const int r = label[3] - '0';
    if (r >= 1 && r <= 4) return detail::build_a1_power(r);
    throw bad();
  }
  if (label.size() != 2 || label[1] < '1' || label[1] > '9') throw bad();
  const int r = label[1] - '0';
  switch (label[0]) {
    case 'A':
      if (r >= 1 && r <= 4) return detail::build_a(r);
      break;
    case 'B':
      if (r >= 2 && r <= 4) return detail::build_b(r);
      break;
    case 'C':
      if (r >= 2 && r <= 3) return detail::build_c(r);
      break;
    case 'D':
      if (r >= 2 && r <= 4) return detail::build_d(r);
      break;
    default:
      break;
  }
  throw bad();
}

/// Process-wide shared instances; built on first use.
inline const RootSystem& catalog(const std::string& label) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<const RootSystem>> systems;
  std::lock_guard lock(mu);
  auto it = systems.find(label);
  if (it == systems.end()) {
    it = systems.emplace(label, std::make_unique<const RootSystem>(build(label))).first;
  }
  return *it->second;
}

inline WeightVector to_lattice(const DominantWeight& w) { return catalog(w.system).to_lattice(w); }

}  // namespace splint
