#pragma once

// Exact weight-lattice arithmetic.
//
// Coordinates are stored doubled so that the half-integral weights of the
// B, D and F4 realizations stay in plain integers. A FormalCharacter is a
// finitely supported Z-valued function on such points.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "splint/error.hpp"

namespace splint {

inline constexpr int kMaxRank = 4;

using Rational = boost::rational<std::int64_t>;

class WeightVector {
 public:
  WeightVector() = default;

  explicit WeightVector(int rank) : rank_(static_cast<std::uint8_t>(rank)) {
    if (rank < 1 || rank > kMaxRank) {
      throw Error(ErrorCode::RankMismatch, "rank " + std::to_string(rank) + " outside 1.." +
                                               std::to_string(kMaxRank));
    }
  }

  /// Build from doubled coordinates (2 * the true coordinate).
  static WeightVector from_doubled(std::span<const int> doubled) {
    WeightVector v(static_cast<int>(doubled.size()));
    std::copy(doubled.begin(), doubled.end(), v.c2_.begin());
    return v;
  }
  static WeightVector from_doubled(std::initializer_list<int> doubled) {
    return from_doubled(std::span<const int>(doubled.begin(), doubled.size()));
  }
  static WeightVector from_integers(std::initializer_list<int> coords) {
    WeightVector v(static_cast<int>(coords.size()));
    std::transform(coords.begin(), coords.end(), v.c2_.begin(), [](int x) { return 2 * x; });
    return v;
  }
  static WeightVector zero(int rank) { return WeightVector(rank); }

  int rank() const noexcept { return rank_; }
  int doubled(int i) const noexcept { return c2_[static_cast<std::size_t>(i)]; }
  void set_doubled(int i, int value) noexcept { c2_[static_cast<std::size_t>(i)] = value; }
  Rational coord(int i) const { return Rational(doubled(i), 2); }
  std::vector<int> doubled_coords() const { return {c2_.begin(), c2_.begin() + rank_}; }

  bool is_zero() const noexcept {
    return std::all_of(c2_.begin(), c2_.begin() + rank_, [](int x) { return x == 0; });
  }

  WeightVector& operator+=(const WeightVector& o) {
    check_rank(o);
    for (int i = 0; i < rank_; ++i) c2_[i] += o.c2_[i];
    return *this;
  }
  WeightVector& operator-=(const WeightVector& o) {
    check_rank(o);
    for (int i = 0; i < rank_; ++i) c2_[i] -= o.c2_[i];
    return *this;
  }
  WeightVector& operator*=(int k) noexcept {
    for (int i = 0; i < rank_; ++i) c2_[i] *= k;
    return *this;
  }
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator*(int k, WeightVector a) { return a *= k; }
  WeightVector operator-() const { return -1 * *this; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  /// Lexicographic on doubled coordinates; the canonical serialization order.
  friend bool operator<(const WeightVector& a, const WeightVector& b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
    return std::lexicographical_compare(a.c2_.begin(), a.c2_.begin() + a.rank_, b.c2_.begin(),
                                        b.c2_.begin() + b.rank_);
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ rank_;
    for (int i = 0; i < rank_; ++i) {
      h ^= static_cast<std::uint32_t>(c2_[i]);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < rank_; ++i) {
      if (i) s += ",";
      s += (c2_[i] % 2 == 0) ? std::to_string(c2_[i] / 2) : std::to_string(c2_[i]) + "/2";
    }
    return s + ")";
  }

  void check_rank(const WeightVector& o) const {
    if (o.rank_ != rank_) {
      throw Error(ErrorCode::RankMismatch,
                  "rank " + std::to_string(rank_) + " vs " + std::to_string(o.rank_));
    }
  }

 private:
  std::array<int, kMaxRank> c2_{};
  std::uint8_t rank_ = 1;
};

struct WeightHash {
  std::size_t operator()(const WeightVector& w) const noexcept { return w.hash(); }
};

/// Finitely supported integer combination of exponentials e^mu.
class FormalCharacter {
 public:
  using Map = std::unordered_map<WeightVector, std::int64_t, WeightHash>;

  explicit FormalCharacter(int rank = 1) : rank_(rank) {}

  static FormalCharacter monomial(const WeightVector& mu, std::int64_t c = 1) {
    FormalCharacter f(mu.rank());
    f.add(mu, c);
    return f;
  }

  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const Map& terms() const noexcept { return terms_; }

  std::int64_t operator[](const WeightVector& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Adds c to the coefficient of mu; zero coefficients are pruned.
  void add(const WeightVector& mu, std::int64_t c) {
    if (mu.rank() != rank_) {
      throw Error(ErrorCode::RankMismatch, "term rank " + std::to_string(mu.rank()) +
                                               " in character of rank " + std::to_string(rank_));
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const FormalCharacter& other, std::int64_t factor) {
    check_rank(other);
    if (factor == 0) return;
    for (const auto& [mu, c] : other.terms_) add(mu, factor * c);
  }

  /// Sum of coefficients; the dimension for a genuine character.
  std::int64_t mass() const noexcept {
    std::int64_t m = 0;
    for (const auto& [mu, c] : terms_) m += c;
    return m;
  }

  std::vector<std::pair<WeightVector, std::int64_t>> sorted_terms() const {
    std::vector<std::pair<WeightVector, std::int64_t>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  void check_rank(const FormalCharacter& o) const {
    if (o.rank_ != rank_) {
      throw Error(ErrorCode::RankMismatch,
                  "rank " + std::to_string(rank_) + " vs " + std::to_string(o.rank_));
    }
  }

 private:
  int rank_;
  Map terms_;
};

inline FormalCharacter char_add(const FormalCharacter& a, const FormalCharacter& b) {
  a.check_rank(b);
  FormalCharacter out = a;
  out.add_scaled(b, 1);
  return out;
}

inline FormalCharacter char_sub(const FormalCharacter& a, const FormalCharacter& b) {
  a.check_rank(b);
  FormalCharacter out = a;
  out.add_scaled(b, -1);
  return out;
}

/// Convolution product: (a*b)[mu] = sum_nu a[nu] b[mu - nu].
inline FormalCharacter char_mul(const FormalCharacter& a, const FormalCharacter& b) {
  a.check_rank(b);
  const FormalCharacter& big = a.size() >= b.size() ? a : b;
  const FormalCharacter& small = a.size() >= b.size() ? b : a;
  FormalCharacter out(a.rank());
  for (const auto& [nu, cs] : small.terms()) {
    for (const auto& [mu, cb] : big.terms()) out.add(mu + nu, cs * cb);
  }
  return out;
}

/// Rational linear map between weight lattices, acting on true coordinates.
class LatticeMap {
 public:
  LatticeMap() = default;
  LatticeMap(int rank_out, int rank_in, std::vector<Rational> entries, std::string source = {},
             std::string target = {})
      : rows_(rank_out), cols_(rank_in), m_(std::move(entries)), source_(std::move(source)),
        target_(std::move(target)) {
    if (static_cast<int>(m_.size()) != rows_ * cols_) {
      throw Error(ErrorCode::RankMismatch, "matrix entry count does not match its shape");
    }
  }

  static LatticeMap identity(int rank, std::string source = {}, std::string target = {}) {
    std::vector<Rational> e(static_cast<std::size_t>(rank * rank), Rational(0));
    for (int i = 0; i < rank; ++i) e[static_cast<std::size_t>(i * rank + i)] = 1;
    return LatticeMap(rank, rank, std::move(e), std::move(source), std::move(target));
  }

  int rank_out() const noexcept { return rows_; }
  int rank_in() const noexcept { return cols_; }
  const std::string& source() const noexcept { return source_; }
  const std::string& target() const noexcept { return target_; }
  const Rational& at(int r, int c) const { return m_[static_cast<std::size_t>(r * cols_ + c)]; }
  const std::vector<Rational>& entries() const noexcept { return m_; }

  WeightVector apply(const WeightVector& v) const {
    if (v.rank() != cols_) {
      throw Error(ErrorCode::RankMismatch, "map expects rank " + std::to_string(cols_) +
                                               ", got " + std::to_string(v.rank()));
    }
    WeightVector out(rows_);
    for (int r = 0; r < rows_; ++r) {
      Rational acc(0);
      for (int c = 0; c < cols_; ++c) acc += at(r, c) * Rational(v.doubled(c));
      if (acc.denominator() != 1) {
        throw Error(ErrorCode::NonIntegral, "image of " + v.to_string() + " leaves the lattice");
      }
      out.set_doubled(r, static_cast<int>(acc.numerator()));
    }
    return out;
  }

  LatticeMap compose(const LatticeMap& inner) const {
    if (inner.rows_ != cols_) throw Error(ErrorCode::RankMismatch, "cannot compose maps");
    std::vector<Rational> e(static_cast<std::size_t>(rows_ * inner.cols_), Rational(0));
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < inner.cols_; ++c)
        for (int k = 0; k < cols_; ++k) e[static_cast<std::size_t>(r * inner.cols_ + c)] += at(r, k) * inner.at(k, c);
    return LatticeMap(rows_, inner.cols_, std::move(e), inner.source_, target_);
  }

  /// Gauss-Jordan inverse; throws RankMismatch for non-square or singular maps.
  LatticeMap inverse() const {
    if (rows_ != cols_) throw Error(ErrorCode::RankMismatch, "only square maps are invertible");
    const int n = rows_;
    std::vector<Rational> a = m_;
    std::vector<Rational> inv = identity(n).m_;
    auto A = [&](int r, int c) -> Rational& { return a[static_cast<std::size_t>(r * n + c)]; };
    auto I = [&](int r, int c) -> Rational& { return inv[static_cast<std::size_t>(r * n + c)]; };
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (piv < n && A(piv, col).numerator() == 0) ++piv;
      if (piv == n) throw Error(ErrorCode::RankMismatch, "singular lattice map");
      for (int c = 0; c < n; ++c) {
        std::swap(A(col, c), A(piv, c));
        std::swap(I(col, c), I(piv, c));
      }
      const Rational p = A(col, col);
      for (int c = 0; c < n; ++c) {
        A(col, c) /= p;
        I(col, c) /= p;
      }
      for (int r = 0; r < n; ++r) {
        if (r == col || A(r, col).numerator() == 0) continue;
        const Rational f = A(r, col);
        for (int c = 0; c < n; ++c) {
          A(r, c) -= f * A(col, c);
          I(r, c) -= f * I(col, c);
        }
      }
    }
    return LatticeMap(n, n, std::move(inv), target_, source_);
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> m_;
  std::string source_;
  std::string target_;
};

/// Pushforward of the support; coefficients of coinciding images add.
inline FormalCharacter apply_map(const LatticeMap& m, const FormalCharacter& c) {
  if (c.rank() != m.rank_in()) {
    throw Error(ErrorCode::RankMismatch, "character rank " + std::to_string(c.rank()) +
                                             " does not match map input rank " +
                                             std::to_string(m.rank_in()));
  }
  FormalCharacter out(m.rank_out());
  for (const auto& [mu, coeff] : c.terms()) out.add(m.apply(mu), coeff);
  return out;
}

}  // namespace splint
