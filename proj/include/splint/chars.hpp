#pragma once

// Irreducible characters: Weyl dimension formula, Freudenthal recursion,
// and an exact check of the Weyl character formula.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "splint/error.hpp"
#include "splint/rootsys.hpp"
#include "splint/weightlat.hpp"

namespace splint {

namespace detail {

__extension__ using i128 = __int128;

inline i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

/// prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha), exactly.
inline std::int64_t dim_weyl(const RootSystem& rs, const WeightVector& lambda) {
  rs.check(lambda);
  const WeightVector shifted = lambda + rs.rho();
  detail::i128 num = 1;
  detail::i128 den = 1;
  for (const auto& a : rs.positive_roots()) {
    num *= rs.ip2(shifted, a);
    den *= rs.ip2(rs.rho(), a);
    const detail::i128 g = detail::gcd128(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) {
    throw Error(ErrorCode::NonIntegerResult, "dimension of " + lambda.to_string() + " in " +
                                                 rs.label() + " is not an integer");
  }
  return static_cast<std::int64_t>(num);
}

inline std::int64_t dim_weyl(const RootSystem& rs, const DominantWeight& lambda) {
  return dim_weyl(rs, rs.to_lattice(lambda));
}

struct IrrepCharacter {
  DominantWeight highest;
  FormalCharacter character;
  std::int64_t dimension = 0;
  /// Multiplicities of the dominant weights, sorted by decreasing (mu, rho).
  std::vector<std::pair<WeightVector, std::int64_t>> dominant;
};

namespace detail {

/// Dominant weights of L(lambda), closed under alpha-strings.
inline std::vector<WeightVector> dominant_weights_below(const RootSystem& rs, const WeightVector& lambda) {
  std::vector<WeightVector> out{lambda};
  std::unordered_set<WeightVector, WeightHash> seen{lambda};
  std::vector<long> norms;
  for (const auto& a : rs.positive_roots()) norms.push_back(rs.ip2(a, a));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const WeightVector mu = out[i];
    for (std::size_t r = 0; r < rs.positive_roots().size(); ++r) {
      const auto& a = rs.positive_roots()[r];
      const long p = 2 * rs.ip2(mu, a) / norms[r];
      WeightVector nu = mu;
      for (long t = 1; t <= p; ++t) {
        nu -= a;
        WeightVector dom = rs.dominant_representative(nu);
        if (seen.insert(dom).second) out.push_back(dom);
      }
    }
  }
  const WeightVector& rho = rs.rho();
  std::sort(out.begin(), out.end(), [&](const WeightVector& x, const WeightVector& y) {
    const long px = rs.ip2(x, rho);
    const long py = rs.ip2(y, rho);
    return px != py ? px > py : y < x;
  });
  return out;
}

}  // namespace detail

/// Weight multiplicities by Freudenthal's recursion on the dominant chamber,
/// then extended to full Weyl orbits.
inline IrrepCharacter freudenthal_character(const RootSystem& rs, const DominantWeight& highest) {
  const WeightVector lambda = rs.to_lattice(highest);
  const auto dominant = detail::dominant_weights_below(rs, lambda);
  const WeightVector lr = lambda + rs.rho();
  const long top = rs.ip2(lr, lr);

  std::unordered_map<WeightVector, std::int64_t, WeightHash> mult;
  mult.reserve(dominant.size() * 2);
  auto lookup = [&](const WeightVector& v) -> std::int64_t {
    auto it = mult.find(rs.dominant_representative(v));
    return it == mult.end() ? 0 : it->second;
  };

  IrrepCharacter out;
  out.highest = DominantWeight{highest.coeffs, rs.label()};
  out.dominant.reserve(dominant.size());
  for (const auto& mu : dominant) {
    std::int64_t m = 1;
    if (!(mu == lambda)) {
      detail::i128 sum = 0;
      for (const auto& a : rs.positive_roots()) {
        WeightVector nu = mu + a;
        for (;;) {
          const std::int64_t mk = lookup(nu);
          if (mk == 0) break;
          sum += static_cast<detail::i128>(mk) * rs.ip2(nu, a);
          nu += a;
        }
      }
      const WeightVector mr = mu + rs.rho();
      const long den = top - rs.ip2(mr, mr);
      if (den == 0) throw Error(ErrorCode::ZeroDenominator, "at weight " + mu.to_string());
      if ((2 * sum) % den != 0) {
        throw Error(ErrorCode::NonIntegerResult, "multiplicity at " + mu.to_string());
      }
      m = static_cast<std::int64_t>(2 * sum / den);
    }
    mult.emplace(mu, m);
    out.dominant.emplace_back(mu, m);
  }

  out.character = FormalCharacter(rs.rank());
  for (const auto& [mu, m] : out.dominant) {
    if (m == 0) continue;
    for (const auto& w : rs.orbit(mu)) out.character.add(w, m);
  }
  out.dimension = out.character.mass();
  return out;
}

/// Alternating sum over W of sign(w) e^{w(lambda + rho)}.
inline FormalCharacter weyl_numerator(const RootSystem& rs, const WeightVector& lambda) {
  const WeightVector lr = lambda + rs.rho();
  FormalCharacter out(rs.rank());
  for (const auto& w : rs.weyl().elements) out.add(w.apply(lr), w.sign());
  return out;
}

namespace detail {

/// Sparse polynomial as a sorted array of (packed weight, coefficient). The
/// packing is linear in the doubled coordinates, so a monomial shift is a
/// constant offset on keys and keeps the array sorted.
class PackedPoly {
 public:
  static constexpr int kBits = 14;
  static constexpr std::int64_t kBias = std::int64_t{1} << (kBits - 1);

  explicit PackedPoly(int rank) : rank_(rank) {}

  static PackedPoly from(const FormalCharacter& c) {
    PackedPoly p(c.rank());
    p.terms_.reserve(c.size());
    for (const auto& [w, m] : c.terms()) p.terms_.emplace_back(p.pack(w), m);
    std::sort(p.terms_.begin(), p.terms_.end());
    return p;
  }

  std::int64_t pack(const WeightVector& w) const {
    std::int64_t key = 0;
    for (int i = rank_ - 1; i >= 0; --i) {
      const std::int64_t d = w.doubled(i);
      if (d <= -kBias || d >= kBias) throw Error(ErrorCode::RankMismatch, "weight too large to pack");
      key = (key << kBits) + d + kBias;
    }
    return key;
  }

  /// Offset of a weight with the bias removed, so pack(u + v) = pack(u) + offset(v).
  std::int64_t offset(const WeightVector& w) const {
    std::int64_t key = 0;
    for (int i = rank_ - 1; i >= 0; --i) key = key * (std::int64_t{1} << kBits) + w.doubled(i);
    return key;
  }

  WeightVector unpack(std::int64_t key) const {
    WeightVector w(rank_);
    for (int i = 0; i < rank_; ++i) {
      w.set_doubled(i, static_cast<int>((key & ((std::int64_t{1} << kBits) - 1)) - kBias));
      key >>= kBits;
    }
    return w;
  }

  /// this *= (1 - e^{shift}) by merging the array with its shifted negative.
  void times_one_minus(const WeightVector& shift) {
    const std::int64_t off = offset(shift);
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(terms_.size() * 2);
    std::size_t i = 0, j = 0;
    const std::size_t n = terms_.size();
    auto push = [&](std::int64_t k, std::int64_t c) {
      if (!out.empty() && out.back().first == k) {
        if ((out.back().second += c) == 0) out.pop_back();
      } else if (c != 0) {
        out.emplace_back(k, c);
      }
    };
    while (i < n || j < n) {
      const bool take_plain = j == n || (i < n && terms_[i].first <= terms_[j].first + off);
      if (take_plain) {
        push(terms_[i].first, terms_[i].second);
        ++i;
      } else {
        push(terms_[j].first + off, -terms_[j].second);
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  void shift(const WeightVector& by) {
    const std::int64_t off = offset(by);
    for (auto& t : terms_) t.first += off;
  }

  FormalCharacter to_character() const {
    FormalCharacter c(rank_);
    for (const auto& [k, m] : terms_) c.add(unpack(k), m);
    return c;
  }

  bool operator==(const PackedPoly& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

 private:
  int rank_;
  std::vector<std::pair<std::int64_t, std::int64_t>> terms_;
};

inline PackedPoly packed_times_denominator(const RootSystem& rs, const FormalCharacter& c) {
  PackedPoly p = PackedPoly::from(c);
  for (const auto& a : rs.positive_roots()) p.times_one_minus(-a);
  p.shift(rs.rho());
  return p;
}

}  // namespace detail

/// e^rho * prod_{alpha > 0} (1 - e^{-alpha}) times c, one root factor at a time.
inline FormalCharacter times_weyl_denominator(const RootSystem& rs, const FormalCharacter& c) {
  return detail::packed_times_denominator(rs, c).to_character();
}

inline FormalCharacter weyl_denominator(const RootSystem& rs) {
  return times_weyl_denominator(rs, FormalCharacter::monomial(WeightVector::zero(rs.rank())));
}

/// delta * chi(L_lambda) == sum_w sign(w) e^{w(lambda+rho)}, term by term.
inline bool wcf_consistency(const RootSystem& rs, const IrrepCharacter& chi) {
  return detail::packed_times_denominator(rs, chi.character) ==
         detail::PackedPoly::from(weyl_numerator(rs, rs.to_lattice(chi.highest)));
}

/// Optional backing store behind the in-process memo (see disk_cache.hpp).
class CharacterStore {
 public:
  virtual ~CharacterStore() = default;
  virtual std::optional<FormalCharacter> load(const std::string& system,
                                              const std::vector<int>& coeffs) = 0;
  virtual void save(const std::string& system, const std::vector<int>& coeffs,
                    const FormalCharacter& character) = 0;
};

/// Memo of irreducible characters keyed by (system label, highest weight).
/// Concurrent readers; inserts take the exclusive lock. Values are
/// deterministic, so a lost race only repeats work.
class CharacterCache {
 public:
  using Key = std::pair<std::string, std::vector<int>>;

  void set_store(std::shared_ptr<CharacterStore> store) {
    std::unique_lock lock(mu_);
    store_ = std::move(store);
  }

  std::shared_ptr<const IrrepCharacter> get(const RootSystem& rs, const DominantWeight& w) {
    Key key{rs.label(), w.coeffs};
    std::shared_ptr<CharacterStore> store;
    {
      std::shared_lock lock(mu_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
      store = store_;
    }
    std::shared_ptr<const IrrepCharacter> value;
    if (store) {
      if (auto loaded = store->load(rs.label(), w.coeffs)) value = from_stored(rs, w, std::move(*loaded));
    }
    if (!value) {
      value = std::make_shared<const IrrepCharacter>(freudenthal_character(rs, w));
      if (store) store->save(rs.label(), w.coeffs, value->character);
    }
    std::unique_lock lock(mu_);
    return memo_.try_emplace(std::move(key), value).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return memo_.size();
  }

  void clear() {
    std::unique_lock lock(mu_);
    memo_.clear();
  }

 private:
  static std::shared_ptr<const IrrepCharacter> from_stored(const RootSystem& rs, const DominantWeight& w,
                                                           FormalCharacter c) {
    const WeightVector lambda = rs.to_lattice(w);
    if (c.rank() != rs.rank() || c[lambda] != 1 || c.mass() != dim_weyl(rs, lambda)) return nullptr;
    IrrepCharacter out;
    out.highest = DominantWeight{w.coeffs, rs.label()};
    for (const auto& [mu, m] : c.terms())
      if (rs.is_dominant(mu)) out.dominant.emplace_back(mu, m);
    const WeightVector& rho = rs.rho();
    std::sort(out.dominant.begin(), out.dominant.end(), [&](const auto& x, const auto& y) {
      const long px = rs.ip2(x.first, rho);
      const long py = rs.ip2(y.first, rho);
      return px != py ? px > py : y.first < x.first;
    });
    out.dimension = c.mass();
    out.character = std::move(c);
    return std::make_shared<const IrrepCharacter>(std::move(out));
  }

  mutable std::shared_mutex mu_;
  std::map<Key, std::shared_ptr<const IrrepCharacter>> memo_;
  std::shared_ptr<CharacterStore> store_;
};

inline CharacterCache& default_character_cache() {
  static CharacterCache cache;
  return cache;
}

inline std::shared_ptr<const IrrepCharacter> irrep_character(const RootSystem& rs, const DominantWeight& w,
                                                             CharacterCache& cache = default_character_cache()) {
  return cache.get(rs, w);
}

}  // namespace splint
