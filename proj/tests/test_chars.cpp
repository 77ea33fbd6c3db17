#include <thread>

#include <gtest/gtest.h>

#include "splint/splint.hpp"

using namespace splint;

namespace {

std::int64_t dim(const std::string& label, std::vector<int> w) {
  return dim_weyl(catalog(label), DominantWeight{std::move(w), label});
}

std::vector<std::vector<int>> box(int rank, int max) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < rank; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& p : out)
      for (int x = 0; x <= max; ++x) {
        auto q = p;
        q.push_back(x);
        next.push_back(q);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST(DimWeyl, KnownValues) {
  EXPECT_EQ(dim("A2", {2, 2}), 27);
  EXPECT_EQ(dim("G2", {1, 1}), 64);
  EXPECT_EQ(dim("G2", {3, 2}), 1547);
  EXPECT_EQ(dim("G2", {0, 1}), 14);
  EXPECT_EQ(dim("F4", {0, 0, 0, 1}), 26);
  EXPECT_EQ(dim("F4", {1, 0, 0, 0}), 52);
  EXPECT_EQ(dim("F4", {0, 0, 1, 0}), 273);
}

TEST(DimWeyl, ClosedFormsA2G2B2) {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      EXPECT_EQ(dim("A2", {a, b}), (a + 1) * (b + 1) * (a + b + 2) / 2);
      const std::int64_t k = a, l = b;
      EXPECT_EQ(dim("G2", {a, b}),
                (k + 1) * (k + l + 2) * (2 * k + 3 * l + 5) * (k + 2 * l + 3) * (k + 3 * l + 4) * (l + 1) / 120);
      EXPECT_EQ(dim("B2", {a, b}), (k + 1) * (l + 1) * (k + l + 2) * (2 * k + l + 3) / 6);
    }
}

TEST(DimWeyl, ClosedFormsC3A1Cubed) {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        const std::int64_t A = a + 1, B = b + 1, C = c + 1;
        EXPECT_EQ(dim("C3", {a, b, c}),
                  A * B * C * (A + B) * (B + C) * (A + B + C) * (B + 2 * C) * (A + B + 2 * C) * (A + 2 * B + 2 * C) / 720);
      }
  EXPECT_EQ(dim("C3", {1, 0, 0}), 6);
  EXPECT_EQ(dim("C3", {0, 1, 0}), 14);
  EXPECT_EQ(dim("C3", {0, 0, 1}), 14);
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c) EXPECT_EQ(dim("A1^3", {a, b, c}), (a + 1) * (b + 1) * (c + 1));
}

TEST(Freudenthal, G2Adjoint) {
  const auto chi = freudenthal_character(catalog("G2"), DominantWeight{{0, 1}, "G2"});
  EXPECT_EQ(chi.dimension, 14);
  EXPECT_EQ(chi.character.size(), 13u);
  EXPECT_EQ(chi.character[WeightVector::zero(2)], 2);
  for (const auto& a : catalog("G2").positive_roots()) {
    EXPECT_EQ(chi.character[a], 1);
    EXPECT_EQ(chi.character[-a], 1);
  }
}

TEST(Freudenthal, SmallCases) {
  const auto a2 = freudenthal_character(catalog("A2"), DominantWeight{{1, 0}, "A2"});
  EXPECT_EQ(a2.character.size(), 3u);
  for (const auto& [mu, m] : a2.character.terms()) EXPECT_EQ(m, 1);
  EXPECT_EQ(freudenthal_character(catalog("B2"), DominantWeight{{1, 1}, "B2"}).dimension, 16);
}

TEST(Freudenthal, MassEqualsDimensionAndWeylInvariant) {
  for (const auto& label : catalog_labels()) {
    const RootSystem& rs = catalog(label);
    const int max = rs.rank() == 4 ? 1 : 2;
    for (const auto& w : box(rs.rank(), max)) {
      SCOPED_TRACE(label + " " + rs.to_lattice(w).to_string());
      const auto chi = freudenthal_character(rs, DominantWeight{w, label});
      ASSERT_EQ(chi.character.mass(), dim_weyl(rs, rs.to_lattice(w)));
      ASSERT_EQ(chi.character[rs.to_lattice(w)], 1);
      for (const auto& [mu, m] : chi.character.terms())
        for (int j = 0; j < rs.rank(); ++j) ASSERT_EQ(chi.character[rs.reflect(mu, j)], m);
    }
  }
}

// A_{k,l,G2} at (0,1): x1^5 x2^3 and its images, signs by parity.
TEST(WeylCharacterFormula, G2NumeratorMatchesDisplay) {
  const RootSystem& g2 = catalog("G2");
  auto mono = [](int e1, int e2, int e3) { return WeightVector::from_integers({e1 - e3, e2 - e3}); };
  FormalCharacter display(2);
  display.add(mono(5, 3, 0), 1);
  display.add(mono(3, 0, 5), 1);
  display.add(mono(0, 5, 3), 1);
  display.add(mono(-5, -3, 0), 1);
  display.add(mono(0, -5, -3), 1);
  display.add(mono(-3, 0, -5), 1);
  display.add(mono(5, 0, 3), -1);
  display.add(mono(0, 3, 5), -1);
  display.add(mono(3, 5, 0), -1);
  display.add(mono(-5, 0, -3), -1);
  display.add(mono(-3, -5, 0), -1);
  display.add(mono(0, -3, -5), -1);
  EXPECT_EQ(weyl_numerator(g2, g2.to_lattice(std::vector<int>{0, 1})), display);
  const auto chi = irrep_character(g2, DominantWeight{{0, 1}, "G2"});
  EXPECT_TRUE(wcf_consistency(g2, *chi));
}

TEST(WeylCharacterFormula, TrivialAndSmall) {
  const RootSystem& a2 = catalog("A2");
  EXPECT_EQ(weyl_numerator(a2, WeightVector::zero(2)), weyl_denominator(a2));
  for (const auto& label : catalog_labels()) {
    const RootSystem& rs = catalog(label);
    for (const auto& w : box(rs.rank(), 1)) {
      SCOPED_TRACE(label);
      EXPECT_TRUE(wcf_consistency(rs, *irrep_character(rs, DominantWeight{w, label})));
    }
  }
}

TEST(WeylCharacterFormula, DetectsCorruption) {
  const RootSystem& b2 = catalog("B2");
  IrrepCharacter chi = freudenthal_character(b2, DominantWeight{{1, 1}, "B2"});
  chi.character.add(WeightVector::zero(2), 1);
  EXPECT_FALSE(wcf_consistency(b2, chi));
}

TEST(WeylCharacterFormula, F4Spin) {
  const RootSystem& f4 = catalog("F4");
  EXPECT_EQ(weyl_numerator(f4, f4.rho()).size(), 1152u);
  EXPECT_TRUE(wcf_consistency(f4, *irrep_character(f4, DominantWeight{{0, 0, 0, 1}, "F4"})));
}

TEST(CharacterCache, MemoAndConcurrency) {
  CharacterCache cache;
  const RootSystem& g2 = catalog("G2");
  std::vector<std::thread> threads;
  std::vector<std::int64_t> dims(8);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] { dims[static_cast<std::size_t>(t)] = cache.get(g2, DominantWeight{{t % 3, 1}, "G2"})->dimension; });
  }
  for (auto& th : threads) th.join();
  EXPECT_EQ(cache.size(), 3u);
  EXPECT_EQ(dims[0], 14);
  EXPECT_EQ(dims[1], 64);
  EXPECT_EQ(dims[2], 189);
  const auto a = cache.get(g2, DominantWeight{{0, 1}, "G2"});
  const auto b = cache.get(g2, DominantWeight{{0, 1}, "G2"});
  EXPECT_EQ(a.get(), b.get());
}

TEST(DimWeyl, RejectsNonDominantLabel) {
  EXPECT_THROW(dim("A2", {-1, 0}), Error);
  EXPECT_THROW(dim("A2", {1, 0, 0}), Error);
}

TEST(WeylCharacterFormula, MergedProductMatchesPlainConvolution) {
  for (const char* label : {"A2", "B3", "G2", "C3", "D4", "A1^3"}) {
    const RootSystem& rs = catalog(label);
    const auto chi = irrep_character(rs, DominantWeight{std::vector<int>(static_cast<std::size_t>(rs.rank()), 1), label});
    FormalCharacter slow = char_mul(chi->character, FormalCharacter::monomial(rs.rho()));
    for (const auto& a : rs.positive_roots()) {
      FormalCharacter f(rs.rank());
      f.add(WeightVector::zero(rs.rank()), 1);
      f.add(-a, -1);
      slow = char_mul(slow, f);
    }
    EXPECT_EQ(times_weyl_denominator(rs, chi->character), slow) << label;
  }
}
