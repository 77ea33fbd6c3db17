#include <random>

#include <gtest/gtest.h>

#include "splint/splint.hpp"

using namespace splint;

namespace {

WeightVector w2(std::initializer_list<int> doubled) { return WeightVector::from_doubled(doubled); }
WeightVector wi(std::initializer_list<int> coords) { return WeightVector::from_integers(coords); }

FormalCharacter random_character(std::mt19937& rng, int rank, int terms) {
  std::uniform_int_distribution<int> coord(-3, 3), coeff(-4, 4);
  FormalCharacter c(rank);
  for (int t = 0; t < terms; ++t) {
    WeightVector v(rank);
    for (int i = 0; i < rank; ++i) v.set_doubled(i, coord(rng));
    c.add(v, coeff(rng));
  }
  return c;
}

}  // namespace

TEST(WeightVector, DoubledStorage) {
  const WeightVector v = w2({3, -1});
  EXPECT_EQ(v.rank(), 2);
  EXPECT_EQ(v.doubled(0), 3);
  EXPECT_EQ(v.coord(0), Rational(3, 2));
  EXPECT_EQ((v + v).doubled_coords(), (std::vector<int>{6, -2}));
  EXPECT_EQ(wi({1, 2}).doubled_coords(), (std::vector<int>{2, 4}));
  EXPECT_THROW((void)(w2({1}) + w2({1, 1})), Error);
  EXPECT_THROW(WeightVector(5), Error);
}

TEST(FormalCharacter, AddCancels) {
  const WeightVector mu = wi({1, 0});
  const auto sum = char_add(FormalCharacter::monomial(mu, 1), FormalCharacter::monomial(mu, -1));
  EXPECT_TRUE(sum.empty());
}

TEST(FormalCharacter, AddDisjoint) {
  const auto sum = char_add(FormalCharacter::monomial(wi({1, 0}), 2), FormalCharacter::monomial(wi({0, 1}), 3));
  EXPECT_EQ(sum.size(), 2u);
  EXPECT_EQ(sum[wi({1, 0})], 2);
  EXPECT_EQ(sum[wi({0, 1})], 3);
  EXPECT_EQ(sum.mass(), 5);
}

TEST(FormalCharacter, RankMismatch) {
  FormalCharacter a(2), b(3);
  EXPECT_THROW(char_add(a, b), Error);
  EXPECT_THROW(char_mul(a, b), Error);
  try {
    char_add(a, b);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankMismatch);
  }
}

// x^2y + y^2z + z^2x + xy^2 + yz^2 + zx^2 + xy + yz + zx + x + y + z + 2 with
// x y z = 1, written in (L1, L2) coordinates.
TEST(FormalCharacter, AdjointOfG2FromThreeA2Characters) {
  const RootSystem& a2 = catalog("A2");
  FormalCharacter sum(2);
  for (std::vector<int> nu : {std::vector<int>{0, 1}, {1, 0}, {1, 1}}) {
    sum = char_add(sum, irrep_character(a2, DominantWeight{nu, "A2"})->character);
  }
  FormalCharacter display(2);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 1}, {-1, 1}, {-1, -2}, {1, 2}, {-2, -1}, {1, -1},
                                                      {1, 1}, {-1, 0}, {0, -1}, {1, 0}, {0, 1}, {-1, -1}}) {
    display.add(WeightVector::from_integers({a, b}), 1);
  }
  display.add(WeightVector::zero(2), 2);
  EXPECT_EQ(sum, display);
  EXPECT_EQ(sum.mass(), 14);
}

TEST(FormalCharacter, MulIdentityAndSquare) {
  std::mt19937 rng(7);
  const FormalCharacter c = random_character(rng, 2, 6);
  EXPECT_EQ(char_mul(FormalCharacter::monomial(WeightVector::zero(2)), c), c);

  const WeightVector mu = wi({1, -1});
  FormalCharacter f(2);
  f.add(mu, 1);
  f.add(-mu, -1);
  FormalCharacter expect(2);
  expect.add(mu + mu, 1);
  expect.add(WeightVector::zero(2), -2);
  expect.add(-(mu + mu), 1);
  EXPECT_EQ(char_mul(f, f), expect);
}

// delta_{A2} chi(pi_{0,1}) against the displayed alternating sum
// x1^3 x2 + x3^3 x1 + x2^3 x3 - x1^3 x3 - x3^3 x2 - x2^3 x1.
TEST(FormalCharacter, DeltaTimesCharacterA2) {
  const RootSystem& a2 = catalog("A2");
  auto mono = [](int e1, int e2, int e3) { return WeightVector::from_integers({e1 - e3, e2 - e3}); };
  FormalCharacter delta(2);  // (x1 - x2)(x1 - x3)(x2 - x3)
  {
    FormalCharacter f1(2), f2(2), f3(2);
    f1.add(mono(1, 0, 0), 1);
    f1.add(mono(0, 1, 0), -1);
    f2.add(mono(1, 0, 0), 1);
    f2.add(mono(0, 0, 1), -1);
    f3.add(mono(0, 1, 0), 1);
    f3.add(mono(0, 0, 1), -1);
    delta = char_mul(char_mul(f1, f2), f3);
  }
  EXPECT_EQ(delta, weyl_denominator(a2));
  FormalCharacter display(2);
  display.add(mono(3, 1, 0), 1);
  display.add(mono(1, 0, 3), 1);
  display.add(mono(0, 3, 1), 1);
  display.add(mono(3, 0, 1), -1);
  display.add(mono(0, 1, 3), -1);
  display.add(mono(1, 3, 0), -1);
  const auto chi = irrep_character(a2, DominantWeight{{0, 1}, "A2"});
  EXPECT_EQ(char_mul(delta, chi->character), display);
}

TEST(FormalCharacter, MulCommutativeAssociative) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int rank = 1 + trial % 4;
    const auto a = random_character(rng, rank, 5);
    const auto b = random_character(rng, rank, 4);
    const auto c = random_character(rng, rank, 3);
    EXPECT_EQ(char_mul(a, b), char_mul(b, a));
    EXPECT_EQ(char_mul(char_mul(a, b), c), char_mul(a, char_mul(b, c)));
    EXPECT_EQ(char_mul(a, char_add(b, c)), char_add(char_mul(a, b), char_mul(a, c)));
  }
}

TEST(LatticeMap, IdentityAndCollapse) {
  const RootSystem& g2 = catalog("G2");
  const auto chi = irrep_character(g2, DominantWeight{{1, 0}, "G2"});
  EXPECT_EQ(apply_map(LatticeMap::identity(2), chi->character), chi->character);

  const LatticeMap zero(2, 2, std::vector<Rational>(4, Rational(0)));
  const auto collapsed = apply_map(zero, chi->character);
  EXPECT_EQ(collapsed.size(), 1u);
  EXPECT_EQ(collapsed[WeightVector::zero(2)], 7);
}

TEST(LatticeMap, RoundTripAndMass) {
  std::mt19937 rng(11);
  // An invertible integral map with integral inverse.
  const LatticeMap m(2, 2, {Rational(2), Rational(1), Rational(1), Rational(1)});
  const LatticeMap inv = m.inverse();
  EXPECT_EQ(inv.at(0, 0), Rational(1));
  EXPECT_EQ(inv.at(0, 1), Rational(-1));
  for (int t = 0; t < 20; ++t) {
    FormalCharacter c(2);
    for (const auto& [w, k] : random_character(rng, 2, 6).terms()) {
      c.add(WeightVector::from_integers({w.doubled(0), w.doubled(1)}), k);
    }
    const auto image = apply_map(m, c);
    EXPECT_EQ(image.mass(), c.mass());
    EXPECT_EQ(apply_map(inv, image), c);
  }
}

TEST(LatticeMap, Errors) {
  const LatticeMap half(1, 1, {Rational(1, 2)});
  EXPECT_THROW(half.apply(w2({1})), Error);  // 1/4
  EXPECT_EQ(half.apply(wi({1})), w2({1}));
  EXPECT_THROW(apply_map(LatticeMap::identity(3), FormalCharacter(2)), Error);
  const LatticeMap singular(2, 2, {Rational(1), Rational(2), Rational(2), Rational(4)});
  EXPECT_THROW(singular.inverse(), Error);
}

TEST(LatticeMap, TypeOneProjection) {
  // A2 -> A1 keeps L1 - L2.
  const LatticeMap p = type_one_map(2);
  EXPECT_EQ(p.apply(wi({3, 1})).doubled_coords(), (std::vector<int>{4}));
  const LatticeMap q = type_one_map(3);
  EXPECT_EQ(q.apply(wi({3, 2, 1})).doubled_coords(), (std::vector<int>{4, 2}));
}
