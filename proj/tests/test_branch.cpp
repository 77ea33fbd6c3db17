#include <cctype>
#include <set>

#include <gtest/gtest.h>

#include "golden.hpp"
#include "splint/splint.hpp"

using namespace splint;

TEST(SplintCase, Catalog) {
  for (const auto& tag : case_tags()) {
    SCOPED_TRACE(tag);
    const SplintCase c = splint_case(tag);
    const int ra = catalog(c.ambient).rank(), rs = catalog(c.sub).rank();
    EXPECT_EQ(c.embedding.rank_in(), ra);
    EXPECT_EQ(c.embedding.rank_out(), rs);
    const bool type_one = tag.size() == 2 && std::isdigit(static_cast<unsigned char>(tag[1]));
    EXPECT_EQ(ra, type_one ? rs + 1 : rs);
  }
  EXPECT_EQ(canonical_case_tag("II(2)"), "II2");
  EXPECT_EQ(canonical_case_tag("III(3)"), "III");
  try {
    splint_case("VI");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedCase);
  }
}

TEST(SplintCase, EqualRankSubRootsLieInAmbient) {
  for (const auto& tag : case_tags()) {
    const SplintCase c = splint_case(tag);
    if (c.embedding.rank_in() != c.embedding.rank_out()) continue;
    std::set<std::vector<int>> roots;
    for (const auto& a : catalog(c.ambient).positive_roots()) {
      roots.insert(a.doubled_coords());
      roots.insert((-a).doubled_coords());
    }
    for (const auto& a : catalog(c.sub).positive_roots()) EXPECT_TRUE(roots.count(a.doubled_coords())) << tag;
  }
}

TEST(Embedding, G2WeightReadsAsA2Label) {
  // (k+2l) L1 + (k+l) L2 = (alpha+beta) L1 + alpha L2 gives alpha = k+l, beta = l.
  const SplintCase c = splint_case("IV");
  const RootSystem& g2 = catalog("G2");
  const RootSystem& a2 = catalog("A2");
  for (int k = 0; k <= 4; ++k)
    for (int l = 0; l <= 4; ++l) {
      const auto img = c.embedding.apply(g2.to_lattice(std::vector<int>{k, l}));
      EXPECT_EQ(a2.from_lattice(img).coeffs, (std::vector<int>{k + l, l}));
    }
}

TEST(Embedding, B4D4LabelMaps) {
  // Pi^r_f = rho_{f1-f2, f2-f3, f3-f4, 2 f4}; pi^r_g = pi_{g1-g2, g2-g3, g3-g4, g3+g4}.
  const RootSystem& b4 = catalog("B4");
  const RootSystem& d4 = catalog("D4");
  for (int code = 0; code < 81; ++code) {
    std::vector<int> lab{code % 3, code / 3 % 3, code / 9 % 3, code / 27};
    const WeightVector f = f_from_b_label(lab);
    EXPECT_EQ(f, b4.to_lattice(lab));
    EXPECT_EQ(b_label_from_f(f), lab);
    if (d4.is_dominant(f)) {
      EXPECT_EQ(d_label_from_g(f), d4.from_lattice(f).coeffs);
    }
  }
  EXPECT_EQ(d_label_from_g(WeightVector::from_doubled({1, 1, 1, -1})), (std::vector<int>{0, 0, 1, 0}));
}

TEST(Decompose, G2AdjointRestricted) {
  const auto chi = irrep_character(catalog("G2"), DominantWeight{{0, 1}, "G2"});
  const auto s = decompose(apply_map(splint_case("IV").embedding, chi->character), catalog("A2"));
  EXPECT_EQ(s, (Summands{{{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 1}}));
}

TEST(Decompose, IdempotentAndLinear) {
  const RootSystem& d4 = catalog("D4");
  const auto chi = irrep_character(d4, DominantWeight{{0, 1, 0, 1}, "D4"});
  EXPECT_EQ(decompose(chi->character, d4), (Summands{{{0, 1, 0, 1}, 1}}));
  FormalCharacter three(4);
  three.add_scaled(chi->character, 3);
  EXPECT_EQ(decompose(three, d4), (Summands{{{0, 1, 0, 1}, 3}}));
}

TEST(Decompose, RejectsNonCharacters) {
  const RootSystem& a2 = catalog("A2");
  FormalCharacter c(2);
  c.add(WeightVector::from_integers({-2, -1}), 1);  // -rho, alone
  try {
    decompose(c, a2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NondominantLeadingTerm);
  }
  FormalCharacter neg(2);
  neg.add_scaled(irrep_character(a2, DominantWeight{{1, 0}, "A2"})->character, -1);
  try {
    decompose(neg, a2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeMultiplicity);
  }
  EXPECT_EQ(decompose_virtual(neg, a2), (Summands{{{1, 0}, -1}}));
}

TEST(BranchOracle, G2AdjointAndThreeTwo) {
  const auto adj = branch_oracle(splint_case("IV"), {0, 1});
  EXPECT_EQ(adj.coefficient_sum, 3);
  EXPECT_TRUE(adj.dim_check);

  const auto r = branch_oracle(splint_case("IV"), {3, 2});
  for (int b = 0; b < 7; ++b)
    for (int a = 0; a < 7; ++a) {
      auto it = r.summands.find({a, b});
      EXPECT_EQ(it == r.summands.end() ? 0 : it->second, golden::fig2a[b][a]) << a << "," << b;
    }
  EXPECT_EQ(r.summands.size(), 27u);
  EXPECT_EQ(r.coefficient_sum, 42);
  EXPECT_TRUE(r.dim_check);
}

TEST(BranchOracle, B2ToD2) {
  const auto r = branch_oracle(splint_case("II2"), {1, 1});
  EXPECT_EQ(r.summands, (Summands{{{0, 1}, 1}, {{1, 0}, 1}, {{1, 2}, 1}, {{2, 1}, 1}}));
  std::int64_t total = 0;
  for (const auto& [nu, m] : r.summands) total += m * dim_weyl(catalog("D2"), catalog("D2").to_lattice(nu));
  EXPECT_EQ(total, 16);
}

TEST(BranchOracle, Deterministic) {
  CharacterCache fresh;
  const auto a = branch_oracle(splint_case("V_F4_D4"), {0, 0, 1, 0});
  const auto b = branch_oracle(splint_case("V_F4_D4"), {0, 0, 1, 0}, fresh);
  EXPECT_EQ(a.summands, b.summands);
  EXPECT_EQ(a.coefficient_sum, b.coefficient_sum);
}

TEST(BranchOracle, DimensionConservedEverywhere) {
  for (const auto& tag : case_tags()) {
    const SplintCase c = splint_case(tag);
    const int r = catalog(c.ambient).rank();
    for (int code = 0; code < (1 << r); ++code) {
      std::vector<int> lam(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) lam[static_cast<std::size_t>(i)] = (code >> i) & 1;
      SCOPED_TRACE(tag);
      EXPECT_TRUE(branch_oracle(c, lam).dim_check);
    }
  }
}

TEST(CoefficientSum, TypeIVMatchesA2Dimension) {
  for (int k = 0; k <= 4; ++k)
    for (int l = 0; l <= 4; ++l) {
      const auto rep = coefficient_sum_report(branch_oracle(splint_case("IV"), {k, l}), catalog("A2"), {k, l});
      EXPECT_TRUE(rep.equal);
      EXPECT_EQ(rep.aux_dimension, (k + 1) * (l + 1) * (k + l + 2) / 2);
    }
}

TEST(CoefficientSum, TypeII) {
  for (int k = 0; k <= 4; ++k)
    for (int l = 0; l <= 4; ++l) {
      const auto rep = coefficient_sum_report(branch_oracle(splint_case("II2"), {k, l}), catalog("A1^2"), {k, l});
      EXPECT_TRUE(rep.equal);
      EXPECT_EQ(rep.coefficient_sum, (k + 1) * (l + 1));
    }
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        const auto rep =
            coefficient_sum_report(branch_oracle(splint_case("II3"), {a, b, c}), catalog("A1^3"), {a, b, c});
        EXPECT_TRUE(rep.equal);
        EXPECT_EQ(rep.coefficient_sum, (a + 1) * (b + 1) * (c + 1));
      }
}
