#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "splint/disk_cache.hpp"
#include "splint/splint.hpp"

using namespace splint;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("splint-test-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST(Json, CharacterRoundTrip) {
  const auto chi = irrep_character(catalog("B3"), DominantWeight{{0, 0, 1}, "B3"});
  const json j = to_json(chi->character);
  EXPECT_EQ(j.at("rank"), 3);
  EXPECT_EQ(j.at("terms").size(), 8u);
  EXPECT_EQ(j.at("terms")[0].at("w2"), (std::vector<int>{-1, -1, -1}));
  EXPECT_EQ(character_from_json(j), chi->character);
  EXPECT_THROW(character_from_json(json{{"rank", 9}, {"terms", json::array()}}), Error);
}

TEST(Json, BranchingResultIsCanonical) {
  const auto r = branch_oracle(splint_case("IV"), {0, 1});
  const std::string expect =
      R"({"ambient":"G2","case":"IV","coefficient_sum":3,"dim_check":true,"lambda":[0,1],)"
      R"("summands":[{"m":1,"nu":[0,1]},{"m":1,"nu":[1,0]},{"m":1,"nu":[1,1]}]})";
  EXPECT_EQ(to_json(r).dump(), expect);
  EXPECT_EQ(to_json(rule_g2_a2(0, 1)).dump(), expect);
}

TEST(Json, RuleReportAndSchur) {
  const json j = to_json(verify_rule("II2", {1, 0}));
  EXPECT_EQ(j.at("rule"), "b2_d2");
  EXPECT_EQ(j.at("equal"), true);
  EXPECT_EQ(j.at("expected"), "theorem");
  EXPECT_EQ(j.at("summands"), j.at("oracle_summands"));
  EXPECT_EQ(to_json(theorem_rhs(0, 0)).dump(), R"([{"a":1,"b":0,"c":-1},{"a":1,"b":1,"c":1}])");
}

TEST(Json, RootSystemDump) {
  const json j = to_json(catalog("G2"));
  EXPECT_EQ(j.at("weyl_order"), 12);
  EXPECT_EQ(j.at("rho"), (std::vector<int>{6, 4}));
  EXPECT_EQ(j.at("positive_roots").size(), 6u);
}

TEST(DiskCache, SaveLoad) {
  TempDir tmp;
  DiskCache dc(tmp.path);
  const auto chi = irrep_character(catalog("C3"), DominantWeight{{0, 1, 0}, "C3"});
  EXPECT_FALSE(dc.load("C3", {0, 1, 0}));
  dc.save("C3", {0, 1, 0}, chi->character);
  const auto back = dc.load("C3", {0, 1, 0});
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, chi->character);
  EXPECT_FALSE(dc.load("C3", {0, 0, 1}));
  EXPECT_FALSE(dc.load("B3", {0, 1, 0}));
}

TEST(DiskCache, CorruptEntriesAreMissesAndGetOverwritten) {
  TempDir tmp;
  auto dc = std::make_shared<DiskCache>(tmp.path);
  const RootSystem& g2 = catalog("G2");
  const fs::path file = dc->path_for("G2", {1, 1});
  {
    std::ofstream out(file);
    out << "{\"key\":\"G2|1,1\",\"character\":{\"rank\":2,\"terms\":[]},\"checksum\":\"0000000000000000\"}\n";
  }
  EXPECT_FALSE(dc->load("G2", {1, 1}));
  {
    std::ofstream out(file);
    out << "not json";
  }
  EXPECT_FALSE(dc->load("G2", {1, 1}));

  CharacterCache cache;
  cache.set_store(dc);
  EXPECT_EQ(cache.get(g2, DominantWeight{{1, 1}, "G2"})->dimension, 64);
  const auto reread = dc->load("G2", {1, 1});
  ASSERT_TRUE(reread);
  EXPECT_EQ(reread->mass(), 64);
}

TEST(DiskCache, WrongButWellFormedEntryIsRejectedByCache) {
  // A checksummed entry holding the wrong character fails the highest-weight
  // and dimension checks and is recomputed.
  TempDir tmp;
  auto dc = std::make_shared<DiskCache>(tmp.path);
  const RootSystem& a2 = catalog("A2");
  dc->save("A2", {1, 0}, irrep_character(a2, DominantWeight{{0, 1}, "A2"})->character);
  CharacterCache cache;
  cache.set_store(dc);
  const auto chi = cache.get(a2, DominantWeight{{1, 0}, "A2"});
  EXPECT_EQ(chi->character, irrep_character(a2, DominantWeight{{1, 0}, "A2"})->character);
}

TEST(DiskCache, KeysAreStable) {
  EXPECT_EQ(DiskCache::key_string("F4", {0, 0, 0, 1}), "F4|0,0,0,1");
  EXPECT_EQ(hex64(fnv1a("")), "cbf29ce484222325");
}
