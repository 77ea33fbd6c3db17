#pragma once

// On-disk character store. One file per key, named by a hash of the key and
// holding a single JSON line with the key, the character and a checksum of
// the serialized character. Writes go through a temporary file and rename,
// so readers never see a partial entry. Anything that fails validation is
// treated as a miss and overwritten by the recomputed value.

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "splint/chars.hpp"
#include "splint/io.hpp"

namespace splint {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = digits[v & 0xF];
  return out;
}

class DiskCache final : public CharacterStore {
 public:
  explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

  /// SPLINT_CACHE_DIR, or nullptr when unset or empty.
  static std::shared_ptr<DiskCache> from_env() {
    const char* d = std::getenv("SPLINT_CACHE_DIR");
    if (!d || !*d) return nullptr;
    return std::make_shared<DiskCache>(d);
  }

  static std::string key_string(const std::string& system, const std::vector<int>& coeffs) {
    std::string k = system + "|";
    for (std::size_t i = 0; i < coeffs.size(); ++i) k += (i ? "," : "") + std::to_string(coeffs[i]);
    return k;
  }

  std::filesystem::path path_for(const std::string& system, const std::vector<int>& coeffs) const {
    return dir_ / (hex64(fnv1a(key_string(system, coeffs))) + ".json");
  }

  std::optional<FormalCharacter> load(const std::string& system, const std::vector<int>& coeffs) override {
    std::ifstream in(path_for(system, coeffs));
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line)) return std::nullopt;
    try {
      const json j = json::parse(line);
      if (j.at("key").get<std::string>() != key_string(system, coeffs)) return std::nullopt;
      const json& value = j.at("character");
      if (j.at("checksum").get<std::string>() != hex64(fnv1a(value.dump()))) return std::nullopt;
      return character_from_json(value);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void save(const std::string& system, const std::vector<int>& coeffs, const FormalCharacter& c) override {
    const json value = to_json(c);
    const json entry{{"key", key_string(system, coeffs)},
                     {"character", value},
                     {"checksum", hex64(fnv1a(value.dump()))}};
    const auto target = path_for(system, coeffs);
    std::ostringstream suffix;
    suffix << ".tmp." << std::this_thread::get_id() << "." << counter_.fetch_add(1);
    auto tmp = target;
    tmp += suffix.str();
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << entry.dump() << '\n';
      if (!out) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        return;  // the cache is an optimization; failure to write is not fatal
      }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
  std::atomic<std::uint64_t> counter_{0};
};

}  // namespace splint
