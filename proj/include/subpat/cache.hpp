#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>

namespace subpat {

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view data) noexcept;

/// One small file per (spec hash, rank). Writers go through a temporary file
/// and a rename, so readers never see partial entries.
class CountCache {
 public:
  explicit CountCache(std::filesystem::path dir);

  /// $SUBPAT_CACHE, or ./.subpat-cache.
  static std::filesystem::path default_dir();

  std::optional<std::uint64_t> get(std::uint64_t key, int rank) const;
  void put(std::uint64_t key, int rank, std::uint64_t value) const;

  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path entry(std::uint64_t key, int rank) const;
  std::filesystem::path dir_;
};

}  // namespace subpat
