#include "subpat/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>
#include <thread>

#include <unistd.h>

namespace subpat {

std::uint64_t fnv1a64(std::string_view data) noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

CountCache::CountCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path CountCache::default_dir() {
  if (const char* env = std::getenv("SUBPAT_CACHE"); env != nullptr && *env != '\0') return env;
  return ".subpat-cache";
}

std::filesystem::path CountCache::entry(std::uint64_t key, int rank) const {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << key << std::dec << "-r" << rank << ".count";
  return dir_ / name.str();
}

std::optional<std::uint64_t> CountCache::get(std::uint64_t key, int rank) const {
  std::ifstream in(entry(key, rank));
  std::uint64_t value = 0;
  if (!(in >> value)) return std::nullopt;
  return value;
}

void CountCache::put(std::uint64_t key, int rank, std::uint64_t value) const {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  const auto target = entry(key, rank);
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << ::getpid() << "."
           << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
  const auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << value << '\n';
    if (!out) return;
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace subpat
