#include <cstdlib>
#include <limits>
#include <string>

#include "coordlat/parallel.hpp"
#include "coordlat/types.hpp"

namespace coordlat {

std::string format_set(const ElementSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set[i]);
  }
  out += '}';
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result *= base;
  }
  return result;
}

std::size_t max_parallelism() {
  if (const char* env = std::getenv("COORDLAT_MAX_PARALLELISM")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::size_t chunk_count(std::size_t n, std::size_t min_chunk) {
  if (min_chunk == 0) min_chunk = 1;
  return std::max<std::size_t>(1, std::min(max_parallelism(), (n + min_chunk - 1) / min_chunk));
}

}  // namespace coordlat
