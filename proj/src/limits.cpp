#include "cube_spectra/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace cube_spectra {
namespace {

int env_cap(int fallback) {
  const char* raw = std::getenv("CUBE_SPECTRA_MAX_N");
  if (raw == nullptr || *raw == '\0') return fallback;
  int value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value < 1 || value > kHardDimensionCap) {
    throw std::invalid_argument("CUBE_SPECTRA_MAX_N must be an integer in [1, " +
                                std::to_string(kHardDimensionCap) + "]");
  }
  return value;
}

void require_range(int n, int cap, const char* what) {
  if (n < 1 || n > cap) {
    throw std::out_of_range(std::string(what) + ": dimension n=" + std::to_string(n) +
                            " outside [1, " + std::to_string(cap) + "]");
  }
}

}  // namespace

int transform_dimension_cap() { return env_cap(kDefaultTransformCap); }

int sweep_dimension_cap() { return env_cap(kDefaultSweepCap); }

void require_transform_dimension(int n) { require_range(n, transform_dimension_cap(), "transform"); }

void require_sweep_dimension(int n) { require_range(n, sweep_dimension_cap(), "sweep"); }

}  // namespace cube_spectra
