#pragma once

#include <cstdint>

namespace cube_spectra {

/// A point of {0,1}^n stored as a bitmask. Bit i is coordinate i; the
/// textual 0/1 form writes the most significant coordinate first.
using Point = std::uint32_t;

inline constexpr int kDefaultTransformCap = 28;
inline constexpr int kDefaultSweepCap = 24;
inline constexpr int kHardDimensionCap = 31;

/// Default absolute tolerance for floating comparisons.
inline constexpr double kDefaultTolerance = 1e-9;

/// Largest n for dense functions on the cube. CUBE_SPECTRA_MAX_N overrides.
int transform_dimension_cap();

/// Largest n for exact bitset sweeps (covering counts, random codes).
/// CUBE_SPECTRA_MAX_N overrides this cap as well.
int sweep_dimension_cap();

/// Throws std::out_of_range unless 1 <= n <= transform_dimension_cap().
void require_transform_dimension(int n);
void require_sweep_dimension(int n);

inline constexpr std::uint64_t cube_size(int n) { return std::uint64_t{1} << n; }

}  // namespace cube_spectra
