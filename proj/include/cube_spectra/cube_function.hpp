#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "cube_spectra/limits.hpp"

namespace cube_spectra {

/// Real-valued function on {0,1}^n, stored densely as 2^n values indexed by
/// the bitmask of the point. The same type carries Fourier-domain data, in
/// which case the index is the character label S.
///
/// Values are validated on construction (exact length, all finite) and are
/// not mutable afterwards.
class CubeFunction {
 public:
  CubeFunction() = default;
  /// Constant function.
  explicit CubeFunction(int n, double fill = 0.0);
  CubeFunction(int n, std::vector<double> values);

  static CubeFunction indicator(int n, std::span<const Point> points);
  static CubeFunction delta(int n, Point at, double value = 1.0);
  /// W_S(x) = (-1)^<x,S>.
  static CubeFunction character(int n, Point s);
  /// L(x) = 2^n on weight-one points and 0 elsewhere, so that f * L = Af.
  static CubeFunction neighbor_kernel(int n);
  /// Lift a weight profile: value at x is profile[|x|], zero past the end.
  static CubeFunction from_profile(int n, std::span<const double> profile);

  int dimension() const { return n_; }
  std::size_t size() const { return values_.size(); }
  double operator[](Point x) const { return values_[x]; }
  std::span<const double> values() const { return values_; }
  std::vector<double> release() && { return std::move(values_); }

  friend bool operator==(const CubeFunction&, const CubeFunction&) = default;

 private:
  int n_ = 0;
  std::vector<double> values_;
};

/// Exact integer carrier, used for unnormalized transforms of 0/1 functions
/// so that zero tests are exact.
class IntCubeFunction {
 public:
  IntCubeFunction() = default;
  IntCubeFunction(int n, std::vector<std::int64_t> values);

  static IntCubeFunction indicator(int n, std::span<const Point> points);

  int dimension() const { return n_; }
  std::size_t size() const { return values_.size(); }
  std::int64_t operator[](Point x) const { return values_[x]; }
  std::span<const std::int64_t> values() const { return values_; }

  friend bool operator==(const IntCubeFunction&, const IntCubeFunction&) = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> values_;
};

struct Moments {
  double mean = 0.0;           ///< 2^-n sum f(x)
  double second_moment = 0.0;  ///< 2^-n sum f(x)^2
};

/// Normalized transform: fhat(S) = 2^-n sum_x f(x) (-1)^<x,S>.
CubeFunction wht(const CubeFunction& f);

/// f(x) = sum_S fhat(S) (-1)^<x,S>; undoes wht.
CubeFunction inverse_wht(const CubeFunction& fhat);

/// Unnormalized integer transform sum_x f(x) (-1)^<x,S>. Throws
/// std::overflow_error if an intermediate would leave int64 range.
IntCubeFunction wht_unnormalized(const IntCubeFunction& f);

/// (f * g)(x) = E_y f(y) g(x + y), computed through the transform.
CubeFunction convolve(const CubeFunction& f, const CubeFunction& g);

/// (Af)(x) = sum over the n neighbours y of x of f(y).
CubeFunction adjacency_apply(const CubeFunction& f);

Moments moments(const CubeFunction& f);

/// 2^n E^2 f / E f^2. Never exceeds the support size of f.
double essential_support_size(const CubeFunction& f);

/// Pointwise product; E over the cube of the result is <f, g>.
CubeFunction multiply(const CubeFunction& f, const CubeFunction& g);

/// <f, g> = 2^-n sum f(x) g(x).
double inner_product(const CubeFunction& f, const CubeFunction& g);

/// Number of entries with |value| > threshold.
std::size_t support_size(const CubeFunction& f, double threshold = 0.0);

// Serialization. Text form is one "index value" pair per line, ordered by
// index, reals printed round-trip exact. Binary form is the 2^n values as
// little-endian IEEE-754 doubles with nothing else; n follows from the size.
void write_text(std::ostream& out, const CubeFunction& f);
CubeFunction read_text(std::istream& in);
void write_binary(std::ostream& out, const CubeFunction& f);
CubeFunction read_binary(std::istream& in);

}  // namespace cube_spectra
