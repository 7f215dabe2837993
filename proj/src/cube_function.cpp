#include "cube_spectra/cube_function.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cube_spectra {
namespace {

void require_same_dimension(const CubeFunction& f, const CubeFunction& g, const char* op) {
  if (f.dimension() != g.dimension()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(f.dimension()) + " vs " +
                                std::to_string(g.dimension()) + ")");
  }
}

void require_point(int n, Point x) {
  if (std::uint64_t{x} >= cube_size(n)) {
    throw std::out_of_range("point " + std::to_string(x) + " outside {0,1}^" + std::to_string(n));
  }
}

// In-place butterflies; h doubles each pass.
template <typename T>
void butterflies(std::vector<T>& a) {
  const std::size_t size = a.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t block = 0; block < size; block += h << 1) {
      for (std::size_t j = block; j < block + h; ++j) {
        const T u = a[j];
        const T v = a[j + h];
        a[j] = u + v;
        a[j + h] = u - v;
      }
    }
  }
}

}  // namespace

CubeFunction::CubeFunction(int n, double fill) : n_(n) {
  require_transform_dimension(n);
  if (!std::isfinite(fill)) throw std::invalid_argument("CubeFunction: non-finite fill value");
  values_.assign(cube_size(n), fill);
}

CubeFunction::CubeFunction(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
  require_transform_dimension(n);
  if (values_.size() != cube_size(n)) {
    throw std::invalid_argument("CubeFunction: expected " + std::to_string(cube_size(n)) +
                                " values, got " + std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("CubeFunction: non-finite value");
  }
}

CubeFunction CubeFunction::indicator(int n, std::span<const Point> points) {
  std::vector<double> values(cube_size(n), 0.0);
  for (Point x : points) {
    require_point(n, x);
    values[x] = 1.0;
  }
  return {n, std::move(values)};
}

CubeFunction CubeFunction::delta(int n, Point at, double value) {
  require_transform_dimension(n);
  require_point(n, at);
  std::vector<double> values(cube_size(n), 0.0);
  values[at] = value;
  return {n, std::move(values)};
}

CubeFunction CubeFunction::character(int n, Point s) {
  require_transform_dimension(n);
  require_point(n, s);
  std::vector<double> values(cube_size(n));
  for (std::size_t x = 0; x < values.size(); ++x) {
    values[x] = (std::popcount(static_cast<Point>(x) & s) & 1) ? -1.0 : 1.0;
  }
  return {n, std::move(values)};
}

CubeFunction CubeFunction::neighbor_kernel(int n) {
  require_transform_dimension(n);
  std::vector<double> values(cube_size(n), 0.0);
  const double scale = std::ldexp(1.0, n);
  for (int i = 0; i < n; ++i) values[Point{1} << i] = scale;
  return {n, std::move(values)};
}

CubeFunction CubeFunction::from_profile(int n, std::span<const double> profile) {
  require_transform_dimension(n);
  if (profile.size() > static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("from_profile: profile longer than n+1");
  }
  std::vector<double> values(cube_size(n), 0.0);
  for (std::size_t x = 0; x < values.size(); ++x) {
    const auto w = static_cast<std::size_t>(std::popcount(static_cast<Point>(x)));
    if (w < profile.size()) values[x] = profile[w];
  }
  return {n, std::move(values)};
}

IntCubeFunction::IntCubeFunction(int n, std::vector<std::int64_t> values)
    : n_(n), values_(std::move(values)) {
  require_transform_dimension(n);
  if (values_.size() != cube_size(n)) {
    throw std::invalid_argument("IntCubeFunction: expected " + std::to_string(cube_size(n)) +
                                " values, got " + std::to_string(values_.size()));
  }
}

IntCubeFunction IntCubeFunction::indicator(int n, std::span<const Point> points) {
  require_transform_dimension(n);
  std::vector<std::int64_t> values(cube_size(n), 0);
  for (Point x : points) {
    require_point(n, x);
    values[x] = 1;
  }
  return {n, std::move(values)};
}

CubeFunction wht(const CubeFunction& f) {
  std::vector<double> a(f.values().begin(), f.values().end());
  butterflies(a);
  const double scale = std::ldexp(1.0, -f.dimension());  // exact
  for (double& v : a) v *= scale;
  return {f.dimension(), std::move(a)};
}

CubeFunction inverse_wht(const CubeFunction& fhat) {
  std::vector<double> a(fhat.values().begin(), fhat.values().end());
  butterflies(a);
  return {fhat.dimension(), std::move(a)};
}

IntCubeFunction wht_unnormalized(const IntCubeFunction& f) {
  // Every partial sum is bounded by the l1 norm of the input.
  std::int64_t l1 = 0;
  for (std::int64_t v : f.values()) {
    if (v == std::numeric_limits<std::int64_t>::min() ||
        __builtin_add_overflow(l1, v < 0 ? -v : v, &l1)) {
      throw std::overflow_error("wht_unnormalized: input l1 norm exceeds int64 range");
    }
  }
  std::vector<std::int64_t> a(f.values().begin(), f.values().end());
  butterflies(a);
  return {f.dimension(), std::move(a)};
}

CubeFunction convolve(const CubeFunction& f, const CubeFunction& g) {
  require_same_dimension(f, g, "convolve");
  CubeFunction fh = wht(f);
  CubeFunction gh = wht(g);
  std::vector<double> prod = std::move(fh).release();
  for (std::size_t s = 0; s < prod.size(); ++s) prod[s] *= gh[static_cast<Point>(s)];
  return inverse_wht(CubeFunction(f.dimension(), std::move(prod)));
}

CubeFunction adjacency_apply(const CubeFunction& f) {
  const int n = f.dimension();
  const auto src = f.values();
  std::vector<double> out(src.size(), 0.0);
  // Neighbours are accumulated in bit order 0..n-1 for every x.
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t x = 0; x < out.size(); ++x) out[x] += src[x ^ bit];
  }
  return {n, std::move(out)};
}

Moments moments(const CubeFunction& f) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double v : f.values()) {
    sum += v;
    sum_sq += v * v;
  }
  const double scale = std::ldexp(1.0, -f.dimension());
  return {sum * scale, sum_sq * scale};
}

double essential_support_size(const CubeFunction& f) {
  const Moments m = moments(f);
  if (m.second_moment == 0.0) {
    throw std::invalid_argument("essential_support_size: zero function");
  }
  return std::ldexp(m.mean * m.mean / m.second_moment, f.dimension());
}

CubeFunction multiply(const CubeFunction& f, const CubeFunction& g) {
  require_same_dimension(f, g, "multiply");
  std::vector<double> out(f.size());
  for (std::size_t x = 0; x < out.size(); ++x) {
    out[x] = f[static_cast<Point>(x)] * g[static_cast<Point>(x)];
  }
  return {f.dimension(), std::move(out)};
}

double inner_product(const CubeFunction& f, const CubeFunction& g) {
  require_same_dimension(f, g, "inner_product");
  double sum = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    sum += f[static_cast<Point>(x)] * g[static_cast<Point>(x)];
  }
  return std::ldexp(sum, -f.dimension());
}

std::size_t support_size(const CubeFunction& f, double threshold) {
  return static_cast<std::size_t>(std::count_if(
      f.values().begin(), f.values().end(), [threshold](double v) { return std::abs(v) > threshold; }));
}

void write_text(std::ostream& out, const CubeFunction& f) {
  std::array<char, 64> buf{};
  for (std::size_t x = 0; x < f.size(); ++x) {
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), f[static_cast<Point>(x)]);
    if (ec != std::errc{}) throw std::runtime_error("write_text: conversion failed");
    out << x << ' ' << std::string_view(buf.data(), static_cast<std::size_t>(ptr - buf.data())) << '\n';
  }
}

CubeFunction read_text(std::istream& in) {
  std::vector<std::pair<std::uint64_t, double>> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    fields.imbue(std::locale::classic());
    std::string index_tok;
    std::string value_tok;
    if (!(fields >> index_tok)) continue;
    std::string extra;
    if (!(fields >> value_tok) || (fields >> extra)) {
      throw std::invalid_argument("read_text: line " + std::to_string(line_no) +
                                  ": expected \"index value\"");
    }
    std::uint64_t index = 0;
    double value = 0.0;
    auto r1 = std::from_chars(index_tok.data(), index_tok.data() + index_tok.size(), index);
    auto r2 = std::from_chars(value_tok.data(), value_tok.data() + value_tok.size(), value);
    if (r1.ec != std::errc{} || r1.ptr != index_tok.data() + index_tok.size() ||
        r2.ec != std::errc{} || r2.ptr != value_tok.data() + value_tok.size()) {
      throw std::invalid_argument("read_text: line " + std::to_string(line_no) + ": malformed number");
    }
    entries.emplace_back(index, value);
  }
  const std::size_t count = entries.size();
  if (count < 2 || !std::has_single_bit(count)) {
    throw std::invalid_argument("read_text: entry count " + std::to_string(count) +
                                " is not 2^n with n >= 1");
  }
  const int n = std::countr_zero(count);
  std::vector<double> values(count, 0.0);
  std::vector<bool> seen(count, false);
  for (auto [index, value] : entries) {
    if (index >= count || seen[index]) {
      throw std::invalid_argument("read_text: index " + std::to_string(index) +
                                  " out of range or repeated");
    }
    seen[index] = true;
    values[index] = value;
  }
  return {n, std::move(values)};
}

void write_binary(std::ostream& out, const CubeFunction& f) {
  for (double v : f.values()) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    std::array<char, 8> bytes{};
    for (int b = 0; b < 8; ++b) bytes[b] = static_cast<char>((bits >> (8 * b)) & 0xffu);
    out.write(bytes.data(), bytes.size());
  }
}

CubeFunction read_binary(std::istream& in) {
  std::vector<double> values;
  std::array<char, 8> bytes{};
  while (in.read(bytes.data(), bytes.size())) {
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) {
      bits |= std::uint64_t{static_cast<unsigned char>(bytes[b])} << (8 * b);
    }
    values.push_back(std::bit_cast<double>(bits));
  }
  if (in.gcount() != 0) throw std::invalid_argument("read_binary: trailing partial value");
  if (values.size() < 2 || !std::has_single_bit(values.size())) {
    throw std::invalid_argument("read_binary: value count is not 2^n with n >= 1");
  }
  const int n = std::countr_zero(values.size());
  return {n, std::move(values)};
}

}  // namespace cube_spectra
