#include "cube_spectra/codes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace cube_spectra {
namespace {

void require_length(int n) {
  if (n < 1 || n > kHardDimensionCap) {
    throw std::out_of_range("block length n=" + std::to_string(n) + " outside [1, " +
                            std::to_string(kHardDimensionCap) + "]");
  }
}

int pivot_of(Point row) { return std::bit_width(row) - 1; }

// Fully reduced echelon basis, rows sorted by decreasing pivot.
std::vector<Point> row_reduce(std::vector<Point> rows) {
  std::vector<Point> basis;
  for (Point v : rows) {
    for (Point b : basis) {
      if ((v >> pivot_of(b)) & 1u) v ^= b;
    }
    if (v == 0) continue;
    const Point pivot_bit = Point{1} << pivot_of(v);
    for (Point& b : basis) {
      if (b & pivot_bit) b ^= v;
    }
    basis.push_back(v);
    std::sort(basis.begin(), basis.end(), std::greater<>());
  }
  return basis;
}

}  // namespace

Code::Code(int n, std::vector<Point> points) : n_(n), points_(std::move(points)) {
  require_length(n);
  if (points_.empty()) throw std::invalid_argument("Code: empty point list");
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw std::invalid_argument("Code: duplicate codeword");
  }
  if (std::uint64_t{points_.back()} >= cube_size(n)) {
    throw std::invalid_argument("Code: codeword outside {0,1}^" + std::to_string(n));
  }
}

Code Code::whole_cube(int n) {
  require_length(n);
  std::vector<Point> all(cube_size(n));
  for (std::size_t x = 0; x < all.size(); ++x) all[x] = static_cast<Point>(x);
  return {n, std::move(all)};
}

bool Code::contains(Point x) const { return std::binary_search(points_.begin(), points_.end(), x); }

CubeFunction Code::indicator() const { return CubeFunction::indicator(n_, points_); }

IntCubeFunction Code::int_indicator() const { return IntCubeFunction::indicator(n_, points_); }

LinearCode::LinearCode(int n, std::vector<Point> spanning_rows) : n_(n) {
  require_length(n);
  for (Point r : spanning_rows) {
    if (std::uint64_t{r} >= cube_size(n)) {
      throw std::invalid_argument("LinearCode: generator outside F_2^" + std::to_string(n));
    }
  }
  rows_ = row_reduce(std::move(spanning_rows));
}

bool LinearCode::contains(Point x) const {
  for (Point b : rows_) {
    if ((x >> pivot_of(b)) & 1u) x ^= b;
  }
  return x == 0;
}

Code LinearCode::expand() const {
  const std::size_t count = std::size_t{1} << rows_.size();
  std::vector<Point> words(count);
  // Gray-code walk: one XOR per codeword.
  Point word = 0;
  words[0] = 0;
  for (std::size_t i = 1; i < count; ++i) {
    word ^= rows_[static_cast<std::size_t>(std::countr_zero(i))];
    words[i] = word;
  }
  return {n_, std::move(words)};
}

std::vector<double> DistanceDistribution::values() const {
  std::vector<double> out(pair_counts.size());
  for (std::size_t w = 0; w < out.size(); ++w) out[w] = at(static_cast<int>(w));
  return out;
}

int min_distance(const Code& c) {
  const auto pts = c.points();
  int best = c.length() + 1;
  for (std::size_t i = 0; i < pts.size() && best > 1; ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::min(best, std::popcount(pts[i] ^ pts[j]));
    }
  }
  return best;
}

IntCubeFunction difference_counts(const Code& c) {
  const int n = c.length();
  require_transform_dimension(n);
  const double pairwise_cost = static_cast<double>(c.size()) * static_cast<double>(c.size());
  const double transform_cost = 3.0 * n * std::ldexp(1.0, n);
  // |transform|^2 summed over the cube stays below 2^(3n) <= 2^60.
  if (n <= 20 && transform_cost < pairwise_cost) {
    IntCubeFunction spectrum = wht_unnormalized(c.int_indicator());
    std::vector<std::int64_t> power(spectrum.values().begin(), spectrum.values().end());
    for (auto& v : power) v *= v;
    IntCubeFunction scaled = wht_unnormalized(IntCubeFunction(n, std::move(power)));
    std::vector<std::int64_t> counts(scaled.values().begin(), scaled.values().end());
    for (auto& v : counts) v >>= n;  // exact: every entry is a multiple of 2^n
    return {n, std::move(counts)};
  }
  std::vector<std::int64_t> counts(cube_size(n), 0);
  const auto pts = c.points();
  for (Point a : pts) {
    for (Point b : pts) ++counts[a ^ b];
  }
  return {n, std::move(counts)};
}

int min_distance_from_autocorrelation(const Code& c) {
  const IntCubeFunction counts = difference_counts(c);
  int best = c.length() + 1;
  for (std::size_t x = 1; x < counts.size(); ++x) {
    if (counts[static_cast<Point>(x)] != 0) best = std::min(best, std::popcount(static_cast<Point>(x)));
  }
  return best;
}

CubeFunction autocorrelation(const Code& c) {
  const IntCubeFunction counts = difference_counts(c);
  std::vector<double> values(counts.size());
  for (std::size_t x = 0; x < values.size(); ++x) {
    values[x] = std::ldexp(static_cast<double>(counts[static_cast<Point>(x)]), -c.length());
  }
  return {c.length(), std::move(values)};
}

LinearCode dual_code(const LinearCode& c) {
  const int n = c.length();
  const auto rows = c.generators();
  Point pivot_mask = 0;
  for (Point r : rows) pivot_mask |= Point{1} << pivot_of(r);
  std::vector<Point> null_basis;
  for (int col = 0; col < n; ++col) {
    const Point col_bit = Point{1} << col;
    if (pivot_mask & col_bit) continue;
    // Free column: set it, then fix each pivot so its row is orthogonal.
    Point v = col_bit;
    for (Point r : rows) {
      if (r & col_bit) v |= Point{1} << pivot_of(r);
    }
    null_basis.push_back(v);
  }
  return {n, std::move(null_basis)};
}

int dual_distance(const Code& c) {
  const IntCubeFunction spectrum = wht_unnormalized(c.int_indicator());
  int best = c.length() + 1;
  for (std::size_t s = 1; s < spectrum.size(); ++s) {
    if (spectrum[static_cast<Point>(s)] != 0) best = std::min(best, std::popcount(static_cast<Point>(s)));
  }
  return best;
}

DistanceDistribution distance_distribution(const Code& c) {
  const IntCubeFunction counts = difference_counts(c);
  DistanceDistribution dist;
  dist.n = c.length();
  dist.code_size = c.size();
  dist.pair_counts.assign(static_cast<std::size_t>(c.length()) + 1, 0);
  for (std::size_t x = 0; x < counts.size(); ++x) {
    dist.pair_counts[static_cast<std::size_t>(std::popcount(static_cast<Point>(x)))] +=
        static_cast<std::uint64_t>(counts[static_cast<Point>(x)]);
  }
  return dist;
}

void for_each_linear_code(int n, int k, const std::function<void(const LinearCode&)>& visit) {
  if (n < 1 || n > 8 || k < 1 || k > n) {
    throw std::out_of_range("enumerate_linear_codes: need 1 <= k <= n <= 8, got n=" +
                            std::to_string(n) + ", k=" + std::to_string(k));
  }
  const Point full = (Point{1} << n) - 1;
  for (Point pivots = 0; pivots <= full; ++pivots) {
    if (std::popcount(pivots) != k) continue;
    // Pivot columns in decreasing order; row i may carry free bits at the
    // non-pivot columns below its pivot.
    std::vector<int> pivot_cols;
    for (int col = n - 1; col >= 0; --col) {
      if (pivots & (Point{1} << col)) pivot_cols.push_back(col);
    }
    std::vector<std::vector<int>> free_cols(static_cast<std::size_t>(k));
    int free_total = 0;
    for (int i = 0; i < k; ++i) {
      for (int col = pivot_cols[static_cast<std::size_t>(i)] - 1; col >= 0; --col) {
        if (!(pivots & (Point{1} << col))) free_cols[static_cast<std::size_t>(i)].push_back(col);
      }
      free_total += static_cast<int>(free_cols[static_cast<std::size_t>(i)].size());
    }
    for (std::uint64_t assignment = 0; assignment < (std::uint64_t{1} << free_total); ++assignment) {
      std::vector<Point> rows(static_cast<std::size_t>(k));
      int bit = 0;
      for (int i = 0; i < k; ++i) {
        Point row = Point{1} << pivot_cols[static_cast<std::size_t>(i)];
        for (int col : free_cols[static_cast<std::size_t>(i)]) {
          if ((assignment >> bit++) & 1u) row |= Point{1} << col;
        }
        rows[static_cast<std::size_t>(i)] = row;
      }
      visit(LinearCode(n, std::move(rows)));
    }
  }
}

std::vector<LinearCode> enumerate_linear_codes(int n, int k) {
  std::vector<LinearCode> out;
  for_each_linear_code(n, k, [&out](const LinearCode& c) { out.push_back(c); });
  return out;
}

std::vector<Point> hamming_ball(int n, int r) {
  require_transform_dimension(n);
  if (r < 0 || r > n) throw std::out_of_range("hamming_ball: radius outside [0, n]");
  std::vector<Point> ball;
  for (std::uint64_t x = 0; x < cube_size(n); ++x) {
    if (std::popcount(x) <= r) ball.push_back(static_cast<Point>(x));
  }
  return ball;
}

Code random_code(int n, int min_d, std::uint64_t seed) {
  require_sweep_dimension(n);
  if (min_d < 1 || min_d > n + 1) throw std::out_of_range("random_code: need 1 <= min_d <= n + 1");
  std::vector<Point> order(cube_size(n));
  for (std::size_t x = 0; x < order.size(); ++x) order[x] = static_cast<Point>(x);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  // Each chosen word blocks its radius-(min_d - 1) ball.
  const std::vector<Point> offsets = hamming_ball(n, min_d - 1);
  std::vector<bool> blocked(order.size(), false);
  std::vector<Point> chosen;
  for (Point x : order) {
    if (blocked[x]) continue;
    chosen.push_back(x);
    for (Point o : offsets) blocked[x ^ o] = true;
  }
  return {n, std::move(chosen)};
}

}  // namespace cube_spectra
