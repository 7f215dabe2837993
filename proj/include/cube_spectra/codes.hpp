#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cube_spectra/cube_function.hpp"
#include "cube_spectra/limits.hpp"

namespace cube_spectra {

/// A binary code: a nonempty set of points of {0,1}^n, kept sorted so that
/// equality is structural.
class Code {
 public:
  /// Sorts `points`. Throws std::invalid_argument on an empty list,
  /// duplicates, or points outside the cube.
  Code(int n, std::vector<Point> points);

  static Code whole_cube(int n);

  int length() const { return n_; }
  std::size_t size() const { return points_.size(); }
  std::span<const Point> points() const { return points_; }
  bool contains(Point x) const;
  bool is_singleton() const { return points_.size() == 1; }

  CubeFunction indicator() const;
  IntCubeFunction int_indicator() const;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  int n_;
  std::vector<Point> points_;
};

/// A linear code given by generator rows in reduced row-echelon form over
/// F_2: each row's highest set bit is its pivot, pivots strictly decrease
/// down the rows, and every pivot column is zero in all other rows. This form
/// is unique per subspace. The zero subspace has no rows.
class LinearCode {
 public:
  /// Row-reduces an arbitrary spanning set; zero and dependent rows drop out.
  LinearCode(int n, std::vector<Point> spanning_rows);

  int length() const { return n_; }
  int dimension() const { return static_cast<int>(rows_.size()); }
  std::span<const Point> generators() const { return rows_; }
  bool contains(Point x) const;

  /// All 2^k codewords.
  Code expand() const;

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  int n_;
  std::vector<Point> rows_;
};

/// Distance distribution a[w] = #{ordered pairs (x, y) in C^2 : d(x,y) = w} / |C|.
struct DistanceDistribution {
  int n = 0;
  std::size_t code_size = 0;
  std::vector<std::uint64_t> pair_counts;  ///< length n+1

  double at(int w) const { return static_cast<double>(pair_counts.at(static_cast<std::size_t>(w))) /
                                  static_cast<double>(code_size); }
  std::vector<double> values() const;
};

/// Smallest Hamming distance between distinct codewords, from a pairwise
/// XOR-popcount loop. A singleton has no distance; by convention it reports
/// n+1 and callers can tell via Code::is_singleton().
int min_distance(const Code& c);

/// Same quantity from the autocorrelation criterion: the smallest |x| > 0
/// with (1_C * 1_C)(x) != 0, tested on exact integer pair counts.
int min_distance_from_autocorrelation(const Code& c);

/// N(x) = #{y in C : x + y in C}. Exact; equals 2^n (1_C * 1_C)(x).
IntCubeFunction difference_counts(const Code& c);

/// 1_C * 1_C; nonnegative, value at 0 is |C| / 2^n.
CubeFunction autocorrelation(const Code& c);

LinearCode dual_code(const LinearCode& c);

/// Largest d such that the integer transform of 1_C vanishes on all
/// 0 < |S| < d. Returns n+1 when it vanishes on every S != 0.
int dual_distance(const Code& c);

DistanceDistribution distance_distribution(const Code& c);

/// Visit every k-dimensional subspace of F_2^n exactly once, in canonical
/// order. Requires 1 <= k <= n <= 8.
void for_each_linear_code(int n, int k, const std::function<void(const LinearCode&)>& visit);
std::vector<LinearCode> enumerate_linear_codes(int n, int k);

/// Greedy code over a seeded random ordering of the cube: each point joins if
/// it is at distance >= min_d from everything chosen so far. The result is
/// maximal by inclusion and depends only on (n, min_d, seed). min_d = n + 1
/// is accepted and yields a single point.
Code random_code(int n, int min_d, std::uint64_t seed);

/// Hamming ball B(r) around 0, in increasing order.
std::vector<Point> hamming_ball(int n, int r);

// ---- code files ----------------------------------------------------------
//
// UTF-8 text, one codeword per line. Either 0/1 strings of one common length
// n (most significant coordinate first), or "0x"-prefixed hex values, which
// require an "n=<int>" header line. '#' starts a comment.

class CodeParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Code read_code(std::istream& in);
Code read_code_file(const std::string& path);
/// Writes the 0/1 form, one codeword per line.
void write_code(std::ostream& out, const Code& c);
std::string to_bit_string(Point x, int n);

}  // namespace cube_spectra
