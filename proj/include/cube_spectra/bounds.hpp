#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cube_spectra/ball_spectra.hpp"
#include "cube_spectra/format.hpp"
#include "json.hpp"

namespace cube_spectra {

using BigInt = boost::multiprecision::cpp_int;

/// Largest n accepted by the big-integer bound routines.
inline constexpr int kMaxBoundDimension = 4096;

/// -x log2 x - (1-x) log2(1-x), with H(0) = H(1) = 0.
double binary_entropy(double x);

/// Exact |B(r)| = sum_{i<=r} C(n, i).
BigInt ball_size(int n, int r);

/// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigInt& value);

/// H(1/2 - sqrt(delta (1 - delta))) for delta in [0, 1/2].
double first_lp_rate(double delta);

enum class BoundKind { finite_code, rate, covering_radius, comparator };
std::string to_string(BoundKind k);

struct BoundReport {
  BoundKind kind = BoundKind::finite_code;
  std::optional<int> n;
  std::optional<int> d;
  std::optional<double> delta;

  // finite-code and covering-radius
  std::optional<double> target;        ///< n - 2d + 1
  std::optional<int> r_star;
  std::optional<double> lambda_used;   ///< lambda_{B(r_star)}
  std::optional<BigInt> bound;         ///< see finite_code_bound
  std::optional<BallEigenWitness> certificate;

  // rate, covering-radius (asymptotic) and comparator
  std::optional<double> value;

  /// Big integers are emitted as JSON numbers when they fit in 64 bits and
  /// as decimal strings otherwise; bound_log2 is always present with them.
  nlohmann::json to_json() const;
};

/// r* = min_radius_for_lambda(n, n - 2d + 1) (0 when the target is <= 0),
/// with the recurrence witness for B(r*) attached. bound = n |B(r*)| for
/// 2d <= n. For 2d > n the n |B| form is false (n = 3, d = 2 has four
/// codewords); the same spectral argument then gives floor(2d / (2d - n)).
BoundReport finite_code_bound(int n, int d);

BoundReport rate_bound(double delta);

/// r_finite as for the finite bound; `value` holds n/2 - sqrt(d(n-d)) when
/// d <= n/2 and is left empty otherwise.
BoundReport essential_covering_radius_bound(int n, int d);

/// n/2 - sqrt((d/2)(n - d/2)).
double tietavainen_bound(int n, int d);
BoundReport tietavainen_report(int n, int d);

struct RateRow {
  double delta;
  double rate;
};

std::vector<RateRow> rate_table(std::span<const double> deltas);

/// CSV header "delta,rate"; JSON is an array of {delta, rate} objects.
void write_rate_table(std::ostream& out, std::span<const RateRow> rows, OutputFormat format);

/// CSV header "n,d,r_star,lambda,bound".
void write_finite_bound_csv(std::ostream& out, std::span<const BoundReport> rows);

}  // namespace cube_spectra
