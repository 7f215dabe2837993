#pragma once

#include <span>
#include <vector>

#include "cube_spectra/cube_function.hpp"
#include "cube_spectra/limits.hpp"

namespace cube_spectra {

/// A function of Hamming weight only: values[i] at weight i for i <= m,
/// zero above m.
struct SymmetricProfile {
  int n = 0;
  std::vector<double> values;

  CubeFunction lift() const { return CubeFunction::from_profile(n, values); }
};

/// Nonnegative symmetric function f supported on B(truncation) ⊆ B(radius)
/// with Af >= lambda f everywhere. Certifies lambda_{B(radius)} >= lambda.
struct BallEigenWitness {
  int n = 0;
  int radius = 0;
  double lambda = 0.0;
  SymmetricProfile profile;  ///< g[0..truncation], all strictly positive
  int truncation = 0;

  CubeFunction lift() const { return profile.lift(); }
};

struct RecurrenceResult {
  SymmetricProfile profile;  ///< g[0..n]
  int first_nonpositive = 0;  ///< smallest i with g(i) <= 0, or n+1
};

/// Subgraph of the cube induced by an explicit vertex set.
class SubsetGraph {
 public:
  /// Sorts; throws std::invalid_argument on duplicates or out-of-cube points.
  SubsetGraph(int n, std::vector<Point> members);
  static SubsetGraph ball(int n, int r);

  int dimension() const { return n_; }
  std::size_t size() const { return members_.size(); }
  std::span<const Point> members() const { return members_; }

 private:
  int n_;
  std::vector<Point> members_;
};

struct SubsetEigenpair {
  double lambda = 0.0;
  std::vector<double> vector;  ///< unit norm, nonnegative, aligned with members()
  int iterations = 0;
  double residual = 0.0;  ///< ||Av - lambda v|| at exit
};

/// lambda_{B(r)} from the (r+1)x(r+1) weight-level operator, symmetrized to
/// off-diagonals sqrt((i+1)(n-i)) and solved by Sturm-count bisection.
/// Works for any n >= 1 (no dense cube storage is touched).
double lambda_ball_exact(int n, int r);

/// g(0) = 1, g(1) = lambda/n, g(i+1) = (lambda g(i) - i g(i-1)) / (n-i).
/// Values lost to cancellation (below 1e-12 of the terms that produced them)
/// are snapped to zero. Accumulates in long double; a non-finite value ends
/// the scan with no sign change reported.
RecurrenceResult eigen_recurrence(int n, double lambda);

/// Largest lambda whose recurrence turns nonpositive at index <= r+1, found by
/// bisection on [0, n] to width 1e-9, with the profile truncated at
/// p = first_nonpositive - 1.
BallEigenWitness lambda_for_radius_recurrence(int n, int r);

/// Largest eigenvalue of the induced adjacency matrix by shifted power
/// iteration from the all-ones vector. Verification oracle; |B| <= 2^16.
SubsetEigenpair top_eigenpair_bruteforce(const SubsetGraph& b);
double lambda_subset_bruteforce(const SubsetGraph& b);

/// Smallest r with lambda_ball_exact(n, r) >= target - 1e-9. Targets at or
/// below zero give 0; throws std::domain_error for target > n.
int min_radius_for_lambda(int n, double target);

}  // namespace cube_spectra
