#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cube_spectra/ball_spectra.hpp"
#include "cube_spectra/codes.hpp"
#include "cube_spectra/cube_function.hpp"
#include "json.hpp"

namespace cube_spectra {

enum class Verdict { holds, premise_unmet, violated };
std::string to_string(Verdict v);

/// Which inequality chain a report exercises.
enum class Proposition {
  code_size,       ///< |C| <= n |B| for a code of minimal distance d
  dual_covering,   ///< |union of z + B over z in C'| >= 2^n / n for dual distance d
};
std::string to_string(Proposition p);

struct CheckOptions {
  /// Slack for floating comparisons, applied relative to the magnitude of the
  /// compared quantities. Set sizes are always compared exactly.
  double tolerance = kDefaultTolerance;
};

/// A nonnegative function f supported on a region B with Af >= lambda f,
/// together with the data the propositions need about B.
struct SpectralWitness {
  int n = 0;
  int radius = -1;                 ///< ball radius, or -1 for an explicit subset
  std::vector<Point> members;      ///< explicit subset members; empty for balls
  std::uint64_t region_size = 0;   ///< |B|
  double region_lambda = 0.0;      ///< lambda_B, used for the premise
  double witness_lambda = 0.0;     ///< Af >= witness_lambda * f holds for `f`
  CubeFunction f;

  static SpectralWitness for_ball(int n, int r);
  static SpectralWitness for_subset(const SubsetGraph& b);
};

/// A code with the derived data every check needs, computed once.
struct PreparedCode {
  Code code;
  int min_distance;    ///< n+1 for a singleton
  int dual_distance;   ///< n+1 when the transform vanishes off zero
  CubeFunction indicator;
  CubeFunction phi;

  explicit PreparedCode(Code c);
};

struct PropositionReport {
  Proposition proposition = Proposition::code_size;
  int n = 0;
  int d = 0;
  int r = -1;  ///< -1 for an explicit subset
  std::size_t code_size = 0;
  std::uint64_t region_size = 0;
  bool singleton_code = false;

  double lambda = 0.0;             ///< lambda_B
  double witness_lambda = 0.0;
  double premise_threshold = 0.0;  ///< n - 2d + 1
  bool premise_ok = false;
  double multiplier = 0.0;         ///< m in |C| <= m |B|; see size_multiplier

  std::optional<double> ef2;     ///< E F^2
  std::optional<double> ef_sq;   ///< (E F)^2
  std::optional<double> moment_ratio;             ///< E F^2 / (E F)^2, must be <= n
  std::optional<double> essential_support_F;      ///< 2^n (E F)^2 / E F^2
  std::optional<double> essential_support_f;      ///< same for the region witness
  std::optional<double> phi_ratio;                ///< E phi^2 / (E phi)^2
  std::optional<double> rayleigh;                 ///< <AF, F>
  std::optional<std::uint64_t> covered;           ///< |union of z + B|

  double bound_lhs = 0.0;
  double bound_rhs = 0.0;

  std::vector<std::string> failures;  ///< names of the checks that failed
  Verdict verdict = Verdict::premise_unmet;

  nlohmann::json to_json() const;
};

/// The factor m in |C| <= m |B| and |union| >= 2^n / m once
/// lambda >= n - 2d + 1. It is n for 2d <= n. For 2d > n the spectral
/// estimate keeps its 2d E^2 F term, giving 2d / (lambda - n + 2d).
double size_multiplier(int n, int d, double lambda);

/// Raised by exhaustive runs when any check comes back violated.
class VerificationFailure : public std::runtime_error {
 public:
  VerificationFailure(const std::string& what, nlohmann::json dump)
      : std::runtime_error(what), dump_(std::move(dump)) {}
  const nlohmann::json& dump() const { return dump_; }

 private:
  nlohmann::json dump_;
};

/// F = 1_{C'} * f. Nonnegative, supported on the union of z + supp(f).
CubeFunction build_covering_witness(const Code& cprime, const CubeFunction& f);
CubeFunction build_covering_witness(const Code& cprime, const BallEigenWitness& w);

/// phi = inverse transform of the nonnegative square root of 1_C * 1_C.
CubeFunction phi_from_code(const Code& c);

PropositionReport check_covering(const PreparedCode& cprime, const SpectralWitness& w,
                                 const CheckOptions& opts = {});
PropositionReport check_covering(const Code& cprime, int r, const CheckOptions& opts = {});
PropositionReport check_covering(const Code& cprime, const SubsetGraph& b, const CheckOptions& opts = {});

/// `claimed_distance`, when given, replaces the code's minimal distance and
/// must not exceed it.
PropositionReport check_prop_ineq(const PreparedCode& c, const SpectralWitness& w,
                                  const CheckOptions& opts = {},
                                  std::optional<int> claimed_distance = std::nullopt);
PropositionReport check_prop_ineq(const Code& c, int r, const CheckOptions& opts = {});
PropositionReport check_prop_ineq(const Code& c, const SubsetGraph& b, const CheckOptions& opts = {});

/// |union over z in C of z + B(r)|, by iterated bitset dilation.
std::uint64_t covered_count(const Code& c, int r);
/// |union over z in C of z + region|.
std::uint64_t covered_count(const Code& c, std::span<const Point> region);
double covered_fraction(const Code& c, int r);

/// Smallest r whose balls around the code cover at least a 1/n fraction.
int essential_covering_radius(const Code& c);

enum class VerifyMode { all_linear, random_general };
std::string to_string(VerifyMode m);

struct VerifySummary {
  int n = 0;
  VerifyMode mode = VerifyMode::all_linear;
  int trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t codes = 0;
  std::uint64_t checks = 0;
  std::uint64_t holds = 0;
  std::uint64_t premise_unmet = 0;
  std::uint64_t violations = 0;

  nlohmann::json to_json() const;
};

/// Runs check_prop_ineq and check_covering for every ball radius 0..n over
/// either every linear code of length n (n <= 7) or `trials` seeded random
/// greedy codes (n <= 12). Any violation throws VerificationFailure carrying
/// the code and the failing report. Work is split across `threads` workers
/// and merged in canonical code order, so the summary does not depend on it.
VerifySummary exhaustive_verify(int n, VerifyMode mode, int trials = 0, std::uint64_t seed = 0,
                                int threads = 1, const CheckOptions& opts = {});

}  // namespace cube_spectra
