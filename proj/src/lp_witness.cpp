#include "cube_spectra/lp_witness.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace cube_spectra {
namespace {

std::uint64_t ball_cardinality(int n, int r) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (int i = 0; i <= r; ++i) {
    total += binom;
    binom = binom * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  }
  return total;
}

double max_abs(const CubeFunction& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

// Flip coordinate `bit` of every member of a bitset over {0,1}^n.
void xor_shift_into(const std::vector<std::uint64_t>& src, std::vector<std::uint64_t>& dst, int bit) {
  static constexpr std::array<std::uint64_t, 6> kLowHalf = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
  if (bit < 6) {
    const std::uint64_t mask = kLowHalf[static_cast<std::size_t>(bit)];
    const int s = 1 << bit;
    for (std::size_t j = 0; j < src.size(); ++j) {
      const std::uint64_t w = src[j];
      dst[j] |= ((w & mask) << s) | ((w >> s) & mask);
    }
  } else {
    const std::size_t stride = std::size_t{1} << (bit - 6);
    for (std::size_t j = 0; j < src.size(); ++j) dst[j] |= src[j ^ stride];
  }
}

std::vector<std::uint64_t> code_bitset(const Code& c) {
  std::vector<std::uint64_t> bits(std::max<std::size_t>(1, cube_size(c.length()) / 64), 0);
  for (Point x : c.points()) bits[x >> 6] |= std::uint64_t{1} << (x & 63u);
  return bits;
}

std::vector<std::uint64_t> dilate(const Code& c, int r) {
  std::vector<std::uint64_t> cur = code_bitset(c);
  for (int step = 0; step < r; ++step) {
    std::vector<std::uint64_t> next = cur;
    for (int bit = 0; bit < c.length(); ++bit) xor_shift_into(cur, next, bit);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

std::uint64_t popcount_all(const std::vector<std::uint64_t>& bits) {
  std::uint64_t total = 0;
  for (std::uint64_t w : bits) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

bool bit_set(const std::vector<std::uint64_t>& bits, std::size_t x) { return (bits[x >> 6] >> (x & 63u)) & 1u; }

std::vector<std::uint64_t> union_bitset(const Code& c, const SpectralWitness& w) {
  if (w.radius >= 0) return dilate(c, w.radius);
  std::vector<std::uint64_t> bits(std::max<std::size_t>(1, cube_size(c.length()) / 64), 0);
  for (Point z : c.points()) {
    for (Point b : w.members) {
      const Point x = z ^ b;
      bits[x >> 6] |= std::uint64_t{1} << (x & 63u);
    }
  }
  return bits;
}

void require_matching(const Code& c, const SpectralWitness& w) {
  if (c.length() != w.n) {
    throw std::invalid_argument("dimension mismatch: code n=" + std::to_string(c.length()) +
                                ", region n=" + std::to_string(w.n));
  }
}

struct Checklist {
  std::vector<std::string>& failures;
  void expect(bool ok, const char* name) {
    if (!ok) failures.emplace_back(name);
  }
};

// Both checks bound <AF, F> from above through the spectrum of F.
double spectral_form(const CubeFunction& fhat) {
  double sum = 0.0;
  const int n = fhat.dimension();
  for (std::size_t s = 0; s < fhat.size(); ++s) {
    const double v = fhat[static_cast<Point>(s)];
    sum += static_cast<double>(n - 2 * std::popcount(static_cast<Point>(s))) * v * v;
  }
  return sum;
}

// n E^2 F + (n - 2d)(E F^2 - E^2 F): the spectral form once F-hat vanishes on
// 0 < |S| < d. Dropping the -(n - 2d) E^2 F term is only allowed for 2d <= n.
double spectral_ceiling(int n, int d, const Moments& m) {
  const double mean_sq = m.mean * m.mean;
  return n * mean_sq + (n - 2.0 * d) * (m.second_moment - mean_sq);
}

void finish(PropositionReport& rep) {
  if (!rep.premise_ok) {
    rep.verdict = Verdict::premise_unmet;
  } else {
    rep.verdict = rep.failures.empty() ? Verdict::holds : Verdict::violated;
  }
}

}  // namespace

double size_multiplier(int n, int d, double lambda) {
  if (2 * d <= n) return n;
  return 2.0 * d / std::max(1.0, lambda - n + 2.0 * d);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::premise_unmet: return "premise-unmet";
    case Verdict::violated: return "violated";
  }
  return "unknown";
}

std::string to_string(Proposition p) {
  switch (p) {
    case Proposition::code_size: return "code_size";
    case Proposition::dual_covering: return "dual_covering";
  }
  return "unknown";
}

std::string to_string(VerifyMode m) {
  return m == VerifyMode::all_linear ? "all-linear" : "random-general";
}

SpectralWitness SpectralWitness::for_ball(int n, int r) {
  const BallEigenWitness ball = lambda_for_radius_recurrence(n, r);
  SpectralWitness w;
  w.n = n;
  w.radius = r;
  w.region_size = ball_cardinality(n, r);
  w.region_lambda = lambda_ball_exact(n, r);
  w.witness_lambda = ball.lambda;
  w.f = ball.lift();
  return w;
}

SpectralWitness SpectralWitness::for_subset(const SubsetGraph& b) {
  const SubsetEigenpair pair = top_eigenpair_bruteforce(b);
  SpectralWitness w;
  w.n = b.dimension();
  w.members.assign(b.members().begin(), b.members().end());
  w.region_size = b.size();
  w.region_lambda = pair.lambda;
  w.witness_lambda = pair.lambda;
  std::vector<double> values(cube_size(b.dimension()), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) values[b.members()[i]] = pair.vector[i];
  w.f = CubeFunction(b.dimension(), std::move(values));
  return w;
}

PreparedCode::PreparedCode(Code c)
    : code(std::move(c)),
      min_distance(cube_spectra::min_distance(code)),
      dual_distance(cube_spectra::dual_distance(code)),
      indicator(code.indicator()),
      phi(phi_from_code(code)) {}

CubeFunction build_covering_witness(const Code& cprime, const CubeFunction& f) {
  if (cprime.length() != f.dimension()) throw std::invalid_argument("build_covering_witness: dimension mismatch");
  return convolve(cprime.indicator(), f);
}

CubeFunction build_covering_witness(const Code& cprime, const BallEigenWitness& w) {
  return build_covering_witness(cprime, w.lift());
}

CubeFunction phi_from_code(const Code& c) {
  const CubeFunction a = autocorrelation(c);
  std::vector<double> root(a.size());
  for (std::size_t s = 0; s < root.size(); ++s) root[s] = std::sqrt(a[static_cast<Point>(s)]);
  return inverse_wht(CubeFunction(c.length(), std::move(root)));
}

std::uint64_t covered_count(const Code& c, int r) {
  require_sweep_dimension(c.length());
  if (r < 0 || r > c.length()) throw std::out_of_range("covered_count: radius outside [0, n]");
  return popcount_all(dilate(c, r));
}

std::uint64_t covered_count(const Code& c, std::span<const Point> region) {
  require_sweep_dimension(c.length());
  SpectralWitness shape;
  shape.members.assign(region.begin(), region.end());
  for (Point b : region) {
    if (std::uint64_t{b} >= cube_size(c.length())) throw std::out_of_range("covered_count: region point outside cube");
  }
  return popcount_all(union_bitset(c, shape));
}

double covered_fraction(const Code& c, int r) {
  return std::ldexp(static_cast<double>(covered_count(c, r)), -c.length());
}

int essential_covering_radius(const Code& c) {
  const int n = c.length();
  for (int r = 0; r <= n; ++r) {
    if (static_cast<std::uint64_t>(n) * covered_count(c, r) >= cube_size(n)) return r;
  }
  return n;
}

PropositionReport check_covering(const PreparedCode& prepared, const SpectralWitness& w, const CheckOptions& opts) {
  const Code& cprime = prepared.code;
  require_matching(cprime, w);
  require_sweep_dimension(cprime.length());
  const int n = cprime.length();
  const double tol = opts.tolerance;

  PropositionReport rep;
  rep.proposition = Proposition::dual_covering;
  rep.n = n;
  rep.d = prepared.dual_distance;
  rep.r = w.radius;
  rep.code_size = cprime.size();
  rep.region_size = w.region_size;
  rep.singleton_code = cprime.is_singleton();
  rep.lambda = w.region_lambda;
  rep.witness_lambda = w.witness_lambda;
  rep.premise_threshold = n - 2.0 * rep.d + 1.0;
  rep.premise_ok = w.region_lambda >= rep.premise_threshold - tol;

  const std::vector<std::uint64_t> covered_bits = union_bitset(cprime, w);
  const std::uint64_t covered = popcount_all(covered_bits);
  rep.covered = covered;
  rep.multiplier = size_multiplier(n, rep.d, w.witness_lambda);
  rep.bound_lhs = static_cast<double>(covered);
  rep.bound_rhs = std::ldexp(1.0, n) / rep.multiplier;

  if (!rep.premise_ok) {
    finish(rep);
    return rep;
  }

  Checklist check{rep.failures};
  const CubeFunction F = convolve(prepared.indicator, w.f);
  const CubeFunction AF = adjacency_apply(F);
  const CubeFunction Fhat = wht(F);
  const Moments m = moments(F);
  const double peak = max_abs(F);

  rep.ef2 = m.second_moment;
  rep.ef_sq = m.mean * m.mean;
  rep.moment_ratio = m.second_moment / (m.mean * m.mean);
  rep.essential_support_F = essential_support_size(F);
  rep.essential_support_f = essential_support_size(w.f);
  rep.rayleigh = inner_product(AF, F);

  bool nonnegative = true;
  bool inside_union = true;
  bool dominates = true;
  for (std::size_t x = 0; x < F.size(); ++x) {
    const double v = F[static_cast<Point>(x)];
    if (v < -tol * peak) nonnegative = false;
    if (!bit_set(covered_bits, x) && std::abs(v) > tol * peak) inside_union = false;
    if (AF[static_cast<Point>(x)] < w.witness_lambda * v - tol * n * peak) dominates = false;
  }
  check.expect(nonnegative, "witness_nonnegative");
  check.expect(inside_union, "witness_support_in_union");
  check.expect(dominates, "pointwise_AF_ge_lambda_F");

  bool vanishes = true;
  const double f0 = std::abs(Fhat[0]);
  for (std::size_t s = 1; s < Fhat.size(); ++s) {
    if (std::popcount(static_cast<Point>(s)) < rep.d && std::abs(Fhat[static_cast<Point>(s)]) > tol * f0) {
      vanishes = false;
    }
  }
  check.expect(vanishes, "spectrum_vanishes_below_dual_distance");

  const double scale = n * m.second_moment;
  const double spectral = spectral_form(Fhat);
  check.expect(std::abs(*rep.rayleigh - spectral) <= tol * scale, "rayleigh_equals_spectral_form");
  check.expect(*rep.rayleigh >= w.witness_lambda * m.second_moment - tol * scale, "rayleigh_lower_bound");
  check.expect(*rep.rayleigh <= spectral_ceiling(n, rep.d, m) + tol * scale, "rayleigh_upper_bound");
  check.expect(*rep.moment_ratio <= rep.multiplier * (1.0 + tol), "second_moment_le_multiplier_mean_squared");
  check.expect(*rep.essential_support_F >= std::ldexp(1.0, n) / rep.multiplier * (1.0 - tol),
               "essential_support_ge_fraction");
  check.expect(*rep.essential_support_F <= static_cast<double>(covered) * (1.0 + tol),
               "essential_support_le_covered");
  if (2 * rep.d <= n) {
    check.expect(static_cast<std::uint64_t>(n) * covered >= cube_size(n), "covered_ge_cube_over_multiplier");
  } else {
    check.expect(static_cast<double>(covered) >= rep.bound_rhs * (1.0 - tol), "covered_ge_cube_over_multiplier");
  }

  finish(rep);
  return rep;
}

PropositionReport check_covering(const Code& cprime, int r, const CheckOptions& opts) {
  return check_covering(PreparedCode(cprime), SpectralWitness::for_ball(cprime.length(), r), opts);
}

PropositionReport check_covering(const Code& cprime, const SubsetGraph& b, const CheckOptions& opts) {
  return check_covering(PreparedCode(cprime), SpectralWitness::for_subset(b), opts);
}

PropositionReport check_prop_ineq(const PreparedCode& prepared, const SpectralWitness& w, const CheckOptions& opts,
                                  std::optional<int> claimed_distance) {
  const Code& c = prepared.code;
  require_matching(c, w);
  const int n = c.length();
  const double tol = opts.tolerance;

  PropositionReport rep;
  rep.proposition = Proposition::code_size;
  rep.n = n;
  rep.d = prepared.min_distance;
  if (claimed_distance) {
    if (*claimed_distance < 1 || *claimed_distance > prepared.min_distance) {
      throw std::invalid_argument("check_prop_ineq: claimed distance " + std::to_string(*claimed_distance) +
                                  " not in [1, " + std::to_string(prepared.min_distance) + "]");
    }
    rep.d = *claimed_distance;
  }
  rep.r = w.radius;
  rep.code_size = c.size();
  rep.region_size = w.region_size;
  rep.singleton_code = c.is_singleton();
  rep.lambda = w.region_lambda;
  rep.witness_lambda = w.witness_lambda;
  rep.premise_threshold = n - 2.0 * rep.d + 1.0;
  rep.premise_ok = w.region_lambda >= rep.premise_threshold - tol;
  rep.multiplier = size_multiplier(n, rep.d, w.witness_lambda);
  rep.bound_lhs = static_cast<double>(c.size());
  rep.bound_rhs = rep.multiplier * static_cast<double>(w.region_size);

  if (!rep.premise_ok) {
    finish(rep);
    return rep;
  }

  Checklist check{rep.failures};
  const CubeFunction& phi = prepared.phi;
  const Moments phi_m = moments(phi);
  const Moments f_m = moments(w.f);
  rep.phi_ratio = phi_m.second_moment / (phi_m.mean * phi_m.mean);
  const double code_size = static_cast<double>(c.size());
  check.expect(std::abs(*rep.phi_ratio - code_size) <= tol * code_size, "phi_ratio_equals_code_size");

  const CubeFunction phi_phi = convolve(phi, phi);
  const double phi_phi_peak = max_abs(phi_phi);
  check.expect(std::all_of(phi_phi.values().begin(), phi_phi.values().end(),
                           [&](double v) { return v >= -tol * std::max(1.0, phi_phi_peak); }),
               "phi_autoconvolution_nonnegative");

  const CubeFunction F = convolve(phi, w.f);
  const CubeFunction AF = adjacency_apply(F);
  const Moments m = moments(F);
  rep.ef2 = m.second_moment;
  rep.ef_sq = m.mean * m.mean;
  rep.moment_ratio = m.second_moment / (m.mean * m.mean);
  rep.essential_support_F = essential_support_size(F);
  rep.essential_support_f = essential_support_size(w.f);
  rep.rayleigh = inner_product(AF, F);

  const double scale = n * m.second_moment;
  check.expect(*rep.rayleigh >= w.witness_lambda * m.second_moment - tol * scale, "rayleigh_lower_bound");
  check.expect(*rep.rayleigh <= spectral_ceiling(n, rep.d, m) + tol * scale, "rayleigh_upper_bound");
  check.expect(*rep.moment_ratio <= rep.multiplier * (1.0 + tol), "second_moment_le_multiplier_mean_squared");

  const double mean_product = phi_m.mean * phi_m.mean * f_m.mean * f_m.mean;
  check.expect(std::abs(m.mean * m.mean - mean_product) <= tol * std::abs(mean_product), "mean_factorizes");
  const double second_floor = std::ldexp(phi_m.second_moment * f_m.second_moment, -n);
  check.expect(m.second_moment >= second_floor * (1.0 - tol), "second_moment_floor");

  const double region = static_cast<double>(w.region_size);
  check.expect(*rep.essential_support_f <= region * (1.0 + tol), "region_ge_essential_support");
  check.expect(*rep.essential_support_f >= *rep.phi_ratio / rep.multiplier * (1.0 - tol),
               "essential_support_ge_phi_ratio_over_multiplier");
  if (2 * rep.d <= n) {
    check.expect(static_cast<std::uint64_t>(c.size()) <= static_cast<std::uint64_t>(n) * w.region_size,
                 "code_size_le_multiplier_region");
  } else {
    check.expect(code_size <= rep.bound_rhs * (1.0 + tol), "code_size_le_multiplier_region");
  }

  finish(rep);
  return rep;
}

PropositionReport check_prop_ineq(const Code& c, int r, const CheckOptions& opts) {
  return check_prop_ineq(PreparedCode(c), SpectralWitness::for_ball(c.length(), r), opts);
}

PropositionReport check_prop_ineq(const Code& c, const SubsetGraph& b, const CheckOptions& opts) {
  return check_prop_ineq(PreparedCode(c), SpectralWitness::for_subset(b), opts);
}

nlohmann::json PropositionReport::to_json() const {
  auto opt = [](const auto& v) -> nlohmann::json {
    if (v) return *v;
    return nullptr;
  };
  nlohmann::json j;
  j["proposition"] = to_string(proposition);
  j["n"] = n;
  j["d"] = d;
  j["r"] = r >= 0 ? nlohmann::json(r) : nlohmann::json(nullptr);
  j["lambda"] = lambda;
  j["premise_ok"] = premise_ok;
  j["ef2"] = opt(ef2);
  j["ef_sq"] = opt(ef_sq);
  j["covered"] = opt(covered);
  j["bound_lhs"] = bound_lhs;
  j["bound_rhs"] = bound_rhs;
  j["verdict"] = to_string(verdict);
  j["code_size"] = code_size;
  j["region_size"] = region_size;
  j["singleton_code"] = singleton_code;
  j["witness_lambda"] = witness_lambda;
  j["premise_threshold"] = premise_threshold;
  j["multiplier"] = multiplier;
  j["moment_ratio"] = opt(moment_ratio);
  j["essential_support_F"] = opt(essential_support_F);
  j["essential_support_f"] = opt(essential_support_f);
  j["phi_ratio"] = opt(phi_ratio);
  j["rayleigh"] = opt(rayleigh);
  j["failures"] = failures;
  return j;
}

nlohmann::json VerifySummary::to_json() const {
  return {{"n", n},
          {"mode", to_string(mode)},
          {"trials", trials},
          {"seed", seed},
          {"codes", codes},
          {"checks", checks},
          {"holds", holds},
          {"premise_unmet", premise_unmet},
          {"violations", violations}};
}

}  // namespace cube_spectra
