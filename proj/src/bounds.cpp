#include "cube_spectra/bounds.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cube_spectra {
namespace {

void require_code_parameters(int n, int d, const char* what) {
  if (n < 1 || n > kMaxBoundDimension) {
    throw std::out_of_range(std::string(what) + ": n must be in [1, " + std::to_string(kMaxBoundDimension) + "]");
  }
  if (d < 1 || d > n) {
    throw std::out_of_range(std::string(what) + ": d must be in [1, n], got " + std::to_string(d));
  }
}

void require_delta(double delta, const char* what) {
  if (!(delta >= 0.0 && delta <= 0.5)) {
    throw std::domain_error(std::string(what) + ": delta must be in [0, 1/2]");
  }
}

nlohmann::json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return v.convert_to<std::uint64_t>();
  }
  return v.str();
}

}  // namespace

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("binary_entropy: x must be in [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

BigInt ball_size(int n, int r) {
  if (n < 0 || n > kMaxBoundDimension) throw std::out_of_range("ball_size: n out of range");
  if (r < 0 || r > n) throw std::out_of_range("ball_size: r must be in [0, n]");
  BigInt binom = 1;
  BigInt total = 1;
  for (int i = 0; i < r; ++i) {
    binom = binom * (n - i) / (i + 1);
    total += binom;
  }
  return total;
}

double log2_big(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log2_big: value must be positive");
  const auto top = static_cast<long>(boost::multiprecision::msb(value));
  if (top < 63) return std::log2(value.convert_to<double>());
  const long shift = top - 62;
  const BigInt head = value >> shift;
  return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

double first_lp_rate(double delta) {
  require_delta(delta, "first_lp_rate");
  return binary_entropy(0.5 - std::sqrt(delta * (1.0 - delta)));
}

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::finite_code: return "finite-code";
    case BoundKind::rate: return "rate";
    case BoundKind::covering_radius: return "covering-radius";
    case BoundKind::comparator: return "comparator";
  }
  return "unknown";
}

BoundReport finite_code_bound(int n, int d) {
  require_code_parameters(n, d, "finite_code_bound");
  BoundReport rep;
  rep.kind = BoundKind::finite_code;
  rep.n = n;
  rep.d = d;
  const double target = static_cast<double>(n - 2 * d + 1);
  rep.target = target;
  const int r = target <= 0.0 ? 0 : min_radius_for_lambda(n, target);
  rep.r_star = r;
  rep.lambda_used = r == 0 ? 0.0 : lambda_ball_exact(n, r);
  if (2 * d <= n) {
    rep.bound = BigInt(n) * ball_size(n, r);
  } else {
    // Here the target is <= 0, so r = 0 and lambda = 0: |C| <= 2d / (2d - n).
    rep.bound = BigInt(2 * d) / BigInt(2 * d - n);
  }
  rep.certificate = lambda_for_radius_recurrence(n, r);
  return rep;
}

BoundReport rate_bound(double delta) {
  BoundReport rep;
  rep.kind = BoundKind::rate;
  rep.delta = delta;
  rep.value = first_lp_rate(delta);
  return rep;
}

BoundReport essential_covering_radius_bound(int n, int d) {
  require_code_parameters(n, d, "essential_covering_radius_bound");
  BoundReport rep;
  rep.kind = BoundKind::covering_radius;
  rep.n = n;
  rep.d = d;
  const double target = static_cast<double>(n - 2 * d + 1);
  rep.target = target;
  const int r = target <= 0.0 ? 0 : min_radius_for_lambda(n, target);
  rep.r_star = r;
  rep.lambda_used = r == 0 ? 0.0 : lambda_ball_exact(n, r);
  if (2 * d <= n) {
    rep.value = 0.5 * n - std::sqrt(static_cast<double>(d) * static_cast<double>(n - d));
  }
  return rep;
}

double tietavainen_bound(int n, int d) {
  require_code_parameters(n, d, "tietavainen_bound");
  const double half_d = 0.5 * d;
  return 0.5 * n - std::sqrt(half_d * (n - half_d));
}

BoundReport tietavainen_report(int n, int d) {
  BoundReport rep;
  rep.kind = BoundKind::comparator;
  rep.n = n;
  rep.d = d;
  rep.value = tietavainen_bound(n, d);
  return rep;
}

nlohmann::json BoundReport::to_json() const {
  auto opt = [](const auto& v) -> nlohmann::json {
    if (v) return *v;
    return nullptr;
  };
  nlohmann::json j;
  j["kind"] = to_string(kind);
  if (kind == BoundKind::rate) {
    j["delta"] = opt(delta);
    j["rate"] = opt(value);
    return j;
  }
  j["n"] = opt(n);
  j["d"] = opt(d);
  if (kind == BoundKind::comparator) {
    j["r_comparator"] = opt(value);
    return j;
  }
  j["target"] = opt(target);
  j["r_star"] = opt(r_star);
  j["lambda"] = opt(lambda_used);
  if (kind == BoundKind::covering_radius) {
    j["r_finite"] = opt(r_star);
    j["r_asymptotic"] = opt(value);
  }
  if (bound) {
    j["bound"] = big_to_json(*bound);
    j["bound_log2"] = log2_big(*bound);
  }
  if (certificate) {
    j["certificate"] = {
        {"id", "ball-witness:n=" + std::to_string(certificate->n) + ",r=" + std::to_string(certificate->radius)},
        {"lambda", certificate->lambda},
        {"truncation", certificate->truncation},
        {"profile", certificate->profile.values},
    };
  }
  return j;
}

std::vector<RateRow> rate_table(std::span<const double> deltas) {
  std::vector<RateRow> rows;
  rows.reserve(deltas.size());
  for (double delta : deltas) rows.push_back({delta, first_lp_rate(delta)});
  return rows;
}

void write_rate_table(std::ostream& out, std::span<const RateRow> rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      out << "delta,rate\n";
      for (const RateRow& row : rows) out << format_real(row.delta) << ',' << format_real(row.rate) << '\n';
      break;
    case OutputFormat::text:
      for (const RateRow& row : rows) out << format_real(row.delta) << ' ' << format_real(row.rate) << '\n';
      break;
    case OutputFormat::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const RateRow& row : rows) {
        arr.push_back({{"delta", round_significant(row.delta)}, {"rate", round_significant(row.rate)}});
      }
      out << arr.dump(2) << '\n';
      break;
    }
  }
}

void write_finite_bound_csv(std::ostream& out, std::span<const BoundReport> rows) {
  out << "n,d,r_star,lambda,bound\n";
  for (const BoundReport& rep : rows) {
    if (rep.kind != BoundKind::finite_code) throw std::invalid_argument("write_finite_bound_csv: not a finite bound");
    out << *rep.n << ',' << *rep.d << ',' << *rep.r_star << ',' << format_real(*rep.lambda_used) << ','
        << rep.bound->str() << '\n';
  }
}

}  // namespace cube_spectra
