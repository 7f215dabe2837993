#include "cube_spectra/ball_spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cube_spectra/codes.hpp"

namespace cube_spectra {
namespace {

constexpr long double kCancellation = 1e-12L;
constexpr double kRecurrenceWidth = 1e-9;

void require_radius(int n, int r, const char* what) {
  if (n < 1) throw std::out_of_range(std::string(what) + ": n must be >= 1");
  if (r < 0 || r > n) {
    throw std::out_of_range(std::string(what) + ": radius " + std::to_string(r) + " outside [0, " +
                            std::to_string(n) + "]");
  }
}

// Number of eigenvalues below x of the symmetric tridiagonal matrix with zero
// diagonal and squared off-diagonals offdiag_sq.
int sturm_count_below(const std::vector<double>& offdiag_sq, double x) {
  constexpr double kPivotFloor = 1e-300;
  double q = -x;
  int count = q < 0.0 ? 1 : 0;
  for (double b2 : offdiag_sq) {
    if (q == 0.0) q = -kPivotFloor;
    q = -x - b2 / q;
    if (q < 0.0) ++count;
  }
  return count;
}

struct Scan {
  std::vector<long double> g;
  int first_nonpositive;
};

// Runs the recurrence up to index `last` (inclusive). Stops early at a
// non-finite value.
Scan scan_recurrence(int n, long double lambda, int last) {
  Scan s{{}, n + 1};
  s.g.reserve(static_cast<std::size_t>(last) + 1);
  s.g.push_back(1.0L);
  if (last >= 1) {
    s.g.push_back(lambda / n);
    if (s.g[1] <= 0.0L) s.first_nonpositive = 1;
  }
  for (int i = 1; i < last; ++i) {
    const long double up = lambda * s.g[static_cast<std::size_t>(i)];
    const long double down = i * s.g[static_cast<std::size_t>(i - 1)];
    long double next = (up - down) / static_cast<long double>(n - i);
    if (std::fabs(up - down) <= kCancellation * std::max(std::fabs(up), std::fabs(down))) next = 0.0L;
    if (!std::isfinite(next) || std::fabs(next) > std::numeric_limits<double>::max()) break;
    s.g.push_back(next);
    if (next <= 0.0L && s.first_nonpositive > n) s.first_nonpositive = i + 1;
  }
  return s;
}

}  // namespace

SubsetGraph::SubsetGraph(int n, std::vector<Point> members) : n_(n), members_(std::move(members)) {
  if (n < 1 || n > kHardDimensionCap) throw std::out_of_range("SubsetGraph: dimension out of range");
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("SubsetGraph: duplicate member");
  }
  if (!members_.empty() && std::uint64_t{members_.back()} >= cube_size(n)) {
    throw std::invalid_argument("SubsetGraph: member outside the cube");
  }
}

SubsetGraph SubsetGraph::ball(int n, int r) { return {n, hamming_ball(n, r)}; }

double lambda_ball_exact(int n, int r) {
  require_radius(n, r, "lambda_ball_exact");
  std::vector<double> offdiag_sq(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) offdiag_sq[static_cast<std::size_t>(i)] = static_cast<double>(i + 1) * (n - i);

  // Top eigenvalue lies in [0, n]: trace zero, spectrum bounded by max degree.
  double lo = 0.0;
  double hi = static_cast<double>(n) + 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count_below(offdiag_sq, mid) == r + 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

RecurrenceResult eigen_recurrence(int n, double lambda) {
  if (n < 1) throw std::out_of_range("eigen_recurrence: n must be >= 1");
  if (!(lambda >= 0.0 && lambda <= n)) throw std::domain_error("eigen_recurrence: lambda outside [0, n]");
  Scan s = scan_recurrence(n, lambda, n);
  RecurrenceResult out;
  out.profile.n = n;
  out.profile.values.assign(s.g.begin(), s.g.end());
  out.first_nonpositive = s.first_nonpositive;
  return out;
}

BallEigenWitness lambda_for_radius_recurrence(int n, int r) {
  require_radius(n, r, "lambda_for_radius_recurrence");
  const int last = std::min(n, r + 1);
  auto turns_by_r = [&](long double lambda) {
    return scan_recurrence(n, lambda, last).first_nonpositive <= r + 1;
  };

  long double lambda = n;
  if (!turns_by_r(lambda)) {
    long double lo = 0.0L;  // g(1) = 0 there, so the predicate holds
    long double hi = n;
    while (hi - lo > kRecurrenceWidth) {
      const long double mid = 0.5L * (lo + hi);
      if (turns_by_r(mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    lambda = lo;
  }

  const Scan s = scan_recurrence(n, lambda, last);
  const int p = std::min(s.first_nonpositive - 1, static_cast<int>(s.g.size()) - 1);
  BallEigenWitness w;
  w.n = n;
  w.radius = r;
  w.lambda = static_cast<double>(lambda);
  w.truncation = p;
  w.profile.n = n;
  w.profile.values.assign(s.g.begin(), s.g.begin() + p + 1);
  return w;
}

SubsetEigenpair top_eigenpair_bruteforce(const SubsetGraph& b) {
  if (b.size() == 0) throw std::invalid_argument("lambda_subset_bruteforce: empty set");
  if (b.size() > (std::size_t{1} << 16)) {
    throw std::out_of_range("lambda_subset_bruteforce: set larger than 2^16");
  }
  const auto members = b.members();
  const std::size_t m = members.size();

  std::vector<std::size_t> offsets(m + 1, 0);
  std::vector<std::uint32_t> adjacent;
  for (std::size_t i = 0; i < m; ++i) {
    for (int bit = 0; bit < b.dimension(); ++bit) {
      const Point y = members[i] ^ (Point{1} << bit);
      auto it = std::lower_bound(members.begin(), members.end(), y);
      if (it != members.end() && *it == y) adjacent.push_back(static_cast<std::uint32_t>(it - members.begin()));
    }
    offsets[i + 1] = adjacent.size();
  }
  std::size_t max_degree = 0;
  for (std::size_t i = 0; i < m; ++i) max_degree = std::max(max_degree, offsets[i + 1] - offsets[i]);

  auto apply = [&](const std::vector<double>& v, std::vector<double>& out) {
    for (std::size_t i = 0; i < m; ++i) {
      double acc = 0.0;
      for (std::size_t e = offsets[i]; e < offsets[i + 1]; ++e) acc += v[adjacent[e]];
      out[i] = acc;
    }
  };

  // Spectrum of a bipartite graph is symmetric; a positive shift keeps -lambda
  // from competing with lambda.
  const double shift = 0.5 * static_cast<double>(max_degree);
  constexpr double kResidualTol = 1e-10;
  constexpr int kMaxIterations = 200000;

  SubsetEigenpair out;
  std::vector<double> v(m, 1.0 / std::sqrt(static_cast<double>(m)));
  std::vector<double> av(m);
  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    apply(v, av);
    const double theta = std::inner_product(v.begin(), v.end(), av.begin(), 0.0);
    double res_sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double d = av[i] - theta * v[i];
      res_sq += d * d;
    }
    out.lambda = theta;
    out.iterations = iter;
    out.residual = std::sqrt(res_sq);
    if (out.residual <= kResidualTol * std::max(1.0, std::abs(theta))) break;
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      av[i] += shift * v[i];
      norm_sq += av[i] * av[i];
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (std::size_t i = 0; i < m; ++i) v[i] = av[i] * inv;
  }
  for (double& x : v) x = std::abs(x);
  out.vector = std::move(v);
  return out;
}

double lambda_subset_bruteforce(const SubsetGraph& b) { return top_eigenpair_bruteforce(b).lambda; }

int min_radius_for_lambda(int n, double target) {
  if (n < 1) throw std::out_of_range("min_radius_for_lambda: n must be >= 1");
  if (std::isnan(target) || target > n) {
    throw std::domain_error("min_radius_for_lambda: no ball reaches lambda " + std::to_string(target) +
                            " in n=" + std::to_string(n));
  }
  constexpr double kSlack = 1e-9;
  int lo = 0;
  int hi = n;  // lambda_{B(n)} = n always suffices
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (lambda_ball_exact(n, mid) >= target - kSlack) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace cube_spectra
