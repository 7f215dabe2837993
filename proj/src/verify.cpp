#include <algorithm>
#include <random>
#include <stdexcept>
#include <thread>

#include "cube_spectra/lp_witness.hpp"

namespace cube_spectra {
namespace {

struct Outcome {
  std::uint64_t checks = 0;
  std::uint64_t holds = 0;
  std::uint64_t premise_unmet = 0;
  std::optional<PropositionReport> violation;
};

Outcome run_family_member(const Code& code, const std::vector<SpectralWitness>& balls, const CheckOptions& opts) {
  Outcome out;
  const PreparedCode prepared(code);
  auto tally = [&](PropositionReport rep) {
    ++out.checks;
    switch (rep.verdict) {
      case Verdict::holds: ++out.holds; break;
      case Verdict::premise_unmet: ++out.premise_unmet; break;
      case Verdict::violated:
        if (!out.violation) out.violation = std::move(rep);
        break;
    }
  };
  for (const SpectralWitness& ball : balls) {
    tally(check_prop_ineq(prepared, ball, opts));
    tally(check_covering(prepared, ball, opts));
  }
  return out;
}

Code random_family_member(int n, std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  const int max_d = std::min(n, n / 2 + 1);
  std::uniform_int_distribution<int> pick_d(1, max_d);
  const int min_d = pick_d(rng);
  return random_code(n, min_d, rng());
}

}  // namespace

VerifySummary exhaustive_verify(int n, VerifyMode mode, int trials, std::uint64_t seed, int threads,
                                const CheckOptions& opts) {
  if (mode == VerifyMode::all_linear && (n < 1 || n > 7)) {
    throw std::out_of_range("exhaustive_verify: all-linear needs 1 <= n <= 7");
  }
  if (mode == VerifyMode::random_general && (n < 1 || n > 12)) {
    throw std::out_of_range("exhaustive_verify: random-general needs 1 <= n <= 12");
  }
  if (trials < 0) throw std::out_of_range("exhaustive_verify: trials must be >= 0");
  threads = std::max(1, threads);

  std::vector<SpectralWitness> balls;
  for (int r = 0; r <= n; ++r) balls.push_back(SpectralWitness::for_ball(n, r));

  std::vector<Code> family;
  if (mode == VerifyMode::all_linear) {
    for (int k = 1; k <= n; ++k) {
      for_each_linear_code(n, k, [&](const LinearCode& c) { family.push_back(c.expand()); });
    }
  } else {
    family.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) family.push_back(random_family_member(n, seed, static_cast<std::uint64_t>(t)));
  }

  std::vector<Outcome> outcomes(family.size());
  auto work = [&](std::size_t worker) {
    for (std::size_t i = worker; i < family.size(); i += static_cast<std::size_t>(threads)) {
      outcomes[i] = run_family_member(family[i], balls, opts);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, static_cast<std::size_t>(t));
  }

  VerifySummary summary;
  summary.n = n;
  summary.mode = mode;
  summary.trials = mode == VerifyMode::random_general ? trials : 0;
  summary.seed = seed;
  summary.codes = family.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (o.violation) {
      nlohmann::json dump;
      dump["summary_so_far"] = summary.to_json();
      dump["code_index"] = i;
      std::vector<std::string> words;
      for (Point x : family[i].points()) words.push_back(to_bit_string(x, n));
      dump["code"] = words;
      dump["report"] = o.violation->to_json();
      throw VerificationFailure("proposition check violated for code #" + std::to_string(i), std::move(dump));
    }
    summary.checks += o.checks;
    summary.holds += o.holds;
    summary.premise_unmet += o.premise_unmet;
  }
  return summary;
}

}  // namespace cube_spectra
