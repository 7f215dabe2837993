#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cube_spectra/cube_spectra.hpp"

namespace cube_spectra::cli {
namespace {

using nlohmann::json;

// Agreement demanded of the cross-checked lambda methods before the CLI
// reports a disagreement.
constexpr double kRecurrenceAgreement = 1e-7;
constexpr double kBruteforceAgreement = 1e-8;

struct Globals {
  std::string format = "json";
  double tolerance = kDefaultTolerance;
  int threads = 1;
  std::uint64_t seed = 0;
};

void round_reals(json& j) {
  if (j.is_number_float()) {
    j = round_significant(j.get<double>());
  } else if (j.is_structured()) {
    for (auto& item : j) round_reals(item);
  }
}

std::string scalar_text(const json& v) {
  if (v.is_number_float()) return format_real(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string joined;
    for (const auto& item : v) {
      if (!joined.empty()) joined += ' ';
      joined += scalar_text(item);
    }
    return joined;
  }
  return v.dump();
}

void write_text(std::ostream& out, const json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      write_text(out, *it, key);
    } else {
      out << key << ' ' << scalar_text(*it) << '\n';
    }
  }
}

// One CSV row per object; columns are the union of the keys, in sorted order.
void write_csv(std::ostream& out, const std::vector<json>& rows) {
  std::vector<std::string> columns;
  for (const json& row : rows) {
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (std::find(columns.begin(), columns.end(), it.key()) == columns.end()) columns.push_back(it.key());
    }
  }
  std::sort(columns.begin(), columns.end());
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_field(columns[i]);
  out << '\n';
  for (const json& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out << ',';
      if (row.contains(columns[i])) {
        const json& v = row.at(columns[i]);
        out << csv_field(v.is_object() ? v.dump() : scalar_text(v));
      }
    }
    out << '\n';
  }
}

void emit(std::ostream& out, json j, const Globals& g) {
  switch (parse_output_format(g.format)) {
    case OutputFormat::json:
      j["seed"] = g.seed;
      round_reals(j);
      out << j.dump(2) << '\n';
      break;
    case OutputFormat::text:
      j["seed"] = g.seed;
      write_text(out, j);
      break;
    case OutputFormat::csv:
      write_csv(out, {j});
      break;
  }
}

json witness_json(const BallEigenWitness& w) {
  return {{"lambda", w.lambda}, {"p", w.truncation}, {"profile", w.profile.values}};
}

int cmd_lambda(int n, int r, const std::string& method, const Globals& g, std::ostream& out, std::ostream& err) {
  const double exact = lambda_ball_exact(n, r);
  json j = {{"n", n}, {"r", r}, {"method", method}};
  int status = kExitOk;
  if (method == "exact") {
    j["lambda"] = exact;
  } else if (method == "recurrence") {
    const BallEigenWitness w = lambda_for_radius_recurrence(n, r);
    j.update(witness_json(w));
    j["lambda_exact"] = exact;
    if (std::abs(w.lambda - exact) > kRecurrenceAgreement) {
      err << "lambda: recurrence " << format_real(w.lambda) << " disagrees with exact " << format_real(exact) << '\n';
      status = kExitViolation;
    }
  } else {
    const SubsetEigenpair pair = top_eigenpair_bruteforce(SubsetGraph::ball(n, r));
    j["lambda"] = pair.lambda;
    j["lambda_exact"] = exact;
    j["iterations"] = pair.iterations;
    if (std::abs(pair.lambda - exact) > kBruteforceAgreement) {
      err << "lambda: power iteration " << format_real(pair.lambda) << " disagrees with exact "
          << format_real(exact) << '\n';
      status = kExitViolation;
    }
  }
  emit(out, std::move(j), g);
  return status;
}

int cmd_bound(std::optional<int> n, std::optional<int> d, std::optional<double> delta, bool covering,
              const Globals& g, std::ostream& out) {
  const OutputFormat fmt = parse_output_format(g.format);
  if (delta) {
    if (n || d || covering) throw CLI::ValidationError("bound: --delta excludes --n, --d and --covering");
    if (fmt == OutputFormat::csv) {
      const std::vector<RateRow> rows = rate_table(std::span<const double>(&*delta, 1));
      write_rate_table(out, rows, fmt);
      return kExitOk;
    }
    emit(out, rate_bound(*delta).to_json(), g);
    return kExitOk;
  }
  if (!n || !d) throw CLI::ValidationError("bound: give --n and --d, or --delta");
  if (covering) {
    json j = essential_covering_radius_bound(*n, *d).to_json();
    j["r_comparator"] = tietavainen_bound(*n, *d);
    emit(out, std::move(j), g);
    return kExitOk;
  }
  const BoundReport rep = finite_code_bound(*n, *d);
  if (fmt == OutputFormat::csv) {
    write_finite_bound_csv(out, std::span<const BoundReport>(&rep, 1));
    return kExitOk;
  }
  emit(out, rep.to_json(), g);
  return kExitOk;
}

int emit_reports(const std::vector<PropositionReport>& reports, const Globals& g, std::ostream& out) {
  bool violated = false;
  for (const PropositionReport& rep : reports) violated = violated || rep.verdict == Verdict::violated;
  if (parse_output_format(g.format) == OutputFormat::csv) {
    std::vector<json> rows;
    for (const PropositionReport& rep : reports) {
      json row = rep.to_json();
      round_reals(row);
      rows.push_back(std::move(row));
    }
    write_csv(out, rows);
  } else {
    json j;
    for (const PropositionReport& rep : reports) j[to_string(rep.proposition)] = rep.to_json();
    emit(out, std::move(j), g);
  }
  return violated ? kExitViolation : kExitOk;
}

int cmd_verify_code(const std::string& path, int r, std::optional<int> d, const Globals& g, std::ostream& out) {
  const CheckOptions opts{g.tolerance};
  const PreparedCode prepared(read_code_file(path));
  const SpectralWitness ball = SpectralWitness::for_ball(prepared.code.length(), r);
  std::vector<PropositionReport> reports;
  reports.push_back(check_prop_ineq(prepared, ball, opts, d));
  reports.push_back(check_covering(prepared, ball, opts));
  return emit_reports(reports, g, out);
}

int cmd_verify_family(int n, VerifyMode mode, int trials, const Globals& g, std::ostream& out, std::ostream& err) {
  try {
    const VerifySummary s = exhaustive_verify(n, mode, trials, g.seed, g.threads, CheckOptions{g.tolerance});
    emit(out, s.to_json(), g);
    return kExitOk;
  } catch (const VerificationFailure& e) {
    err << "verify: " << e.what() << '\n';
    json dump = e.dump();
    round_reals(dump);
    out << dump.dump(2) << '\n';
    return kExitViolation;
  }
}

int cmd_wht(const std::string& code_path, const std::string& function_path, bool binary, bool integer,
            const Globals& g, std::ostream& out) {
  if (code_path.empty() == function_path.empty()) throw CLI::ValidationError("wht: give exactly one of --code, --function");
  std::vector<double> real_values;
  std::vector<std::int64_t> int_values;
  int n = 0;
  if (!code_path.empty()) {
    const Code c = read_code_file(code_path);
    n = c.length();
    if (integer) {
      const IntCubeFunction t = wht_unnormalized(c.int_indicator());
      int_values.assign(t.values().begin(), t.values().end());
    } else {
      const CubeFunction t = wht(c.indicator());
      real_values.assign(t.values().begin(), t.values().end());
    }
  } else {
    if (integer) throw CLI::ValidationError("wht: --integer needs --code");
    std::ifstream in(function_path, binary ? std::ios::binary : std::ios::in);
    if (!in) throw std::runtime_error("wht: cannot open " + function_path);
    const CubeFunction f = binary ? read_binary(in) : read_text(in);
    n = f.dimension();
    const CubeFunction t = wht(f);
    real_values.assign(t.values().begin(), t.values().end());
  }

  const OutputFormat fmt = parse_output_format(g.format);
  const std::size_t size = integer ? int_values.size() : real_values.size();
  auto value_text = [&](std::size_t s) {
    return integer ? std::to_string(int_values[s]) : format_real(real_values[s]);
  };
  if (fmt == OutputFormat::json) {
    json j = {{"n", n}, {"normalized", !integer}};
    if (integer) {
      j["values"] = int_values;
    } else {
      j["values"] = real_values;
    }
    emit(out, std::move(j), g);
  } else {
    if (fmt == OutputFormat::csv) out << "S,value\n";
    const char sep = fmt == OutputFormat::csv ? ',' : ' ';
    for (std::size_t s = 0; s < size; ++s) out << to_bit_string(static_cast<Point>(s), n) << sep << value_text(s) << '\n';
  }
  return kExitOk;
}

int cmd_cover(const std::string& path, int r, const Globals& g, std::ostream& out) {
  const Code c = read_code_file(path);
  json j = {{"n", c.length()},
            {"r", r},
            {"code_size", c.size()},
            {"covered", covered_count(c, r)},
            {"fraction", covered_fraction(c, r)},
            {"essential_covering_radius", essential_covering_radius(c)}};
  emit(out, std::move(j), g);
  return kExitOk;
}

int cmd_rate_table(const std::vector<double>& deltas, int steps, const Globals& g, std::ostream& out) {
  std::vector<double> grid = deltas;
  if (steps > 0) {
    for (int i = 0; i <= steps; ++i) grid.push_back(0.5 * i / steps);
  }
  const std::vector<RateRow> rows = rate_table(grid);
  write_rate_table(out, rows, parse_output_format(g.format));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral tools for the first linear programming bound on binary codes", "cube-spectra"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--tol", g.tolerance, "Tolerance for floating checks")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads for verify")->check(CLI::Range(1, 256));
  app.add_option("--seed", g.seed, "Seed for random code families");

  int n = 0;
  int r = 0;
  std::optional<int> opt_n;
  std::optional<int> opt_d;
  std::optional<double> opt_delta;
  std::string code_path;
  std::string function_path;

  auto* lambda = app.add_subcommand("lambda", "lambda of the Hamming ball B(r)");
  lambda->add_option("--n", n, "Block length")->required()->check(CLI::PositiveNumber);
  lambda->add_option("--r", r, "Ball radius")->required()->check(CLI::NonNegativeNumber);
  bool exact = false, recurrence = false, bruteforce = false;
  auto* methods = lambda->add_option_group("method");
  methods->add_flag("--exact", exact, "Sturm bisection on the weight-level matrix (default)");
  methods->add_flag("--recurrence", recurrence, "Eigenfunction recurrence, cross-checked against --exact");
  methods->add_flag("--bruteforce", bruteforce, "Power iteration on B(r), cross-checked against --exact");
  methods->require_option(0, 1);

  auto* bound = app.add_subcommand("bound", "Finite code bound, rate bound or covering-radius bound");
  bound->add_option("--n", opt_n, "Block length");
  bound->add_option("--d", opt_d, "Minimal (or dual) distance");
  bound->add_option("--delta", opt_delta, "Relative distance in [0, 1/2]");
  bool covering = false;
  bound->add_flag("--covering", covering, "Essential covering radius bound with the comparator");

  auto* verify = app.add_subcommand("verify", "Check the code-size and dual-covering inequalities on a code or a code family");
  bool all_linear = false, random = false;
  int trials = 100;
  std::optional<int> opt_r;
  verify->add_option("--n", opt_n, "Block length for family runs");
  verify->add_flag("--all-linear", all_linear, "Every linear code of length n (n <= 7)");
  verify->add_flag("--random", random, "Seeded random greedy codes (n <= 12)");
  verify->add_option("--trials", trials, "Random codes to draw")->check(CLI::NonNegativeNumber);
  verify->add_option("--code", code_path, "Code file");
  verify->add_option("--r", opt_r, "Ball radius for --code");
  verify->add_option("--d", opt_d, "Claimed minimal distance for --code (at most the true one)");

  auto* wht_cmd = app.add_subcommand("wht", "Walsh-Hadamard transform of a code indicator or a function");
  bool binary = false, integer = false;
  wht_cmd->add_option("--code", code_path, "Code file");
  wht_cmd->add_option("--function", function_path, "Function file ('index value' lines)");
  wht_cmd->add_flag("--binary", binary, "Read --function as raw little-endian doubles");
  wht_cmd->add_flag("--integer", integer, "Unnormalized integer transform of the code indicator");

  auto* cover = app.add_subcommand("cover", "Covered fraction of the radius-r dilation of a code");
  cover->add_option("--code", code_path, "Code file")->required();
  cover->add_option("--r", r, "Radius")->required()->check(CLI::NonNegativeNumber);

  auto* table = app.add_subcommand("rate-table", "First LP rate bound over a list of delta values");
  std::vector<double> deltas;
  int steps = 0;
  table->add_option("--deltas", deltas, "Delta values")->delimiter(',');
  table->add_option("--steps", steps, "Also add an even grid of steps+1 points on [0, 1/2]")
      ->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (lambda->parsed()) {
      const std::string method = recurrence ? "recurrence" : bruteforce ? "bruteforce" : "exact";
      return cmd_lambda(n, r, method, g, out, err);
    }
    if (bound->parsed()) return cmd_bound(opt_n, opt_d, opt_delta, covering, g, out);
    if (verify->parsed()) {
      if (!code_path.empty()) {
        if (opt_n || all_linear || random) throw CLI::ValidationError("verify: --code excludes --n, --all-linear, --random");
        if (!opt_r) throw CLI::ValidationError("verify: --code needs --r");
        return cmd_verify_code(code_path, *opt_r, opt_d, g, out);
      }
      if (!opt_n || all_linear == random) throw CLI::ValidationError("verify: give --n with one of --all-linear, --random");
      if (opt_r || opt_d) throw CLI::ValidationError("verify: --r and --d apply to --code only");
      return cmd_verify_family(*opt_n, all_linear ? VerifyMode::all_linear : VerifyMode::random_general, trials, g,
                               out, err);
    }
    if (wht_cmd->parsed()) return cmd_wht(code_path, function_path, binary, integer, g, out);
    if (cover->parsed()) return cmd_cover(code_path, r, g, out);
    if (table->parsed()) return cmd_rate_table(deltas, steps, g, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cube_spectra::cli
