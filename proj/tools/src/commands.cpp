#include "swh_cli/commands.hpp"

#include <cstdlib>
#include <string>

#include "swh/swh.hpp"

namespace swh::cli {

namespace {

class RecordBuilder {
 public:
  explicit RecordBuilder(int precision) : precision_(precision) {}

  RecordBuilder& num(const std::string& key, double v) {
    record_.emplace_back(key, round_significant(v, precision_));
    return *this;
  }
  RecordBuilder& integer(const std::string& key, std::int64_t v) {
    record_.emplace_back(key, v);
    return *this;
  }
  RecordBuilder& count(const std::string& key, std::uint64_t v) {
    record_.emplace_back(key, integer_value(v));
    return *this;
  }
  RecordBuilder& text(const std::string& key, std::string v) {
    record_.emplace_back(key, std::move(v));
    return *this;
  }
  Record build() { return std::move(record_); }

 private:
  int precision_;
  Record record_;
};

void check_precision(int precision) {
  if (precision < 1 || precision > 17) throw PreconditionError("--precision must lie in [1, 17]");
}

void check_k_at_least_two(int k) {
  if (k < 2) throw PreconditionError("K must be >= 2");
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

unsigned default_workers() {
  const char* env = std::getenv("SWH_WORKERS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  return (end != env && *end == '\0' && v >= 1 && v <= 1024) ? static_cast<unsigned>(v) : 1;
}

RunReport cmd_exact(const ExactArgs& args, int precision) {
  check_precision(precision);
  if (args.method != "auto" && args.method != "rational" && args.method != "float") {
    throw PreconditionError("--method must be auto, rational or float");
  }
  const ProblemConfig config = ProblemConfig::make(args.n, args.k, args.beta);

  RunReport report;
  report.command = "exact";
  RecordBuilder params(precision);
  params.integer("n", args.n).integer("k", args.k).num("beta", args.beta).text("method", args.method);
  report.parameters = params.build();
  if (config.k == 1) {
    report.notes.push_back("beta is ignored when K = 1: R(N,1) is the optimal secretary probability");
  }

  const bool use_rational =
      args.method == "rational" || (args.method == "auto" && config.l_selection <= kAutoRationalMaxL);
  if (args.rational && !use_rational) {
    throw PreconditionError("--rational needs the rational method (L <= " +
                            std::to_string(kAutoRationalMaxL) + " under auto)");
  }

  RecordBuilder row(precision);
  row.integer("n", config.n_total).integer("k", config.k).num("beta", config.beta);
  row.integer("l", config.l_selection).integer("b", config.b_cutoff);
  if (use_rational) {
    const Rational r = exact_r(config);
    row.num("r", to_double(r));
    if (args.rational) row.text("rational", to_string(r));
    row.text("method", "rational");
  } else {
    row.num("r", exact_r_fast(config.n_total, config.k, config.beta));
    row.text("method", "float");
  }
  if (config.k == 1) row.integer("t_star", optimal_cutoff(config.n_total).t_star);
  report.results.push_back(row.build());
  return report;
}

RunReport cmd_brute(const BruteArgs& args, int precision) {
  check_precision(precision);
  const Rational brute = brute_force_r(args.n, args.k, args.beta);
  const Rational exact = exact_r(args.n, args.k, args.beta);

  RunReport report;
  report.command = "brute";
  RecordBuilder params(precision);
  params.integer("n", args.n).integer("k", args.k).num("beta", args.beta);
  report.parameters = params.build();
  RecordBuilder row(precision);
  row.integer("n", args.n).integer("k", args.k).num("beta", args.beta);
  row.text("brute_force", to_string(brute)).text("exact", to_string(exact));
  row.num("r", to_double(brute)).integer("equal", brute == exact ? 1 : 0);
  report.results.push_back(row.build());
  return report;
}

RunReport cmd_asymptotic(const AsymptoticArgs& args, int precision) {
  check_precision(precision);
  if (args.k < 1) throw PreconditionError("K must be positive");

  RunReport report;
  report.command = "asymptotic";
  RecordBuilder params(precision);
  params.integer("k", args.k).num("beta", args.beta).num("tol", args.tol);
  report.parameters = params.build();

  RecordBuilder row(precision);
  if (args.k == 1) {
    report.notes.push_back("Q(1) = 1/e, the classical secretary limit; no series evaluated");
    row.integer("k", 1).num("beta", args.beta).num("q", kSecretaryLimit);
    row.integer("terms", 0).num("residual", 0.0);
  } else {
    const SeriesValue q = asymptotic_q(args.k, args.beta, args.tol);
    row.integer("k", args.k).num("beta", args.beta).num("q", q.value);
    row.integer("terms", q.terms_used).num("residual", q.residual_bound);
  }
  report.results.push_back(row.build());
  return report;
}

RunReport cmd_simulate(const SimulateArgs& args, int precision) {
  check_precision(precision);
  const ProblemConfig config = ProblemConfig::make(args.n, args.k, args.beta);
  const Estimate e = simulate_r(config, args.trials, args.seed, args.workers);

  RunReport report;
  report.command = "simulate";
  report.seed = args.seed;
  RecordBuilder params(precision);
  params.integer("n", args.n).integer("k", args.k).num("beta", args.beta);
  params.count("trials", args.trials).count("seed", args.seed).integer("workers", args.workers);
  report.parameters = params.build();

  RecordBuilder row(precision);
  row.integer("n", config.n_total).integer("k", config.k).num("beta", config.beta);
  row.count("trials", e.trials).count("successes", e.successes);
  row.num("mean", e.mean).num("std_error", e.std_error);
  if (args.wilson) {
    const auto [lo, hi] = wilson_interval(e.successes, e.trials);
    row.num("wilson_low", lo).num("wilson_high", hi);
  }
  report.results.push_back(row.build());
  return report;
}

RunReport cmd_jhist(const JHistArgs& args, int precision) {
  check_precision(precision);
  check_k_at_least_two(args.k);
  const ProblemConfig config = ProblemConfig::make(args.n, args.k, 0.5);
  const JHistogram h = empirical_j(config, args.trials, args.seed, args.workers);
  const std::vector<double> pj = exact_pj_table_fast(config.n_total, config.k);

  RunReport report;
  report.command = "jhist";
  report.seed = args.seed;
  RecordBuilder params(precision);
  params.integer("n", args.n).integer("k", args.k).count("trials", args.trials);
  params.count("seed", args.seed).integer("workers", args.workers);
  report.parameters = params.build();

  for (const auto& [j, count] : h.counts) {
    RecordBuilder row(precision);
    row.integer("j", j).count("count", count).num("frequency", h.frequency(j));
    row.num("exact_pj", pj[j]).num("p_limit", p_limit(config.k, j));
    report.results.push_back(row.build());
  }
  return report;
}

RunReport cmd_tail(const TailArgs& args, int precision) {
  check_precision(precision);
  check_k_at_least_two(args.k);
  if (args.t.empty()) throw PreconditionError("--t needs at least one threshold");
  const ProblemConfig config = ProblemConfig::make(args.n, args.k, 0.5);
  const JHistogram h = empirical_j(config, args.trials, args.seed, args.workers);

  RunReport report;
  report.command = "tail";
  report.seed = args.seed;
  RecordBuilder params(precision);
  params.integer("n", args.n).integer("k", args.k).text("t", join(args.t));
  params.count("trials", args.trials).count("seed", args.seed).integer("workers", args.workers);
  report.parameters = params.build();

  for (int t : args.t) {
    const double freq = h.tail_frequency(t);
    RecordBuilder row(precision);
    row.integer("t", t).num("bound", bernstein_tail_bound(config.n_total, config.k, t));
    row.num("empirical", freq).num("std_error", std::sqrt(freq * (1 - freq) / static_cast<double>(h.trials)));
    report.results.push_back(row.build());
  }
  return report;
}

RunReport cmd_table(const TableArgs& args, int precision) {
  check_precision(precision);
  if (args.k.empty()) throw PreconditionError("--k needs at least one value");
  if (args.beta.empty()) throw PreconditionError("--beta needs at least one value");

  RunReport report;
  report.command = "table";
  RecordBuilder params(precision);
  params.text("k", join(args.k)).integer("beta_count", static_cast<std::int64_t>(args.beta.size()));
  params.num("tol", args.tol);
  report.parameters = params.build();

  for (int k : args.k) {
    if (k < 1) throw PreconditionError("K must be positive");
    for (double beta : args.beta) {
      RecordBuilder row(precision);
      if (k == 1) {
        row.integer("k", 1).num("beta", beta).num("q", kSecretaryLimit);
        row.integer("terms", 0).num("residual", 0.0);
      } else {
        const SeriesValue q = asymptotic_q(k, beta, args.tol);
        row.integer("k", k).num("beta", beta).num("q", q.value);
        row.integer("terms", q.terms_used).num("residual", q.residual_bound);
      }
      report.results.push_back(row.build());
    }
  }
  for (int k : args.k) {
    if (k == 1) {
      report.notes.push_back("K = 1 rows report Q(1) = 1/e; beta does not apply");
      break;
    }
  }
  return report;
}

RunReport cmd_optimize(const OptimizeArgs& args, int precision) {
  check_precision(precision);
  check_k_at_least_two(args.k);
  const BetaOptimum opt = optimize_beta(args.k, args.tol);

  RunReport report;
  report.command = "optimize";
  RecordBuilder params(precision);
  params.integer("k", args.k).num("tol", args.tol);
  report.parameters = params.build();
  report.notes.push_back(opt.method_note);

  RecordBuilder row(precision);
  row.integer("k", opt.k).num("beta_star", opt.beta_star).num("q_star", opt.q_star);
  row.num("grid_beta", opt.grid_beta).num("grid_q", opt.grid_q);
  row.num("q_at_0_63", asymptotic_q(args.k, 0.63, args.tol).value);
  report.results.push_back(row.build());
  return report;
}

}  // namespace swh::cli
