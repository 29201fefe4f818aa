// swh: command-line front end for the Selecting-with-History toolkit.
//
//   swh exact      --n N --k K [--beta B] [--rational] [--method auto|rational|float]
//   swh brute      --n N --k K [--beta B]
//   swh asymptotic --k K [--beta B] [--tol T]
//   swh simulate   --n N --k K [--beta B] [--trials M] [--seed S] [--workers W] [--wilson]
//   swh jhist      --n N --k K [--trials M] [--seed S] [--workers W]
//   swh tail       --n N --k K --t 8,16,32 [--trials M] [--seed S] [--workers W]
//   swh table      --k 2,3,10 --beta 0.1:0.9:0.1 [--tol T]
//   swh optimize   --k K [--tol T]
//
// Common flags: --format json|csv, --precision P, --output FILE.
// Exit codes: 0 success, 2 usage or precondition error, 3 non-convergence.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "swh/error.hpp"
#include "swh_cli/commands.hpp"
#include "swh_cli/parse.hpp"

namespace {

using swh::cli::RunReport;

std::string one_line(std::string text) {
  for (char& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Selecting-with-History: exact, asymptotic and simulated success probabilities"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", SWH_VERSION);

  std::string format = "json";
  int precision = 6;
  std::string output;
  app.add_option("--format", format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--precision", precision, "Significant digits for floating output")->capture_default_str();
  app.add_option("--output", output, "Write to this file instead of stdout");

  std::function<RunReport()> run;

  swh::cli::ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exact finite-N success probability R(N,K)");
  exact_cmd->add_option("--n", exact.n, "Total number of items N")->required();
  exact_cmd->add_option("--k", exact.k, "K (selection length is N/K)")->required();
  exact_cmd->add_option("--beta", exact.beta, "Phase-one fraction beta")->capture_default_str();
  exact_cmd->add_flag("--rational", exact.rational, "Also print the reduced fraction");
  exact_cmd->add_option("--method", exact.method, "auto, rational or float")->capture_default_str();
  exact_cmd->callback([&] { run = [&] { return swh::cli::cmd_exact(exact, precision); }; });

  swh::cli::BruteArgs brute;
  auto* brute_cmd = app.add_subcommand("brute", "Exhaustive enumeration oracle for R(N,K), N <= 12");
  brute_cmd->add_option("--n", brute.n)->required();
  brute_cmd->add_option("--k", brute.k)->required();
  brute_cmd->add_option("--beta", brute.beta)->capture_default_str();
  brute_cmd->callback([&] { run = [&] { return swh::cli::cmd_brute(brute, precision); }; });

  swh::cli::AsymptoticArgs asym;
  auto* asym_cmd = app.add_subcommand("asymptotic", "Limit success probability Q(K, beta)");
  asym_cmd->add_option("--k", asym.k)->required();
  asym_cmd->add_option("--beta", asym.beta)->capture_default_str();
  asym_cmd->add_option("--tol", asym.tol, "Truncation tolerance")->capture_default_str();
  asym_cmd->callback([&] { run = [&] { return swh::cli::cmd_asymptotic(asym, precision); }; });

  swh::cli::SimulateArgs sim;
  sim.workers = swh::cli::default_workers();
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of R(N,K)");
  sim_cmd->add_option("--n", sim.n)->required();
  sim_cmd->add_option("--k", sim.k)->required();
  sim_cmd->add_option("--beta", sim.beta)->capture_default_str();
  sim_cmd->add_option("--trials", sim.trials)->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed)->capture_default_str();
  sim_cmd->add_option("--workers", sim.workers, "Worker threads (default: SWH_WORKERS or 1)");
  sim_cmd->add_flag("--wilson", sim.wilson, "Add a 95% Wilson interval");
  sim_cmd->callback([&] { run = [&] { return swh::cli::cmd_simulate(sim, precision); }; });

  swh::cli::JHistArgs jhist;
  jhist.workers = swh::cli::default_workers();
  auto* jhist_cmd = app.add_subcommand("jhist", "Empirical distribution of J");
  jhist_cmd->add_option("--n", jhist.n)->required();
  jhist_cmd->add_option("--k", jhist.k)->required();
  jhist_cmd->add_option("--trials", jhist.trials)->capture_default_str();
  jhist_cmd->add_option("--seed", jhist.seed)->capture_default_str();
  jhist_cmd->add_option("--workers", jhist.workers);
  jhist_cmd->callback([&] { run = [&] { return swh::cli::cmd_jhist(jhist, precision); }; });

  swh::cli::TailArgs tail;
  tail.workers = swh::cli::default_workers();
  std::string tail_list;
  auto* tail_cmd = app.add_subcommand("tail", "Bernstein bound vs empirical P[J >= t]");
  tail_cmd->add_option("--n", tail.n)->required();
  tail_cmd->add_option("--k", tail.k)->required();
  tail_cmd->add_option("--t", tail_list, "Comma-separated thresholds")->required();
  tail_cmd->add_option("--trials", tail.trials)->capture_default_str();
  tail_cmd->add_option("--seed", tail.seed)->capture_default_str();
  tail_cmd->add_option("--workers", tail.workers);
  tail_cmd->callback([&] {
    run = [&] {
      tail.t = swh::cli::parse_int_list(tail_list, "--t");
      return swh::cli::cmd_tail(tail, precision);
    };
  });

  swh::cli::TableArgs table;
  std::string table_k;
  std::string table_beta = "0.63";
  auto* table_cmd = app.add_subcommand("table", "Q(K, beta) over lists or ranges of K and beta");
  table_cmd->add_option("--k", table_k, "Comma-separated K values")->required();
  table_cmd->add_option("--beta", table_beta, "Comma list and/or start:stop:step ranges")
      ->capture_default_str();
  table_cmd->add_option("--tol", table.tol)->capture_default_str();
  table_cmd->callback([&] {
    run = [&] {
      table.k = swh::cli::parse_int_list(table_k, "--k");
      table.beta = swh::cli::parse_real_list(table_beta, "--beta");
      return swh::cli::cmd_table(table, precision);
    };
  });

  swh::cli::OptimizeArgs opt;
  auto* opt_cmd = app.add_subcommand("optimize", "Maximize Q(K, beta) over beta");
  opt_cmd->add_option("--k", opt.k)->required();
  opt_cmd->add_option("--tol", opt.tol)->capture_default_str();
  opt_cmd->callback([&] { run = [&] { return swh::cli::cmd_optimize(opt, precision); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << one_line(e.what()) << '\n';
    return swh::cli::kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    RunReport report = run();
    report.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    for (const std::string& note : report.notes) std::cerr << "note: " << note << '\n';
    const std::string text = format == "csv" ? report.to_csv() : report.to_json().dump(2) + "\n";
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(output, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot open " << output << '\n';
        return swh::cli::kExitUsage;
      }
      file << text;
    }
  } catch (const swh::PreconditionError& e) {
    std::cerr << "error: " << one_line(e.what()) << '\n';
    return swh::cli::kExitUsage;
  } catch (const swh::ConvergenceError& e) {
    std::cerr << "error: " << one_line(e.what()) << '\n';
    return swh::cli::kExitNonConvergence;
  }
  return swh::cli::kExitOk;
}
