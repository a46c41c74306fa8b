#include "heigen/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "heigen/json_io.hpp"

namespace heigen {

namespace {

void error_json(std::ostream& err, const std::string& kind, const std::string& msg) {
  err << dump17(json{{"error", kind}, {"message", msg}}, -1) << '\n';
}

void write_out(const CliConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot open output file " + cfg.output);
  f << text;
}

int do_solve(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.input, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read input file '" + cfg.input + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  PolySystem<double> f = system_from_json(j);
  require(bw_norm(f) > 0, "system is identically zero");
  EalhParams<double> p;
  p.epsilon = cfg.epsilon;
  RngStream rng(cfg.seed, 0);
  SolveReport<double> r = lv_ealh_star(f, rng, p, cfg.refine);
  write_out(cfg, out, dump17(report_to_json(r, cfg.seed)) + "\n");
  if (r.status != Status::Success) {
    error_json(err, to_string(r.status), "path tracking did not finish");
    return 1;
  }
  return 0;
}

int do_sample(const CliConfig& cfg, std::ostream& out) {
  RngStream rng(cfg.seed, 0);
  StartTriple<double> s = draw_from_rho_star<double>(rng, cfg.n, cfg.d);
  write_out(cfg, out, dump17(start_to_json(s, cfg.seed)) + "\n");
  return 0;
}

bool wants_csv(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

int emit_report(const CliConfig& cfg, std::ostream& out, const BenchReport& b) {
  write_out(cfg, out, wants_csv(cfg.output) ? bench_to_csv(b) : dump17(bench_to_json(b)) + "\n");
  return b.all_pass() ? 0 : 1;
}

int do_bench(const CliConfig& cfg, std::ostream& out) {
  EalhParams<double> p;
  p.epsilon = cfg.epsilon;
  return emit_report(cfg, out, run_bench(cfg.n, cfg.d, cfg.samples, cfg.seed, p));
}

int do_verify(const CliConfig& cfg, std::ostream& out) {
  BenchReport b;
  b.seed = cfg.seed;
  b.samples = cfg.samples;
  b.entries = verify_identities(cfg.seed, cfg.samples);
  return emit_report(cfg, out, b);
}

}  // namespace

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    require(cfg.n >= 2 && cfg.d >= 2, "n and d must be >= 2");
    require(cfg.epsilon > 0 && cfg.epsilon <= 0.2, "epsilon must lie in (0, 0.2]");
    require(cfg.refine >= 0, "refine must be >= 0");
    require(cfg.samples >= 1, "samples must be >= 1");
    if (cfg.command == "solve") return do_solve(cfg, out, err);
    if (cfg.command == "sample-start") return do_sample(cfg, out);
    if (cfg.command == "bench") return do_bench(cfg, out);
    if (cfg.command == "verify") return do_verify(cfg, out);
    throw Error(ErrorKind::InvalidInput, "unknown command '" + cfg.command + "'");
  } catch (const Error& e) {
    error_json(err, to_string(e.kind()), e.what());
    return e.kind() == ErrorKind::InvalidInput ? 2 : 1;
  } catch (const std::exception& e) {
    error_json(err, "InternalError", e.what());
    return 1;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"h-eigenpairs of homogeneous polynomial systems by adaptive linear homotopy"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::uint64_t seed = kDefaultSeed;
  CLI::Option* seed_opt = nullptr;

  auto common = [&](CLI::App* sub) {
    seed_opt = sub->add_option("--seed", seed, "RNG seed (default: $HEIGEN_SEED or built-in)");
    sub->add_option("--out", cfg.output, "output file (default stdout; .csv for CSV reports)");
  };
  auto* solve = app.add_subcommand("solve", "solve one system given as JSON");
  solve->add_option("input", cfg.input, "system JSON file")->required();
  solve->add_option("--refine", cfg.refine, "Newton steps after tracking");
  solve->add_option("--epsilon", cfg.epsilon, "step-size parameter in (0, 0.2]");
  common(solve);
  CLI::Option* s_seed = seed_opt;

  auto* sample = app.add_subcommand("sample-start", "draw a start triple");
  sample->add_option("--n", cfg.n, "number of variables");
  sample->add_option("--d", cfg.d, "degree");
  common(sample);
  CLI::Option* p_seed = seed_opt;

  auto* bench = app.add_subcommand("bench", "Monte Carlo checks for one (n, d)");
  bench->add_option("--n", cfg.n, "number of variables");
  bench->add_option("--d", cfg.d, "degree");
  std::uint64_t bench_samples = 100, verify_samples = 100000;
  bench->add_option("--samples", bench_samples, "samples per statistic");
  bench->add_option("--epsilon", cfg.epsilon, "step-size parameter in (0, 0.2]");
  common(bench);
  CLI::Option* b_seed = seed_opt;

  auto* verify = app.add_subcommand("verify", "check the special-function and moment identities");
  verify->add_option("--samples", verify_samples, "Monte Carlo draws");
  common(verify);
  CLI::Option* v_seed = seed_opt;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    error_json(err, "InvalidInput", e.what());
    return 2;
  }
  if (solve->parsed()) {
    cfg.command = "solve";
  } else if (sample->parsed()) {
    cfg.command = "sample-start";
  } else if (bench->parsed()) {
    cfg.command = "bench";
    cfg.samples = bench_samples;
  } else {
    cfg.command = "verify";
    cfg.samples = verify_samples;
  }
  const bool flag_seed = s_seed->count() + p_seed->count() + b_seed->count() + v_seed->count() > 0;
  if (flag_seed) {
    cfg.seed = seed;
  } else if (const char* env = std::getenv("HEIGEN_SEED")) {
    try {
      std::size_t pos = 0;
      cfg.seed = std::stoull(env, &pos, 0);
      if (pos != std::string(env).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      error_json(err, "InvalidInput", "HEIGEN_SEED is not an unsigned integer");
      return 2;
    }
  }
  return run(cfg, out, err);
}

}  // namespace heigen
