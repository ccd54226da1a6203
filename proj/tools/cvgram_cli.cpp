// Command-line front end: verification runs against the oracle engine,
// P-sweep benchmarking, per-fold product export, and the leakage probe.
//
// Exit codes: 0 ok, 2 parse, 3 dimension, 4 partition-invalid,
// 5 not-scalable, 6 tolerance-fail.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "cvgram/cvgram.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitPartition = 4;
constexpr int kExitNotScalable = 5;
constexpr int kExitTolerance = 6;

struct Inputs {
  cvgram::DatasetPair data;
  cvgram::Partitioning part;
};

Inputs load_inputs(const std::string& x_path, const std::string& y_path,
                   const std::string& part_path,
                   const std::vector<std::string>& random_spec) {
  if (!random_spec.empty()) {
    const auto n = static_cast<cvgram::Index>(std::stoll(random_spec[0]));
    const auto k = static_cast<cvgram::Index>(std::stoll(random_spec[1]));
    const auto m = static_cast<cvgram::Index>(std::stoll(random_spec[2]));
    const int p = std::stoi(random_spec[3]);
    const auto seed = static_cast<uint64_t>(std::stoull(random_spec[4]));
    std::mt19937_64 rng(seed);
    auto data = cvgram::random_dataset(n, k, m, rng);
    auto part = cvgram::random_partitioning(n, p, rng);
    return {std::move(data), std::move(part)};
  }
  cvgram::Matrix x = cvgram::read_matrix_csv(x_path);
  cvgram::Matrix y = cvgram::read_matrix_csv(y_path);
  cvgram::DatasetPair data(std::move(x), std::move(y));
  cvgram::Partitioning part = cvgram::read_partition_file(part_path);
  if (part.n_rows() != data.n_rows())
    throw cvgram::dimension_error("partition file has " +
                                  std::to_string(part.n_rows()) +
                                  " labels but data has " +
                                  std::to_string(data.n_rows()) + " rows");
  return {std::move(data), std::move(part)};
}

int cmd_verify(const Inputs& in, double tol, int threads) {
  if (auto err = cvgram::validate_partitioning(in.part)) {
    std::cerr << "invalid partitioning: " << *err << "\n";
    return kExitPartition;
  }
  // All 16 configurations run, so the partitioning must be scalable.
  if (auto err = cvgram::check_scalable(in.part)) {
    std::cerr << "partitioning not scalable: " << *err << "\n";
    return kExitNotScalable;
  }
  bool all_ok = true;
  for (const auto& cfg : cvgram::enumerate_configs()) {
    const auto fast = cvgram::run_all_folds(in.data, in.part, cfg, threads);
    const auto base = cvgram::baseline_fold_products(in.data, in.part, cfg, threads);
    double worst = 0.0;
    for (size_t f = 0; f < fast.size(); ++f) {
      worst = std::max(worst, cvgram::max_rel_diff(fast[f].xtx_t, base[f].xtx_t));
      worst = std::max(worst, cvgram::max_rel_diff(fast[f].xty_t, base[f].xty_t));
    }
    const bool ok = worst <= tol;
    all_ok = all_ok && ok;
    std::cout << "config " << cvgram::config_to_string(cfg)
              << " max_rel_diff " << cvgram::format_double(worst) << " "
              << (ok ? "ok" : "FAIL") << "\n";
  }
  std::cout << (all_ok ? "verify: all 16 configs within tolerance "
                       : "verify: tolerance exceeded, tol ")
            << cvgram::format_double(tol) << "\n";
  return all_ok ? 0 : kExitTolerance;
}

int cmd_run(const Inputs& in, const cvgram::PreprocessConfig& cfg,
            const std::string& engine, const std::string& out_dir, int threads) {
  if (auto err = cvgram::validate_partitioning(in.part)) {
    std::cerr << "invalid partitioning: " << *err << "\n";
    return kExitPartition;
  }
  if (cfg.any_scale()) {
    if (auto err = cvgram::check_scalable(in.part)) {
      std::cerr << "partitioning not scalable: " << *err << "\n";
      return kExitNotScalable;
    }
  }
  std::vector<cvgram::FoldResult> results =
      engine == "baseline"
          ? cvgram::baseline_fold_products(in.data, in.part, cfg, threads)
          : cvgram::run_all_folds(in.data, in.part, cfg, threads);

  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  std::ofstream stats(dir / "stats.csv", std::ios::binary);
  if (!stats) throw cvgram::io_error("cannot write stats.csv in " + out_dir);
  stats << "fold,name,values\n";
  auto stat_row = [&](int fold, const char* name, const cvgram::Vector& v) {
    if (v.size() == 0) return;
    stats << fold << ',' << name;
    for (cvgram::Index j = 0; j < v.size(); ++j)
      stats << ',' << cvgram::format_double(v(j));
    stats << '\n';
  };
  for (const auto& r : results) {
    const std::string tag = "fold_" + std::to_string(r.fold_id);
    cvgram::write_matrix_csv((dir / (tag + "_xtx.csv")).string(), r.xtx_t);
    cvgram::write_matrix_csv((dir / (tag + "_xty.csv")).string(), r.xty_t);
    stats << r.fold_id << ",counts," << r.stats.n_train << ',' << r.stats.n_val
          << '\n';
    stat_row(r.fold_id, "mean_x", r.stats.mean_x_t);
    stat_row(r.fold_id, "mean_y", r.stats.mean_y_t);
    stat_row(r.fold_id, "std_x", r.stats.std_x_t);
    stat_row(r.fold_id, "std_y", r.stats.std_y_t);
  }
  std::cout << "wrote " << results.size() << " folds to " << out_dir << "\n";
  return 0;
}

int cmd_bench(cvgram::Index n, cvgram::Index k, cvgram::Index m,
              const std::vector<int>& p_list, const cvgram::PreprocessConfig& cfg,
              int reps, uint64_t seed, const std::string& out_path, int threads) {
  std::mt19937_64 rng(seed);
  const auto data = cvgram::random_dataset(n, k, m, rng);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw cvgram::io_error("cannot open for writing: " + out_path);
  out << "engine,config,n,k,m,p,wall_time,reps\n";
  for (int p : p_list) {
    const auto part = cvgram::random_partitioning(n, p, rng);
    const double t_base = cvgram::min_wall_time(reps, [&] {
      cvgram::baseline_fold_products(data, part, cfg, threads);
    });
    const double t_fast = cvgram::min_wall_time(reps, [&] {
      cvgram::run_all_folds(data, part, cfg, threads);
    });
    for (const auto& [name, t] :
         {std::pair<const char*, double>{"baseline", t_base}, {"fast", t_fast}}) {
      out << name << ',' << cvgram::config_to_string(cfg) << ',' << n << ','
          << k << ',' << m << ',' << p << ',' << cvgram::format_double(t)
          << ',' << reps << '\n';
      std::cout << name << " p=" << p << " " << cvgram::format_double(t)
                << " s (min of " << reps << ")\n";
    }
  }
  return 0;
}

int cmd_leakage(const Inputs& in) {
  const auto report = cvgram::leakage_divergence(in.data, in.part);
  std::cout << cvgram::format_leakage_report(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"training-partition XtX / XtY products for P-fold cross-validation"};
  app.require_subcommand(1);

  std::string x_path, y_path, part_path, out_dir, out_path, config_str = "none";
  std::string engine = "fast";
  std::vector<std::string> random_spec;
  double tol = 1e-8;
  int threads = 1;
  int reps = 3;
  uint64_t seed = 42;
  long long n = 0, k = 0, m = 0;
  std::vector<int> p_list;
  bool builtin_example = false;

  auto* verify = app.add_subcommand("verify", "compare fast engine against the baseline oracle for all 16 configs");
  verify->add_option("--x", x_path, "X matrix CSV");
  verify->add_option("--y", y_path, "Y matrix CSV");
  verify->add_option("--partition", part_path, "partition file, one fold label per line");
  verify->add_option("--random", random_spec, "generate seeded data: N K M P SEED")->expected(5);
  verify->add_option("--tol", tol, "max relative difference allowed");
  verify->add_option("--threads", threads, "fold-level worker threads");

  auto* run = app.add_subcommand("run", "write per-fold products and statistics to disk");
  run->add_option("--x", x_path, "X matrix CSV")->required();
  run->add_option("--y", y_path, "Y matrix CSV")->required();
  run->add_option("--partition", part_path, "partition file")->required();
  run->add_option("--config", config_str, "none|center|scale|center+scale or 4-bit cx cy sx sy token");
  run->add_option("--engine", engine, "fast or baseline")->check(CLI::IsMember({"fast", "baseline"}));
  run->add_option("--out-dir", out_dir, "output directory")->required();
  run->add_option("--threads", threads, "fold-level worker threads");

  auto* bench = app.add_subcommand("bench", "time both engines over a sweep of fold counts");
  bench->add_option("--n", n, "rows")->required();
  bench->add_option("--k", k, "features")->required();
  bench->add_option("--m", m, "responses")->required();
  bench->add_option("--p-list", p_list, "fold counts to sweep")->required()->delimiter(',');
  bench->add_option("--config", config_str, "preprocessing config");
  bench->add_option("--reps", reps, "repetitions per timing (min 3)")->check(CLI::Range(3, 1000));
  bench->add_option("--seed", seed, "data generation seed");
  bench->add_option("--out", out_path, "timing CSV path")->required();
  bench->add_option("--threads", threads, "fold-level worker threads");

  auto* leakage = app.add_subcommand("leakage", "divergence of Lindgren-style centering from proper centering");
  leakage->add_option("--x", x_path, "X matrix CSV");
  leakage->add_option("--y", y_path, "Y matrix CSV");
  leakage->add_option("--partition", part_path, "partition file");
  leakage->add_option("--seed", seed, "use seeded random data instead of files");
  leakage->add_flag("--builtin", builtin_example, "use the canonical 3-sample construction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (verify->parsed()) {
      if (random_spec.empty() && (x_path.empty() || y_path.empty() || part_path.empty())) {
        std::cerr << "verify needs --x/--y/--partition or --random\n";
        return kExitParse;
      }
      return cmd_verify(load_inputs(x_path, y_path, part_path, random_spec), tol, threads);
    }
    if (run->parsed()) {
      return cmd_run(load_inputs(x_path, y_path, part_path, {}),
                     cvgram::parse_config(config_str), engine, out_dir, threads);
    }
    if (bench->parsed()) {
      for (int p : p_list)
        if (p < 2 || static_cast<long long>(p) > n)
          throw cvgram::partition_error("fold count " + std::to_string(p) +
                                        " outside {2..N}");
      return cmd_bench(n, k, m, p_list, cvgram::parse_config(config_str), reps,
                       seed, out_path, threads);
    }
    if (leakage->parsed()) {
      if (!x_path.empty()) {
        return cmd_leakage(load_inputs(x_path, y_path, part_path, {}));
      }
      if (builtin_example || leakage->count("--seed") == 0) {
        cvgram::Matrix x(3, 1), y(3, 1);
        x << -1, 1, 4;
        y << -1, 1, 4;
        cvgram::Partitioning part{{1, 1, 2}, 2};
        return cmd_leakage({cvgram::DatasetPair(x, y), part});
      }
      std::mt19937_64 rng(seed);
      auto data = cvgram::random_dataset(50, 4, 2, rng);
      auto part = cvgram::random_partitioning(50, 5, rng);
      return cmd_leakage({std::move(data), std::move(part)});
    }
  } catch (const cvgram::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const cvgram::scalability_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotScalable;
  } catch (const cvgram::partition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPartition;
  } catch (const cvgram::dimension_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDimension;
  }
  return kExitParse;
}
