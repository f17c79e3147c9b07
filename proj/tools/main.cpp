#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "contsum/bounds.hpp"
#include "contsum/continuant.hpp"
#include "contsum/identity.hpp"
#include "contsum/render.hpp"
#include "contsum/verify.hpp"

namespace {

using namespace contsum;

const std::map<std::string, OutputFormat> kFormats{
    {"markdown", OutputFormat::markdown},
    {"csv", OutputFormat::csv},
    {"json", OutputFormat::json},
};

const std::map<std::string, KStrategy> kStrategies{
    {"recurrence", KStrategy::recurrence},
    {"matrix_power", KStrategy::matrix_power},
    {"closed_form", KStrategy::closed_form},
    {"determinant_oracle", KStrategy::determinant_oracle},
};

CLI::Option* add_format(CLI::App* cmd, OutputFormat& fmt) {
  return cmd->add_option("--format", fmt, "output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->default_str("markdown");
}

double run_timed(KStrategy strategy, long long n, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  BigInt sink = 0;
  for (int r = 0; r < reps; ++r)
    sink += continuant_poly(static_cast<int>(n), strategy).coeff(0);
  const auto t1 = std::chrono::steady_clock::now();
  (void)sink;
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"continuants, signed binomials, and the sums they share"};
  app.require_subcommand(1);
  int rc = 0;

  auto* sum = app.add_subcommand("sum", "evaluate both sums at one (n, l)");
  long long sum_n = 0, sum_l = 0;
  OutputFormat sum_fmt = OutputFormat::markdown;
  sum->add_option("--n", sum_n, "first index")->required()->check(CLI::NonNegativeNumber);
  sum->add_option("--l", sum_l, "second index")->required()->check(CLI::NonNegativeNumber);
  add_format(sum, sum_fmt);
  sum->callback([&] {
    const IdentityReport rep = identity_report(sum_n, sum_l);
    std::cout << render_report(rep, sum_fmt);
    rc = rep.equal ? 0 : 1;
  });

  auto* table = app.add_subcommand("table", "grid of common sum values");
  long long tab_n = 8, tab_l = 8;
  OutputFormat tab_fmt = OutputFormat::markdown;
  table->add_option("--n-max", tab_n, "column count")->check(CLI::PositiveNumber);
  table->add_option("--l-max", tab_l, "row count")->check(CLI::PositiveNumber);
  add_format(table, tab_fmt);
  table->callback([&] {
    const long long bound = hard_bound(kTableBoundDefault);
    if (tab_n > bound || tab_l > bound)
      throw CLI::ValidationError("table",
                                 "--n-max/--l-max exceed the configured ceiling of " +
                                     std::to_string(bound));
    TableData t;
    t.n_max = tab_n;
    t.l_max = tab_l;
    t.cells.resize(static_cast<std::size_t>(tab_l));
    for (long long l = 1; l <= tab_l; ++l) {
      auto& row = t.cells[static_cast<std::size_t>(l - 1)];
      row.reserve(static_cast<std::size_t>(tab_n));
      for (long long n = 1; n <= tab_n; ++n) {
        const IdentityReport rep = identity_report(n, l);
        if (!rep.equal) rc = 1;
        row.push_back(rep.left);
      }
    }
    std::cout << render_table(t, tab_fmt);
  });

  auto* verify = app.add_subcommand("verify", "run an invariant sweep");
  std::string suite;
  VerifyOptions vop;
  OutputFormat ver_fmt = OutputFormat::markdown;
  verify->add_option("suite", suite, "which family of checks to run")
      ->required()
      ->check(CLI::IsMember(verify_suites()));
  verify->add_option("--n-max", vop.n_max, "n bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--l-max", vop.l_max, "l bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--k-max", vop.k_max, "k bound")->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", vop.jobs, "worker threads")->check(CLI::Range(1, 256));
  add_format(verify, ver_fmt);
  verify->callback([&] {
    const VerifySummary s = run_verify(suite, vop);
    std::cout << render_verify(s, ver_fmt);
    rc = s.ok() ? 0 : 1;
  });

  auto* subsets = app.add_subcommand("subsets", "per-subset restrictions of both sums");
  long long sub_n = 0, sub_l = 0;
  OutputFormat sub_fmt = OutputFormat::markdown;
  subsets->add_option("--n", sub_n, "first index")->required()->check(CLI::NonNegativeNumber);
  subsets->add_option("--l", sub_l, "second index")->required()->check(CLI::NonNegativeNumber);
  add_format(subsets, sub_fmt);
  subsets->callback([&] {
    const SubsetAnalysis a = subset_sums(sub_n, sub_l, kSubsetCap);
    std::cout << render_subsets(sub_n, sub_l, a, sub_fmt);
  });

  auto* bench = app.add_subcommand("bench", "time the evaluation strategies");
  long long bench_n = 64;
  int bench_reps = 10;
  std::string bench_strategy;
  OutputFormat bench_fmt = OutputFormat::markdown;
  bench->add_option("--n", bench_n, "polynomial index")->check(CLI::PositiveNumber);
  bench->add_option("--reps", bench_reps, "repetitions per strategy")
      ->check(CLI::Range(1, 1000000));
  bench->add_option("--strategy", bench_strategy, "single strategy to time")
      ->check(CLI::IsMember({"recurrence", "matrix_power", "closed_form",
                             "determinant_oracle"}));
  add_format(bench, bench_fmt);
  bench->callback([&] {
    if (bench_n > kBenchDegreeMax)
      throw CLI::ValidationError("bench", "--n exceeds " + std::to_string(kBenchDegreeMax));
    std::vector<std::string> names;
    if (!bench_strategy.empty()) {
      if (kStrategies.at(bench_strategy) == KStrategy::determinant_oracle &&
          bench_n > kDeterminantDimMax)
        throw CLI::ValidationError(
            "bench", "determinant_oracle needs --n <= " + std::to_string(kDeterminantDimMax));
      names = {bench_strategy};
    } else {
      names = {"recurrence", "matrix_power", "closed_form"};
      if (bench_n <= kDeterminantDimMax) names.push_back("determinant_oracle");
    }

    BenchResult br;
    br.n = bench_n;
    br.reps = bench_reps;
    br.strategies = names;
    std::vector<IntPoly> outputs;
    outputs.reserve(names.size());
    for (const auto& s : names)
      outputs.push_back(continuant_poly(static_cast<int>(bench_n), kStrategies.at(s)));
    br.agree = true;
    for (const auto& p : outputs)
      if (!(p == outputs.front())) br.agree = false;
    br.degree = outputs.front().degree().value_or(-1);

    br.total_ms.assign(names.size(), 0.0);
    if (br.agree)
      for (std::size_t i = 0; i < names.size(); ++i)
        br.total_ms[i] = run_timed(kStrategies.at(names[i]), bench_n, bench_reps);

    std::cout << render_bench(br, bench_fmt);
    rc = br.agree ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
