#pragma once

#include <string>
#include <vector>

#include "contsum/bigint.hpp"
#include "contsum/identity.hpp"
#include "contsum/verify.hpp"

namespace contsum {

enum class OutputFormat { markdown, csv, json };

struct TableData {
  long long n_max = 0;
  long long l_max = 0;
  std::vector<std::vector<BigInt>> cells;  // cells[l-1][n-1]
};

struct BenchResult {
  long long n = 0;
  int reps = 0;
  std::vector<std::string> strategies;
  std::vector<double> total_ms;  // parallel to strategies
  long long degree = -1;
  bool agree = false;
};

// All renderings are byte-deterministic: sorted JSON keys, LF endings, no
// locale-dependent formatting.  Timing always sits on its own line (markdown),
// its own section (csv), or its own key (json) so golden comparisons can
// exclude it.
std::string render_report(const IdentityReport& r, OutputFormat f);
std::string render_table(const TableData& t, OutputFormat f);
std::string render_subsets(long long n, long long l, const SubsetAnalysis& a, OutputFormat f);
std::string render_verify(const VerifySummary& s, OutputFormat f);
std::string render_bench(const BenchResult& b, OutputFormat f);

}  // namespace contsum
