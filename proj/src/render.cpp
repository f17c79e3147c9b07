#include "contsum/render.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace contsum {

namespace {

using nlohmann::json;

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string subset_braces(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string subset_csv(const std::vector<int>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(s[i]);
  }
  return out;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

}  // namespace

std::string render_report(const IdentityReport& r, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::markdown:
      os << "n: " << r.n << '\n'
         << "l: " << r.l << '\n'
         << "left: " << r.left.str() << '\n'
         << "right: " << r.right.str() << '\n'
         << "equal: " << bool_str(r.equal) << '\n';
      return os.str();
    case OutputFormat::csv:
      os << "n,l,left,right,equal\n"
         << r.n << ',' << r.l << ',' << r.left.str() << ',' << r.right.str() << ','
         << bool_str(r.equal) << '\n';
      return os.str();
    case OutputFormat::json: {
      json j;
      j["equal"] = r.equal;
      j["l"] = r.l;
      j["left"] = r.left.str();
      j["n"] = r.n;
      j["right"] = r.right.str();
      return dump(j);
    }
  }
  return {};
}

std::string render_table(const TableData& t, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::markdown: {
      os << "| l\\n |";
      for (long long n = 1; n <= t.n_max; ++n) os << ' ' << n << " |";
      os << '\n' << "| --- |";
      for (long long n = 1; n <= t.n_max; ++n) os << " --- |";
      os << '\n';
      for (long long l = 1; l <= t.l_max; ++l) {
        os << "| " << l << " |";
        for (long long n = 1; n <= t.n_max; ++n)
          os << ' '
             << t.cells[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(n - 1)].str()
             << " |";
        os << '\n';
      }
      return os.str();
    }
    case OutputFormat::csv: {
      os << "l\\n";
      for (long long n = 1; n <= t.n_max; ++n) os << ',' << n;
      os << '\n';
      for (long long l = 1; l <= t.l_max; ++l) {
        os << l;
        for (long long n = 1; n <= t.n_max; ++n)
          os << ','
             << t.cells[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(n - 1)].str();
        os << '\n';
      }
      return os.str();
    }
    case OutputFormat::json: {
      json arr = json::array();
      for (long long l = 1; l <= t.l_max; ++l)
        for (long long n = 1; n <= t.n_max; ++n) {
          json cell;
          cell["l"] = l;
          cell["n"] = n;
          cell["value"] =
              t.cells[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(n - 1)].str();
          arr.push_back(cell);
        }
      return dump(arr);
    }
  }
  return {};
}

std::string render_subsets(long long n, long long l, const SubsetAnalysis& a, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::markdown: {
      os << "n: " << n << '\n' << "l: " << l << "\n\n";
      os << "| subset | u | v |\n| --- | --- | --- |\n";
      for (const auto& r : a.records)
        os << "| " << subset_braces(r.subset) << " | " << r.u.str() << " | " << r.v.str()
           << " |\n";
      os << '\n';
      if (a.collisions.empty()) {
        os << "collisions: none\n";
      } else {
        os << "collisions:\n\n| u_subset | v_subset | value |\n| --- | --- | --- |\n";
        for (const auto& c : a.collisions)
          os << "| " << subset_braces(c.u_subset) << " | " << subset_braces(c.v_subset)
             << " | " << c.value.str() << " |\n";
      }
      return os.str();
    }
    case OutputFormat::csv: {
      os << "subset,u,v\n";
      for (const auto& r : a.records)
        os << subset_csv(r.subset) << ',' << r.u.str() << ',' << r.v.str() << '\n';
      os << "\nu_subset,v_subset,value\n";
      for (const auto& c : a.collisions)
        os << subset_csv(c.u_subset) << ',' << subset_csv(c.v_subset) << ',' << c.value.str()
           << '\n';
      return os.str();
    }
    case OutputFormat::json: {
      json j;
      j["l"] = l;
      j["n"] = n;
      j["records"] = json::array();
      for (const auto& r : a.records) {
        json rec;
        rec["subset"] = r.subset;
        rec["u"] = r.u.str();
        rec["v"] = r.v.str();
        j["records"].push_back(rec);
      }
      j["collisions"] = json::array();
      for (const auto& c : a.collisions) {
        json col;
        col["u_subset"] = c.u_subset;
        col["v_subset"] = c.v_subset;
        col["value"] = c.value.str();
        j["collisions"].push_back(col);
      }
      return dump(j);
    }
  }
  return {};
}

std::string render_verify(const VerifySummary& s, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::markdown:
      os << "suite: " << s.suite << '\n'
         << "checked: " << s.checked << '\n'
         << "failed: " << s.failed() << '\n';
      for (const auto& fl : s.failures) os << "fail: " << fl.check << ' ' << fl.params << '\n';
      os << "wall_time_ms: " << s.wall_time_ms << '\n';
      return os.str();
    case OutputFormat::csv:
      os << "suite,checked,failed\n" << s.suite << ',' << s.checked << ',' << s.failed() << '\n';
      if (!s.failures.empty()) {
        os << "\ncheck,params\n";
        for (const auto& fl : s.failures) os << fl.check << ',' << fl.params << '\n';
      }
      os << "\nwall_time_ms\n" << s.wall_time_ms << '\n';
      return os.str();
    case OutputFormat::json: {
      json j;
      j["checked"] = s.checked;
      j["failed"] = s.failed();
      j["failures"] = json::array();
      for (const auto& fl : s.failures) {
        json jf;
        jf["check"] = fl.check;
        jf["params"] = fl.params;
        j["failures"].push_back(jf);
      }
      j["suite"] = s.suite;
      j["wall_time_ms"] = s.wall_time_ms;
      return dump(j);
    }
  }
  return {};
}

std::string render_bench(const BenchResult& b, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::markdown: {
      os << "n: " << b.n << '\n' << "reps: " << b.reps << '\n' << "strategies:";
      for (const auto& s : b.strategies) os << ' ' << s;
      os << '\n' << "degree: " << b.degree << '\n' << "agree: " << bool_str(b.agree) << '\n';
      os << "timing_ms:";
      for (std::size_t i = 0; i < b.strategies.size(); ++i)
        os << ' ' << b.strategies[i] << '=' << fixed3(b.total_ms[i]);
      os << '\n';
      return os.str();
    }
    case OutputFormat::csv: {
      os << "strategy,n,reps,degree,agree\n";
      for (const auto& s : b.strategies)
        os << s << ',' << b.n << ',' << b.reps << ',' << b.degree << ',' << bool_str(b.agree)
           << '\n';
      os << "\nstrategy,total_ms,avg_ms\n";
      for (std::size_t i = 0; i < b.strategies.size(); ++i)
        os << b.strategies[i] << ',' << fixed3(b.total_ms[i]) << ','
           << fixed3(b.total_ms[i] / b.reps) << '\n';
      return os.str();
    }
    case OutputFormat::json: {
      json j;
      j["agree"] = b.agree;
      j["degree"] = b.degree;
      j["n"] = b.n;
      j["reps"] = b.reps;
      j["strategies"] = b.strategies;
      j["timing_ms"] = json::object();
      for (std::size_t i = 0; i < b.strategies.size(); ++i)
        j["timing_ms"][b.strategies[i]] = b.total_ms[i];
      return dump(j);
    }
  }
  return {};
}

}  // namespace contsum
