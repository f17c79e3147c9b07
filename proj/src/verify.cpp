#include "contsum/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <stdexcept>
#include <thread>
#include <utility>

#include "contsum/binomial.hpp"
#include "contsum/bounds.hpp"
#include "contsum/continuant.hpp"
#include "contsum/identity.hpp"

namespace contsum {

namespace {

struct Checker {
  long long checked = 0;
  std::vector<VerifyFailure> failures;

  void check(bool ok, const char* name, std::string params) {
    ++checked;
    if (!ok) failures.push_back({name, std::move(params)});
  }
};

void merge(Checker& into, Checker&& part) {
  into.checked += part.checked;
  for (auto& f : part.failures) into.failures.push_back(std::move(f));
}

std::string fmt(const char* pattern, ...) {
  char buf[160];
  va_list ap;
  va_start(ap, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, ap);
  va_end(ap);
  return buf;
}

// Splits rows [lo, hi] into contiguous chunks, one worker each, and merges
// the per-chunk results in chunk order so the report does not depend on the
// worker count.
template <typename RowFn>
void run_rows(long long lo, long long hi, int jobs, Checker& out, RowFn fn) {
  const long long rows = hi - lo + 1;
  if (rows <= 0) return;
  const int workers = static_cast<int>(std::min<long long>(jobs, rows));
  if (workers <= 1) {
    for (long long r = lo; r <= hi; ++r) fn(r, out);
    return;
  }
  std::vector<Checker> parts(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const long long a = lo + rows * w / workers;
    const long long b = lo + rows * (w + 1) / workers - 1;
    threads.emplace_back([&fn, &parts, a, b, w] {
      for (long long r = a; r <= b; ++r) fn(r, parts[static_cast<std::size_t>(w)]);
    });
  }
  for (auto& t : threads) t.join();
  for (auto& p : parts) merge(out, std::move(p));
}

struct Bounds {
  long long n = 0;
  long long l = 0;
  long long k = 0;
};

void suite_identity(const Bounds& b, int jobs, Checker& ck) {
  run_rows(0, b.n, jobs, ck, [&b](long long n, Checker& c) {
    for (long long l = 0; l <= b.l; ++l)
      c.check(identity_report(n, l).equal, "identity_equal", fmt("n=%lld l=%lld", n, l));
  });
}

void suite_boundary(const Bounds& b, int /*jobs*/, Checker& ck) {
  for (long long l = 1; l <= b.l; ++l)
    for (long long n = 0; n <= std::min(b.n, l - 1); ++n)
      ck.check(head_sum_check(n, l), "head_sum", fmt("n=%lld l=%lld", n, l));
}

void suite_uv(const Bounds& b, int jobs, Checker& ck) {
  run_rows(1, b.k, jobs, ck, [&b](long long k, Checker& c) {
    for (long long n = 0; n <= b.n; ++n)
      c.check(u_kn(k, n) == v_kn(k, n), "u_equals_v", fmt("k=%lld n=%lld", k, n));
  });
  for (long long n = 0; n <= b.n; ++n)
    ck.check(v_kn(1, n) == (n % 2 != 0 ? -1 : 1), "v_base_k1", fmt("n=%lld", n));
  for (long long k = 1; k <= b.k; ++k)
    ck.check(v_kn(k, 0) == k, "v_base_n0", fmt("k=%lld", k));
  for (long long k = 1; k <= b.k; ++k)
    for (long long h = -b.k; h <= -1; ++h)
      ck.check(v_kn(k, h) == 0, "v_vanishes_neg", fmt("k=%lld h=%lld", k, h));
  for (long long k = 1; k <= b.k; ++k)
    for (long long n = -b.k; n <= b.k; ++n)
      ck.check(v_kn(k, n) == v_kn_clamped(k, n), "v_clamp_agree", fmt("k=%lld n=%lld", k, n));
}

void suite_recurrences(const Bounds& b, int /*jobs*/, Checker& ck) {
  for (long long k = 1; k <= b.k; ++k) {
    for (long long n = 0; n <= b.n; ++n)
      ck.check(v_recurrence_holds(VStep::positive_step, k, n), "v_step_pos",
               fmt("k=%lld n=%lld", k, n));
    ck.check(v_recurrence_holds(VStep::zero_boundary, k, 0), "v_step_zero", fmt("k=%lld", k));
    for (long long n = -b.n; n <= -1; ++n)
      ck.check(v_recurrence_holds(VStep::negative_step, k, n), "v_step_neg",
               fmt("k=%lld n=%lld", k, n));
    for (long long n = 0; n <= b.n; ++n)
      ck.check(u_kn(k + 1, n + 1) == u_kn(k, n + 1) - u_kn(k + 1, n), "u_step",
               fmt("k=%lld n=%lld", k, n));
  }
}

void suite_extraction(const Bounds& b, int jobs, Checker& ck) {
  run_rows(1, b.n, jobs, ck, [](long long n, Checker& c) {
    for (long long l = 1; l <= n; ++l)
      c.check(coeff_extraction_check(n, l), "coeff_extraction", fmt("n=%lld l=%lld", n, l));
  });
  for (long long l = 1; 2 * l + 1 <= b.n; ++l) {
    const auto li = static_cast<int>(l);
    const Mat2Poly inv{-continuant_poly(2 * li - 1), continuant_poly(2 * li),
                       -continuant_poly(2 * li), continuant_poly(2 * li + 1)};
    ck.check(matrix_power(2 * li + 1) * inv == Mat2Poly::identity(), "companion_inverse",
             fmt("l=%lld", l));
  }
}

void suite_continuants(const Bounds& b, int /*jobs*/, Checker& ck) {
  const auto n_max = static_cast<int>(b.n);
  std::vector<IntPoly> k(static_cast<std::size_t>(n_max) + 2);
  k[0] = IntPoly::zero();  // K_{-1}, shifted by one
  k[1] = IntPoly::constant(1);
  for (int n = 1; n <= n_max; ++n)
    k[static_cast<std::size_t>(n) + 1] =
        IntPoly::x() * k[static_cast<std::size_t>(n)] - k[static_cast<std::size_t>(n) - 1];
  auto kat = [&k](int n) -> const IntPoly& { return k[static_cast<std::size_t>(n) + 1]; };

  for (int n = 0; n <= n_max; ++n) {
    const IntPoly r = continuant_poly(n, KStrategy::recurrence);
    ck.check(r == continuant_poly(n, KStrategy::closed_form), "k_strategy_closed",
             fmt("n=%d", n));
    ck.check(r == continuant_poly(n, KStrategy::matrix_power), "k_strategy_matrix",
             fmt("n=%d", n));
    if (n <= kDeterminantDimMax)
      ck.check(r == continuant_poly(n, KStrategy::determinant_oracle), "k_strategy_det",
               fmt("n=%d", n));
    ck.check(r == kat(n), "k_recurrence_table", fmt("n=%d", n));
  }

  const IntPoly one = IntPoly::constant(1);
  for (int n = 1; n <= n_max; ++n) {
    ck.check(kat(n - 1) * kat(n - 1) - kat(n) * kat(n - 2) == one, "k_det_one", fmt("n=%d", n));
    const Mat2Poly m = matrix_power(n);
    ck.check(m == matrix_power(n, PowStrategy::repeated_multiply), "m_power_strategies",
             fmt("n=%d", n));
    ck.check(m.det() == one, "m_power_det", fmt("n=%d", n));
    ck.check(m.a11 == kat(n) && m.a12 == -kat(n - 1) && m.a21 == kat(n - 1) &&
                 m.a22 == -kat(n - 2),
             "m_power_entries", fmt("n=%d", n));
  }

  for (int n = 0; n <= n_max; ++n) {
    bool parity_ok = true;
    for (int d = 0; d <= n; ++d)
      if ((n - d) % 2 != 0 && kat(n).coeff(d) != 0) parity_ok = false;
    ck.check(kat(n).coeff(n) == 1 && kat(n).degree() == n, "k_monic", fmt("n=%d", n));
    ck.check(parity_ok, "k_parity", fmt("n=%d", n));
  }

  ck.check(continuant_value({}) == 1, "cont_empty", "");
  for (long long a = -5; a <= 5; ++a)
    ck.check(continuant_value({BigInt(a)}) == a, "cont_single", fmt("a=%lld", a));

  for (int m = 0; m <= 12; ++m)
    for (long long x = -3; x <= 3; ++x) {
      std::vector<BigInt> rep(static_cast<std::size_t>(m), BigInt(x));
      ck.check(continuant_value(rep) == continuant_poly(m).eval(x), "cont_specializes",
               fmt("m=%d x=%lld", m, x));
    }

  // every sequence of length 1..4 with entries in [-2, 2]
  std::vector<BigInt> seq;
  for (int len = 1; len <= 4; ++len) {
    std::vector<int> idx(static_cast<std::size_t>(len), 0);
    while (true) {
      seq.clear();
      for (int i : idx) seq.push_back(BigInt(i - 2));
      const Mat2Int m = matrix_product(seq);
      std::vector<BigInt> head(seq.begin(), seq.end() - 1);
      std::vector<BigInt> tail(seq.begin() + 1, seq.end());
      std::vector<BigInt> mid =
          seq.size() >= 2 ? std::vector<BigInt>(seq.begin() + 1, seq.end() - 1)
                          : std::vector<BigInt>{};
      bool ok = m.a11 == continuant_value(seq) && m.a21 == continuant_value(head) &&
                m.a12 == -continuant_value(tail) &&
                (seq.size() >= 2 ? m.a22 == -continuant_value(mid) : m.a22 == 0);
      std::string tag;
      for (int i : idx) tag += fmt("%d,", i - 2);
      ck.check(ok, "m_general_entries", "seq=" + tag);
      int p = len - 1;
      while (p >= 0 && idx[static_cast<std::size_t>(p)] == 4) {
        idx[static_cast<std::size_t>(p)] = 0;
        --p;
      }
      if (p < 0) break;
      ++idx[static_cast<std::size_t>(p)];
    }
  }

  for (int m = 1; m <= 10; ++m)
    for (long long a = -3; a <= 3; ++a) {
      std::vector<BigInt> rep(static_cast<std::size_t>(m), BigInt(a));
      ck.check(matrix_product(rep) == matrix_power(m).eval_at(a), "m_general_specializes",
               fmt("m=%d a=%lld", m, a));
    }
}

void suite_chebyshev(const Bounds& b, int /*jobs*/, Checker& ck) {
  const auto n_max = static_cast<int>(b.n);
  ck.check(chebyshev_u(0) == IntPoly::constant(1), "u_base_0", "");
  ck.check(chebyshev_u(1) == IntPoly::from_coeffs({0, 2}), "u_base_1", "");
  std::vector<IntPoly> u(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) u[static_cast<std::size_t>(n)] = chebyshev_u(n);
  const IntPoly two_x = IntPoly::from_coeffs({0, 2});
  for (int n = 0; n + 2 <= n_max; ++n)
    ck.check(u[static_cast<std::size_t>(n) + 2] ==
                 two_x * u[static_cast<std::size_t>(n) + 1] - u[static_cast<std::size_t>(n)],
             "u_recurrence", fmt("n=%d", n));
  for (int n = 0; n <= n_max; ++n)
    ck.check(u[static_cast<std::size_t>(n)] == continuant_poly(n).scale_x(2), "u_bridge",
             fmt("n=%d", n));
}

void suite_pascal(const Bounds& b, int jobs, Checker& ck) {
  run_rows(-b.n, b.n, jobs, ck, [&b](long long n, Checker& c) {
    for (long long k = 0; k <= b.k; ++k)
      c.check(binom(n, k) == binom_oracle(n, k), "binom_oracle_agree",
              fmt("n=%lld k=%lld", n, k));
  });
  for (long long n = 1; n <= b.n; ++n)
    for (long long k = 1; k <= n; ++k)
      ck.check(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k), "pascal_classical",
               fmt("n=%lld k=%lld", n, k));
  ck.check(binom(0, 0) == binom(-1, -1) + binom(-1, 0), "pascal_edge_zero", "");
  for (long long n = -b.n; n <= -1; ++n)
    for (long long i = 1; i <= b.k; ++i)
      ck.check(negative_pascal_holds(n, i), "pascal_negative", fmt("n=%lld i=%lld", n, i));
  for (long long n = -b.n; n <= -1; ++n)
    for (long long k = 0; k <= b.k; ++k) {
      const BigInt v = binom(n, k);
      ck.check(k % 2 == 0 ? v > 0 : v < 0, "binom_neg_sign", fmt("n=%lld k=%lld", n, k));
    }
}

struct SuiteSpec {
  const char* name;
  Bounds defaults;
  void (*run)(const Bounds&, int, Checker&);
};

const SuiteSpec kSuites[] = {
    {"identity", {60, 60, 0}, suite_identity},
    {"boundary", {40, 40, 0}, suite_boundary},
    {"uv", {25, 0, 25}, suite_uv},
    {"recurrences", {15, 0, 15}, suite_recurrences},
    {"extraction", {30, 0, 0}, suite_extraction},
    {"continuants", {64, 0, 0}, suite_continuants},
    {"chebyshev", {64, 0, 0}, suite_chebyshev},
    {"pascal", {60, 0, 120}, suite_pascal},
};

void run_one(const SuiteSpec& s, const VerifyOptions& opts, Checker& ck) {
  Bounds b = s.defaults;
  if (opts.n_max >= 0) b.n = opts.n_max;
  if (opts.l_max >= 0) b.l = opts.l_max;
  if (opts.k_max >= 0) b.k = opts.k_max;
  s.run(b, opts.jobs, ck);
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    v.emplace_back("all");
    return v;
  }();
  return names;
}

VerifySummary run_verify(const std::string& suite, const VerifyOptions& opts) {
  const long long bound = hard_bound(kVerifyBoundDefault);
  for (long long v : {opts.n_max, opts.l_max, opts.k_max})
    if (v > bound)
      throw std::invalid_argument("run_verify: bound exceeds the configured ceiling");
  if (opts.jobs < 1 || opts.jobs > 256)
    throw std::invalid_argument("run_verify: jobs must be in 1..256");

  const auto t0 = std::chrono::steady_clock::now();
  Checker ck;
  bool found = false;
  if (suite == "all") {
    for (const auto& s : kSuites) run_one(s, opts, ck);
    found = true;
  } else {
    for (const auto& s : kSuites)
      if (suite == s.name) {
        run_one(s, opts, ck);
        found = true;
        break;
      }
  }
  if (!found) throw std::invalid_argument("run_verify: unknown suite " + suite);

  VerifySummary out;
  out.suite = suite;
  out.checked = ck.checked;
  out.failures = std::move(ck.failures);
  out.wall_time_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            t0)
          .count());
  return out;
}

}  // namespace contsum
