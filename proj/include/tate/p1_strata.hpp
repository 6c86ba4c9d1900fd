// Splitting strata of the universal extension on P^1 from ranks of the
// Hankel stacks B_i, with a brute-force check for (d, r) = (6, 3).

#pragma once

#include <sstream>

#include "tate/p1_families.hpp"

namespace tate {

/// B_i evaluated at a point (coordinates ordered a^1_0.., a^2_0.., ...).
template <class F>
ScalarMatrix<F> hankel_stack_at(int d, int r, int i, const std::vector<F>& point) {
  ScalarMatrix<F> m = zero_matrix<F>((Eigen::Index)(d - i) * (r - 1), i);
  for (int s = 1; s < r; ++s)
    for (int a = 0; a < d - i; ++a)
      for (int b = 0; b < i; ++b) m((s - 1) * (d - i) + a, b) = point[extension_param(d, s, a + b)];
  return m;
}

/// r_i = rank B_i(point) for i = 1..d-1.
template <class F>
std::vector<int> stack_ranks(int d, int r, const std::vector<F>& point) {
  std::vector<int> out;
  for (int i = 1; i < d; ++i) out.push_back((int)rank<F>(hankel_stack_at(d, r, i, point)));
  return out;
}

inline SplittingType splitting_type_from_ranks(int d, int r, const std::vector<int>& ranks) {
  return padded(splitting_type_from_hilbert(hilbert_from_ranks(d, r, ranks)), r);
}

/// Closed strata for (6,3): the rank condition cutting out the closure of each type.
struct StratumCondition {
  SplittingType type;
  std::string text;
  bool (*holds)(const std::vector<int>& r);
};

inline const std::vector<StratumCondition>& strata_table_63() {
  static const std::vector<StratumCondition> t = {
      {{6, 0, 0}, "r1 = 0", [](const std::vector<int>& r) { return r[0] == 0; }},
      {{5, 1, 0}, "r2 < 2", [](const std::vector<int>& r) { return r[1] < 2; }},
      {{4, 2, 0}, "r3 < 3, r5 < 2", [](const std::vector<int>& r) { return r[2] < 3 && r[4] < 2; }},
      {{4, 1, 1}, "r3 < 3", [](const std::vector<int>& r) { return r[2] < 3; }},
      {{3, 3, 0}, "r5 < 2", [](const std::vector<int>& r) { return r[4] < 2; }},
      {{3, 2, 1}, "r4 < 4", [](const std::vector<int>& r) { return r[3] < 4; }},
      {{2, 2, 2}, "open", [](const std::vector<int>&) { return true; }},
  };
  return t;
}

/// First row of the table whose condition holds.
inline SplittingType classify_63(const std::vector<int>& ranks) {
  for (const auto& c : strata_table_63())
    if (c.holds(ranks)) return c.type;
  return {};
}

inline std::string type_string(const SplittingType& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

struct StrataReport {
  long long points = 0;
  long long minors_counterexamples = 0;  // rank B4 <= 2 vs (rank B3 <= 2 or rank B5 <= 1)
  long long table_counterexamples = 0;   // table classification vs second differences
  long long closure_counterexamples = 0; // condition(lambda) vs type dominating lambda
  long long path_checks = 0, path_counterexamples = 0;
  std::map<std::string, long long> counts;  // per splitting type
  std::vector<std::string> examples;        // first few counterexamples

  bool ok() const {
    return !minors_counterexamples && !table_counterexamples && !closure_counterexamples && !path_counterexamples;
  }
  std::string to_text() const {
    std::ostringstream os;
    os << "points " << points << "\n";
    for (const auto& [t, c] : counts) os << "  " << t << " " << c << "\n";
    os << "minors identity counterexamples " << minors_counterexamples << "\n";
    os << "strata table counterexamples " << table_counterexamples << "\n";
    os << "closure counterexamples " << closure_counterexamples << "\n";
    os << "degeneration paths " << path_checks << ", counterexamples " << path_counterexamples << "\n";
    for (const auto& e : examples) os << "  " << e << "\n";
    return os.str();
  }
};

namespace detail {

template <class F>
std::string point_string(const std::vector<F>& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + p[i].to_string();
  return s + "]";
}

template <class F>
void check_point_63(const std::vector<F>& p, StrataReport& rep) {
  auto rk = stack_ranks(6, 3, p);
  auto type = splitting_type_from_ranks(6, 3, rk);
  ++rep.points;
  ++rep.counts[type_string(type)];
  auto note = [&](long long& counter, const std::string& what) {
    ++counter;
    if (rep.examples.size() < 10) rep.examples.push_back(what + " at " + point_string(p));
  };
  if ((rk[3] <= 2) != (rk[2] <= 2 || rk[4] <= 1)) note(rep.minors_counterexamples, "minors identity");
  if (classify_63(rk) != type) note(rep.table_counterexamples, "table gives " + type_string(classify_63(rk)));
  for (const auto& c : strata_table_63())
    if (c.holds(rk) != dominates(type, c.type)) note(rep.closure_counterexamples, "closure of " + type_string(c.type));
}

/// Along q + t(p - q): every type on the line dominates the type at the
/// points of maximal rank vector.
template <class F>
void check_line_63(const std::vector<F>& p, const std::vector<F>& q, int modulus, StrataReport& rep) {
  std::vector<std::vector<int>> ranks;
  std::vector<int> top(5, 0);
  for (int t = 0; t < modulus; ++t) {
    std::vector<F> x(p.size());
    for (size_t k = 0; k < p.size(); ++k) x[k] = q[k] + F(t) * (p[k] - q[k]);
    ranks.push_back(stack_ranks(6, 3, x));
    for (int i = 0; i < 5; ++i) top[i] = std::max(top[i], ranks.back()[i]);
  }
  ++rep.path_checks;
  auto generic = splitting_type_from_ranks(6, 3, top);
  for (const auto& rk : ranks)
    if (!dominates(splitting_type_from_ranks(6, 3, rk), generic)) {
      ++rep.path_counterexamples;
      if (rep.examples.size() < 10) rep.examples.push_back("degeneration from " + point_string(p));
      return;
    }
}

}  // namespace detail

struct StrataOptions {
  bool exhaustive_f3 = true;
  long long samples_f7 = 100000;
  long long path_samples = 2000;
  std::uint64_t seed = 63;
};

/// (6,3) strata suite. F_3 sweep over all 3^10 points; F_7 random samples and
/// lines through them toward sparse special points (and toward 0).
inline StrataReport strata_check_63(const StrataOptions& opt = {}) {
  StrataReport rep;
  if (opt.exhaustive_f3) {
    FpModulusScope scope(3);
    std::vector<Fp> p(10);
    for (int idx = 0; idx < 59049; ++idx) {
      for (int k = 0, v = idx; k < 10; ++k, v /= 3) p[k] = Fp(v % 3);
      detail::check_point_63(p, rep);
    }
  }
  FpModulusScope scope(7);
  std::mt19937_64 rng(opt.seed);
  auto random_point = [&] {
    std::vector<Fp> p(10);
    for (auto& x : p) x = Fp((long long)(rng() % 7));
    return p;
  };
  for (long long k = 0; k < opt.samples_f7; ++k) detail::check_point_63(random_point(), rep);
  for (long long k = 0; k < opt.path_samples; ++k) {
    auto p = random_point();
    std::vector<Fp> q(10, Fp(0));
    if (k % 2)  // sparse special point: a few nonzero coordinates
      for (int m = 0, c = 1 + rng() % 3; m < c; ++m) q[rng() % 10] = Fp((long long)(1 + rng() % 6));
    detail::check_line_63(p, q, 7, rep);
  }
  return rep;
}

}  // namespace tate
