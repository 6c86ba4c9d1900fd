// Rings S = A[x_0..x_n] with A = K[a_1..a_m] (weighted), polynomials over
// them, bidegrees, and exterior monomials e_T.

#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tate/field.hpp"

namespace tate {

struct Bidegree {
  int internal = 0;
  int param = 0;

  Bidegree operator+(Bidegree o) const { return {internal + o.internal, param + o.param}; }
  Bidegree operator-(Bidegree o) const { return {internal - o.internal, param - o.param}; }
  bool operator==(const Bidegree&) const = default;
  auto operator<=>(const Bidegree&) const = default;
  std::string to_string() const {
    return "(" + std::to_string(internal) + "," + std::to_string(param) + ")";
  }
};

using Exponents = std::vector<int>;

struct Ring {
  std::vector<std::string> x;       // x_0..x_n, internal degree +1
  std::vector<std::string> params;  // a_1..a_m, internal degree 0
  std::vector<int> weights;         // positive param weights

  int nx() const { return static_cast<int>(x.size()); }
  int n() const { return nx() - 1; }
  int np() const { return static_cast<int>(params.size()); }
  int nvars() const { return nx() + np(); }
  bool has_params() const { return !params.empty(); }

  Bidegree degree(const Exponents& e) const {
    Bidegree b;
    for (int i = 0; i < nx(); ++i) b.internal += e[i];
    for (int k = 0; k < np(); ++k) b.param += weights[k] * e[nx() + k];
    return b;
  }
  int max_weight() const {
    int w = 0;
    for (int v : weights) w = std::max(w, v);
    return w;
  }
  /// The same x-variables with no parameters.
  Ring central() const { return Ring{x, {}, {}}; }
  bool operator==(const Ring&) const = default;

  static Ring projective(int n) {
    Ring r;
    for (int i = 0; i <= n; ++i) r.x.push_back("x" + std::to_string(i));
    return r;
  }
  void validate() const {
    if (x.empty()) throw std::invalid_argument("ring needs at least one variable");
    if (weights.size() != params.size()) throw std::invalid_argument("one weight per parameter");
    for (int w : weights)
      if (w < 1) throw std::invalid_argument("parameter weights must be positive");
    std::vector<std::string> all = x;
    all.insert(all.end(), params.begin(), params.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw std::invalid_argument("duplicate variable name");
  }
};

/// All exponent vectors of total degree d in k variables, reverse-lex from
/// the last variable (higher exponent of the last variable first).
inline const std::vector<Exponents>& monomials_of_degree(int k, int d) {
  thread_local std::map<std::pair<int, int>, std::vector<Exponents>> cache;
  auto key = std::make_pair(k, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Exponents> out;
  if (d >= 0 && k > 0) {
    Exponents e(k, 0);
    // Recursive fill from the last variable down.
    auto rec = [&](auto&& self, int var, int left) -> void {
      if (var == 0) {
        e[0] = left;
        out.push_back(e);
        return;
      }
      for (int v = left; v >= 0; --v) {
        e[var] = v;
        self(self, var - 1, left - v);
      }
      e[var] = 0;
    };
    rec(rec, k - 1, d);
  } else if (d == 0 && k == 0) {
    out.push_back({});
  }
  return cache.emplace(key, std::move(out)).first->second;
}

/// Exponent vectors with weighted degree t, same ordering convention.
inline std::vector<Exponents> weighted_monomials(const std::vector<int>& w, int t) {
  std::vector<Exponents> out;
  if (t < 0) return out;
  const int k = static_cast<int>(w.size());
  Exponents e(k, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var < 0) {
      if (left == 0) out.push_back(e);
      return;
    }
    for (int v = left / w[var]; v >= 0; --v) {
      e[var] = v;
      self(self, var - 1, left - v * w[var]);
    }
    e[var] = 0;
  };
  rec(rec, k - 1, t);
  return out;
}

/// Sparse polynomial in the x-variables and parameters of a Ring.
template <class F>
struct Poly {
  std::map<Exponents, F> terms;

  Poly() = default;
  static Poly constant(int nvars, F c) {
    Poly p;
    if (!c.is_zero()) p.terms.emplace(Exponents(nvars, 0), std::move(c));
    return p;
  }
  static Poly variable(int nvars, int idx, F c = F(1)) {
    Poly p;
    Exponents e(nvars, 0);
    e[idx] = 1;
    if (!c.is_zero()) p.terms.emplace(std::move(e), std::move(c));
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  void add_term(const Exponents& e, const F& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    Poly r;
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        Exponents e = e1;
        for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  Poly scaled(const F& s) const {
    Poly r;
    for (const auto& [e, c] : terms) r.add_term(e, c * s);
    return r;
  }
  bool operator==(const Poly& o) const { return terms == o.terms; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Degree 0 constant term when the polynomial is a scalar.
  F constant_term() const {
    for (const auto& [e, c] : terms)
      if (std::all_of(e.begin(), e.end(), [](int v) { return v == 0; })) return c;
    return F(0);
  }
};

/// Bidegree shared by all terms; throws if terms disagree.
template <class F>
Bidegree homogeneous_degree(const Ring& R, const Poly<F>& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no degree");
  Bidegree d = R.degree(p.terms.begin()->first);
  for (const auto& [e, c] : p.terms)
    if (R.degree(e) != d) throw std::invalid_argument("inhomogeneous polynomial");
  return d;
}

template <class F>
bool is_homogeneous(const Ring& R, const Poly<F>& p, Bidegree d) {
  for (const auto& [e, c] : p.terms)
    if (R.degree(e) != d) return false;
  return true;
}

/// Substitutes scalar values for all parameters; result lives in the
/// parameter-free ring with the same x-variables.
template <class F>
Poly<F> specialize(const Ring& R, const Poly<F>& p, const std::vector<F>& point) {
  Poly<F> r;
  for (const auto& [e, c] : p.terms) {
    F v = c;
    for (int k = 0; k < R.np(); ++k)
      for (int m = 0; m < e[R.nx() + k]; ++m) v *= point[k];
    r.add_term(Exponents(e.begin(), e.begin() + R.nx()), v);
  }
  return r;
}

inline std::string monomial_string(const Ring& R, const Exponents& e) {
  std::string out;
  for (int i = 0; i < R.nvars(); ++i) {
    if (e[i] == 0) continue;
    const std::string& name = i < R.nx() ? R.x[i] : R.params[i - R.nx()];
    if (!out.empty()) out += "*";
    out += name;
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

/// Human-readable form; terms ordered with parameters before x-variables,
/// higher total degree first.
template <class F>
std::vector<std::pair<Exponents, F>> display_terms(const Ring& R, const Poly<F>& p) {
  std::vector<std::pair<Exponents, F>> ts(p.terms.begin(), p.terms.end());
  std::stable_sort(ts.begin(), ts.end(), [&](const auto& l, const auto& r) {
    Bidegree a = R.degree(l.first), b = R.degree(r.first);
    if (a.internal + a.param != b.internal + b.param)
      return a.internal + a.param > b.internal + b.param;
    return l.first > r.first;
  });
  return ts;
}

/// Coefficient of the first term in display order.
template <class F>
F leading_coefficient(const Ring& R, const Poly<F>& p) {
  return p.is_zero() ? F(0) : display_terms(R, p).front().second;
}

template <class F>
std::string to_string(const Ring& R, const Poly<F>& p) {
  if (p.is_zero()) return "0";
  auto ts = display_terms(R, p);
  std::string out;
  for (const auto& [e, c] : ts) {
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    std::string mon = monomial_string(R, e);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (mon.empty()) out += cs;
    else if (cs == "1") out += mon;
    else out += cs + "*" + mon;
  }
  return out;
}

// Exterior monomials: bit i of a mask is e_i, stored in ascending order.

using ExtMask = unsigned;

inline int ext_degree(ExtMask T) { return std::popcount(T); }

/// Sign of e_T * e_U against e_{T u U}; 0 when they share an index.
inline int ext_sign(ExtMask T, ExtMask U) {
  if (T & U) return 0;
  int inversions = 0;
  for (ExtMask u = U; u; u &= u - 1) {
    int j = std::countr_zero(u);
    inversions += std::popcount(T >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

/// Subsets of {0..nv-1} of size k in colex order.
inline const std::vector<ExtMask>& ext_subsets(int nv, int k) {
  thread_local std::map<std::pair<int, int>, std::vector<ExtMask>> cache;
  auto key = std::make_pair(nv, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<ExtMask> out;
  for (ExtMask m = 0; m < (1u << nv); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return cache.emplace(key, std::move(out)).first->second;
}

inline std::string ext_string(ExtMask T, const std::vector<std::string>& names) {
  if (T == 0) return "1";
  std::string out;
  for (ExtMask u = T; u; u &= u - 1) {
    if (!out.empty()) out += "*";
    out += names[std::countr_zero(u)];
  }
  return out;
}

inline int binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

/// Binomial with the polynomial convention C(m, k) = m(m-1)...(m-k+1)/k!
/// for any integer m, used for cohomology formulas like C(-d-1, n).
inline long long binomial_poly(long long m, int k) {
  if (k < 0) return 0;
  if (m >= 0 && m < k) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (m - i) / (i + 1);
  return r;
}

}  // namespace tate
