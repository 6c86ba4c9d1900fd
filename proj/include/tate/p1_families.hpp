// Rank r, degree d bundles on P^1: Toeplitz and Hankel matrices, the
// universal extension 0 -> O^{r-1} -> F -> O(d) -> 0, splitting types.

#pragma once

#include "tate/bgg.hpp"
#include "tate/pushforward.hpp"

namespace tate {

/// Base ring K[a^s_i] with x, y on P^1; strand s uses the letter 'a' + s - 1.
inline Ring extension_ring(int d, int r) {
  Ring R{{"x", "y"}, {}, {}};
  for (int s = 1; s < r; ++s)
    for (int i = 0; i <= d - 2; ++i) {
      R.params.push_back(std::string(1, char('a' + s - 1)) + std::to_string(i));
      R.weights.push_back(1);
    }
  return R;
}

inline int extension_param(int d, int s, int i) { return (s - 1) * (d - 1) + i; }

/// C^l: (l+1) x l, e on the diagonal and f below it.
template <class F>
EAMatrix<F> toeplitz(int l, int nvars) {
  EAMatrix<F> C(l + 1, std::vector<EAElement<F>>(l));
  const auto one = Poly<F>::constant(nvars, F(1));
  for (int j = 0; j < l; ++j) {
    C[j][j].add(ExtMask(1), one);
    C[j + 1][j].add(ExtMask(2), one);
  }
  return C;
}

template <class F>
EAMatrix<F> transpose(const EAMatrix<F>& m) {
  const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  EAMatrix<F> t(cols, std::vector<EAElement<F>>(rows));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

/// B^s_{kl}: k x l with entry (i, j) = a^s_{i+j}.
template <class F>
std::vector<std::vector<Poly<F>>> hankel(const Ring& R, int d, int k, int l, int s) {
  std::vector<std::vector<Poly<F>>> B(k, std::vector<Poly<F>>(l));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < l; ++j) B[i][j] = Poly<F>::variable(R.nvars(), R.nx() + extension_param(d, s, i + j));
  return B;
}

/// B_i: the stack of B^s_{d-i, i} over s = 1..r-1, a (d-i)(r-1) x i matrix.
template <class F>
std::vector<std::vector<Poly<F>>> hankel_stack(const Ring& R, int d, int r, int i) {
  std::vector<std::vector<Poly<F>>> out;
  for (int s = 1; s < r; ++s)
    for (auto& row : hankel<F>(R, d, d - i, i, s)) out.push_back(std::move(row));
  return out;
}

template <class F>
EAMatrix<F> scalar_ea(const std::vector<std::vector<Poly<F>>>& m) {
  EAMatrix<F> out(m.size(), std::vector<EAElement<F>>(m.empty() ? 0 : m[0].size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) out[i][j].add(0, m[i][j]);
  return out;
}

template <class F>
EAMatrix<F> matmul(const EAMatrix<F>& a, const EAMatrix<F>& b) {
  const size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
  EAMatrix<F> c(n, std::vector<EAElement<F>>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < b.size(); ++k)
      for (size_t j = 0; j < m; ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
  return c;
}

/// tC^{k-1} B_k - B_{k-1} C^l over E (x) Z[a] for given k x l and (k-1) x (l+1) matrices.
template <class F>
bool toeplitz_hankel_vanishes(const std::vector<std::vector<Poly<F>>>& Bk, const std::vector<std::vector<Poly<F>>>& Bk1,
                              int k, int l, int nvars) {
  if (k <= 1) return true;
  auto left = matmul(transpose(toeplitz<F>(k - 1, nvars)), scalar_ea(Bk));
  auto right = matmul(scalar_ea(Bk1), toeplitz<F>(l, nvars));
  for (int i = 0; i < k - 1; ++i)
    for (int j = 0; j < l; ++j) {
      EAElement<F> diff = left[i][j];
      for (const auto& [T, p] : right[i][j].terms) diff.add(T, -p);
      if (!diff.is_zero()) return false;
    }
  return true;
}

template <class F = Rational>
bool toeplitz_hankel_identity(int k, int l, int s = 1) {
  const int d = k + l;
  Ring R = extension_ring(d, s + 1);
  return toeplitz_hankel_vanishes<F>(hankel<F>(R, d, k, l, s), hankel<F>(R, d, k - 1, l + 1, s), k, l, R.nvars());
}

/// Module of the universal extension, generated in degree 0: 1^s (s < r) in
/// param degree 0 and m_0..m_d in param degree 1, with relations
/// y m_k - x m_{k+1} - sum_s a^s_k x 1^s (the correction only for k <= d-2).
template <class F>
ModulePresentation<F> universal_extension(int d, int r) {
  if (d < 2 || r < 2) throw Error(ErrorCode::ParseError, "universal extension needs d >= 2 and r >= 2");
  Ring R = extension_ring(d, r);
  const int nv = R.nvars();
  std::vector<Bidegree> gens;
  std::vector<std::string> names;
  for (int s = 1; s < r; ++s) gens.push_back({0, 0}), names.push_back("1" + std::string(1, char('a' + s - 1)));
  for (int k = 0; k <= d; ++k) gens.push_back({0, 1}), names.push_back("m" + std::to_string(k));
  auto x = Poly<F>::variable(nv, 0), y = Poly<F>::variable(nv, 1);
  std::vector<std::vector<Poly<F>>> cols;
  for (int k = 0; k < d; ++k) {
    std::vector<Poly<F>> c(gens.size());
    c[r - 1 + k] = y;
    c[r - 1 + k + 1] = -x;
    if (k <= d - 2)
      for (int s = 1; s < r; ++s) c[s - 1] = -(x * Poly<F>::variable(nv, R.nx() + extension_param(d, s, k)));
    cols.push_back(std::move(c));
  }
  return build_presentation<F>(R, gens, cols, names);
}

using SplittingType = std::vector<int>;  // parts in decreasing order

/// E = (+) O(-j)^{h''(j)}; h is h^0(E(n)) on a window of consecutive n. Values
/// below the window are taken as 0, which requires h = 0 at the left end.
inline SplittingType splitting_type_from_hilbert(const std::map<int, long long>& h) {
  if (h.size() < 4) throw Error(ErrorCode::WindowTooNarrow, "need at least four values");
  const int w0 = h.begin()->first, w1 = h.rbegin()->first;
  if ((int)h.size() != w1 - w0 + 1) throw Error(ErrorCode::WindowTooNarrow, "window has gaps");
  if (h.begin()->second != 0) throw Error(ErrorCode::WindowTooNarrow, "h does not vanish at the left end");
  auto val = [&](int n) { return n < w0 ? 0LL : h.at(n); };
  auto h2 = [&](int j) { return val(j) - 2 * val(j - 1) + val(j - 2); };
  if (h2(w1) != 0 || h2(w1 - 1) != 0) throw Error(ErrorCode::WindowTooNarrow, "h is not linear at the right end");
  SplittingType parts;
  for (int j = w0 + 1; j <= w1; ++j) {
    long long m = h2(j);
    if (m < 0) throw Error(ErrorCode::WindowTooNarrow, "negative second difference");
    for (long long c = 0; c < m; ++c) parts.push_back(-j);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

/// h^0(F(n)) for n in [-d-1, 2] from r_i = rank B_i, i = 1..d-1: h(i-d-1) = i - r_i.
inline std::map<int, long long> hilbert_from_ranks(int d, int r, const std::vector<int>& ranks) {
  std::map<int, long long> h;
  h[-d - 1] = 0;
  for (int i = 1; i <= d - 1; ++i) h[i - d - 1] = i - ranks[i - 1];
  h[-1] = d;
  h[0] = d + r;
  h[1] = d + 2 * r;
  h[2] = d + 3 * r;
  return h;
}

/// Pads with zeros to r parts.
inline SplittingType padded(SplittingType p, int r) {
  while ((int)p.size() < r) p.push_back(0);
  return p;
}

/// Dominance: partial sums of a are >= those of b.
inline bool dominates(const SplittingType& a, const SplittingType& b) {
  long long sa = 0, sb = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

}  // namespace tate
