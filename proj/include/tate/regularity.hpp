// Castelnuovo-Mumford regularity from Koszul homology: Tor^S_i(A, M) is
// computed slice by slice as H(Lambda^i W (x) M).

#pragma once

#include <climits>
#include <optional>

#include "tate/graded_piece.hpp"

namespace tate {

struct RegularityReport {
  int value = 0;
  int certified_up_to = 0;         // last internal degree examined
  std::vector<int> tor_max;        // max degree with Tor_i != 0, INT_MIN when none seen
  bool heuristic = false;          // true when no degree bound was supplied
  bool zero_module = false;
};

/// Columns of the Koszul differential Lambda^i W (x) M_{d-i} -> Lambda^{i-1} W (x) M_{d-i+1}
/// at param degree t: x_J (x) m -> sum_k (-1)^k x_{J \ j_k} (x) x_{j_k} m.
template <class F>
std::vector<SparseVec<F>> koszul_columns(GradedModule<F>& M, int i, int d, int t) {
  const int nv = M.ring().nx();
  std::vector<SparseVec<F>> cols;
  if (i <= 0 || i > nv) return cols;
  const int dm = M.dim({d - i, t}), dt = M.dim({d - i + 1, t});
  const auto& src = ext_subsets(nv, i);
  const auto& dst = ext_subsets(nv, i - 1);
  for (ExtMask J : src)
    for (int m = 0; m < dm; ++m) {
      std::map<int, F> out;
      int k = 0;
      for (ExtMask u = J; u; u &= u - 1, ++k) {
        int j = std::countr_zero(u);
        ExtMask rest = J & ~(ExtMask(1) << j);
        int blk = static_cast<int>(std::lower_bound(dst.begin(), dst.end(), rest) - dst.begin());
        const auto& X = M.mult_x(j, {d - i, t});
        for (int r = 0; r < dt; ++r)
          if (!X(r, m).is_zero()) {
            F c = (k & 1) ? -X(r, m) : X(r, m);
            auto [it, fresh] = out.emplace(blk * dt + r, c);
            if (!fresh) it->second += c;
          }
      }
      SparseVec<F> col;
      for (auto& [r, c] : out)
        if (!c.is_zero()) col.emplace_back(r, c);
      cols.push_back(std::move(col));
    }
  return cols;
}

/// dim Tor_i(A, M)_(d,t).
template <class F>
int tor_dim(GradedModule<F>& M, int i, int d, int t) {
  const int nv = M.ring().nx();
  if (i < 0 || i > nv) return 0;
  int middle = binomial(nv, i) * M.dim({d - i, t});
  if (middle == 0) return 0;
  int rank_out = 0, rank_in = 0;
  if (i > 0) sparse_kernel(koszul_columns(M, i, d, t), binomial(nv, i - 1) * M.dim({d - i + 1, t}), &rank_out);
  if (i < nv) sparse_kernel(koszul_columns(M, i + 1, d, t), middle, &rank_in);
  return middle - rank_out - rank_in;
}

struct RegularityOptions {
  std::optional<int> degree_bound;
  int param_bound = 0;  // used only with parameters
};

/// reg(M) = max_i (reg Tor_i - i). Without a degree bound, scanning stops
/// after n+2 consecutive degrees with no Tor and the report is heuristic.
template <class F>
RegularityReport regularity(GradedModule<F>& M, RegularityOptions opts = {}) {
  RegularityReport rep;
  const auto& P = M.presentation();
  const int nv = M.ring().nx();
  rep.tor_max.assign(nv + 1, INT_MIN);
  if (P.num_gens() == 0) {
    rep.zero_module = true;
    return rep;
  }
  const int tmin = M.min_param();
  const int tmax = M.ring().has_params() ? opts.param_bound : 0;
  const int d0 = P.min_gen_internal();
  int quiet = 0;
  bool any = false;
  int d = d0;
  for (;; ++d) {
    bool nonzero = false;
    for (int i = 0; i <= nv; ++i)
      for (int t = tmin; t <= tmax; ++t)
        if (tor_dim(M, i, d, t) > 0) {
          rep.tor_max[i] = std::max(rep.tor_max[i], d);
          nonzero = true;
        }
    any = any || nonzero;
    if (opts.degree_bound) {
      if (d >= *opts.degree_bound) {
        if (nonzero)
          throw Error(ErrorCode::BoundTooSmall,
                      "nonzero Tor at boundary degree " + std::to_string(d));
        break;
      }
      continue;
    }
    quiet = nonzero ? 0 : quiet + 1;
    int lastrel = P.max_gen_internal();
    for (const auto& r : P.relation_degrees) lastrel = std::max(lastrel, r.internal);
    if (quiet >= nv + 1 && d > lastrel) break;
  }
  rep.certified_up_to = d;
  rep.heuristic = !opts.degree_bound.has_value();
  bool found = false;
  for (int i = 0; i <= nv; ++i)
    if (rep.tor_max[i] != INT_MIN) {
      int v = rep.tor_max[i] - i;
      rep.value = found ? std::max(rep.value, v) : v;
      found = true;
    }
  rep.zero_module = !found;
  if (!any) rep.value = 0;
  return rep;
}

template <class F>
RegularityReport regularity(const ModulePresentation<F>& M, RegularityOptions opts = {}) {
  GradedModule<F> G(M);
  return regularity(G, opts);
}

}  // namespace tate
