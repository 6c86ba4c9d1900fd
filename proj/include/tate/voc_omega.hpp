// Tate resolutions of the sheaves Omega^p on P^n over a window of terms, and
// chain maps Phi_p : T(Omega^p) -> T(Omega^{p+1})[1] extending the identity
// between the two generators of internal degree 0.

#pragma once

#include "tate/tate.hpp"

namespace tate {

/// Omega^p = coker(Lambda^{p+2} V (x) S(-p-2) -> Lambda^{p+1} V (x) S(-p-1)).
template <class F>
ModulePresentation<F> omega_module(const Ring& R, int p) {
  const int nv = R.nx();
  const auto& gens = ext_subsets(nv, p + 1);
  std::vector<Bidegree> degs(gens.size(), Bidegree{p + 1, 0});
  std::vector<std::vector<Poly<F>>> cols;
  if (p + 2 <= nv)
    for (ExtMask K : ext_subsets(nv, p + 2)) {
      std::vector<Poly<F>> c(gens.size());
      int pos = 0;
      for (int k = 0; k < nv; ++k) {
        ExtMask bit = ExtMask(1) << k;
        if (!(K & bit)) continue;
        auto r = std::lower_bound(gens.begin(), gens.end(), K & ~bit) - gens.begin();
        c[r] = Poly<F>::variable(R.nvars(), k, F(pos % 2 ? -1 : 1));
        ++pos;
      }
      cols.push_back(std::move(c));
    }
  return build_presentation<F>(R, degs, cols);
}

/// Term ranks of T(Omega^p) next to the middle: u_{p-1} and v_{p+1}.
struct OmegaBlockShape {
  int u, v;
};
inline OmegaBlockShape omega_block_shape(int n, int p) { return {binomial(n + 1, n + 1 - p), binomial(n + 1, p + 1)}; }

/// T(Omega^p) on terms lo..hi+1 (engine resolution, corner at hi+1).
template <class F>
struct OmegaWindow {
  int n, p, lo, hi;
  std::unique_ptr<TateResolution<F>> T;

  FreeEAModule<F>& module(int i) { return *T->left.at(i).module; }
  FreeMap<F>& map(int i) { return *T->left.at(i).map; }
  /// The unique generator of T^p, in internal degree 0.
  int middle() {
    const auto& g = module(p).gens();
    for (int k = 0; k < (int)g.size(); ++k)
      if (g[k].internal == 0) return k;
    throw Error(ErrorCode::VerificationFailed, "no generator of internal degree 0 in the middle term");
  }
};

template <class F>
OmegaWindow<F> omega_window(int n, int p, int lo, int hi) {
  Ring R = Ring::projective(n);
  TateOptions o;
  o.corner = hi + 1;
  o.left_steps = hi + 2 - lo;
  return {n, p, lo, hi, splice_tate(omega_module<F>(R, p), o)};
}

namespace detail {

/// e_T v for v in piece b of a free module (bits applied from the highest).
template <class F>
SparseVec<F> act_monomial(FreeEAModule<F>& M, ExtMask T, Bidegree b, SparseVec<F> v) {
  std::vector<int> bits;
  for (ExtMask u = T; u; u &= u - 1) bits.push_back(std::countr_zero(u));
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    v = M.act_e(*it, b, v);
    b = b + Bidegree{-1, 0};
  }
  return v;
}

/// sum_k v_k columns(b)[k].
template <class F>
SparseVec<F> apply(FreeMap<F>& m, Bidegree b, const SparseVec<F>& v) {
  auto cols = m.columns(b);
  std::map<int, F> acc;
  for (const auto& [k, c] : v)
    for (const auto& [r, x] : cols[k]) sparse_add(acc, r, c * x);
  return from_map(acc);
}

}  // namespace detail

/// Phi^i(g) for generators g of T^i(Omega^p), i in [lo, hi], as vectors in
/// the piece of T^{i+1}(Omega^{p+1}) at the bidegree of g. E-linear, and
/// d' Phi + Phi d = 0.
template <class F>
struct OmegaChainMap {
  int lo, hi;
  std::map<int, std::vector<SparseVec<F>>> images;
};

template <class F>
OmegaChainMap<F> omega_chain_map(OmegaWindow<F>& S, OmegaWindow<F>& Tt) {
  const int p = S.p;
  OmegaChainMap<F> Phi{S.lo, S.hi, {}};
  {
    auto& tgt = Tt.module(p + 1);
    const Bidegree b = S.module(p).gens()[S.middle()];
    Phi.images[p].assign(1, SparseVec<F>{{tgt.find(b, Tt.middle(), 0, {}), F(1)}});
  }
  auto unsolvable = [](int i) {
    return Error(ErrorCode::CorrectionUnsolvable, "chain map does not extend to term " + std::to_string(i));
  };
  // rightwards: Phi^i(d g) = -d'(Phi^{i-1} g) for g in T^{i-1}
  for (int i = p + 1; i <= S.hi; ++i) {
    auto& src = S.module(i);
    auto& tgt = Tt.module(i + 1);
    const auto& hs = src.gens();
    std::vector<int> col_off(hs.size() + 1, 0);
    for (size_t h = 0; h < hs.size(); ++h) col_off[h + 1] = col_off[h] + tgt.dim(hs[h]);
    const auto& gs = S.module(i - 1).gens();
    std::vector<int> row_off(gs.size() + 1, 0);
    for (size_t g = 0; g < gs.size(); ++g) row_off[g + 1] = row_off[g] + tgt.dim(gs[g]);
    std::vector<std::map<int, F>> cols(col_off.back());
    SparseVec<F> rhs;
    for (size_t g = 0; g < gs.size(); ++g) {
      const auto& piece = src.piece(gs[g]);
      for (const auto& [k, c] : S.map(i - 1).images()[g]) {
        const auto& e = piece.basis[k];
        for (int q = 0; q < tgt.dim(hs[e.gen]); ++q)
          for (const auto& [r, x] : detail::act_monomial(tgt, e.T, hs[e.gen], SparseVec<F>{{q, F(1)}}))
            sparse_add(cols[col_off[e.gen] + q], row_off[g] + r, c * x);
      }
      for (const auto& [r, x] : detail::apply(Tt.map(i), gs[g], Phi.images[i - 1][g]))
        rhs.emplace_back(row_off[g] + r, -x);
    }
    std::vector<SparseVec<F>> sc;
    for (auto& c : cols) sc.push_back(from_map(c));
    auto x = sparse_solve(sc, row_off.back(), rhs);
    if (!x) throw unsolvable(i);
    auto& out = Phi.images[i];
    out.assign(hs.size(), {});
    for (const auto& [k, c] : *x) {
      int h = int(std::upper_bound(col_off.begin(), col_off.end(), k) - col_off.begin()) - 1;
      out[h].emplace_back(k - col_off[h], c);
    }
  }
  // leftwards: d'(Phi^i g) = -Phi^{i+1}(d g), one generator at a time
  for (int i = p - 1; i >= S.lo; --i) {
    FreeMap<F> next(S.module(i + 1), Tt.module(i + 2), Phi.images.at(i + 1));
    const auto& gs = S.module(i).gens();
    auto& out = Phi.images[i];
    out.assign(gs.size(), {});
    for (size_t g = 0; g < gs.size(); ++g) {
      const auto& piece = S.module(i + 1).piece(gs[g]);
      std::map<int, F> acc;
      for (const auto& [k, c] : S.map(i).images()[g]) {
        const auto& e = piece.basis[k];
        for (const auto& [r, x] : next.image(e.gen, e.T, e.alpha)) sparse_add(acc, r, -(c * x));
      }
      auto x = sparse_solve(Tt.map(i + 1).columns(gs[g]), Tt.module(i + 2).dim(gs[g]), from_map(acc));
      if (!x) throw unsolvable(i);
      out[g] = *x;
    }
  }
  return Phi;
}

}  // namespace tate
