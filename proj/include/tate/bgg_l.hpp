// Finite graded E-modules over a field, the corner module P^s, and the BGG
// functor L to complexes of free S-modules.

#pragma once

#include "tate/tate.hpp"

namespace tate {

/// Graded E-module with pieces P_j and e_i : P_j -> P_{j-1}.
template <class F>
struct GradedEModule {
  int nx = 0;
  std::map<int, int> dims;
  std::map<std::pair<int, int>, ScalarMatrix<F>> e;  // (i, j) -> matrix P_j -> P_{j-1}

  int dim(int j) const {
    auto it = dims.find(j);
    return it == dims.end() ? 0 : it->second;
  }
  ScalarMatrix<F> act(int i, int j) const {
    auto it = e.find({i, j});
    return it == e.end() ? zero_matrix<F>(dim(j - 1), dim(j)) : it->second;
  }
};

/// E itself: E_{-k} = Lambda^k with colex basis, acting by left multiplication.
template <class F>
GradedEModule<F> exterior_algebra(int nx) {
  GradedEModule<F> P;
  P.nx = nx;
  for (int k = 0; k <= nx; ++k) P.dims[-k] = binomial(nx, k);
  for (int k = 0; k < nx; ++k)
    for (int i = 0; i < nx; ++i) {
      const auto& src = ext_subsets(nx, k);
      const auto& dst = ext_subsets(nx, k + 1);
      ScalarMatrix<F> m = zero_matrix<F>(dst.size(), src.size());
      for (size_t c = 0; c < src.size(); ++c) {
        ExtMask bit = ExtMask(1) << i;
        int sg = ext_sign(bit, src[c]);
        if (!sg) continue;
        auto r = std::lower_bound(dst.begin(), dst.end(), src[c] | bit) - dst.begin();
        m(r, c) = F(sg);
      }
      P.e[{i, -k}] = m;
    }
  return P;
}

template <class F>
struct CornerModule {
  int s = 0;
  GradedEModule<F> module;                                 // field base: pieces of P^s
  std::vector<std::pair<Bidegree, SparseVec<F>>> generators;  // minimal generators in E (x) M_{s+1}
  std::map<int, int> generator_counts;                     // internal degree -> count
};

/// P^s = ker(E(x)M_{s+1} -> E(x)M_{s+2}).
template <class F>
CornerModule<F> corner_module(const ModulePresentation<F>& M, int s, int param_bound = 0) {
  GradedModule<F> G(M);
  const Ring& R = M.ring;
  const int nv = R.nx();
  ExteriorTensor<F> E1(G, s + 1), E2(G, s + 2);
  const int top = R.has_params() ? param_bound : 0;
  std::map<Bidegree, std::vector<SparseVec<F>>> Q;
  for (int u = s + 1 - nv; u <= s + 1; ++u)
    for (int t = G.min_param(); t <= top; ++t) {
      Bidegree b{u, t};
      auto cols = strand_columns(E1, E2, b);
      Q[b] = sparse_kernel(cols, E2.dim(b));
      for (const auto& q : Q[b]) {
        std::map<int, F> acc;
        for (const auto& [k, c] : q)
          for (const auto& [r, v] : cols[k]) sparse_add(acc, r, c * v);
        if (!acc.empty()) throw Error(ErrorCode::VerificationFailed, "corner generator not in the kernel");
      }
    }
  CornerModule<F> P;
  P.s = s;
  P.generators = detail::minimal_generators(E1, R, Q);
  for (const auto& [b, v] : P.generators) P.generator_counts[b.internal] += 1;
  if (R.has_params()) return P;

  P.module.nx = nv;
  std::map<int, ScalarMatrix<F>> basis;
  for (int u = s + 1 - nv; u <= s + 1; ++u) {
    const auto& q = Q[{u, 0}];
    const int dim = E1.dim({u, 0});
    ScalarMatrix<F> B = zero_matrix<F>(dim, (Eigen::Index)q.size());
    for (size_t c = 0; c < q.size(); ++c)
      for (const auto& [r, v] : q[c]) B(r, c) = v;
    if (q.size()) P.module.dims[u] = (int)q.size();
    basis[u] = B;
  }
  for (int u = s + 2 - nv; u <= s + 1; ++u) {
    if (!P.module.dim(u) || !P.module.dim(u - 1)) continue;
    for (int i = 0; i < nv; ++i) {
      const auto& q = Q[{u, 0}];
      ScalarMatrix<F> img = zero_matrix<F>(basis[u - 1].rows(), (Eigen::Index)q.size());
      for (size_t c = 0; c < q.size(); ++c)
        for (const auto& [r, v] : E1.act_e(i, {u, 0}, q[c])) img(r, c) = v;
      P.module.e[{i, u}] = solve_columns<F>(basis[u - 1], img);
    }
  }
  return P;
}

/// Complex of free S-modules: term j = S (x) P_j, differential to term j-1
/// with entries sum_i x_i (e_i)_{qp}. An element s (x) p has degree deg s + j.
template <class F>
struct SComplex {
  Ring ring;
  std::map<int, int> ranks;
  std::map<int, std::vector<std::vector<Poly<F>>>> diff;  // j -> [row in j-1][col in j]

  /// dim of homology at each term in total degree d.
  std::map<int, int> homology(int d) const {
    std::map<int, int> h;
    auto slice_matrix = [&](int j) {
      const auto& src = monomials_of_degree(ring.nx(), d - j);
      const auto& dst = monomials_of_degree(ring.nx(), d - j + 1);
      const int rs = ranks.count(j) ? ranks.at(j) : 0, rt = ranks.count(j - 1) ? ranks.at(j - 1) : 0;
      ScalarMatrix<F> m = zero_matrix<F>((Eigen::Index)(dst.size() * rt), (Eigen::Index)(src.size() * rs));
      auto it = diff.find(j);
      if (it == diff.end() || !rs || !rt) return m;
      std::map<Exponents, int> pos;
      for (size_t k = 0; k < dst.size(); ++k) pos[dst[k]] = (int)k;
      for (int q = 0; q < rt; ++q)
        for (int p = 0; p < rs; ++p)
          for (const auto& [e, c] : it->second[q][p].terms)
            for (size_t k = 0; k < src.size(); ++k) {
              Exponents mu = src[k];
              for (int v = 0; v < ring.nx(); ++v) mu[v] += e[v];
              m(pos.at(mu) * rt + q, (Eigen::Index)(k * rs + p)) = c;
            }
      return m;
    };
    for (const auto& [j, r] : ranks) {
      if (d - j < 0) continue;
      int mid = (int)monomials_of_degree(ring.nx(), d - j).size() * r;
      int out = d - j + 1 >= 0 ? (int)rank<F>(slice_matrix(j)) : 0;
      int in = d - j - 1 >= 0 ? (int)rank<F>(slice_matrix(j + 1)) : 0;
      if (mid - out - in) h[j] = mid - out - in;
    }
    return h;
  }
};

template <class F>
SComplex<F> bgg_L(const GradedEModule<F>& P) {
  SComplex<F> L;
  L.ring = Ring{{}, {}, {}};
  for (int i = 0; i < P.nx; ++i) L.ring.x.push_back("x" + std::to_string(i));
  for (const auto& [j, d] : P.dims)
    if (d) L.ranks[j] = d;
  for (const auto& [j, d] : L.ranks) {
    if (!L.ranks.count(j - 1)) continue;
    auto& m = L.diff[j];
    m.assign(L.ranks.at(j - 1), std::vector<Poly<F>>(d));
    for (int i = 0; i < P.nx; ++i) {
      ScalarMatrix<F> a = P.act(i, j);
      for (Eigen::Index q = 0; q < a.rows(); ++q)
        for (Eigen::Index p = 0; p < a.cols(); ++p)
          if (!a(q, p).is_zero()) m[q][p] = m[q][p] + Poly<F>::variable(P.nx, i, a(q, p));
    }
  }
  return L;
}

}  // namespace tate
