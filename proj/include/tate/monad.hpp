// Beilinson-type monad U(F) read off a Tate resolution: the block E (x) N_j
// becomes Lambda^{-j} U (x) N_j for -n <= j <= 0, and e_T acts by contraction.

#pragma once

#include <sstream>

#include "tate/tate.hpp"

namespace tate {

struct MonadTerm {
  int k;
  std::vector<std::pair<int, int>> blocks;  // (j, rank N^k_j), j in [-n, 0]
};

struct MonadDescriptor {
  int n = 0;
  std::vector<MonadTerm> terms;
  std::string to_text() const {
    std::ostringstream os;
    for (const auto& t : terms) {
      os << t.k << ":";
      bool first = true;
      for (const auto& [j, r] : t.blocks) {
        os << (first ? " " : " + ") << "(L" << -j << "U)^" << r;
        first = false;
      }
      os << "\n";
    }
    return os.str();
  }
};

template <class F>
MonadDescriptor monad_terms(const TateResolution<F>& T) {
  MonadDescriptor D;
  D.n = T.ring.n();
  auto b = T.betti();
  for (int k = b.min_col; k <= b.max_col; ++k) {
    MonadTerm t{k, {}};
    for (int j = -D.n; j <= 0; ++j)
      if (b.at(k, j)) t.blocks.emplace_back(j, b.at(k, j));
    if (!t.blocks.empty()) D.terms.push_back(std::move(t));
  }
  return D;
}

/// Finite complex of vector spaces: diffs[k] : term k -> term k+1.
template <class F>
struct ScalarComplex {
  std::map<int, int> dims;
  std::map<int, ScalarMatrix<F>> diffs;

  int dim(int k) const {
    auto it = dims.find(k);
    return it == dims.end() ? 0 : it->second;
  }
  bool composes_to_zero() const {
    for (const auto& [k, m] : diffs) {
      auto nx = diffs.find(k + 1);
      if (nx != diffs.end() && !is_zero_matrix<F>(multiply<F>(nx->second, m))) return false;
    }
    return true;
  }
  std::map<int, int> homology() const {
    std::map<int, int> h;
    for (const auto& [k, d] : dims) {
      auto out = diffs.find(k), in = diffs.find(k - 1);
      int ro = out == diffs.end() ? 0 : (int)rank<F>(out->second);
      int ri = in == diffs.end() ? 0 : (int)rank<F>(in->second);
      if (d - ro - ri) h[k] = d - ro - ri;
    }
    return h;
  }
};

namespace detail {

/// Contraction i_{e_i} on Lambda^q W (x) S_d, colex exterior blocks.
template <class F>
ScalarMatrix<F> contraction(int nv, int q, int d, int i) {
  const auto& src = ext_subsets(nv, q);
  const auto& dst = ext_subsets(nv, q - 1);
  const int sd = (int)monomials_of_degree(nv, d).size();
  ScalarMatrix<F> m = zero_matrix<F>((Eigen::Index)(dst.size() * sd), (Eigen::Index)(src.size() * sd));
  ExtMask bit = ExtMask(1) << i;
  for (size_t c = 0; c < src.size(); ++c) {
    if (!(src[c] & bit)) continue;
    int sg = std::popcount(src[c] & (bit - 1)) % 2 ? -1 : 1;
    auto r = std::lower_bound(dst.begin(), dst.end(), src[c] & ~bit) - dst.begin();
    for (int k = 0; k < sd; ++k) m(r * sd + k, c * sd + k) = F(sg);
  }
  return m;
}

/// Contraction with x = sum x_i i_{e_i}: Lambda^q W (x) S_d -> Lambda^{q-1} W (x) S_{d+1}.
template <class F>
ScalarMatrix<F> koszul_contraction(int nv, int q, int d) {
  const auto& src = ext_subsets(nv, q);
  const auto& dst = ext_subsets(nv, q - 1);
  const auto& ms = monomials_of_degree(nv, d);
  const auto& mt = monomials_of_degree(nv, d + 1);
  std::map<Exponents, int> pos;
  for (size_t k = 0; k < mt.size(); ++k) pos[mt[k]] = (int)k;
  ScalarMatrix<F> m = zero_matrix<F>((Eigen::Index)(dst.size() * mt.size()), (Eigen::Index)(src.size() * ms.size()));
  for (size_t c = 0; c < src.size(); ++c)
    for (int i = 0; i < nv; ++i) {
      ExtMask bit = ExtMask(1) << i;
      if (!(src[c] & bit)) continue;
      int sg = std::popcount(src[c] & (bit - 1)) % 2 ? -1 : 1;
      auto r = std::lower_bound(dst.begin(), dst.end(), src[c] & ~bit) - dst.begin();
      for (size_t k = 0; k < ms.size(); ++k) {
        Exponents e = ms[k];
        e[i] += 1;
        m(r * mt.size() + pos.at(e), c * ms.size() + k) += F(sg);
      }
    }
  return m;
}

}  // namespace detail

/// U(F) in S-degree d: term k = (+)_j (L_{-j})_d (x) N^k_j with
/// L_q = ker(Lambda^q W (x) S -> Lambda^{q-1} W (x) S(1)), and e_T acting as
/// i_{t_k} o ... o i_{t_1} (an anti-homomorphism, matching left-linear composition).
template <class F>
ScalarComplex<F> monad_complex(TateResolution<F>& T, int d) {
  const Ring& R = T.ring;
  const int nv = R.nx(), n = R.n();
  if (R.has_params()) throw Error(ErrorCode::NotFree, "monad verification needs a field base");
  if (T.min_index() > -n) throw Error(ErrorCode::WindowNotComputed, "monad needs terms from " + std::to_string(-n));
  std::vector<ScalarMatrix<F>> L(nv + 1);  // kernel bases in Lambda^q W (x) S_d
  for (int q = 0; q <= nv; ++q)
    L[q] = q == 0 ? identity_matrix<F>((Eigen::Index)monomials_of_degree(nv, d).size())
                  : kernel_basis<F>(detail::koszul_contraction<F>(nv, q, d));
  // iota[q][i] : L_q -> L_{q-1} in kernel coordinates
  std::vector<std::vector<ScalarMatrix<F>>> iota(nv + 1);
  for (int q = 1; q <= nv; ++q)
    for (int i = 0; i < nv; ++i) {
      ScalarMatrix<F> img = multiply<F>(detail::contraction<F>(nv, q, d, i), L[q]);
      iota[q].push_back(L[q - 1].cols() ? solve_columns<F>(L[q - 1], img) : zero_matrix<F>(0, L[q].cols()));
    }
  auto U = [&](ExtMask Tm, int q) {
    ScalarMatrix<F> acc = identity_matrix<F>(L[q].cols());
    int cur = q;
    for (ExtMask u = Tm; u; u &= u - 1) {
      acc = multiply<F>(iota[cur][std::countr_zero(u)], acc);
      --cur;
    }
    return acc;
  };

  ScalarComplex<F> C;
  std::map<int, std::vector<int>> offset;  // k -> start of generator g's block
  for (auto& [k, term] : T.left) {
    const auto& gens = term.module->gens();
    int pos = 0;
    offset[k].assign(gens.size(), -1);
    for (int g = 0; g < (int)gens.size(); ++g) {
      int j = gens[g].internal;
      if (j < -n || j > 0) continue;
      offset[k][g] = pos;
      pos += (int)L[-j].cols();
    }
    if (pos) C.dims[k] = pos;
  }
  for (auto& [k, term] : T.left) {
    if (k == T.s || !C.dim(k) || !C.dim(k + 1)) continue;
    auto& next = *T.left.at(k + 1).module;
    const auto& gens = term.module->gens();
    const auto& imgs = term.map->images();
    ScalarMatrix<F> m = zero_matrix<F>(C.dim(k + 1), C.dim(k));
    for (int g = 0; g < (int)gens.size(); ++g) {
      if (offset[k][g] < 0) continue;
      const int q = -gens[g].internal;
      const auto& piece = next.piece(gens[g]);
      for (const auto& [p, c] : imgs[g]) {
        const auto& e = piece.basis[p];
        if (offset[k + 1][e.gen] < 0) continue;
        ScalarMatrix<F> blk = U(e.T, q);
        for (Eigen::Index r = 0; r < blk.rows(); ++r)
          for (Eigen::Index cc = 0; cc < blk.cols(); ++cc)
            if (!blk(r, cc).is_zero()) m(offset[k + 1][e.gen] + r, offset[k][g] + cc) += c * blk(r, cc);
      }
    }
    C.diffs[k] = std::move(m);
  }
  return C;
}

struct MonadReport {
  std::vector<int> degrees;
  std::vector<int> h0;
};

/// Checks H^k(U(F))_d = 0 for k != 0 and dim H^0 = dim M_d, given a
/// precomputed complex.
template <class F>
void check_monad_degree(const ScalarComplex<F>& C, int d, long long expected) {
  if (!C.composes_to_zero())
    throw Error(ErrorCode::VerificationFailed, "degree " + std::to_string(d) + ": monad is not a complex");
  auto h = C.homology();
  for (const auto& [k, v] : h)
    if (k != 0)
      throw Error(ErrorCode::VerificationFailed, "degree " + std::to_string(d) + ", position " + std::to_string(k) +
                                                     ": expected 0, found " + std::to_string(v));
  long long f = h.count(0) ? h.at(0) : 0;
  if (f != expected)
    throw Error(ErrorCode::VerificationFailed, "degree " + std::to_string(d) + ", position 0: expected " +
                                                   std::to_string(expected) + ", found " + std::to_string(f));
}

template <class F>
MonadReport verify_monad(const ModulePresentation<F>& M, TateResolution<F>& T, int d0, int d1) {
  GradedModule<F> G(M);
  MonadReport rep;
  for (int d = d0; d <= d1; ++d) {
    auto C = monad_complex(T, d);
    long long expected = G.dim({d, 0});
    check_monad_degree(C, d, expected);
    rep.degrees.push_back(d);
    rep.h0.push_back((int)expected);
  }
  return rep;
}

}  // namespace tate
