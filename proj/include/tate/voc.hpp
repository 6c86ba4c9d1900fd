// Families over the variety of complexes: the deformed Tate resolution of
// (+) (Omega^p)^{beta_p} whose direct image is a prescribed complex of free
// modules, and the round trip back through the pushforward.

#pragma once

#include "tate/pushforward.hpp"
#include "tate/voc_omega.hpp"

namespace tate {

/// 0 -> A^{beta_0} -> ... -> A^{beta_n} -> 0, matrices[p] : beta_{p+1} x beta_p.
/// `ring` is P^n with the parameters of A (none for field input).
template <class F>
struct InputComplex {
  Ring ring;
  std::vector<int> beta;
  std::vector<std::vector<std::vector<Poly<F>>>> matrices;

  int n() const { return ring.n(); }
};

template <class F>
InputComplex<F> field_complex(int n, std::vector<int> beta, const std::vector<std::vector<std::vector<F>>>& mats) {
  InputComplex<F> C{Ring::projective(n), std::move(beta), {}};
  for (const auto& m : mats) {
    auto& pm = C.matrices.emplace_back();
    for (const auto& row : m) {
      auto& pr = pm.emplace_back();
      for (const auto& x : row) pr.push_back(Poly<F>::constant(C.ring.nvars(), x));
    }
  }
  return C;
}

/// Undeformed Tate windows of Omega^0..Omega^n and the chain maps Phi_p;
/// reusable across inputs with the same n and window.
template <class F>
struct VocContext {
  int n, lo, hi;
  std::vector<OmegaWindow<F>> omega;
  std::vector<OmegaChainMap<F>> phi;  // phi[p] : T(Omega^p) -> T(Omega^{p+1})[1]

  VocContext(int n_, int lo_ = -1, std::optional<int> hi_ = {}) : n(n_), lo(lo_), hi(hi_.value_or(n_)) {
    if (lo > 0 || hi < n) throw Error(ErrorCode::WindowNotComputed, "window must contain terms 0.." + std::to_string(n));
    for (int p = 0; p <= n; ++p) omega.push_back(omega_window<F>(n, p, lo, hi));
    for (int p = 0; p < n; ++p) phi.push_back(omega_chain_map(omega[p], omega[p + 1]));
  }
};

namespace detail {

template <class F>
void validate_input(const InputComplex<F>& C) {
  const int n = C.n();
  const Ring& R = C.ring;
  if ((int)C.beta.size() != n + 1 || (int)C.matrices.size() != n)
    throw Error(ErrorCode::ParseError, "need n + 1 ranks and n matrices");
  for (int p = 0; p < n; ++p) {
    const auto& m = C.matrices[p];
    if ((int)m.size() != C.beta[p + 1]) throw Error(ErrorCode::ParseError, "matrix " + std::to_string(p) + " has wrong row count");
    for (const auto& row : m) {
      if ((int)row.size() != C.beta[p]) throw Error(ErrorCode::ParseError, "matrix " + std::to_string(p) + " has wrong column count");
      for (const auto& e : row) {
        if (e.is_zero()) continue;
        Bidegree want{0, R.has_params() ? 1 : 0};
        if (!is_homogeneous(R, e, want))
          throw Error(ErrorCode::InhomogeneousEntry, "matrix " + std::to_string(p) + " entry " + to_string(R, e) +
                                                          " is not of bidegree " + want.to_string());
      }
    }
  }
  for (int p = 0; p + 1 < n; ++p)
    for (int r = 0; r < C.beta[p + 2]; ++r)
      for (int c = 0; c < C.beta[p]; ++c) {
        Poly<F> s;
        for (int k = 0; k < C.beta[p + 1]; ++k) s = s + C.matrices[p + 1][r][k] * C.matrices[p][k][c];
        if (!s.is_zero())
          throw Error(ErrorCode::NotAComplex, "matrices " + std::to_string(p) + " and " + std::to_string(p + 1) +
                                                  " compose to " + to_string(R, s) + " at (" + std::to_string(r) +
                                                  "," + std::to_string(c) + ")");
      }
}

/// Exactness of T^{i-1} -> T^i -> T^{i+1} in every bidegree that can carry
/// elements (param degrees pbot..ptop).
template <class F>
bool window_exact_at(TateResolution<F>& T, int i, int pbot, int ptop) {
  auto& in = *T.left.at(i - 1).map;
  auto& out = *T.left.at(i).map;
  auto& mid = *T.left.at(i).module;
  for (int u = mid.internal_min(); u <= mid.internal_max(); ++u)
    for (int t = pbot; t <= ptop; ++t) {
      Bidegree b{u, t};
      const int dim = mid.dim(b);
      if (!dim) continue;
      int rin = 0, rout = 0;
      sparse_kernel(in.columns(b), dim, &rin);
      sparse_kernel(out.columns(b), out.target().dim(b), &rout);
      if (rin + rout != dim) return false;
    }
  return true;
}

}  // namespace detail

/// T with d = d_0 + sum_p A_p (x) Phi_p on terms lo..hi (T^{hi+1} as the cap).
/// Strand p generators carry param degree -p when A has parameters, so the
/// entries of A sit in bidegree (0,1). Checks d^2 = 0 and exactness on lo+1..hi.
template <class F>
std::unique_ptr<TateResolution<F>> deformed_tate(const InputComplex<F>& C, VocContext<F>& ctx) {
  detail::validate_input(C);
  const int n = C.n();
  if (ctx.n != n) throw Error(ErrorCode::ParseError, "context built for another n");
  const Ring& R = C.ring;
  const bool rel = R.has_params();
  const Exponents none(R.np(), 0);

  std::map<int, std::vector<std::vector<int>>> off;  // i -> p -> copy start offsets
  std::map<int, std::unique_ptr<FreeEAModule<F>>> mods;
  for (int i = ctx.lo; i <= ctx.hi + 1; ++i) {
    std::vector<Bidegree> gens;
    auto& o = off[i];
    o.resize(n + 1);
    for (int p = 0; p <= n; ++p)
      for (int c = 0; c < C.beta[p]; ++c) {
        o[p].push_back((int)gens.size());
        for (const auto& g : ctx.omega[p].module(i).gens()) gens.push_back({g.internal, rel ? -p : 0});
      }
    mods[i] = std::make_unique<FreeEAModule<F>>(R, gens);
  }

  auto T = std::make_unique<TateResolution<F>>();
  T->ring = R;
  T->s = ctx.hi;
  for (int i = ctx.lo; i <= ctx.hi; ++i) {
    auto& src = *mods[i];
    auto& dst = *mods[i + 1];
    std::vector<SparseVec<F>> images(src.rank());
    for (int p = 0; p <= n; ++p) {
      auto& W = ctx.omega[p];
      const auto& lg = W.module(i).gens();
      for (int c = 0; c < C.beta[p]; ++c)
        for (int g = 0; g < (int)lg.size(); ++g) {
          const int G = off[i][p][c] + g;
          const Bidegree b = src.gens()[G];
          std::map<int, F> acc;
          const auto& piece = W.module(i + 1).piece(lg[g]);
          for (const auto& [k, coef] : W.map(i).images()[g]) {
            const auto& e = piece.basis[k];
            sparse_add(acc, dst.find(b, off[i + 1][p][c] + e.gen, e.T, none), coef);
          }
          if (p < n && C.beta[p + 1]) {
            const auto& tp = ctx.omega[p + 1].module(i + 1).piece(lg[g]);
            for (const auto& [k, coef] : ctx.phi[p].images.at(i)[g]) {
              const auto& e = tp.basis[k];
              for (int c2 = 0; c2 < C.beta[p + 1]; ++c2)
                for (const auto& [ex, a] : C.matrices[p][c2][c].terms) {
                  Exponents alpha(ex.begin() + R.nx(), ex.end());
                  int idx = dst.find(b, off[i + 1][p + 1][c2] + e.gen, e.T, alpha);
                  if (idx < 0) throw Error(ErrorCode::CorrectionUnsolvable, "deformation leaves the target piece");
                  sparse_add(acc, idx, coef * a);
                }
            }
          }
          images[G] = from_map(acc);
        }
    }
    LeftTerm<F> term{i, std::move(mods[i]), nullptr};
    term.map = std::make_unique<FreeMap<F>>(*term.module, dst, std::move(images));
    T->left.emplace(i, std::move(term));
  }
  T->cap = std::move(mods[ctx.hi + 1]);
  // the maps above point into modules now owned by T->left and T->cap

  if (!composes_to_zero(*T)) throw Error(ErrorCode::VerificationFailed, "deformed differential does not square to zero");
  for (int i = ctx.lo + 1; i <= ctx.hi; ++i)
    if (!detail::window_exact_at(*T, i, rel ? -n : 0, rel ? 1 : 0))
      throw Error(ErrorCode::VerificationFailed, "deformed complex is not exact at term " + std::to_string(i));
  T->certificate.notes.push_back("finite window " + std::to_string(ctx.lo) + ".." + std::to_string(ctx.hi + 1) +
                                 ": d^2 = 0 and exact at terms " + std::to_string(ctx.lo + 1) + ".." +
                                 std::to_string(ctx.hi));
  return T;
}

template <class F>
std::unique_ptr<TateResolution<F>> deformed_tate(const InputComplex<F>& C) {
  VocContext<F> ctx(C.n());
  return deformed_tate(C, ctx);
}

template <class F>
struct RoundtripReport {
  std::vector<int> ranks;
  std::map<int, int> homology;        // of the extracted complex (field input)
  std::map<int, int> input_homology;  // of the input complex (field input)
  bool entrywise = false;
  PushforwardComplex<F> complex;
};

/// Extracts R pi_* at internal degree 0 without minimalizing and compares it
/// with the input: term ranks, entries, and (field input) homology.
template <class F>
RoundtripReport<F> roundtrip_verify(const InputComplex<F>& C, VocContext<F>& ctx) {
  auto T = deformed_tate(C, ctx);
  RoundtripReport<F> rep;
  rep.complex = extract_pushforward(*T, 0);
  const auto& P = rep.complex;
  const int n = C.n();
  auto mismatch = [](const std::string& where, const std::string& want, const std::string& got) {
    return Error(ErrorCode::RoundtripMismatch, where + ": expected " + want + ", found " + got);
  };
  for (const auto& [i, g] : P.terms)
    if ((i < 0 || i > n) && !g.empty()) throw mismatch("term " + std::to_string(i), "0", std::to_string(g.size()));
  for (int p = 0; p <= n; ++p) {
    rep.ranks.push_back(P.rank(p));
    if (P.rank(p) != C.beta[p]) throw mismatch("rank at " + std::to_string(p), std::to_string(C.beta[p]), std::to_string(P.rank(p)));
  }
  for (int p = 0; p < n; ++p)
    for (int r = 0; r < C.beta[p + 1]; ++r)
      for (int c = 0; c < C.beta[p]; ++c)
        if (!(P.entry(p, r, c) == C.matrices[p][r][c]))
          throw mismatch("entry (" + std::to_string(r) + "," + std::to_string(c) + ") of d^" + std::to_string(p),
                         to_string(C.ring, C.matrices[p][r][c]), to_string(C.ring, P.entry(p, r, c)));
  rep.entrywise = true;
  if (C.ring.has_params()) return rep;
  rep.homology = homology_ranks(P);
  std::vector<int> rk(n + 1, 0);
  for (int p = 0; p < n; ++p) {
    ScalarMatrix<F> m = zero_matrix<F>(C.beta[p + 1], C.beta[p]);
    for (int r = 0; r < C.beta[p + 1]; ++r)
      for (int c = 0; c < C.beta[p]; ++c) m(r, c) = C.matrices[p][r][c].constant_term();
    rk[p] = (int)rank<F>(m);
  }
  for (int p = 0; p <= n; ++p) {
    int h = C.beta[p] - rk[p] - (p ? rk[p - 1] : 0);
    if (h) rep.input_homology[p] = h;
  }
  if (rep.homology != rep.input_homology) throw mismatch("homology", "input homology", "different dimensions");
  return rep;
}

template <class F>
RoundtripReport<F> roundtrip_verify(const InputComplex<F>& C) {
  VocContext<F> ctx(C.n());
  return roundtrip_verify(C, ctx);
}

}  // namespace tate
