// Independent direct image: the degree-0 strand of Hom_S(K, M), where K is
// the Koszul resolution of I = (x_0^m, ..., x_n^m).

#pragma once

#include "tate/pushforward.hpp"

namespace tate {

/// Power m used by default: max(1, reg M + 1).
template <class F>
int default_oracle_power(const ModulePresentation<F>& M, std::optional<int> degree_bound = {}) {
  RegularityOptions ro;
  ro.degree_bound = degree_bound;
  return std::max(1, regularity(M, ro).value + 1);
}

/// Term k = (+)_{|J| = k+1} M_{m(k+1)}; the differential sends v e_J* to
/// sum over l not in J of sign * x_l^m v e_{J + l}*.
template <class F>
PushforwardComplex<F> pushforward_via_hom(const ModulePresentation<F>& M, std::optional<int> power = {}) {
  const Ring& R = M.ring;
  if (R.has_params()) throw Error(ErrorCode::NotFree, "the Hom oracle needs a field base");
  if (R.n() < 1) throw Error(ErrorCode::ParseError, "the Hom oracle needs n >= 1");
  const int m = power.value_or(default_oracle_power(M));
  const int nv = R.nx();
  GradedModule<F> G(M);

  // x_l^m : M_{d} -> M_{d+m}
  auto power_map = [&](int l, int d) {
    ScalarMatrix<F> acc = identity_matrix<F>(G.dim({d, 0}));
    for (int k = 0; k < m; ++k) acc = multiply(G.mult_x(l, {d + k, 0}), acc);
    return acc;
  };

  PushforwardComplex<F> C;
  C.ring = R;
  C.provenance = Provenance::HomOracle;
  for (int k = 0; k < nv; ++k) {
    int dim = static_cast<int>(ext_subsets(nv, k + 1).size()) * G.dim({m * (k + 1), 0});
    if (dim) C.terms[k] = std::vector<int>(dim, 0);
  }
  for (int k = 0; k + 1 < nv; ++k) {
    if (!C.rank(k) || !C.rank(k + 1)) continue;
    const int d = m * (k + 1), ds = G.dim({d, 0}), dt = G.dim({d + m, 0});
    const auto& src = ext_subsets(nv, k + 1);
    const auto& dst = ext_subsets(nv, k + 2);
    auto& mat = C.diff[k];
    mat.assign(C.rank(k + 1), std::vector<Poly<F>>(C.rank(k)));
    std::vector<ScalarMatrix<F>> X;
    for (int l = 0; l < nv; ++l) X.push_back(power_map(l, d));
    for (int a = 0; a < (int)src.size(); ++a)
      for (int l = 0; l < nv; ++l) {
        ExtMask J = src[a], bit = ExtMask(1) << l;
        if (J & bit) continue;
        int sg = std::popcount(J & (bit - 1)) % 2 ? -1 : 1;
        int b = static_cast<int>(std::lower_bound(dst.begin(), dst.end(), J | bit) - dst.begin());
        for (int r = 0; r < dt; ++r)
          for (int c = 0; c < ds; ++c)
            if (!X[l](r, c).is_zero())
              mat[b * dt + r][a * ds + c].add_term(Exponents(R.nvars(), 0), sg > 0 ? X[l](r, c) : -X[l](r, c));
      }
  }
  C.ensure_shapes();
  return C;
}

struct OracleComparison {
  int twist;
  std::map<int, int> tate, oracle;
  bool agree() const { return tate == oracle; }
};

/// Homology ranks of R pi_* F(j) by both routes, j in [jlo, jhi].
template <class F>
std::vector<OracleComparison> oracle_compare(const ModulePresentation<F>& M, int jlo, int jhi) {
  std::vector<OracleComparison> out;
  const int reg = regularity(M).value;
  for (int j = jlo; j <= jhi; ++j) {
    TateOptions o;
    o.corner = std::max({0, j, reg});
    o.left_steps = *o.corner - j + 2;
    auto T = splice_tate(M, o);
    out.push_back({j, homology_ranks(minimalize(extract_pushforward(*T, j))), homology_ranks(pushforward_via_hom(twist(M, j)))});
  }
  return out;
}

}  // namespace tate
