// The BGG functor R as explicit matrices over E (x) A, and strand exactness.

#pragma once

#include "tate/exterior_module.hpp"
#include "tate/truncate.hpp"

namespace tate {

/// Element sum_T e_T p_T of E (x) A (p_T polynomials in the parameters).
template <class F>
struct EAElement {
  std::map<ExtMask, Poly<F>> terms;

  bool is_zero() const { return terms.empty(); }
  void add(ExtMask T, const Poly<F>& p) {
    if (p.is_zero()) return;
    auto& slot = terms[T];
    slot = slot + p;
    if (slot.is_zero()) terms.erase(T);
  }
  EAElement operator+(const EAElement& o) const {
    EAElement r = *this;
    for (const auto& [T, p] : o.terms) r.add(T, p);
    return r;
  }
  EAElement operator*(const EAElement& o) const {
    EAElement r;
    for (const auto& [T, p] : terms)
      for (const auto& [U, q] : o.terms) {
        int sg = ext_sign(T, U);
        if (sg) r.add(T | U, sg > 0 ? p * q : -(p * q));
      }
    return r;
  }
};

inline std::vector<std::string> exterior_names(const Ring& R) {
  std::vector<std::string> names;
  for (int i = 0; i < R.nx(); ++i) names.push_back("e" + std::to_string(i));
  return names;
}

template <class F>
std::string to_string(const Ring& R, const EAElement<F>& x) {
  if (x.is_zero()) return "0";
  std::string out;
  const Ring A{{}, R.params, R.weights};
  for (const auto& [T, p] : x.terms) {
    Poly<F> q;
    for (const auto& [e, c] : p.terms) q.add_term(Exponents(e.begin() + R.nx(), e.end()), c);
    std::string ps = to_string(A, q), es = ext_string(T, exterior_names(R));
    if (!out.empty()) out += " + ";
    if (q.terms.size() > 1) ps = "(" + ps + ")";
    if (es.empty() || es == "1") out += ps;
    else if (ps == "1") out += es;
    else if (ps == "-1") out += "-" + es;
    else out += ps + "*" + es;
  }
  return out;
}

template <class F>
using EAMatrix = std::vector<std::vector<EAElement<F>>>;  // [row][col]

/// Composition for left-linear maps: (psi phi)_kg = sum_h phi_hg psi_kh.
template <class F>
EAMatrix<F> compose(const EAMatrix<F>& psi, const EAMatrix<F>& phi) {
  const size_t rows = psi.size(), cols = phi.empty() ? 0 : phi[0].size();
  EAMatrix<F> out(rows, std::vector<EAElement<F>>(cols));
  for (size_t k = 0; k < rows; ++k)
    for (size_t g = 0; g < cols; ++g)
      for (size_t h = 0; h < phi.size(); ++h) out[k][g] = out[k][g] + phi[h][g] * psi[k][h];
  return out;
}

/// A-basis element of M_d: quotient coordinate `coord` in param degree t.
struct ABasisElement {
  int param;
  int coord;
  std::string name;
};

template <class F>
struct RStrandTerm {
  int degree;
  std::vector<ABasisElement> basis;
};

template <class F>
struct RComplexStrand {
  Ring ring;
  int d0 = 0, d1 = 0;
  std::vector<RStrandTerm<F>> terms;  // E (x) M_d, d = d0..d1
  std::vector<EAMatrix<F>> diffs;     // diffs[k]: term k -> term k+1

  bool composes_to_zero() const {
    for (size_t k = 0; k + 1 < diffs.size(); ++k)
      for (const auto& row : compose(diffs[k + 1], diffs[k]))
        for (const auto& e : row)
          if (!e.is_zero()) return false;
    return true;
  }
  int row_of(int k, const std::string& name) const {
    const auto& b = terms[k].basis;
    for (int i = 0; i < (int)b.size(); ++i)
      if (b[i].name == name) return i;
    return -1;
  }
};

namespace detail {

/// Coordinates of v in M_(d,t) over the A-basis: v = sum c_h(a) m_h.
template <class F>
std::vector<Poly<F>> a_coordinates(GradedModule<F>& G, int d, int t, const std::vector<F>& v,
                                   const std::vector<ABasisElement>& basis) {
  const Ring& R = G.ring();
  std::vector<std::pair<int, Exponents>> cols;
  std::vector<std::vector<F>> vecs;
  for (int h = 0; h < (int)basis.size(); ++h) {
    int w = t - basis[h].param;
    if (w < 0 || (!R.has_params() && w)) continue;
    auto as = R.has_params() ? weighted_monomials(R.weights, w) : std::vector<Exponents>{{}};
    for (const auto& beta : as) {
      std::vector<F> cur(G.dim({d, basis[h].param}), F(0));
      cur[basis[h].coord] = F(1);
      int tt = basis[h].param;
      for (int k = 0; k < R.np(); ++k)
        for (int r = 0; r < beta[k]; ++r) {
          const auto& X = G.mult_a(k, {d, tt});
          std::vector<F> nx(X.rows(), F(0));
          for (Eigen::Index i = 0; i < X.rows(); ++i)
            for (Eigen::Index j = 0; j < X.cols(); ++j)
              if (!cur[j].is_zero()) nx[i] += X(i, j) * cur[j];
          cur = std::move(nx);
          tt += R.weights[k];
        }
      cols.emplace_back(h, beta);
      vecs.push_back(std::move(cur));
    }
  }
  const int dim = G.dim({d, t});
  ScalarMatrix<F> A = zero_matrix<F>(dim, (Eigen::Index)vecs.size());
  for (size_t c = 0; c < vecs.size(); ++c)
    for (int r = 0; r < dim; ++r) A(r, c) = vecs[c][r];
  if (rank<F>(A) != (Eigen::Index)vecs.size())
    throw Error(ErrorCode::NotFree, "M_" + std::to_string(d) + " is not free over the base in param degree " +
                                        std::to_string(t));
  ScalarVector<F> rhs(dim);
  for (int r = 0; r < dim; ++r) rhs(r) = v[r];
  auto sol = solve<F>(A, rhs);
  if (!sol) throw Error(ErrorCode::NotFree, "A-basis does not span M_" + std::to_string(d));
  std::vector<Poly<F>> out(basis.size());
  for (size_t c = 0; c < cols.size(); ++c) {
    if ((*sol)(c).is_zero()) continue;
    Exponents ex(R.nx(), 0);
    ex.insert(ex.end(), cols[c].second.begin(), cols[c].second.end());
    out[cols[c].first].add_term(ex, (*sol)(c));
  }
  return out;
}

}  // namespace detail

template <class F>
std::vector<ABasisElement> a_basis(GradedModule<F>& G, int d) {
  std::vector<ABasisElement> out;
  int top = 0;
  for (const auto& g : G.presentation().gens) top = std::max(top, g.param);
  if (!G.ring().has_params()) top = 0;
  for (int t = G.min_param(); t <= top; ++t) {
    auto gens = G.a_generators(d, t);
    for (Eigen::Index c = 0; c < gens.cols(); ++c)
      for (Eigen::Index r = 0; r < gens.rows(); ++r)
        if (!gens(r, c).is_zero()) out.push_back({t, (int)r, basis_name(G, {d, t}, (int)r)});
  }
  return out;
}

/// R(M) on E (x) M_d for d in [d0, d1]: generator m maps to
/// sum_i e_i (x) x_i m written in the A-basis of M_{d+1}.
template <class F>
RComplexStrand<F> bgg_R(const ModulePresentation<F>& M, int d0, int d1) {
  GradedModule<F> G(M);
  const Ring& R = M.ring;
  RComplexStrand<F> S;
  S.ring = R;
  S.d0 = d0;
  S.d1 = d1;
  for (int d = d0; d <= d1; ++d) S.terms.push_back({d, a_basis(G, d)});
  for (int d = d0; d < d1; ++d) {
    const auto& src = S.terms[d - d0].basis;
    const auto& dst = S.terms[d - d0 + 1].basis;
    EAMatrix<F> m(dst.size(), std::vector<EAElement<F>>(src.size()));
    for (int g = 0; g < (int)src.size(); ++g)
      for (int i = 0; i < R.nx(); ++i) {
        const auto& X = G.mult_x(i, {d, src[g].param});
        std::vector<F> v(X.rows());
        for (Eigen::Index r = 0; r < X.rows(); ++r) v[r] = X(r, src[g].coord);
        auto c = detail::a_coordinates(G, d + 1, src[g].param, v, dst);
        for (int h = 0; h < (int)dst.size(); ++h) m[h][g].add(ExtMask(1) << i, c[h]);
      }
    S.diffs.push_back(std::move(m));
  }
  return S;
}

struct StrandExactness {
  bool exact = true;
  std::vector<std::string> failures;  // "d=.. (u,t)" slices with homology
  int checked = 0;
};

/// Exactness of E(x)M_{d-1} -> E(x)M_d -> E(x)M_{d+1} for d in (d0, d1),
/// slice by slice for param degrees up to `param_bound`.
template <class F>
StrandExactness strand_exactness(const ModulePresentation<F>& M, int d0, int d1, int param_bound = 0) {
  GradedModule<F> G(M);
  const Ring& R = M.ring;
  StrandExactness rep;
  std::map<int, std::unique_ptr<ExteriorTensor<F>>> E;
  for (int d = d0; d <= d1; ++d) E[d] = std::make_unique<ExteriorTensor<F>>(G, d);
  const int top = R.has_params() ? param_bound : 0;
  for (int d = d0 + 1; d < d1; ++d)
    for (int u = d - R.nx(); u <= d; ++u)
      for (int t = G.min_param(); t <= top; ++t) {
        Bidegree b{u, t};
        const int mid = E[d]->dim(b);
        if (!mid) continue;
        int rin = 0, rout = 0;
        sparse_kernel(strand_columns(*E[d - 1], *E[d], b), mid, &rin);
        sparse_kernel(strand_columns(*E[d], *E[d + 1], b), E[d + 1]->dim(b), &rout);
        ++rep.checked;
        if (rin + rout != mid) {
          rep.exact = false;
          rep.failures.push_back("d=" + std::to_string(d) + " " + b.to_string());
        }
      }
  return rep;
}

}  // namespace tate
