// Per-bidegree linear-algebra view of a presented module: M_(d,t) as the
// free slice modulo the relation span, with multiplication maps.

#pragma once

#include <map>
#include <memory>
#include <vector>

#include "tate/module.hpp"

namespace tate {

struct FreeTerm {
  int gen;
  Exponents mon;  // x exponents followed by param exponents
};

template <class F>
struct GradedPiece {
  Bidegree degree;
  std::vector<FreeTerm> free;               // ordered free-slice basis
  std::map<std::pair<int, Exponents>, int> index;
  SparseEchelon<F> relations;               // span of the relation slice
  std::vector<int> basis;                   // free indices of quotient representatives
  std::vector<int> coordinate;              // free index -> quotient coordinate or -1

  int dim() const { return static_cast<int>(basis.size()); }
  int free_dim() const { return static_cast<int>(free.size()); }

  int find(int gen, const Exponents& mon) const {
    auto it = index.find({gen, mon});
    return it == index.end() ? -1 : it->second;
  }
  /// Quotient coordinates of a free-slice vector.
  std::vector<F> normal_form(std::vector<F> v) const {
    relations.reduce(v);
    std::vector<F> out(basis.size(), F(0));
    for (size_t i = 0; i < basis.size(); ++i) out[i] = v[basis[i]];
    return out;
  }
};

/// Orders free terms: x exponents compared from the last x-variable
/// backward with higher exponent first, then params the same way, then
/// generator index.
inline bool free_term_before(const Ring& R, const FreeTerm& a, const FreeTerm& b) {
  for (int i = R.nx() - 1; i >= 0; --i)
    if (a.mon[i] != b.mon[i]) return a.mon[i] > b.mon[i];
  for (int i = R.nvars() - 1; i >= R.nx(); --i)
    if (a.mon[i] != b.mon[i]) return a.mon[i] > b.mon[i];
  return a.gen < b.gen;
}

template <class F>
class GradedModule {
 public:
  explicit GradedModule(ModulePresentation<F> M) : M_(std::move(M)) {}

  const ModulePresentation<F>& presentation() const { return M_; }
  const Ring& ring() const { return M_.ring; }

  const GradedPiece<F>& piece(Bidegree b) {
    auto it = cache_.find(b);
    if (it != cache_.end()) return *it->second;
    return build(b);
  }
  int dim(Bidegree b) { return piece(b).dim(); }

  /// Matrix of multiplication by variable v (x-variable or parameter index
  /// in the ring's variable list) from M_b to M_{b + deg v}.
  const ScalarMatrix<F>& mult(int v, Bidegree b) {
    auto key = std::make_pair(v, b);
    auto it = mult_cache_.find(key);
    if (it != mult_cache_.end()) return it->second;
    Bidegree tb = b + var_degree(v);
    const GradedPiece<F>& src = piece(b);
    const GradedPiece<F>& dst = piece(tb);
    ScalarMatrix<F> m = zero_matrix<F>(dst.dim(), src.dim());
    for (int j = 0; j < src.dim(); ++j) {
      const FreeTerm& t = src.free[src.basis[j]];
      Exponents e = t.mon;
      e[v] += 1;
      std::vector<F> vec(dst.free_dim(), F(0));
      vec[dst.find(t.gen, e)] = F(1);
      auto nf = dst.normal_form(std::move(vec));
      for (int i = 0; i < dst.dim(); ++i) m(i, j) = nf[i];
    }
    return mult_cache_.emplace(key, std::move(m)).first->second;
  }
  const ScalarMatrix<F>& mult_x(int i, Bidegree b) { return mult(i, b); }
  const ScalarMatrix<F>& mult_a(int k, Bidegree b) { return mult(ring().nx() + k, b); }

  /// Multiplication by a linear form sum_i c_i x_i.
  ScalarMatrix<F> mult_linear(const std::vector<F>& c, Bidegree b) {
    Bidegree tb = b + Bidegree{1, 0};
    ScalarMatrix<F> m = zero_matrix<F>(dim(tb), dim(b));
    for (int i = 0; i < ring().nx(); ++i)
      if (!c[i].is_zero()) m += mult_x(i, b) * c[i];
    return m;
  }

  Bidegree var_degree(int v) const {
    return v < ring().nx() ? Bidegree{1, 0} : Bidegree{0, ring().weights[v - ring().nx()]};
  }

  /// Sum of dims over param degrees 0..paramBound (field base: param 0 only).
  long long hilbert(int d, int paramBound = 0) {
    long long s = 0;
    int top = ring().has_params() ? paramBound : 0;
    for (int t = min_param(); t <= top; ++t) s += dim({d, t});
    return s;
  }
  /// Minimal A-module generators of M_d living in param degree t: a basis
  /// of M_(d,t) modulo the a_k-multiples from lower param degrees.
  ScalarMatrix<F> a_generators(int d, int t) {
    const int dm = dim({d, t});
    SparseEchelon<F> span(dm);
    for (int k = 0; k < ring().np(); ++k) {
      Bidegree low{d, t - ring().weights[k]};
      if (low.param < min_param()) continue;
      const auto& m = mult_a(k, low);
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        std::vector<F> v(dm);
        for (int i = 0; i < dm; ++i) v[i] = m(i, j);
        span.insert(std::move(v));
      }
    }
    std::vector<int> fresh;
    for (int i = 0; i < dm; ++i) {
      std::vector<F> v(dm, F(0));
      v[i] = F(1);
      if (span.insert(std::move(v))) fresh.push_back(i);
    }
    ScalarMatrix<F> out = zero_matrix<F>(dm, (Eigen::Index)fresh.size());
    for (size_t c = 0; c < fresh.size(); ++c) out(fresh[c], c) = F(1);
    return out;
  }
  /// Param degrees of a minimal A-generating set of M_d (field base: dim M_d
  /// copies of 0). Generators of M_d never exceed the top generator param degree.
  std::vector<int> a_generator_degrees(int d) {
    std::vector<int> out;
    int top = 0;
    for (const auto& g : M_.gens) top = std::max(top, g.param);
    if (!ring().has_params()) top = 0;
    for (int t = min_param(); t <= top; ++t) {
      int c = static_cast<int>(a_generators(d, t).cols());
      out.insert(out.end(), c, t);
    }
    return out;
  }

  int min_param() const {
    int m = 0;
    for (const auto& g : M_.gens) m = std::min(m, g.param);
    return m;
  }

 private:
  const GradedPiece<F>& build(Bidegree b) {
    auto p = std::make_unique<GradedPiece<F>>();
    p->degree = b;
    const Ring& R = ring();
    for (int g = 0; g < M_.num_gens(); ++g) {
      Bidegree rest = b - M_.gens[g];
      if (rest.internal < 0 || rest.param < 0) continue;
      if (!R.has_params() && rest.param != 0) continue;
      const auto& xs = monomials_of_degree(R.nx(), rest.internal);
      auto as = R.has_params() ? weighted_monomials(R.weights, rest.param) : std::vector<Exponents>{{}};
      for (const auto& xm : xs)
        for (const auto& am : as) {
          Exponents e = xm;
          e.insert(e.end(), am.begin(), am.end());
          p->free.push_back({g, std::move(e)});
        }
    }
    std::stable_sort(p->free.begin(), p->free.end(),
                     [&](const FreeTerm& a, const FreeTerm& c) { return free_term_before(R, a, c); });
    for (int i = 0; i < p->free_dim(); ++i) p->index.emplace(std::make_pair(p->free[i].gen, p->free[i].mon), i);
    p->relations = SparseEchelon<F>(p->free_dim());

    if (p->free_dim() > 0) {
      // Relation span: x_i and a_k multiples of the lower spans, plus the
      // relation columns living exactly in this bidegree.
      for (int v = 0; v < R.nvars(); ++v) {
        Bidegree lower = b - var_degree(v);
        if (!any_gen_below(lower)) continue;
        const GradedPiece<F>& low = piece(lower);
        for (const auto& [pivot, row] : low.relations.rows()) {
          std::vector<F> vec(p->free_dim(), F(0));
          for (const auto& [j, c] : row) {
            Exponents e = low.free[j].mon;
            e[v] += 1;
            vec[p->find(low.free[j].gen, e)] += c;
          }
          p->relations.insert(std::move(vec));
        }
      }
      for (int c = 0; c < M_.num_relations(); ++c) {
        if (M_.relation_degrees[c] != b) continue;
        std::vector<F> vec(p->free_dim(), F(0));
        for (int r = 0; r < M_.num_gens(); ++r)
          for (const auto& [e, coef] : M_.relations[c][r].terms) vec[p->find(r, e)] += coef;
        p->relations.insert(std::move(vec));
      }
    }
    p->coordinate.assign(p->free_dim(), -1);
    for (int i = 0; i < p->free_dim(); ++i)
      if (!p->relations.has_pivot(i)) {
        p->coordinate[i] = static_cast<int>(p->basis.size());
        p->basis.push_back(i);
      }
    auto& slot = cache_[b];
    slot = std::move(p);
    return *slot;
  }

  bool any_gen_below(Bidegree b) const {
    for (const auto& g : M_.gens)
      if (g.internal <= b.internal && g.param <= b.param) return true;
    return false;
  }

  ModulePresentation<F> M_;
  std::map<Bidegree, std::unique_ptr<GradedPiece<F>>> cache_;
  std::map<std::pair<int, Bidegree>, ScalarMatrix<F>> mult_cache_;
};

/// Dimensions of M_d for d in [d0, d1], summing param degrees up to paramBound.
template <class F>
std::vector<long long> hilbert_function(const ModulePresentation<F>& M, int d0, int d1, int paramBound = 0) {
  GradedModule<F> G(M);
  std::vector<long long> out;
  for (int d = d0; d <= d1; ++d) out.push_back(G.hilbert(d, paramBound));
  return out;
}

}  // namespace tate
