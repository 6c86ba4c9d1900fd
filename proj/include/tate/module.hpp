// Finitely presented bigraded S-modules and their graded pieces.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tate/errors.hpp"
#include "tate/linalg.hpp"
#include "tate/polynomial.hpp"

namespace tate {

/// coker(relations): generators with bidegrees, relation columns indexed
/// [column][generator].
template <class F>
struct ModulePresentation {
  Ring ring;
  std::vector<Bidegree> gens;
  std::vector<std::string> gen_names;
  std::vector<std::vector<Poly<F>>> relations;
  std::vector<Bidegree> relation_degrees;

  int num_gens() const { return static_cast<int>(gens.size()); }
  int num_relations() const { return static_cast<int>(relations.size()); }
  int max_param_degree() const {
    int m = 0;
    for (const auto& g : gens) m = std::max(m, g.param);
    for (const auto& r : relation_degrees) m = std::max(m, r.param);
    return m;
  }
  int min_gen_internal() const {
    int m = 0;
    for (size_t i = 0; i < gens.size(); ++i) m = i ? std::min(m, gens[i].internal) : gens[i].internal;
    return m;
  }
  int max_gen_internal() const {
    int m = 0;
    for (size_t i = 0; i < gens.size(); ++i) m = i ? std::max(m, gens[i].internal) : gens[i].internal;
    return m;
  }
};

/// Validates homogeneity and fills relation degrees. Zero columns are dropped.
template <class F>
ModulePresentation<F> build_presentation(Ring ring, std::vector<Bidegree> gens,
                                         std::vector<std::vector<Poly<F>>> columns,
                                         std::vector<std::string> names = {}) {
  ring.validate();
  ModulePresentation<F> M;
  M.ring = std::move(ring);
  M.gens = std::move(gens);
  if (names.empty())
    for (size_t i = 0; i < M.gens.size(); ++i) names.push_back("g" + std::to_string(i));
  M.gen_names = std::move(names);
  if (!M.ring.has_params())
    for (auto& g : M.gens)
      if (g.param != 0) throw std::invalid_argument("param degree on a field base");
  for (size_t c = 0; c < columns.size(); ++c) {
    auto& col = columns[c];
    if (col.size() != M.gens.size())
      throw std::invalid_argument("relation column " + std::to_string(c) + " has wrong length");
    bool have = false;
    Bidegree deg;
    for (size_t r = 0; r < col.size(); ++r) {
      for (const auto& [e, coef] : col[r].terms) {
        if ((int)e.size() != M.ring.nvars()) throw std::invalid_argument("exponent length mismatch");
        Bidegree found = M.gens[r] + M.ring.degree(e);
        if (!have) {
          deg = found;
          have = true;
        } else if (found != deg) {
          throw Error(ErrorCode::InhomogeneousEntry,
                      "row " + std::to_string(r) + ", column " + std::to_string(c) + ": expected bidegree " +
                          (deg - M.gens[r]).to_string() + ", found term " +
                          monomial_string(M.ring, e) + " of bidegree " + M.ring.degree(e).to_string());
        }
      }
    }
    if (!have) continue;
    M.relations.push_back(std::move(col));
    M.relation_degrees.push_back(deg);
  }
  return M;
}

/// Free module S(-a) on given generator bidegrees, no relations.
template <class F>
ModulePresentation<F> free_module(const Ring& R, std::vector<Bidegree> gens) {
  return build_presentation<F>(R, std::move(gens), {});
}

/// twist(M, k)~ = M~(k): generator internal degrees shift by -k.
template <class F>
ModulePresentation<F> twist(ModulePresentation<F> M, int k) {
  for (auto& g : M.gens) g.internal -= k;
  for (auto& r : M.relation_degrees) r.internal -= k;
  return M;
}

/// Reduction modulo (a - point): parameters replaced by scalars, param
/// degrees forgotten.
template <class F>
ModulePresentation<F> specialize_module(const ModulePresentation<F>& M, const std::vector<F>& point) {
  if ((int)point.size() != M.ring.np()) throw std::invalid_argument("point needs one value per parameter");
  Ring R = M.ring.central();
  std::vector<Bidegree> gens;
  for (auto g : M.gens) gens.push_back({g.internal, 0});
  std::vector<std::vector<Poly<F>>> cols;
  for (const auto& col : M.relations) {
    std::vector<Poly<F>> c;
    for (const auto& p : col) c.push_back(specialize(M.ring, p, point));
    cols.push_back(std::move(c));
  }
  return build_presentation<F>(R, gens, cols, M.gen_names);
}

template <class F>
ModulePresentation<F> central_fiber(const ModulePresentation<F>& M) {
  return specialize_module(M, std::vector<F>(M.ring.np(), F(0)));
}

template <class F>
ModulePresentation<F> direct_sum(const ModulePresentation<F>& A, const ModulePresentation<F>& B) {
  if (!(A.ring == B.ring)) throw std::invalid_argument("direct sum over different rings");
  std::vector<Bidegree> gens = A.gens;
  gens.insert(gens.end(), B.gens.begin(), B.gens.end());
  std::vector<std::string> names = A.gen_names;
  names.insert(names.end(), B.gen_names.begin(), B.gen_names.end());
  std::vector<std::vector<Poly<F>>> cols;
  for (const auto& c : A.relations) {
    auto col = c;
    col.resize(gens.size());
    cols.push_back(std::move(col));
  }
  for (const auto& c : B.relations) {
    std::vector<Poly<F>> col(A.gens.size());
    col.insert(col.end(), c.begin(), c.end());
    cols.push_back(std::move(col));
  }
  return build_presentation<F>(A.ring, gens, cols, names);
}

}  // namespace tate
