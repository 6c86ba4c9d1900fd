// Presentations of submodules of a presented module generated by given
// homogeneous elements, and the truncation M_{>=s}.

#pragma once

#include "tate/regularity.hpp"

namespace tate {

template <class F>
struct SubmoduleGenerator {
  Bidegree degree;
  std::vector<F> coords;  // quotient coordinates in M_degree
  std::string name;
};

/// Presentation of the submodule generated by `gens`, with relations found
/// in internal degrees up to `dmax` and param degrees up to `tmax`.
template <class F>
ModulePresentation<F> present_submodule(GradedModule<F>& G, const std::vector<SubmoduleGenerator<F>>& gens, int dmax,
                                        int tmax) {
  const Ring& R = G.ring();
  const int nv = R.nvars();
  std::map<std::pair<int, Exponents>, std::vector<F>> memo;
  std::function<const std::vector<F>&(int, const Exponents&)> image = [&](int g, const Exponents& mu)
      -> const std::vector<F>& {
    auto key = std::make_pair(g, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<F> v;
    int last = -1;
    for (int k = 0; k < nv; ++k)
      if (mu[k] > 0) last = k;
    if (last < 0) {
      v = gens[g].coords;
    } else {
      Exponents lower = mu;
      lower[last] -= 1;
      const auto& src = image(g, lower);
      const auto& X = G.mult(last, gens[g].degree + R.degree(lower));
      v.assign(X.rows(), F(0));
      for (Eigen::Index r = 0; r < X.rows(); ++r)
        for (Eigen::Index c = 0; c < X.cols(); ++c)
          if (!X(r, c).is_zero() && !src[c].is_zero()) v[r] += X(r, c) * src[c];
    }
    return memo.emplace(key, std::move(v)).first->second;
  };

  using SliceBasis = std::vector<std::pair<int, Exponents>>;
  auto slice = [&](Bidegree b) {
    SliceBasis s;
    for (int g = 0; g < (int)gens.size(); ++g) {
      Bidegree rest = b - gens[g].degree;
      if (rest.internal < 0 || rest.param < 0 || (!R.has_params() && rest.param)) continue;
      auto as = R.has_params() ? weighted_monomials(R.weights, rest.param) : std::vector<Exponents>{{}};
      for (const auto& xm : monomials_of_degree(R.nx(), rest.internal))
        for (const auto& am : as) {
          Exponents e = xm;
          e.insert(e.end(), am.begin(), am.end());
          s.emplace_back(g, e);
        }
    }
    return s;
  };

  int dmin = INT_MAX, tmin = 0;
  for (const auto& g : gens) dmin = std::min(dmin, g.degree.internal), tmin = std::min(tmin, g.degree.param);
  if (!R.has_params()) tmax = 0;
  std::map<Bidegree, std::pair<SliceBasis, std::vector<std::vector<F>>>> K;
  std::vector<std::vector<Poly<F>>> relations;
  for (int d = dmin; d <= dmax && !gens.empty(); ++d)
    for (int t = tmin; t <= tmax; ++t) {
      Bidegree b{d, t};
      SliceBasis sb = slice(b);
      if (sb.empty()) continue;
      std::map<std::pair<int, Exponents>, int> pos;
      for (int i = 0; i < (int)sb.size(); ++i) pos[sb[i]] = i;
      const int mdim = G.dim(b);
      ScalarMatrix<F> A = zero_matrix<F>(mdim, (Eigen::Index)sb.size());
      for (int i = 0; i < (int)sb.size(); ++i) {
        const auto& v = image(sb[i].first, sb[i].second);
        for (int r = 0; r < mdim; ++r) A(r, i) = v[r];
      }
      ScalarMatrix<F> ker = kernel_basis<F>(A);
      SparseEchelon<F> span((int)sb.size());
      for (int v = 0; v < nv; ++v) {
        auto low = K.find(b - G.var_degree(v));
        if (low == K.end()) continue;
        for (const auto& kv : low->second.second) {
          std::vector<F> w(sb.size(), F(0));
          for (size_t j = 0; j < kv.size(); ++j) {
            if (kv[j].is_zero()) continue;
            Exponents e = low->second.first[j].second;
            e[v] += 1;
            w[pos.at({low->second.first[j].first, e})] += kv[j];
          }
          span.insert(std::move(w));
        }
      }
      std::vector<std::vector<F>> kvecs;
      for (Eigen::Index c = 0; c < ker.cols(); ++c) {
        std::vector<F> w(sb.size());
        for (size_t j = 0; j < sb.size(); ++j) w[j] = ker(j, c);
        kvecs.push_back(w);
        if (!span.insert(std::vector<F>(w))) continue;
        std::vector<Poly<F>> col(gens.size());
        for (size_t j = 0; j < sb.size(); ++j)
          if (!w[j].is_zero()) col[sb[j].first].add_term(sb[j].second, w[j]);
        relations.push_back(std::move(col));
      }
      K.emplace(b, std::make_pair(std::move(sb), std::move(kvecs)));
    }
  std::vector<Bidegree> degs;
  std::vector<std::string> names;
  for (const auto& g : gens) degs.push_back(g.degree), names.push_back(g.name);
  return build_presentation<F>(R, degs, relations, names);
}

/// Name of a quotient basis element of M_b, e.g. "x*y*g".
template <class F>
std::string basis_name(GradedModule<F>& G, Bidegree b, int coord) {
  const auto& p = G.piece(b);
  const FreeTerm& t = p.free[p.basis[coord]];
  const auto& P = G.presentation();
  std::string g = t.gen < (int)P.gen_names.size() && !P.gen_names[t.gen].empty() ? P.gen_names[t.gen]
                                                                                    : "g" + std::to_string(t.gen);
  std::string m = monomial_string(G.ring(), t.mon);
  return m.empty() ? g : m + "*" + g;
}

struct TruncateOptions {
  std::optional<int> degree_bound;  // relations searched up to this internal degree
  std::optional<int> param_bound;
};

/// M_{>=s}: generated by the minimal generators of M in degrees >= s together
/// with a basis of M_s modulo parameter multiples.
template <class F>
ModulePresentation<F> truncate(const ModulePresentation<F>& M, int s, TruncateOptions opts = {}) {
  GradedModule<F> G(M);
  const Ring& R = M.ring;
  const int pb = R.has_params() ? opts.param_bound.value_or(2 * M.max_param_degree() + 2) : 0;
  int top = 0, dtop = s;
  for (const auto& g : M.gens) top = std::max(top, g.param), dtop = std::max(dtop, g.internal);
  if (!R.has_params()) top = 0;
  std::vector<SubmoduleGenerator<F>> gens;
  for (int d = s; d <= dtop; ++d)
    for (int t = G.min_param(); t <= top; ++t) {
      Bidegree b{d, t};
      const int dm = G.dim(b);
      if (!dm) continue;
      SparseEchelon<F> span(dm);
      auto add_image = [&](const ScalarMatrix<F>& X) {
        for (Eigen::Index c = 0; c < X.cols(); ++c) {
          std::vector<F> v(dm);
          for (int r = 0; r < dm; ++r) v[r] = X(r, c);
          span.insert(std::move(v));
        }
      };
      if (d > s)
        for (int i = 0; i < R.nx(); ++i) add_image(G.mult_x(i, {d - 1, t}));
      for (int k = 0; k < R.np(); ++k)
        if (t - R.weights[k] >= G.min_param()) add_image(G.mult_a(k, {d, t - R.weights[k]}));
      for (int i = 0; i < dm; ++i) {
        std::vector<F> v(dm, F(0));
        v[i] = F(1);
        if (span.insert(std::vector<F>(v))) gens.push_back({b, v, basis_name(G, b, i)});
      }
    }
  int dmax;
  if (opts.degree_bound) {
    dmax = *opts.degree_bound;
  } else {
    RegularityOptions ro;
    ro.param_bound = pb;
    dmax = std::max(regularity(G, ro).value, dtop) + 1;
  }
  return present_submodule(G, gens, dmax, pb);
}

}  // namespace tate
