// Homology of a complex of free graded A-modules as graded A-modules,
// computed slice by slice in param degree.

#pragma once

#include "tate/pushforward.hpp"

namespace tate {

template <class F>
struct HomologyModule {
  int degree = 0;
  std::vector<int> gen_degrees;
  std::vector<std::vector<Poly<F>>> relations;  // relations[col][gen]
  std::map<int, int> hilbert;                    // param degree -> dim, up to the bound
  int bound = 0;
  bool is_zero() const { return gen_degrees.empty(); }
};

namespace detail {

/// Basis a^alpha g of a free graded A-module in param degree t.
struct Slice {
  std::vector<std::pair<int, Exponents>> elems;
  std::map<std::pair<int, Exponents>, int> index;
  int find(int g, const Exponents& a) const {
    auto it = index.find({g, a});
    return it == index.end() ? -1 : it->second;
  }
};

inline Slice make_slice(const Ring& R, const std::vector<int>& gens, int t) {
  Slice s;
  for (int g = 0; g < (int)gens.size(); ++g) {
    int w = t - gens[g];
    if (w < 0 || (!R.has_params() && w != 0)) continue;
    auto alphas = R.has_params() ? weighted_monomials(R.weights, w) : std::vector<Exponents>{{}};
    for (auto& a : alphas) {
      s.index[{g, a}] = (int)s.elems.size();
      s.elems.emplace_back(g, a);
    }
  }
  return s;
}

inline Exponents param_part(const Ring& R, const Exponents& e) {
  return Exponents(e.begin() + R.nx(), e.end());
}

/// Columns of the matrix m (rows: target gens, cols: source gens) on slice t.
template <class F>
std::vector<SparseVec<F>> slice_columns(const Ring& R, const std::vector<std::vector<Poly<F>>>& m, const Slice& src,
                                        const Slice& dst) {
  std::vector<SparseVec<F>> cols;
  for (const auto& [g, a] : src.elems) {
    std::map<int, F> out;
    for (int r = 0; r < (int)m.size(); ++r)
      for (const auto& [e, c] : m[r][g].terms) {
        Exponents b = param_part(R, e);
        for (size_t k = 0; k < b.size(); ++k) b[k] += a[k];
        int idx = dst.find(r, b);
        if (idx < 0) throw Error(ErrorCode::NotAComplex, "inhomogeneous differential entry");
        sparse_add(out, idx, c);
      }
    cols.push_back(from_map(out));
  }
  return cols;
}

/// Multiplies a slice-s vector by a^beta, landing in slice `dst`.
template <class F>
SparseVec<F> shift(const SparseVec<F>& v, const Slice& src, const Exponents& beta, const Slice& dst) {
  std::map<int, F> out;
  for (const auto& [i, c] : v) {
    auto [g, a] = src.elems[i];
    for (size_t k = 0; k < a.size(); ++k) a[k] += beta[k];
    sparse_add(out, dst.find(g, a), c);
  }
  return from_map(out);
}

inline Exponents unit_vector(int np, int k) {
  Exponents e(np, 0);
  e[k] = 1;
  return e;
}

}  // namespace detail

/// Presentations of H^i of C for param degrees up to `param_bound`
/// (default: top generator degree plus top entry degree plus one).
template <class F>
std::vector<HomologyModule<F>> homology_modules(const PushforwardComplex<F>& C, std::optional<int> param_bound = {}) {
  using namespace detail;
  const Ring& R = C.ring;
  const int np = R.np();
  int top = 0, tmin = 0, edeg = 0;
  for (const auto& [i, g] : C.terms)
    for (int p : g) top = std::max(top, p), tmin = std::min(tmin, p);
  for (const auto& [i, m] : C.diff)
    for (const auto& row : m)
      for (const auto& e : row)
        for (const auto& [ex, c] : e.terms) edeg = std::max(edeg, R.degree(ex).param);
  const int bound = R.has_params() ? param_bound.value_or(top + edeg + 1) : 0;
  auto empty = std::vector<std::vector<Poly<F>>>{};
  auto mat = [&](int i) -> const std::vector<std::vector<Poly<F>>>& {
    auto it = C.diff.find(i);
    return it == C.diff.end() ? empty : it->second;
  };
  std::vector<HomologyModule<F>> out;
  for (const auto& [i, gens] : C.terms) {
    HomologyModule<F> H;
    H.degree = i;
    H.bound = bound;
    const auto prev = C.terms.count(i - 1) ? C.terms.at(i - 1) : std::vector<int>{};
    const auto next = C.terms.count(i + 1) ? C.terms.at(i + 1) : std::vector<int>{};
    std::map<int, Slice> S;
    std::map<int, std::vector<SparseVec<F>>> Z, B, K;
    std::vector<std::pair<int, SparseVec<F>>> hgens;  // (degree, cycle)
    std::map<int, Slice> cover;
    for (int t = tmin; t <= bound; ++t) {
      S[t] = make_slice(R, gens, t);
      const int dim = (int)S[t].elems.size();
      Slice nx = make_slice(R, next, t), pv = make_slice(R, prev, t);
      Z[t] = next.empty() ? std::vector<SparseVec<F>>{} : sparse_kernel(slice_columns(R, mat(i), S[t], nx),
                                                                         (int)nx.elems.size());
      if (next.empty())
        for (int k = 0; k < dim; ++k) Z[t].push_back({{k, F(1)}});
      B[t] = prev.empty() ? std::vector<SparseVec<F>>{} : slice_columns(R, mat(i - 1), pv, S[t]);
      SparseEchelon<F> span(dim);
      int brank = 0;
      for (const auto& b : B[t]) brank += span.insert(to_dense(b, dim));
      H.hilbert[t] = (int)Z[t].size() - brank;
      for (int k = 0; k < np; ++k) {
        int t0 = t - R.weights[k];
        if (!Z.count(t0)) continue;
        for (const auto& z : Z[t0]) span.insert(to_dense(shift(z, S[t0], unit_vector(np, k), S[t]), dim));
      }
      for (const auto& z : Z[t])
        if (span.insert(to_dense(z, dim))) hgens.emplace_back(t, z);

      // Kernel of the cover A^m -> Z/B in degree t.
      std::vector<int> gdeg;
      for (auto& [d, z] : hgens) gdeg.push_back(d);
      cover[t] = make_slice(R, gdeg, t);
      const Slice& cv = cover[t];
      std::vector<SparseVec<F>> cols;
      for (const auto& [j, beta] : cv.elems) cols.push_back(shift(hgens[j].second, S[hgens[j].first], beta, S[t]));
      const int ncov = (int)cols.size();
      for (const auto& b : B[t]) cols.push_back(b);
      std::vector<SparseVec<F>> kt;
      for (auto& v : sparse_kernel(cols, dim)) {
        SparseVec<F> p;
        for (auto& [idx, c] : v)
          if (idx < ncov) p.emplace_back(idx, c);
        if (!p.empty()) kt.push_back(std::move(p));
      }
      SparseEchelon<F> rspan(ncov);
      for (int k = 0; k < np; ++k) {
        int t0 = t - R.weights[k];
        if (!K.count(t0)) continue;
        for (const auto& r : K[t0]) rspan.insert(to_dense(shift(r, cover[t0], unit_vector(np, k), cv), ncov));
      }
      for (const auto& r : kt)
        if (rspan.insert(to_dense(r, ncov))) {
          std::vector<Poly<F>> rel(hgens.size());
          for (const auto& [idx, c] : r) {
            const auto& [j, beta] = cv.elems[idx];
            Exponents ex(R.nx(), 0);
            ex.insert(ex.end(), beta.begin(), beta.end());
            rel[j].add_term(ex, c);
          }
          H.relations.push_back(std::move(rel));
        }
      K[t] = std::move(kt);
    }
    for (auto& [d, z] : hgens) H.gen_degrees.push_back(d);
    for (auto& rel : H.relations) rel.resize(H.gen_degrees.size());
    out.push_back(std::move(H));
  }
  return out;
}

template <class F>
std::string to_text(const Ring& R, const HomologyModule<F>& H, const std::string& base = "A") {
  if (H.is_zero()) return "0";
  std::string s = base + "^" + std::to_string(H.gen_degrees.size());
  if (H.relations.empty()) return s;
  s += " / (";
  for (size_t c = 0; c < H.relations.size(); ++c) {
    if (c) s += ", ";
    if (H.gen_degrees.size() > 1) s += "[";
    for (size_t g = 0; g < H.relations[c].size(); ++g) s += (g ? " " : "") + to_string(R, H.relations[c][g]);
    if (H.gen_degrees.size() > 1) s += "]";
  }
  return s + ")";
}

}  // namespace tate
