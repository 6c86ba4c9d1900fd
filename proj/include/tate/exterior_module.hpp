// Bigraded modules over E (x) A, handled one bidegree at a time.

#pragma once

#include <map>
#include <memory>
#include <vector>

#include "tate/graded_piece.hpp"

namespace tate {

/// A bigraded E(x)A-module known through its finite-dimensional pieces and
/// the actions of e_i (degree (-1,0)) and a_k (degree (0,w_k)).
template <class F>
class Ambient {
 public:
  virtual ~Ambient() = default;
  virtual int dim(Bidegree b) = 0;
  virtual SparseVec<F> act_e(int i, Bidegree b, const SparseVec<F>& v) = 0;
  virtual SparseVec<F> act_a(int k, Bidegree b, const SparseVec<F>& v) = 0;
  virtual int internal_min() const = 0;
  virtual int internal_max() const = 0;
  virtual int param_min() const = 0;
};

template <class F>
void sparse_add(std::map<int, F>& acc, int i, const F& c) {
  auto [it, fresh] = acc.emplace(i, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

template <class F>
SparseVec<F> from_map(const std::map<int, F>& m) {
  SparseVec<F> out;
  for (const auto& [i, c] : m)
    if (!c.is_zero()) out.emplace_back(i, c);
  return out;
}

/// E (x)_A M_d; the piece of bidegree (u, w) is the sum over |T| = d - u of
/// e_T (x) M_(d,w), blocks ordered by colex T.
template <class F>
class ExteriorTensor : public Ambient<F> {
 public:
  ExteriorTensor(GradedModule<F>& M, int d) : M_(M), d_(d), nv_(M.ring().nx()) {}

  int degree() const { return d_; }
  GradedModule<F>& module() { return M_; }

  int dim(Bidegree b) override {
    int k = d_ - b.internal;
    if (k < 0 || k > nv_) return 0;
    return static_cast<int>(ext_subsets(nv_, k).size()) * M_.dim({d_, b.param});
  }
  /// Position of block T inside the piece of internal degree d - |T|.
  int block_of(ExtMask T) const {
    const auto& subs = ext_subsets(nv_, ext_degree(T));
    return static_cast<int>(std::lower_bound(subs.begin(), subs.end(), T) - subs.begin());
  }
  ExtMask block_mask(Bidegree b, int index, int* m_index) {
    int dm = M_.dim({d_, b.param});
    const auto& subs = ext_subsets(nv_, d_ - b.internal);
    *m_index = index % dm;
    return subs[index / dm];
  }

  SparseVec<F> act_e(int i, Bidegree b, const SparseVec<F>& v) override {
    int dm = M_.dim({d_, b.param});
    std::map<int, F> out;
    for (const auto& [idx, c] : v) {
      int m;
      ExtMask T = block_mask(b, idx, &m);
      int sg = ext_sign(ExtMask(1) << i, T);
      if (sg == 0) continue;
      int blk = block_of(T | (ExtMask(1) << i));
      sparse_add(out, blk * dm + m, sg > 0 ? c : -c);
    }
    return from_map(out);
  }
  SparseVec<F> act_a(int k, Bidegree b, const SparseVec<F>& v) override {
    const auto& mat = M_.mult_a(k, {d_, b.param});
    int dt = static_cast<int>(mat.rows());
    std::map<int, F> out;
    for (const auto& [idx, c] : v) {
      int m;
      ExtMask T = block_mask(b, idx, &m);
      int blk = block_of(T);
      for (int r = 0; r < dt; ++r)
        if (!mat(r, m).is_zero()) sparse_add(out, blk * dt + r, c * mat(r, m));
    }
    return from_map(out);
  }
  int internal_min() const override { return d_ - nv_; }
  int internal_max() const override { return d_; }
  int param_min() const override { return M_.min_param(); }

 private:
  GradedModule<F>& M_;
  int d_;
  int nv_;
};

/// The R-strand differential E(x)M_d -> E(x)M_{d+1}, e_T (x) m -> sum_i e_T e_i (x) x_i m,
/// as sparse columns at bidegree b.
template <class F>
std::vector<SparseVec<F>> strand_columns(ExteriorTensor<F>& src, ExteriorTensor<F>& dst, Bidegree b) {
  GradedModule<F>& M = src.module();
  const int nv = M.ring().nx(), d = src.degree();
  const int dt = M.dim({d + 1, b.param});
  const int n = src.dim(b);
  std::vector<SparseVec<F>> cols(n);
  for (int idx = 0; idx < n; ++idx) {
    int m;
    ExtMask T = src.block_mask(b, idx, &m);
    std::map<int, F> out;
    for (int i = 0; i < nv; ++i) {
      int sg = ext_sign(T, ExtMask(1) << i);
      if (sg == 0) continue;
      const auto& X = M.mult_x(i, {d, b.param});
      int blk = dst.block_of(T | (ExtMask(1) << i));
      for (int r = 0; r < dt; ++r)
        if (!X(r, m).is_zero()) sparse_add(out, blk * dt + r, sg > 0 ? X(r, m) : -X(r, m));
    }
    cols[idx] = from_map(out);
  }
  return cols;
}

struct FreeBasisElement {
  int gen;
  ExtMask T;
  Exponents alpha;
};

/// Free E(x)A-module on generators of given bidegrees. Piece (u, w) has
/// basis e_T a^alpha g with j_g - |T| = u and t_g + wdeg(alpha) = w, ordered
/// by generator, then colex T, then alpha.
template <class F>
class FreeEAModule : public Ambient<F> {
 public:
  struct Piece {
    std::vector<FreeBasisElement> basis;
    std::map<std::tuple<int, ExtMask, Exponents>, int> index;
  };

  FreeEAModule(const Ring& R, std::vector<Bidegree> gens) : R_(R), gens_(std::move(gens)) {}

  const std::vector<Bidegree>& gens() const { return gens_; }
  int rank() const { return static_cast<int>(gens_.size()); }
  const Ring& ring() const { return R_; }

  const Piece& piece(Bidegree b) {
    auto it = cache_.find(b);
    if (it != cache_.end()) return *it->second;
    auto p = std::make_unique<Piece>();
    for (int g = 0; g < rank(); ++g) {
      int k = gens_[g].internal - b.internal;
      int t = b.param - gens_[g].param;
      if (k < 0 || k > R_.nx() || t < 0) continue;
      if (!R_.has_params() && t != 0) continue;
      auto alphas = R_.has_params() ? weighted_monomials(R_.weights, t) : std::vector<Exponents>{{}};
      for (ExtMask T : ext_subsets(R_.nx(), k))
        for (const auto& a : alphas) {
          p->index.emplace(std::make_tuple(g, T, a), static_cast<int>(p->basis.size()));
          p->basis.push_back({g, T, a});
        }
    }
    auto& slot = cache_[b];
    slot = std::move(p);
    return *slot;
  }
  int find(Bidegree b, int g, ExtMask T, const Exponents& a) {
    const auto& p = piece(b);
    auto it = p.index.find({g, T, a});
    return it == p.index.end() ? -1 : it->second;
  }

  int dim(Bidegree b) override { return static_cast<int>(piece(b).basis.size()); }

  SparseVec<F> act_e(int i, Bidegree b, const SparseVec<F>& v) override {
    Bidegree tb = b + Bidegree{-1, 0};
    const auto& src = piece(b);
    std::map<int, F> out;
    for (const auto& [idx, c] : v) {
      const auto& e = src.basis[idx];
      int sg = ext_sign(ExtMask(1) << i, e.T);
      if (sg == 0) continue;
      sparse_add(out, find(tb, e.gen, e.T | (ExtMask(1) << i), e.alpha), sg > 0 ? c : -c);
    }
    return from_map(out);
  }
  SparseVec<F> act_a(int k, Bidegree b, const SparseVec<F>& v) override {
    Bidegree tb = b + Bidegree{0, R_.weights[k]};
    const auto& src = piece(b);
    std::map<int, F> out;
    for (const auto& [idx, c] : v) {
      const auto& e = src.basis[idx];
      Exponents a = e.alpha;
      a[k] += 1;
      sparse_add(out, find(tb, e.gen, e.T, a), c);
    }
    return from_map(out);
  }
  int internal_min() const override {
    int m = 0;
    for (size_t g = 0; g < gens_.size(); ++g)
      m = g ? std::min(m, gens_[g].internal) : gens_[g].internal;
    return m - R_.nx();
  }
  int internal_max() const override {
    int m = 0;
    for (size_t g = 0; g < gens_.size(); ++g)
      m = g ? std::max(m, gens_[g].internal) : gens_[g].internal;
    return m;
  }
  int param_min() const override {
    int m = 0;
    for (size_t g = 0; g < gens_.size(); ++g) m = g ? std::min(m, gens_[g].param) : gens_[g].param;
    return m;
  }

 private:
  Ring R_;
  std::vector<Bidegree> gens_;
  std::map<Bidegree, std::unique_ptr<Piece>> cache_;
};

/// Homomorphism from a free module to an ambient module fixed by generator
/// images; columns of its piece matrices are e_T a^alpha phi(g).
template <class F>
class FreeMap {
 public:
  FreeMap(FreeEAModule<F>& src, Ambient<F>& dst, std::vector<SparseVec<F>> images)
      : src_(src), dst_(dst), images_(std::move(images)) {}

  FreeEAModule<F>& source() { return src_; }
  Ambient<F>& target() { return dst_; }
  const std::vector<SparseVec<F>>& images() const { return images_; }
  void set_image(int g, SparseVec<F> v) {
    images_[g] = std::move(v);
    memo_.clear();
  }

  const SparseVec<F>& image(int g, ExtMask T, const Exponents& a) {
    auto key = std::make_tuple(g, T, a);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    SparseVec<F> v;
    const Ring& R = src_.ring();
    Bidegree gb = src_.gens()[g];
    int last = -1;
    for (int k = 0; k < (int)a.size(); ++k)
      if (a[k] > 0) last = k;
    if (last >= 0) {
      Exponents lower = a;
      lower[last] -= 1;
      int w = 0;
      for (int k = 0; k < (int)lower.size(); ++k) w += lower[k] * R.weights[k];
      Bidegree b{gb.internal - ext_degree(T), gb.param + w};
      v = dst_.act_a(last, b, image(g, T, lower));
    } else if (T != 0) {
      int first = std::countr_zero(T);
      ExtMask rest = T & (T - 1);
      Bidegree b = gb + Bidegree{-ext_degree(rest), 0};
      v = dst_.act_e(first, b, image(g, rest, a));
    } else {
      v = images_[g];
    }
    return memo_.emplace(key, std::move(v)).first->second;
  }

  std::vector<SparseVec<F>> columns(Bidegree b) {
    const auto& p = src_.piece(b);
    std::vector<SparseVec<F>> cols;
    cols.reserve(p.basis.size());
    for (const auto& e : p.basis) cols.push_back(image(e.gen, e.T, e.alpha));
    return cols;
  }

 private:
  FreeEAModule<F>& src_;
  Ambient<F>& dst_;
  std::vector<SparseVec<F>> images_;
  std::map<std::tuple<int, ExtMask, Exponents>, SparseVec<F>> memo_;
};

}  // namespace tate
