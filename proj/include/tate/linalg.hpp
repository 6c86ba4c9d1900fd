// Exact dense and incremental sparse linear algebra over any field type.

#pragma once

#include <Eigen/Core>
#include <map>
#include <optional>
#include <vector>

#include "tate/field.hpp"

namespace tate {

template <class F>
using ScalarMatrix = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using ScalarVector = Eigen::Matrix<F, Eigen::Dynamic, 1>;

template <class F>
ScalarMatrix<F> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  ScalarMatrix<F> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = F(0);
  return m;
}

template <class F>
ScalarMatrix<F> identity_matrix(Eigen::Index n) {
  ScalarMatrix<F> m = zero_matrix<F>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = F(1);
  return m;
}

template <class F>
bool is_zero_matrix(const ScalarMatrix<F>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

/// Product that skips zero entries; Eigen's lazy product would sum
/// expression objects for non-POD scalars.
template <class F>
ScalarMatrix<F> multiply(const ScalarMatrix<F>& a, const ScalarMatrix<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  ScalarMatrix<F> c = zero_matrix<F>(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const F& x = a(i, k);
      if (x.is_zero()) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

template <class F>
struct Echelon {
  ScalarMatrix<F> reduced;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form. Pivot search takes the leftmost column with a
/// nonzero entry and, inside it, the first nonzero row.
template <class F>
Echelon<F> rref(ScalarMatrix<F> m) {
  Echelon<F> out;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    F inv = F(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      F f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class F>
Eigen::Index rank(const ScalarMatrix<F>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Forward elimination only.
  ScalarMatrix<F> a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    F inv = F(1) / a(r, c);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      if (a(i, c).is_zero()) continue;
      F f = a(i, c) * inv;
      for (Eigen::Index j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

/// Columns form a basis of the right kernel {v : m v = 0}.
template <class F>
ScalarMatrix<F> kernel_basis(const ScalarMatrix<F>& m) {
  const Eigen::Index cols = m.cols();
  Echelon<F> e = rref<F>(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  ScalarMatrix<F> k = zero_matrix<F>(cols, cols - (Eigen::Index)e.pivots.size());
  Eigen::Index out = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    k(f, out) = F(1);
    for (size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], out) = -e.reduced(r, f);
    ++out;
  }
  return k;
}

/// Some x with a x = b, if one exists.
template <class F>
std::optional<ScalarVector<F>> solve(const ScalarMatrix<F>& a, const ScalarVector<F>& b) {
  ScalarMatrix<F> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  Echelon<F> e = rref<F>(aug);
  ScalarVector<F> x(a.cols());
  for (Eigen::Index i = 0; i < a.cols(); ++i) x(i) = F(0);
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x(e.pivots[r]) = e.reduced(r, a.cols());
  }
  return x;
}

/// Solves a X = B column by column; throws when some column is not in the image.
template <class F>
ScalarMatrix<F> solve_columns(const ScalarMatrix<F>& a, const ScalarMatrix<F>& b) {
  ScalarMatrix<F> aug(a.rows(), a.cols() + b.cols());
  aug.leftCols(a.cols()) = a;
  aug.rightCols(b.cols()) = b;
  Echelon<F> e = rref<F>(aug);
  ScalarMatrix<F> x = zero_matrix<F>(a.cols(), b.cols());
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) throw std::runtime_error("solve_columns: inconsistent system");
    for (Eigen::Index j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
  }
  return x;
}

/// Columns of m that form a basis of its column space (leftmost choice).
template <class F>
std::vector<Eigen::Index> independent_columns(const ScalarMatrix<F>& m) {
  return rref<F>(m).pivots;
}

/// Incrementally grown row space. Each stored row has a distinct pivot (its
/// first nonzero index) with value 1; reduction walks indices in ascending
/// order so a reduced vector vanishes on every pivot position.
template <class F>
class SparseEchelon {
 public:
  using SparseRow = std::vector<std::pair<int, F>>;

  explicit SparseEchelon(int dim = 0) : dim_(dim) {}
  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool has_pivot(int i) const { return rows_.count(i) != 0; }
  const std::map<int, SparseRow>& rows() const { return rows_; }

  /// Reduces v in place; returns the first surviving index or -1.
  int reduce(std::vector<F>& v) const {
    int first = -1;
    for (int i = 0; i < dim_; ++i) {
      if (v[i].is_zero()) continue;
      auto it = rows_.find(i);
      if (it == rows_.end()) {
        if (first < 0) first = i;
        continue;
      }
      F f = v[i];
      for (const auto& [j, c] : it->second) v[j] -= f * c;
    }
    return first;
  }

  /// Adds v to the span; returns true if the rank grew.
  bool insert(std::vector<F> v) {
    int p = reduce(v);
    if (p < 0) return false;
    F inv = F(1) / v[p];
    SparseRow row;
    for (int j = p; j < dim_; ++j)
      if (!v[j].is_zero()) row.emplace_back(j, v[j] * inv);
    rows_.emplace(p, std::move(row));
    return true;
  }

  std::vector<int> non_pivots() const {
    std::vector<int> out;
    for (int i = 0; i < dim_; ++i)
      if (!has_pivot(i)) out.push_back(i);
    return out;
  }

 private:
  int dim_;
  std::map<int, SparseRow> rows_;
};

template <class F>
using SparseVec = std::vector<std::pair<int, F>>;

template <class F>
SparseVec<F> to_sparse(const std::vector<F>& v) {
  SparseVec<F> out;
  for (int i = 0; i < (int)v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

template <class F>
std::vector<F> to_dense(const SparseVec<F>& v, int dim) {
  std::vector<F> out(dim, F(0));
  for (const auto& [i, c] : v) out[i] += c;
  return out;
}

/// Kernel of the map whose j-th column is cols[j] (vectors in F^nrows).
/// Columns are processed left to right; each dependency found yields one
/// kernel vector, so the basis is reproducible. Also reports the rank.
template <class F>
std::vector<SparseVec<F>> sparse_kernel(const std::vector<SparseVec<F>>& cols, int nrows, int* rank_out = nullptr) {
  struct Row {
    SparseVec<F> img, combo;
  };
  const int ncols = static_cast<int>(cols.size());
  std::map<int, Row> rows;
  std::vector<SparseVec<F>> kernel;
  std::vector<F> acc(nrows, F(0)), comb(ncols, F(0));
  for (int j = 0; j < ncols; ++j) {
    for (const auto& [i, c] : cols[j]) acc[i] += c;
    comb[j] = F(1);
    int first = -1;
    for (int i = 0; i < nrows; ++i) {
      if (acc[i].is_zero()) continue;
      auto it = rows.find(i);
      if (it == rows.end()) {
        if (first < 0) first = i;
        continue;
      }
      F f = acc[i];
      for (const auto& [k, c] : it->second.img) acc[k] -= f * c;
      for (const auto& [k, c] : it->second.combo) comb[k] -= f * c;
    }
    if (first < 0) {
      SparseVec<F> kv;
      for (int k = 0; k <= j; ++k)
        if (!comb[k].is_zero()) kv.emplace_back(k, comb[k]);
      kernel.push_back(std::move(kv));
    } else {
      Row r;
      F inv = F(1) / acc[first];
      for (int k = first; k < nrows; ++k)
        if (!acc[k].is_zero()) r.img.emplace_back(k, acc[k] * inv);
      for (int k = 0; k <= j; ++k)
        if (!comb[k].is_zero()) r.combo.emplace_back(k, comb[k] * inv);
      rows.emplace(first, std::move(r));
    }
    for (int k = 0; k < nrows; ++k) acc[k] = F(0);
    for (int k = 0; k <= j; ++k) comb[k] = F(0);
  }
  if (rank_out) *rank_out = static_cast<int>(rows.size());
  return kernel;
}

/// One solution x of sum_j x_j cols[j] = rhs (free variables set to 0).
template <class F>
std::optional<SparseVec<F>> sparse_solve(const std::vector<SparseVec<F>>& cols, int nrows, const SparseVec<F>& rhs) {
  struct Row {
    SparseVec<F> img, combo;
  };
  const int ncols = static_cast<int>(cols.size());
  std::map<int, Row> rows;
  std::vector<F> acc(nrows, F(0)), comb(ncols, F(0));
  auto eliminate = [&] {
    int first = -1;
    for (int i = 0; i < nrows; ++i) {
      if (acc[i].is_zero()) continue;
      auto it = rows.find(i);
      if (it == rows.end()) {
        if (first < 0) first = i;
        continue;
      }
      F f = acc[i];
      for (const auto& [k, c] : it->second.img) acc[k] -= f * c;
      for (const auto& [k, c] : it->second.combo) comb[k] -= f * c;
    }
    return first;
  };
  for (int j = 0; j < ncols; ++j) {
    for (const auto& [i, c] : cols[j]) acc[i] += c;
    comb[j] = F(1);
    int first = eliminate();
    if (first >= 0) {
      Row r;
      F inv = F(1) / acc[first];
      for (int k = first; k < nrows; ++k)
        if (!acc[k].is_zero()) r.img.emplace_back(k, acc[k] * inv);
      for (int k = 0; k <= j; ++k)
        if (!comb[k].is_zero()) r.combo.emplace_back(k, comb[k] * inv);
      rows.emplace(first, std::move(r));
    }
    for (int k = 0; k < nrows; ++k) acc[k] = F(0);
    for (int k = 0; k <= j; ++k) comb[k] = F(0);
  }
  for (const auto& [i, c] : rhs) acc[i] += c;
  if (eliminate() >= 0) return std::nullopt;
  SparseVec<F> x;
  for (int k = 0; k < ncols; ++k)
    if (!comb[k].is_zero()) x.emplace_back(k, -comb[k]);
  return x;
}

}  // namespace tate
