// Direct image complexes (T (x)_E A)_j: bounded complexes of free graded
// A-modules with polynomial differentials.

#pragma once

#include <map>
#include <sstream>

#include "tate/tate.hpp"

namespace tate {

enum class Provenance { TateDerived, HomOracle, Specialized };

template <class F>
struct PushforwardComplex {
  Ring ring;                                   // parameters carry the entries
  std::map<int, std::vector<int>> terms;       // degree i -> generator param degrees
  std::map<int, std::vector<std::vector<Poly<F>>>> diff;  // d^i[row in i+1][col in i]
  Provenance provenance = Provenance::TateDerived;

  int rank(int i) const {
    auto it = terms.find(i);
    return it == terms.end() ? 0 : static_cast<int>(it->second.size());
  }
  const Poly<F>& entry(int i, int r, int c) const { return diff.at(i)[r][c]; }
  void ensure_shapes() {
    for (auto& [i, g] : terms) {
      int rows = rank(i + 1), cols = static_cast<int>(g.size());
      auto& m = diff[i];
      m.resize(rows);
      for (auto& row : m) row.resize(cols);
    }
    for (auto it = diff.begin(); it != diff.end();) {
      if (!terms.count(it->first)) it = diff.erase(it);
      else ++it;
    }
  }
  int min_degree() const { return terms.empty() ? 0 : terms.begin()->first; }
  int max_degree() const { return terms.empty() ? 0 : terms.rbegin()->first; }
};

/// R pi_* F(j): the component of (T (x)_E A) in internal degree j, with the
/// term N^i_j placed in cohomological degree i - j. The differential is the
/// E-degree 0 part of the Tate differential.
template <class F>
PushforwardComplex<F> extract_pushforward(TateResolution<F>& T, int j = 0) {
  const Ring& R = T.ring;
  const int n = R.n();
  const bool tight = !R.has_params() || T.certificate.central_fiber_match;
  const int lo = tight ? j : j - R.np();
  if (T.min_index() > lo || T.s < (T.cap ? j + n : j))
    throw Error(ErrorCode::WindowNotComputed, "pushforward at internal degree " + std::to_string(j) +
                                                  " needs terms " + std::to_string(lo) + ".." +
                                                  std::to_string(j + n));
  PushforwardComplex<F> C;
  C.ring = R;
  std::map<int, std::vector<int>> local;  // term -> generator indices in T^i at internal j
  for (auto& [i, term] : T.left) {
    const auto& g = term.module->gens();
    for (int k = 0; k < (int)g.size(); ++k)
      if (g[k].internal == j) {
        local[i].push_back(k);
        C.terms[i - j].push_back(g[k].param);
      }
  }
  for (auto& [i, idx] : local) {
    auto next = local.find(i + 1);
    if (next == local.end() || i + 1 > T.s) continue;
    auto& target = *T.left.at(i + 1).module;
    std::map<int, int> row_of;
    for (int r = 0; r < (int)next->second.size(); ++r) row_of[next->second[r]] = r;
    auto& m = C.diff[i - j];
    m.assign(next->second.size(), std::vector<Poly<F>>(idx.size()));
    const auto& images = T.left.at(i).map->images();
    const auto& gens = T.left.at(i).module->gens();
    for (int c = 0; c < (int)idx.size(); ++c) {
      const auto& piece = target.piece(gens[idx[c]]);
      for (const auto& [p, coef] : images[idx[c]]) {
        const auto& e = piece.basis[p];
        if (e.T != 0) continue;
        auto r = row_of.find(e.gen);
        if (r == row_of.end()) continue;
        Exponents ex(R.nx(), 0);
        ex.insert(ex.end(), e.alpha.begin(), e.alpha.end());
        m[r->second][c].add_term(ex, coef);
      }
    }
  }
  C.ensure_shapes();
  return C;
}

template <class F>
bool is_unit_entry(const Poly<F>& p) {
  if (p.terms.size() != 1) return false;
  const auto& e = p.terms.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

/// Cancels unit entries by Gaussian elimination until none remain.
template <class F>
PushforwardComplex<F> minimalize(PushforwardComplex<F> C) {
  C.ensure_shapes();
  for (;;) {
    bool found = false;
    for (auto& [i, m] : C.diff) {
      for (int r = 0; r < (int)m.size() && !found; ++r)
        for (int c = 0; c < (int)m[r].size() && !found; ++c) {
          if (!is_unit_entry(m[r][c])) continue;
          found = true;
          F uinv = F(1) / m[r][c].constant_term();
          auto col = std::vector<Poly<F>>(m.size());
          for (int k = 0; k < (int)m.size(); ++k) col[k] = m[k][c];
          auto row = m[r];
          // d^i <- d^i - col * u^{-1} * row, then drop row r and column c
          for (int k = 0; k < (int)m.size(); ++k)
            for (int l = 0; l < (int)m[k].size(); ++l)
              if (!col[k].is_zero() && !row[l].is_zero()) m[k][l] = m[k][l] - (col[k] * row[l]).scaled(uinv);
          m.erase(m.begin() + r);
          for (auto& rr : m) rr.erase(rr.begin() + c);
          if (C.diff.count(i - 1)) {
            auto& prev = C.diff[i - 1];
            prev.erase(prev.begin() + c);
          }
          if (C.diff.count(i + 1))
            for (auto& rr : C.diff[i + 1]) rr.erase(rr.begin() + r);
          C.terms[i].erase(C.terms[i].begin() + c);
          C.terms[i + 1].erase(C.terms[i + 1].begin() + r);
        }
      if (found) break;
    }
    if (!found) break;
  }
  for (auto it = C.terms.begin(); it != C.terms.end();) {
    if (it->second.empty()) {
      C.diff.erase(it->first);
      it = C.terms.erase(it);
    } else {
      ++it;
    }
  }
  C.ensure_shapes();
  return C;
}

/// Rescales generators so that the first nonzero entry of every row of every
/// differential has leading coefficient 1.
template <class F>
PushforwardComplex<F> normalize_units(PushforwardComplex<F> C) {
  C.ensure_shapes();
  for (auto& [i, m] : C.diff) {
    auto next = C.diff.find(i + 1);
    for (size_t r = 0; r < m.size(); ++r) {
      auto lead = std::find_if(m[r].begin(), m[r].end(), [](const Poly<F>& p) { return !p.is_zero(); });
      if (lead == m[r].end()) continue;
      F c = leading_coefficient(C.ring, *lead);
      if (c == F(1)) continue;
      F ci = F(1) / c;
      for (auto& e : m[r]) e = e.scaled(ci);
      if (next != C.diff.end())
        for (auto& row : next->second) row[r] = row[r].scaled(c);
    }
  }
  return C;
}

/// Evaluates all entries at a parameter point.
template <class F>
PushforwardComplex<F> specialize(const PushforwardComplex<F>& C, const std::vector<F>& point) {
  PushforwardComplex<F> out;
  out.ring = C.ring.central();
  out.provenance = Provenance::Specialized;
  for (const auto& [i, g] : C.terms) out.terms[i] = std::vector<int>(g.size(), 0);
  for (const auto& [i, m] : C.diff) {
    auto& om = out.diff[i];
    om.resize(m.size());
    for (size_t r = 0; r < m.size(); ++r)
      for (const auto& e : m[r]) om[r].push_back(specialize(C.ring, e, point));
  }
  return out;
}

/// Scalar matrix of d^i over a field base (entries must be constants).
template <class F>
ScalarMatrix<F> scalar_differential(const PushforwardComplex<F>& C, int i) {
  const int rows = C.rank(i + 1), cols = C.rank(i);
  ScalarMatrix<F> m = zero_matrix<F>(rows, cols);
  auto it = C.diff.find(i);
  if (it == C.diff.end()) return m;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = it->second[r][c].constant_term();
  return m;
}

/// Homology dimensions of a complex over a field.
template <class F>
std::map<int, int> homology_ranks(const PushforwardComplex<F>& C) {
  std::map<int, int> h;
  for (int i = C.min_degree() - 1; i <= C.max_degree() + 1; ++i) {
    int rk_out = C.rank(i) ? (int)rank<F>(scalar_differential(C, i)) : 0;
    int rk_in = C.rank(i - 1) && C.rank(i) ? (int)rank<F>(scalar_differential(C, i - 1)) : 0;
    int v = C.rank(i) - rk_out - rk_in;
    if (v) h[i] = v;
  }
  return h;
}

template <class F>
bool composes_to_zero(const PushforwardComplex<F>& C) {
  for (const auto& [i, m] : C.diff) {
    auto nx = C.diff.find(i + 1);
    if (nx == C.diff.end()) continue;
    const auto& m2 = nx->second;
    for (size_t r = 0; r < m2.size(); ++r)
      for (int c = 0; c < C.rank(i); ++c) {
        Poly<F> acc;
        for (size_t k = 0; k < m.size(); ++k) acc = acc + m2[r][k] * m[k][c];
        if (!acc.is_zero()) return false;
      }
  }
  return true;
}

/// "0 -> A^1 --(a)--> A^1 -> 0" style display, one matrix per differential.
template <class F>
std::string to_text(const PushforwardComplex<F>& C, const std::string& base = "A") {
  if (C.terms.empty()) return "0\n";
  std::ostringstream os;
  os << "0";
  for (const auto& [i, g] : C.terms) {
    os << (C.rank(i - 1) > 0 && C.diff.count(i - 1) ? " " : " -> ") << base << "^" << g.size() << "[" << i << "]";
    auto it = C.diff.find(i);
    if (it != C.diff.end() && C.rank(i + 1) > 0) {
      os << " --(";
      for (size_t r = 0; r < it->second.size(); ++r) {
        if (r) os << "; ";
        for (size_t c = 0; c < it->second[r].size(); ++c) os << (c ? " " : "") << to_string(C.ring, it->second[r][c]);
      }
      os << ")-->";
    }
  }
  os << " -> 0\n";
  return os.str();
}

}  // namespace tate
