// Tate resolutions over E (x) A: the corner module P^s inside E (x) M_{s+1},
// its minimal free resolution computed bidegree by bidegree, and the R-strand
// to the right.

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>

#include "tate/exterior_module.hpp"
#include "tate/regularity.hpp"

namespace tate {

enum class CertificateStatus { Certified, HeuristicAtParamBound };

struct ExactnessCertificate {
  CertificateStatus status = CertificateStatus::Certified;
  int checked_bidegrees = 0;
  int rank_failures = 0;
  int param_bound = 0;
  bool central_fiber_match = true;
  std::vector<std::string> notes;
};

/// Generators of one term with their bidegrees (internal j, param t).
struct TermShape {
  std::vector<Bidegree> gens;
  int rank_at(int j) const {
    int c = 0;
    for (const auto& g : gens) c += g.internal == j;
    return c;
  }
};

struct BettiDiagram {
  std::map<std::pair<int, int>, int> ranks;  // (i, j) -> rank N^i_j
  int min_col = 0, max_col = 0;
  int at(int i, int j) const {
    auto it = ranks.find({i, j});
    return it == ranks.end() ? 0 : it->second;
  }
  /// Row r = i - j at column i.
  int row_col(int r, int i) const { return at(i, i - r); }
  int min_row() const {
    int m = INT_MAX;
    for (const auto& [k, v] : ranks)
      if (v) m = std::min(m, k.first - k.second);
    return m == INT_MAX ? 0 : m;
  }
  int max_row() const {
    int m = INT_MIN;
    for (const auto& [k, v] : ranks)
      if (v) m = std::max(m, k.first - k.second);
    return m == INT_MIN ? 0 : m;
  }
  bool operator==(const BettiDiagram& o) const {
    auto nz = [](const BettiDiagram& b) {
      std::map<std::pair<int, int>, int> r;
      for (const auto& [k, v] : b.ranks)
        if (v) r[k] = v;
      return r;
    };
    return nz(*this) == nz(o) && min_col == o.min_col && max_col == o.max_col;
  }
};

struct TateOptions {
  std::optional<int> corner;       // defaults to max(0, reg M)
  int left_steps = -1;             // terms T^s, ..., T^{s-left+1}; default s + n + 2
  int right_steps = 1;             // strand terms E(x)M_{s+1}, ..., up to s + right
  std::optional<int> param_bound;  // default 2 * (max param degree) + 2
  std::optional<int> reg_degree_bound;
  bool check_window = true;
};

/// One computed term T^i (i <= s): a free module and its map to T^{i+1}
/// (to E(x)M_{s+1} for i = s).
template <class F>
struct LeftTerm {
  int index;
  std::unique_ptr<FreeEAModule<F>> module;
  std::unique_ptr<FreeMap<F>> map;
};

template <class F>
class TateResolution {
 public:
  Ring ring;
  int s = 0;
  int param_bound = 0;
  std::shared_ptr<GradedModule<F>> module;
  std::unique_ptr<ExteriorTensor<F>> corner_target;  // E (x) M_{s+1}
  std::unique_ptr<ExteriorTensor<F>> corner_next;    // E (x) M_{s+2}
  std::map<int, LeftTerm<F>> left;                   // i <= s
  std::map<int, TermShape> right;                    // i > s: A-generators of M_i
  std::unique_ptr<FreeEAModule<F>> cap;              // T^{s+1} of a finite window (no corner)
  ExactnessCertificate certificate;

  int min_index() const { return left.empty() ? s + 1 : left.begin()->first; }
  int max_index() const { return right.empty() ? s : right.rbegin()->first; }

  TermShape shape(int i) const {
    if (i <= s) {
      auto it = left.find(i);
      if (it == left.end()) throw Error(ErrorCode::WindowNotComputed, "term " + std::to_string(i));
      return TermShape{it->second.module->gens()};
    }
    auto it = right.find(i);
    if (it == right.end()) throw Error(ErrorCode::WindowNotComputed, "term " + std::to_string(i));
    return it->second;
  }

  BettiDiagram betti() const {
    BettiDiagram b;
    b.min_col = min_index();
    b.max_col = max_index();
    for (int i = b.min_col; i <= b.max_col; ++i)
      for (const auto& g : shape(i).gens) b.ranks[{i, g.internal}] += 1;
    return b;
  }

  /// Generator truncation T_{<=t}: generator blocks with internal degree > t removed.
  BettiDiagram truncated_betti(int t) const {
    BettiDiagram b = betti();
    for (auto& [k, v] : b.ranks)
      if (k.second > t) v = 0;
    return b;
  }
};

namespace detail {

/// Minimal generators of a bigraded subspace Q of an ambient module:
/// at each bidegree, a complement of e_i Q_{b+(1,0)} + a_k Q_{b-(0,w_k)}
/// inside Q_b, taken in the order of the given basis vectors.
template <class F>
std::vector<std::pair<Bidegree, SparseVec<F>>> minimal_generators(
    Ambient<F>& amb, const Ring& R, const std::map<Bidegree, std::vector<SparseVec<F>>>& Q) {
  std::vector<std::pair<Bidegree, SparseVec<F>>> out;
  for (const auto& [b, basis] : Q) {
    if (basis.empty()) continue;
    const int dim = amb.dim(b);
    SparseEchelon<F> span(dim);
    auto above = Q.find(b + Bidegree{1, 0});
    if (above != Q.end())
      for (const auto& q : above->second)
        for (int i = 0; i < R.nx(); ++i) span.insert(to_dense(amb.act_e(i, above->first, q), dim));
    for (int k = 0; k < R.np(); ++k) {
      auto below = Q.find(b - Bidegree{0, R.weights[k]});
      if (below == Q.end()) continue;
      for (const auto& q : below->second) span.insert(to_dense(amb.act_a(k, below->first, q), dim));
    }
    for (const auto& q : basis)
      if (span.insert(to_dense(q, dim))) out.emplace_back(b, q);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

}  // namespace detail

/// Builds the left part T^s, ..., T^{s-left+1} and the strand to the right
/// for a fixed param bound P. The certificate records per-bidegree rank checks.
template <class F>
std::unique_ptr<TateResolution<F>> build_tate(std::shared_ptr<GradedModule<F>> G, int s, int left_steps,
                                              int right_steps, int P, bool check_window) {
  auto T = std::make_unique<TateResolution<F>>();
  const Ring& R = G->ring();
  T->ring = R;
  T->s = s;
  T->module = G;
  T->param_bound = P;
  const int nv = R.nx(), n = R.n();
  auto& cert = T->certificate;
  cert.param_bound = P;

  T->corner_target = std::make_unique<ExteriorTensor<F>>(*G, s + 1);
  T->corner_next = std::make_unique<ExteriorTensor<F>>(*G, s + 2);
  const int pmin = G->min_param();
  const int ptop = R.has_params() ? P : 0;

  // Q = P^s = ker(E(x)M_{s+1} -> E(x)M_{s+2}).
  std::map<Bidegree, std::vector<SparseVec<F>>> Q;
  for (int u = s + 1 - nv; u <= s + 1; ++u)
    for (int w = pmin; w <= ptop; ++w) {
      Bidegree b{u, w};
      Q[b] = sparse_kernel(strand_columns(*T->corner_target, *T->corner_next, b), T->corner_next->dim(b));
    }

  Ambient<F>* amb = T->corner_target.get();
  for (int step = 0; step < left_steps; ++step) {
    const int i = s - step;
    auto gens = detail::minimal_generators(*amb, R, Q);
    std::vector<Bidegree> degs;
    std::vector<SparseVec<F>> images;
    for (auto& [b, v] : gens) {
      if (check_window) {
        int hi = R.has_params() ? std::min(s, i + R.np()) : i;
        if (b.internal < i - n || b.internal > hi)
          throw Error(ErrorCode::WindowViolation, "generator of T^" + std::to_string(i) + " in internal degree " +
                                                      std::to_string(b.internal));
      }
      degs.push_back(b);
      images.push_back(std::move(v));
    }
    LeftTerm<F> term;
    term.index = i;
    term.module = std::make_unique<FreeEAModule<F>>(R, degs);
    term.map = std::make_unique<FreeMap<F>>(*term.module, *amb, std::move(images));
    FreeEAModule<F>& Fm = *term.module;
    FreeMap<F>& phi = *term.map;

    // Kernel of T^i -> T^{i+1}; its rank must equal dim Q at every bidegree.
    std::map<Bidegree, std::vector<SparseVec<F>>> nextQ;
    std::set<Bidegree> window;
    for (const auto& [b, basis] : Q) window.insert(b);
    if (Fm.rank() > 0)
      for (int u = Fm.internal_min(); u <= Fm.internal_max(); ++u)
        for (int w = Fm.param_min(); w <= ptop; ++w) window.insert({u, w});
    for (const Bidegree& b : window) {
      int rk = 0;
      auto ker = sparse_kernel(phi.columns(b), amb->dim(b), &rk);
      auto q = Q.find(b);
      if (q != Q.end()) {
        ++cert.checked_bidegrees;
        if (rk != (int)q->second.size()) {
          ++cert.rank_failures;
          cert.notes.push_back("rank defect at T^" + std::to_string(i + 1) + " bidegree " + b.to_string());
        }
      }
      if (step + 1 < left_steps && Fm.dim(b) > 0) nextQ[b] = std::move(ker);
    }
    T->left.emplace(i, std::move(term));
    amb = T->left.at(i).module.get();
    Q = std::move(nextQ);
  }

  for (int i = s + 1; i <= s + right_steps; ++i) {
    TermShape sh;
    for (int t : G->a_generator_degrees(i)) sh.gens.push_back({i, t});
    T->right.emplace(i, std::move(sh));
  }
  if (cert.rank_failures) cert.status = CertificateStatus::HeuristicAtParamBound;
  return T;
}

template <class F>
int default_corner(GradedModule<F>& G, const TateOptions& opts, int param_bound) {
  if (opts.corner) return *opts.corner;
  RegularityOptions ro;
  ro.param_bound = param_bound;
  if (opts.reg_degree_bound) ro.degree_bound = opts.reg_degree_bound;
  return std::max(0, regularity(G, ro).value);
}

/// Tate resolution with the corner at s. Over a polynomial base the param
/// window grows from the presentation's top param degree up to the bound
/// until the generator counts agree with the central fiber's resolution;
/// otherwise the result is flagged HeuristicAtParamBound.
template <class F>
std::unique_ptr<TateResolution<F>> splice_tate(const ModulePresentation<F>& M, TateOptions opts = {}) {
  auto G = std::make_shared<GradedModule<F>>(M);
  const Ring& R = M.ring;
  const int bound = opts.param_bound.value_or(2 * M.max_param_degree() + 2);
  const int s = default_corner(*G, opts, bound);
  const int left = opts.left_steps >= 0 ? opts.left_steps : s + R.n() + 2;
  if (!R.has_params()) return build_tate(G, s, left, opts.right_steps, 0, opts.check_window);

  auto C = central_fiber(M);
  auto central = build_tate(std::make_shared<GradedModule<F>>(C), s, left, opts.right_steps, 0, false);
  const BettiDiagram target = central->betti();
  int P = std::min(bound, std::max(0, M.max_param_degree()));
  std::unique_ptr<TateResolution<F>> T;
  for (;; ++P) {
    T = build_tate(G, s, left, opts.right_steps, P, opts.check_window);
    bool match = T->betti() == target;
    T->certificate.central_fiber_match = match;
    if (match) {
      T->certificate.notes.push_back("generator counts agree with the central fiber at param bound " +
                                     std::to_string(P));
      return T;
    }
    if (P >= bound) break;
  }
  T->certificate.status = CertificateStatus::HeuristicAtParamBound;
  T->certificate.notes.push_back("generator counts differ from the central fiber up to param bound " +
                                 std::to_string(bound));
  return T;
}

/// d o d = 0 for every pair of consecutive computed free terms, and for
/// T^s -> E(x)M_{s+1} -> E(x)M_{s+2}.
template <class F>
bool composes_to_zero(TateResolution<F>& T) {
  for (auto& [i, term] : T.left) {
    auto& src = *term.module;
    const auto& imgs = term.map->images();
    for (int g = 0; g < src.rank(); ++g) {
      const Bidegree b = src.gens()[g];
      std::map<int, F> acc;
      if (i == T.s && !T.corner_target) break;
      if (i == T.s) {
        auto cols = strand_columns(*T.corner_target, *T.corner_next, b);
        for (const auto& [p, c] : imgs[g])
          for (const auto& [r, v] : cols[p]) sparse_add(acc, r, c * v);
      } else {
        auto& next = T.left.at(i + 1);
        const auto& piece = next.module->piece(b);
        for (const auto& [p, c] : imgs[g]) {
          const auto& e = piece.basis[p];
          for (const auto& [r, v] : next.map->image(e.gen, e.T, e.alpha)) sparse_add(acc, r, c * v);
        }
      }
      if (!acc.empty()) return false;
    }
  }
  return true;
}

/// No differential entry of bidegree (0,0): no generator image involves
/// another generator with a nonzero scalar.
template <class F>
bool is_minimal(TateResolution<F>& T) {
  for (auto& [i, term] : T.left) {
    if (i == T.s) continue;
    auto& next = *T.left.at(i + 1).module;
    const auto& src = *term.module;
    const auto& imgs = term.map->images();
    for (int g = 0; g < src.rank(); ++g) {
      const auto& piece = next.piece(src.gens()[g]);
      for (const auto& [p, c] : imgs[g]) {
        const auto& e = piece.basis[p];
        if (e.T == 0 && std::all_of(e.alpha.begin(), e.alpha.end(), [](int a) { return a == 0; })) return false;
      }
    }
  }
  return true;
}

}  // namespace tate
