// Text and JSON renderings of engine results. Both carry the same numbers.

#pragma once

#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "tate/p1_strata.hpp"
#include "tate/pushforward.hpp"

namespace tate {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Columns min_col..max_col; row i - j on the vertical axis, highest first.
inline std::string betti_text(const BettiDiagram& b) {
  const int lo = std::min(b.min_row(), 0), hi = b.max_row();
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"i-j\\i"};
  for (int i = b.min_col; i <= b.max_col; ++i) head.push_back(std::to_string(i));
  cells.push_back(head);
  for (int r = hi; r >= lo; --r) {
    std::vector<std::string> row{std::to_string(r)};
    for (int i = b.min_col; i <= b.max_col; ++i) row.push_back(b.row_col(r, i) ? std::to_string(b.row_col(r, i)) : ".");
    cells.push_back(row);
  }
  size_t w = 0;
  for (const auto& row : cells)
    for (size_t k = 1; k < row.size(); ++k) w = std::max(w, row[k].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    os << std::left << std::setw(6) << row[0] << std::right;
    for (size_t k = 1; k < row.size(); ++k) os << " " << std::setw((int)w) << row[k];
    os << "\n";
  }
  return os.str();
}

inline json betti_json(const BettiDiagram& b) {
  json rows = json::array();
  for (int r = b.max_row(); r >= std::min(b.min_row(), 0); --r) {
    json e = json::array();
    for (int i = b.min_col; i <= b.max_col; ++i) e.push_back(b.row_col(r, i));
    rows.push_back({{"row", r}, {"entries", e}});
  }
  return {{"schema", std::string("tate.betti/") + kSchemaVersion},
          {"minColumn", b.min_col},
          {"maxColumn", b.max_col},
          {"rows", rows}};
}

/// h^q(F(d)) = N^{q+d}_d for d in the computed column range; terms right of
/// the range lie past the corner and carry no higher cohomology.
struct CohomologyTable {
  int n = 0, dmin = 0, dmax = 0;
  std::map<std::pair<int, int>, int> h;  // (q, d)
  int at(int q, int d) const {
    auto it = h.find({q, d});
    return it == h.end() ? 0 : it->second;
  }
};

inline CohomologyTable cohomology_table(const BettiDiagram& b, int n) {
  CohomologyTable t;
  t.n = n;
  t.dmin = b.min_col;
  t.dmax = b.max_col;
  for (int d = t.dmin; d <= t.dmax; ++d)
    for (int q = 0; q <= n; ++q) t.h[{q, d}] = b.at(q + d, d);
  return t;
}

inline std::string cohomology_text(const CohomologyTable& t) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "q\\d" << std::right;
  for (int d = t.dmin; d <= t.dmax; ++d) os << " " << std::setw(4) << d;
  os << "\n";
  for (int q = t.n; q >= 0; --q) {
    os << std::left << std::setw(6) << ("h^" + std::to_string(q)) << std::right;
    for (int d = t.dmin; d <= t.dmax; ++d) os << " " << std::setw(4) << t.at(q, d);
    os << "\n";
  }
  return os.str();
}

inline json cohomology_json(const CohomologyTable& t) {
  json rows = json::array();
  for (int q = t.n; q >= 0; --q) {
    json e = json::array();
    for (int d = t.dmin; d <= t.dmax; ++d) e.push_back(t.at(q, d));
    rows.push_back({{"q", q}, {"entries", e}});
  }
  return {{"schema", std::string("tate.cohomology/") + kSchemaVersion},
          {"minTwist", t.dmin},
          {"maxTwist", t.dmax},
          {"rows", rows}};
}

template <class F>
json pushforward_json(const PushforwardComplex<F>& C) {
  json terms = json::array(), diffs = json::array();
  for (const auto& [i, g] : C.terms) terms.push_back({{"degree", i}, {"generatorParamDegrees", g}});
  for (const auto& [i, m] : C.diff) {
    if (!C.rank(i + 1) || !C.rank(i)) continue;
    json rows = json::array();
    for (const auto& r : m) {
      json e = json::array();
      for (const auto& p : r) e.push_back(to_string(C.ring, p));
      rows.push_back(e);
    }
    diffs.push_back({{"from", i}, {"to", i + 1}, {"matrix", rows}});
  }
  return {{"schema", std::string("tate.pushforward/") + kSchemaVersion}, {"terms", terms}, {"differentials", diffs}};
}

inline json certificate_json(const ExactnessCertificate& c) {
  return {{"status", c.status == CertificateStatus::Certified ? "Certified" : "HeuristicAtParamBound"},
          {"paramBound", c.param_bound},
          {"checkedBidegrees", c.checked_bidegrees},
          {"notes", c.notes}};
}

inline json strata_json(const StrataReport& r) {
  json counts = json::object();
  for (const auto& [t, c] : r.counts) counts[t] = c;
  return {{"schema", std::string("tate.strata/") + kSchemaVersion},
          {"points", r.points},
          {"counts", counts},
          {"minorsCounterexamples", r.minors_counterexamples},
          {"tableCounterexamples", r.table_counterexamples},
          {"closureCounterexamples", r.closure_counterexamples},
          {"pathChecks", r.path_checks},
          {"pathCounterexamples", r.path_counterexamples},
          {"examples", r.examples}};
}

}  // namespace tate
