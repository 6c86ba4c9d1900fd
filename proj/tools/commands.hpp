// Subcommand bodies, templated on the scalar field.

#pragma once

#include <fstream>

#include "tate/hom_oracle.hpp"
#include "tate/io.hpp"
#include "tate/monad.hpp"
#include "tate/report.hpp"
#include "tate/voc.hpp"

namespace cli {

using namespace tate;

struct RunConfig {
  std::string command, file;
  std::optional<int> corner, left_steps, param_bound, degree_bound;
  std::string field;
  bool as_json = false, exhaustive = false;
  std::uint64_t seed = 63;
  int twist = 0, twist_lo = -2, twist_hi = 2, from = 0, to = 3;
  int d = 6, r = 3;
  long long samples = -1;
};

struct Outcome {
  std::string text;
  json j;
  bool heuristic = false;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

template <class F>
TateOptions tate_options(const RunConfig& c) {
  TateOptions o;
  o.corner = c.corner;
  if (c.left_steps) o.left_steps = *c.left_steps;
  o.param_bound = c.param_bound;
  return o;
}

inline std::string certificate_line(const ExactnessCertificate& c) {
  return std::string("certificate: ") + (c.status == CertificateStatus::Certified ? "Certified" : "HeuristicAtParamBound") +
         " (param bound " + std::to_string(c.param_bound) + ")\n";
}

inline std::string ring_text(const Ring& R, const std::string& field) {
  std::string s = "A = " + field;
  if (!R.has_params()) return s + "\n";
  s += "[";
  for (int k = 0; k < R.np(); ++k) s += (k ? "," : "") + R.params[k];
  return s + "]\n";
}

template <class F>
std::string param_degrees_line(const PushforwardComplex<F>& P) {
  std::string s = "generator param degrees:";
  for (const auto& [i, g] : P.terms) {
    s += " [" + std::to_string(i) + "]";
    for (int t : g) s += " " + std::to_string(t);
  }
  return s + "\n";
}

template <class F>
Outcome run_reg(const RunConfig& c, const ModulePresentation<F>& M) {
  RegularityOptions ro;
  ro.degree_bound = c.degree_bound;
  if (c.param_bound) ro.param_bound = *c.param_bound;
  auto rep = regularity(M, ro);
  Outcome o;
  o.heuristic = rep.heuristic;
  o.text = "regularity " + std::to_string(rep.value) + "\n";
  if (rep.heuristic) o.text += "note: no degree bound given; scanned through degree " + std::to_string(rep.certified_up_to) + "\n";
  o.j = {{"schema", std::string("tate.regularity/") + kSchemaVersion},
         {"regularity", rep.value},
         {"certifiedUpTo", rep.certified_up_to},
         {"heuristic", rep.heuristic}};
  return o;
}

template <class F>
Outcome run_betti(const RunConfig& c, const ModulePresentation<F>& M, bool cohomology) {
  auto opts = tate_options<F>(c);
  if (cohomology) opts.right_steps = 3;
  auto T = splice_tate(M, opts);
  auto b = T->betti();
  Outcome o;
  o.heuristic = T->certificate.status != CertificateStatus::Certified;
  if (cohomology) {
    auto t = cohomology_table(b, M.ring.n());
    o.text = cohomology_text(t);
    o.j = cohomology_json(t);
  } else {
    o.text = betti_text(b);
    o.j = betti_json(b);
  }
  o.text += certificate_line(T->certificate);
  o.j["certificate"] = certificate_json(T->certificate);
  return o;
}

template <class F>
Outcome run_pushforward(const RunConfig& c, const ModulePresentation<F>& M, const std::string& field) {
  const int j = c.twist;
  auto opts = tate_options<F>(c);
  auto T = splice_tate(M, opts);
  if (!c.left_steps && (j > T->s || T->min_index() > j - 1)) {
    opts.corner = std::max(T->s, j);
    opts.left_steps = *opts.corner - j + 2;
    T = splice_tate(M, opts);
  }
  auto P = normalize_units(minimalize(extract_pushforward(*T, j)));
  Outcome o;
  o.heuristic = T->certificate.status != CertificateStatus::Certified;
  o.text = ring_text(M.ring, field) + "R pi_* F(" + std::to_string(j) + "):\n" + to_text(P) + param_degrees_line(P) +
           certificate_line(T->certificate);
  o.j = pushforward_json(P);
  o.j["twist"] = j;
  o.j["certificate"] = certificate_json(T->certificate);
  return o;
}

inline std::string ranks_string(const std::map<int, int>& h) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : h) {
    s += (first ? "" : ", ") + std::to_string(k) + ":" + std::to_string(v);
    first = false;
  }
  return s + "}";
}

template <class F>
Outcome run_oracle(const RunConfig& c, const ModulePresentation<F>& M) {
  Outcome o;
  json rows = json::array();
  bool all = true;
  for (const auto& cmp : oracle_compare(M, c.twist_lo, c.twist_hi)) {
    all = all && cmp.agree();
    o.text += "twist " + std::to_string(cmp.twist) + ": tate " + ranks_string(cmp.tate) + " oracle " +
              ranks_string(cmp.oracle) + (cmp.agree() ? " agree" : " DIFFER") + "\n";
    json t = json::object(), h = json::object();
    for (const auto& [k, v] : cmp.tate) t[std::to_string(k)] = v;
    for (const auto& [k, v] : cmp.oracle) h[std::to_string(k)] = v;
    rows.push_back({{"twist", cmp.twist}, {"tate", t}, {"oracle", h}, {"agree", cmp.agree()}});
  }
  o.j = {{"schema", std::string("tate.oracle/") + kSchemaVersion}, {"twists", rows}, {"agree", all}};
  if (!all) throw Error(ErrorCode::VerificationFailed, "routes disagree\n" + o.text);
  return o;
}

template <class F>
Outcome run_monad(const RunConfig& c, const ModulePresentation<F>& M) {
  auto T = splice_tate(M, tate_options<F>(c));
  auto rep = verify_monad(M, *T, c.from, c.to);
  Outcome o;
  o.heuristic = T->certificate.status != CertificateStatus::Certified;
  o.text = monad_terms(*T).to_text();
  for (size_t k = 0; k < rep.degrees.size(); ++k)
    o.text += "degree " + std::to_string(rep.degrees[k]) + ": H^0 = " + std::to_string(rep.h0[k]) + " = dim M_d, other homology 0\n";
  o.text += certificate_line(T->certificate);
  o.j = {{"schema", std::string("tate.monad/") + kSchemaVersion},
         {"degrees", rep.degrees},
         {"h0", rep.h0},
         {"certificate", certificate_json(T->certificate)}};
  return o;
}

}  // namespace cli
