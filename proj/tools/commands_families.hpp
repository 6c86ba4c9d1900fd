// p1-strata and voc-demo.

#pragma once

#include <cmath>

#include "commands.hpp"

namespace cli {

/// Splitting types of the (d, r) universal extension over F_p, exhaustive or
/// sampled; for (6, 3) also the rank identities, the strata table and lines.
inline Outcome run_strata(const RunConfig& c, int p) {
  const int d = c.d, r = c.r;
  if (d < 2 || r < 2) throw Error(ErrorCode::ParseError, "need d >= 2 and r >= 2");
  const int N = (r - 1) * (d - 1);
  FpModulusScope scope(p);
  StrataReport rep;
  const bool table = d == 6 && r == 3;
  auto visit = [&](const std::vector<Fp>& pt) {
    if (table) {
      detail::check_point_63(pt, rep);
    } else {
      ++rep.points;
      ++rep.counts[type_string(splitting_type_from_ranks(d, r, stack_ranks(d, r, pt)))];
    }
  };
  std::mt19937_64 rng(c.seed);
  auto random_point = [&] {
    std::vector<Fp> pt(N);
    for (auto& x : pt) x = Fp((long long)(rng() % p));
    return pt;
  };
  if (c.exhaustive) {
    double total = std::pow((double)p, N);
    if (total > 2e7) throw Error(ErrorCode::ParseError, "exhaustive sweep over " + std::to_string((long long)total) + " points is too large");
    std::vector<Fp> pt(N);
    for (long long idx = 0; idx < (long long)total; ++idx) {
      long long v = idx;
      for (int k = 0; k < N; ++k, v /= p) pt[k] = Fp(v % p);
      visit(pt);
    }
  } else {
    const long long n = c.samples >= 0 ? c.samples : 100000;
    for (long long k = 0; k < n; ++k) visit(random_point());
  }
  if (table && !c.exhaustive)
    for (long long k = 0; k < 2000; ++k) {
      auto a = random_point();
      std::vector<Fp> q(N, Fp(0));
      if (k % 2)
        for (int m = 0, cnt = 1 + rng() % 3; m < cnt; ++m) q[rng() % N] = Fp((long long)(1 + rng() % (p - 1)));
      detail::check_line_63(a, q, p, rep);
    }
  Outcome o;
  o.text = "universal extension (d, r) = (" + std::to_string(d) + ", " + std::to_string(r) + ") over F_" + std::to_string(p) +
           (c.exhaustive ? ", exhaustive\n" : ", sampled\n") + rep.to_text();
  o.j = strata_json(rep);
  o.j["d"] = d;
  o.j["r"] = r;
  o.j["prime"] = p;
  o.j["exhaustive"] = c.exhaustive;
  if (!rep.ok()) throw Error(ErrorCode::VerificationFailed, "strata counterexamples found\n" + o.text);
  return o;
}

template <class F>
InputComplex<F> complex_from_json(const json& in) {
  try {
    const int n = in.at("n").get<int>();
    Ring R = Ring::projective(n);
    if (in.contains("params"))
      for (const auto& p : in.at("params")) {
        R.params.push_back(p.get<std::string>());
        R.weights.push_back(1);
      }
    InputComplex<F> C{R, in.at("beta").get<std::vector<int>>(), {}};
    for (const auto& m : in.at("matrices")) {
      auto& pm = C.matrices.emplace_back();
      for (const auto& row : m) {
        auto& pr = pm.emplace_back();
        for (const auto& e : row) pr.push_back(parse_poly<F>(R, e.is_string() ? e.get<std::string>() : e.dump()));
      }
    }
    return C;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("complex file: ") + e.what());
  }
}

template <class F>
Outcome run_voc(const RunConfig&, const json& in, const std::string& field) {
  auto C = complex_from_json<F>(in);
  auto rep = roundtrip_verify(C);
  Outcome o;
  o.text = ring_text(C.ring, field) + "recovered complex:\n" + to_text(rep.complex);
  o.text += "entrywise match: yes\n";
  if (!C.ring.has_params()) o.text += "homology " + ranks_string(rep.homology) + " (input " + ranks_string(rep.input_homology) + ")\n";
  o.j = {{"schema", std::string("tate.voc/") + kSchemaVersion},
         {"n", C.n()},
         {"beta", C.beta},
         {"ranks", rep.ranks},
         {"entrywise", rep.entrywise},
         {"complex", pushforward_json(rep.complex)}};
  if (!C.ring.has_params()) {
    json h = json::object(), hi = json::object();
    for (const auto& [k, v] : rep.homology) h[std::to_string(k)] = v;
    for (const auto& [k, v] : rep.input_homology) hi[std::to_string(k)] = v;
    o.j["homology"] = h;
    o.j["inputHomology"] = hi;
  }
  return o;
}

}  // namespace cli
