// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// argv[1]: path of the command-line tool.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sys/wait.h>

#include "acceptance_checks.hpp"
#include "random_complex.hpp"
#include "tate/monad.hpp"

namespace acceptance {

std::string toeplitz_hankel() {
  for (int d = 2; d <= 8; ++d)
    for (int k = 1; k < d; ++k)
      for (int s = 1; s <= 3; ++s)
        if (!toeplitz_hankel_identity(k, d - k, s))
          return "k=" + std::to_string(k) + " l=" + std::to_string(d - k) + " strand " + std::to_string(s);
  return "";
}

std::string strata() {
  StrataOptions o;
  o.samples_f7 = 0;
  o.path_samples = 0;
  auto rep = strata_check_63(o);
  if (rep.points != 59049) return "points " + std::to_string(rep.points);
  if (rep.minors_counterexamples) return std::to_string(rep.minors_counterexamples) + " minors counterexamples";
  if (rep.table_counterexamples) return std::to_string(rep.table_counterexamples) + " classification mismatches";
  if (rep.counts.size() != 7) return std::to_string(rep.counts.size()) + " types seen";
  return "";
}

std::string voc_roundtrip() {
  FpModulusScope scope(101);
  std::mt19937_64 rng(2024);
  std::map<int, std::unique_ptr<VocContext<Fp>>> ctx;
  for (int n = 1; n <= 3; ++n) ctx[n] = std::make_unique<VocContext<Fp>>(n);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 3;
    std::vector<int> beta(n + 1);
    for (auto& b : beta) b = 1 + rng() % 3;
    auto mats = random_complexes::random_complex(rng, beta);
    auto C = field_complex<Fp>(n, beta, mats);
    auto rep = roundtrip_verify(C, *ctx[n]);
    if (rep.homology != rep.input_homology) return "trial " + std::to_string(trial) + ": homology differs";
  }
  for (int alpha : {0, 1, 7, 58, 100}) {
    auto C = field_complex<Fp>(1, {1, 1}, {{{Fp(alpha)}}});
    auto rep = roundtrip_verify(C, *ctx[1]);
    if (!rep.entrywise || !(rep.complex.entry(0, 0, 0) == C.matrices[0][0][0]))
      return "n=1 scalar " + std::to_string(alpha) + " not recovered";
  }
  return "";
}

/// Specialized direct image against the direct image of the specialized module.
std::string base_change() {
  FpModulusScope scope(101);
  std::mt19937_64 rng(10);
  struct Family {
    ModulePresentation<Fp> M;
    int jlo, jhi;
  };
  std::vector<Family> fams{{parse_module_file<Fp>(slurp("fixtures/ex1.mod")), -3, 1},
                           {parse_module_file<Fp>(slurp("fixtures/ext42.mod")), -5, 0}};
  for (auto& f : fams) {
    TateOptions o;
    o.corner = std::max(2, f.M.max_gen_internal());
    o.left_steps = *o.corner - f.jlo + 2;
    auto T = splice_tate(f.M, o);
    std::map<int, PushforwardComplex<Fp>> C;
    for (int j = f.jlo; j <= f.jhi; ++j) C[j] = extract_pushforward(*T, j);
    for (int t = 0; t < 20; ++t) {
      std::vector<Fp> pt(f.M.ring.np());
      for (auto& x : pt) x = FieldTraits<Fp>::random(rng);
      if (t == 0) std::fill(pt.begin(), pt.end(), Fp(0));
      auto Ts = splice_tate(specialize_module(f.M, pt), o);
      for (int j = f.jlo; j <= f.jhi; ++j)
        if (homology_ranks(specialize(C[j], pt)) != homology_ranks(extract_pushforward(*Ts, j)))
          return "twist " + std::to_string(j) + " at a point with " + std::to_string(pt.size()) + " coordinates";
    }
  }
  return "";
}

std::string negative_controls(const std::string& cli) {
  auto M = fixtures::cyclic<Q>(Ring::projective(2), {"x0 - x1", "x1 - x2"});
  auto T = splice_tate(M);
  verify_monad(M, *T, 1, 3);
  auto& map = *T->left.at(-1).map;
  auto img = map.images()[0];
  img[0].second = -img[0].second;
  map.set_image(0, img);
  try {
    verify_monad(M, *T, 1, 3);
    return "corrupted monad accepted";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::VerificationFailed) return std::string("wrong error ") + e.what();
  }
  auto E = parse_module_file<Q>(slurp("fixtures/ex1.mod"));
  TateOptions o;
  o.param_bound = E.max_param_degree() - 1;
  if (splice_tate(E, o)->certificate.status != CertificateStatus::HeuristicAtParamBound) return "certificate not downgraded";
  o.param_bound = E.max_param_degree();
  if (splice_tate(E, o)->certificate.status != CertificateStatus::Certified) return "certificate at the generator degree";
  auto run = [&](const std::string& args) {
    int st = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  };
  const std::string ex1 = std::string(TATE_SOURCE_DIR) + "/fixtures/ex1.mod";
  if (int rc = run("betti " + ex1 + " --param-bound 0"); rc != 2) return "exit code " + std::to_string(rc) + ", expected 2";
  if (int rc = run("betti " + ex1); rc != 0) return "clean run exit code " + std::to_string(rc);
  return "";
}

}  // namespace acceptance

int main(int argc, char** argv) {
  using namespace acceptance;
  const std::string cli = argc > 1 ? argv[1] : "tate";
  struct Criterion {
    const char* name;
    std::function<std::string()> run;
  };
  std::vector<Criterion> all{
      {"Example 1 Betti table and direct image", ex1_reproduction},
      {"regularity fixtures", regularity_fixtures},
      {"line bundle cohomology tables, n <= 3, -6 <= d <= 6", line_bundle_tables},
      {"Omega^p shapes, n <= 4", omega_shapes},
      {"Tate route against the Hom oracle on P^2 over F_101", oracle_equivalence},
      {"universal extensions (2,2), (4,2), (6,3)", universal_extensions},
      {"Toeplitz-Hankel identity, k + l <= 8", toeplitz_hankel},
      {"(6,3) strata over F_3", strata},
      {"variety of complexes round trip", voc_roundtrip},
      {"base change", base_change},
      {"negative controls", [&] { return negative_controls(cli); }},
  };
  int failed = 0;
  for (size_t k = 0; k < all.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    std::string err;
    try {
      err = all[k].run();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s (%.2fs)%s%s\n", err.empty() ? "PASS" : "FAIL", k + 1, all[k].name, secs,
                err.empty() ? "" : ": ", err.c_str());
    failed += !err.empty();
  }
  return failed ? 1 : 0;
}
