#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "random_complex.hpp"
#include "tate/voc.hpp"

using namespace tate;

using Mat = random_complexes::Mat;
using random_complexes::random_complex;

TEST_CASE("Omega^p block shapes") {
  FpModulusScope scope(101);
  for (int n = 1; n <= 3; ++n) {
    VocContext<Fp> ctx(n);
    for (int p = 0; p <= n; ++p) {
      CAPTURE(n);
      CAPTURE(p);
      auto& W = ctx.omega[p];
      auto sh = omega_block_shape(n, p);
      CHECK(W.module(p).rank() == 1);
      if (p - 1 >= ctx.lo) CHECK(W.module(p - 1).rank() == sh.u);
      CHECK(W.module(p + 1).rank() == sh.v);
      // d_2: the middle generator maps onto all exterior monomials of degree p+1
      const auto& piece = W.module(p + 1).piece(W.module(p).gens()[0]);
      std::set<ExtMask> monos;
      for (const auto& [k, c] : W.map(p).images()[0]) {
        CHECK(ext_degree(piece.basis[k].T) == p + 1);
        monos.insert(piece.basis[k].T);
      }
      CHECK((int)monos.size() == binomial(n + 1, p + 1));
    }
  }
}

TEST_CASE("zero input is the direct sum of the Omega^p resolutions") {
  FpModulusScope scope(101);
  VocContext<Fp> ctx(2);
  auto T = deformed_tate(field_complex<Fp>(2, {1, 1, 1}, {{{Fp(0)}}, {{Fp(0)}}}), ctx);
  auto b = T->betti();
  for (int i = ctx.lo; i <= ctx.hi; ++i)
    for (int j = -6; j <= 6; ++j) {
      int sum = 0;
      for (int p = 0; p <= 2; ++p) sum += ctx.omega[p].T->betti().at(i, j);
      CHECK(b.at(i, j) == sum);
    }
  CHECK(b.at(0, 0) == 1);
  CHECK(b.at(1, 0) == 1);
  CHECK(b.at(2, 0) == 1);
  CHECK(b.at(1, 1) == 3);
  CHECK(b.at(1, -1) == 3);
  auto rep = roundtrip_verify(field_complex<Fp>(2, {1, 1, 1}, {{{Fp(0)}}, {{Fp(0)}}}), ctx);
  CHECK(rep.homology == std::map<int, int>{{0, 1}, {1, 1}, {2, 1}});
}

TEST_CASE("length one complexes reproduce Example 1") {
  FpModulusScope scope(101);
  VocContext<Fp> ctx(1, -3, 3);
  for (int alpha : {0, 5, 37}) {
    CAPTURE(alpha);
    auto C = field_complex<Fp>(1, {1, 1}, {{{Fp(alpha)}}});
    auto rep = roundtrip_verify(C, ctx);
    CHECK(rep.homology == (alpha ? std::map<int, int>{} : std::map<int, int>{{0, 1}, {1, 1}}));
    auto T = deformed_tate(C, ctx);
    TateOptions o;
    o.left_steps = 10;
    auto E = splice_tate(specialize_module(fixtures::ex1<Fp>(), {Fp(alpha)}), o);
    auto eb = E->betti();
    for (int j = -3; j <= 2; ++j) {
      CAPTURE(j);
      auto h = homology_ranks(extract_pushforward(*T, j));
      for (int q = 0; q <= 1; ++q) CHECK((h.count(q) ? h.at(q) : 0) == eb.at(j + q, j));
    }
  }
}

TEST_CASE("random complexes round trip") {
  FpModulusScope scope(101);
  std::mt19937_64 rng(2024);
  std::map<int, std::unique_ptr<VocContext<Fp>>> ctx;
  for (int n = 1; n <= 3; ++n) ctx[n] = std::make_unique<VocContext<Fp>>(n);
  {
    std::vector<int> beta{2, 2, 2};
    auto mats = random_complex(rng, beta);
    auto T = deformed_tate(field_complex<Fp>(2, beta, mats), *ctx[2]);
    CHECK(T->certificate.status == CertificateStatus::Certified);
    CHECK(composes_to_zero(*T));
  }
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + trial % 3;
    std::vector<int> beta(n + 1);
    for (auto& b : beta) b = 1 + rng() % 3;
    auto C = field_complex<Fp>(n, beta, random_complex(rng, beta));
    CAPTURE(trial);
    RoundtripReport<Fp> rep;
    CHECK_NOTHROW(rep = roundtrip_verify(C, *ctx[n]));
    CHECK(rep.homology == rep.input_homology);
    CHECK(rep.entrywise);
  }
}

TEST_CASE("invalid inputs") {
  FpModulusScope scope(101);
  VocContext<Fp> ctx(2);
  try {
    deformed_tate(field_complex<Fp>(2, {1, 1, 1}, {{{Fp(1)}}, {{Fp(1)}}}), ctx);
    FAIL("expected NotAComplex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAComplex);
  }
  Ring R{{"x0", "x1", "x2"}, {"a"}, {1}};
  InputComplex<Fp> C{R, {1, 1, 1}, {{{Poly<Fp>::constant(R.nvars(), Fp(1))}}, {{Poly<Fp>()}}}};
  try {
    deformed_tate(C, ctx);
    FAIL("expected InhomogeneousEntry");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InhomogeneousEntry);
  }
}

TEST_CASE("relative runs over a polynomial base") {
  using Q = Rational;
  {
    Ring R{{"x0", "x1"}, {"a"}, {1}};
    VocContext<Q> ctx(1);
    InputComplex<Q> C{R, {1, 1}, {{{Poly<Q>::variable(R.nvars(), 2)}}}};
    auto rep = roundtrip_verify(C, ctx);
    CHECK(rep.entrywise);
    auto P = extract_pushforward(*splice_tate(fixtures::ex1<Q>()), 0);
    CHECK(to_text(rep.complex) == to_text(normalize_units(minimalize(P))));
    CHECK(homogeneous_degree(R, rep.complex.entry(0, 0, 0)) == Bidegree{0, 1});
  }
  {
    Ring R{{"x0", "x1", "x2"}, {"a", "b"}, {1, 1}};
    VocContext<Q> ctx(2);
    auto a = Poly<Q>::variable(R.nvars(), 3), b = Poly<Q>::variable(R.nvars(), 4);
    InputComplex<Q> C{R, {1, 2, 1}, {{{a}, {Poly<Q>()}}, {{Poly<Q>(), b}}}};
    auto rep = roundtrip_verify(C, ctx);
    CHECK(rep.entrywise);
    CHECK(rep.ranks == std::vector<int>{1, 2, 1});
    for (int p = 0; p < 2; ++p)
      for (int r = 0; r < rep.complex.rank(p + 1); ++r)
        for (int c = 0; c < rep.complex.rank(p); ++c) {
          const auto& e = rep.complex.entry(p, r, c);
          if (!e.is_zero()) CHECK(homogeneous_degree(R, e) == Bidegree{0, 1});
        }
  }
}
