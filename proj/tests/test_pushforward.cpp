#include <doctest.h>

#include <iostream>

#include "fixtures.hpp"
#include "tate/homology.hpp"

using namespace tate;
using Q = Rational;

TEST_CASE("Example 1 direct image in degree 0") {
  auto T = splice_tate(fixtures::ex1<Q>());
  auto C = normalize_units(minimalize(extract_pushforward(*T, 0)));
  std::cout << to_text(C);
  CHECK(composes_to_zero(C));
  REQUIRE(C.terms.size() == 2);
  CHECK(C.rank(0) == 1);
  CHECK(C.rank(1) == 1);
  const auto& e = C.entry(0, 0, 0);
  CHECK(to_string(C.ring, e) == "a");
}

TEST_CASE("direct image of O_P2 twists over a point") {
  TateOptions o;
  o.corner = 2;
  o.left_steps = 8;
  auto T = splice_tate(free_module<Q>(Ring::projective(2), {{0, 0}}), o);
  for (int d = -5; d <= 0; ++d) {
    auto C = minimalize(extract_pushforward(*T, d));
    auto h = homology_ranks(C);
    int h0 = d >= 0 ? (int)binomial(d + 2, 2) : 0;
    int h2 = d <= -3 ? (int)binomial_poly(-d - 1, 2) : 0;
    CHECK(h[0] == h0);
    CHECK(h[2] == h2);
    CHECK(C.min_degree() >= 0);
    CHECK(C.max_degree() <= 2);
    CHECK(h.count(1) == 0);
  }
}

TEST_CASE("extraction outside the window is refused") {
  TateOptions o;
  o.corner = 1;
  o.left_steps = 2;
  auto T = splice_tate(free_module<Q>(Ring::projective(2), {{0, 0}}), o);
  CHECK_THROWS_AS(extract_pushforward(*T, -3), Error);
}

TEST_CASE("Example 1 homology modules and specializations") {
  auto T = splice_tate(fixtures::ex1<Q>());
  auto C = minimalize(extract_pushforward(*T, 0));
  auto H = homology_modules(C);
  REQUIRE(H.size() == 2);
  CHECK(H[0].degree == 0);
  CHECK(H[0].is_zero());
  CHECK(H[1].degree == 1);
  CHECK(H[1].gen_degrees.size() == 1);
  REQUIRE(H[1].relations.size() == 1);
  CHECK(to_text(C.ring, H[1]) == "A^1 / (a)");
  CHECK(H[1].hilbert[H[1].gen_degrees[0]] == 1);
  CHECK(H[1].hilbert[H[1].gen_degrees[0] + 1] == 0);

  CHECK(homology_ranks(specialize(C, {Q(1)})).empty());
  auto h0 = homology_ranks(specialize(C, {Q(0)}));
  CHECK(h0 == std::map<int, int>{{0, 1}, {1, 1}});
}

TEST_CASE("O_Pn direct image is A in degree 0") {
  auto T = splice_tate(free_module<Q>(Ring::projective(2), {{0, 0}}));
  auto H = homology_modules(minimalize(extract_pushforward(*T, 0)));
  REQUIRE(H.size() == 1);
  CHECK(H[0].degree == 0);
  CHECK(H[0].gen_degrees.size() == 1);
  CHECK(H[0].relations.empty());
}

TEST_CASE("minimalize cancels an inserted identity block") {
  PushforwardComplex<Q> C;
  C.ring = Ring::projective(1);
  C.terms[0] = {0, 0};
  C.terms[1] = {0, 0};
  C.ensure_shapes();
  C.diff[0][0][0] = Poly<Q>::constant(2, Q(1));
  C.diff[0][1][1] = Poly<Q>::constant(2, Q(1));
  auto M = minimalize(C);
  CHECK(M.terms.empty());
  auto same = minimalize(minimalize(extract_pushforward(*splice_tate(fixtures::ex1<Q>()), 0)));
  CHECK(same.rank(0) == 1);
  CHECK(same.rank(1) == 1);
}

TEST_CASE("Example 1 recomputed at corner 3 minimalizes to the same complex") {
  TateOptions o;
  o.corner = 3;
  auto C = normalize_units(minimalize(extract_pushforward(*splice_tate(fixtures::ex1<Q>(), o), 0)));
  CHECK(to_text(C) == "0 -> A^1[0] --(a)--> A^1[1] -> 0\n");
}
