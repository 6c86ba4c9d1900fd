#include <doctest.h>

#include "fixtures.hpp"
#include "tate/monad.hpp"

using namespace tate;
using Q = Rational;

TEST_CASE("monad descriptors") {
  auto T = splice_tate(free_module<Q>(Ring::projective(2), {{0, 0}}));
  auto D = monad_terms(*T);
  REQUIRE(D.terms.size() == 1);
  CHECK(D.terms[0].k == 0);
  CHECK(D.terms[0].blocks == std::vector<std::pair<int, int>>{{0, 1}});

  auto E = splice_tate(fixtures::ex1<Q>());
  auto DE = monad_terms(*E);
  auto it = std::find_if(DE.terms.begin(), DE.terms.end(), [](const MonadTerm& t) { return t.k == 0; });
  REQUIRE(it != DE.terms.end());
  CHECK(it->blocks == std::vector<std::pair<int, int>>{{-1, 2}, {0, 1}});
  for (const auto& t : DE.terms)
    for (const auto& [j, r] : t.blocks) CHECK((j >= -1 && j <= 0));
}

TEST_CASE("monad of O_P1 in degrees 0..3") {
  auto M = free_module<Q>(Ring::projective(1), {{0, 0}});
  auto T = splice_tate(M);
  auto rep = verify_monad(M, *T, 0, 3);
  CHECK(rep.h0 == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("monad of Example 1 at a = 0") {
  auto M = specialize_module(fixtures::ex1<Q>(), {Q(0)});
  auto T = splice_tate(M);
  auto rep = verify_monad(M, *T, 2, 4);
  for (size_t k = 0; k < rep.degrees.size(); ++k) {
    int d = rep.degrees[k];
    CHECK(rep.h0[k] == (d + 1) + (d - 1));
  }
}

TEST_CASE("monad of a plane conic and of O(1) on P2") {
  auto C = fixtures::cyclic<Q>(Ring::projective(2), {"x0*x1 - x2^2"});
  auto T = splice_tate(C);
  CHECK_NOTHROW(verify_monad(C, *T, 1, 4));
  auto O1 = free_module<Q>(Ring::projective(2), {{-1, 0}});
  auto T1 = splice_tate(O1);
  CHECK_NOTHROW(verify_monad(O1, *T1, 0, 3));
}

TEST_CASE("a corrupted monad differential is rejected") {
  auto M = fixtures::cyclic<Q>(Ring::projective(2), {"x0 - x1", "x1 - x2"});
  auto T = splice_tate(M);
  CHECK(monad_complex(*T, 2).dims.size() == 3);
  CHECK_NOTHROW(verify_monad(M, *T, 1, 3));
  auto& map = *T->left.at(-1).map;
  auto img = map.images()[0];
  REQUIRE(img.size() >= 2);
  img[0].second = -img[0].second;
  map.set_image(0, img);
  try {
    verify_monad(M, *T, 1, 3);
    FAIL("corruption not detected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VerificationFailed);
  }
}
