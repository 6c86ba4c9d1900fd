#include <doctest.h>

#include "fixtures.hpp"
#include "tate/tate.hpp"

using namespace tate;
using Q = Rational;

namespace {
std::vector<int> row(const BettiDiagram& b, int r, int c0, int c1) {
  std::vector<int> out;
  for (int i = c0; i <= c1; ++i) out.push_back(b.row_col(r, i));
  return out;
}
}  // namespace

TEST_CASE("O_P1 and O_P2 cohomology") {
  for (int n = 1; n <= 2; ++n) {
    TateOptions o;
    o.corner = 0;
    o.left_steps = 5;
    o.right_steps = 3;
    auto T = splice_tate(free_module<Q>(Ring::projective(n), {{0, 0}}), o);
    auto b = T->betti();
    for (int i = -4; i <= 3; ++i) {
      CHECK(b.row_col(0, i) == (i >= 0 ? binomial(n + i, n) : 0));
      CHECK(b.row_col(n, i) == (i - n <= -n - 1 ? (int)binomial_poly(-(i - n) - 1, n) : 0));
    }
    CHECK(composes_to_zero(*T));
    CHECK(is_minimal(*T));
  }
}

TEST_CASE("line bundles O(d) on P^n, n <= 3, -6 <= d <= 6") {
  for (int n = 1; n <= 3; ++n)
    for (int d = -6; d <= 6; ++d) {
      auto T = splice_tate(free_module<Q>(Ring::projective(n), {{-d, 0}}));
      auto b = T->betti();
      INFO("n=" << n << " d=" << d);
      CHECK(b.at(0, 0) == (d >= 0 ? binomial(n + d, n) : 0));
      CHECK(b.at(n, 0) == (d <= -n - 1 ? (int)binomial_poly(-d - 1, n) : 0));
      for (int q = 1; q < n; ++q) CHECK(b.at(q, 0) == 0);
    }
}

TEST_CASE("Example 1 Betti table") {
  auto T = splice_tate(fixtures::ex1<Q>());
  CHECK(T->s == 2);
  CHECK(T->certificate.status == CertificateStatus::Certified);
  auto b = T->betti();
  CHECK(row(b, 1, -2, 3) == std::vector<int>{6, 4, 2, 1, 0, 0});
  CHECK(row(b, 0, -2, 3) == std::vector<int>{0, 0, 1, 2, 4, 6});
  CHECK(b.min_row() == 0);
  CHECK(b.max_row() == 1);
  CHECK(composes_to_zero(*T));
  CHECK(is_minimal(*T));
  for (int i = b.min_col; i <= b.max_col; ++i)
    for (int j = i - 2; j <= i; ++j)
      if (1 - i >= b.min_col && 1 - i <= b.max_col) CHECK(b.at(i, j) == b.at(1 - i, -j));
}

TEST_CASE("Example 1 at corners 2 and 3 agree") {
  TateOptions o2, o3;
  o2.corner = 2;
  o2.left_steps = 5;
  o3.corner = 3;
  o3.left_steps = 6;
  auto b2 = splice_tate(fixtures::ex1<Q>(), o2)->betti();
  auto b3 = splice_tate(fixtures::ex1<Q>(), o3)->betti();
  for (int i = -2; i <= 3; ++i)
    for (int r = 0; r <= 1; ++r) CHECK(b2.row_col(r, i) == b3.row_col(r, i));
}

TEST_CASE("insufficient param bound is flagged") {
  TateOptions o;
  o.param_bound = 0;
  auto T = splice_tate(fixtures::ex1<Q>(), o);
  CHECK(T->certificate.status == CertificateStatus::HeuristicAtParamBound);
}

TEST_CASE("Betti ranks respect the degree window") {
  auto T = splice_tate(fixtures::cyclic<Q>(Ring::projective(2), {"x0^2", "x1*x2"}));
  auto b = T->betti();
  for (const auto& [k, v] : b.ranks)
    if (v && k.first <= T->s) CHECK((k.second >= k.first - 2 && k.second <= k.first));
}

TEST_CASE("generator truncation drops high blocks") {
  auto T = splice_tate(fixtures::ex1<Q>());
  auto t = T->truncated_betti(0);
  for (const auto& [k, v] : t.ranks)
    if (k.second > 0) CHECK(v == 0);
  CHECK(t.at(0, 0) == T->betti().at(0, 0));
}
