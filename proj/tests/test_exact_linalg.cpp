#include <doctest.h>

#include <random>

#include "tate/linalg.hpp"

using namespace tate;

template <class F>
ScalarMatrix<F> random_matrix(std::mt19937_64& rng, int r, int c, int rank_cap = -1) {
  if (rank_cap < 0) {
    ScalarMatrix<F> m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = FieldTraits<F>::random(rng);
    return m;
  }
  return multiply<F>(random_matrix<F>(rng, r, rank_cap), random_matrix<F>(rng, rank_cap, c));
}

TEST_CASE("rank of small examples") {
  CHECK(rank<Rational>(ScalarMatrix<Rational>(0, 0)) == 0);
  {
    FpModulusScope scope(7);
    CHECK(rank<Fp>(identity_matrix<Fp>(3)) == 3);
  }
  // Two 1x5 Hankel rows at a = e_1, b = e_2.
  ScalarMatrix<Rational> b5 = zero_matrix<Rational>(2, 5);
  b5(0, 0) = Rational(1);
  b5(1, 1) = Rational(1);
  CHECK(rank<Rational>(b5) == 2);
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis<Rational>(identity_matrix<Rational>(2)).cols() == 0);
  ScalarMatrix<Rational> m(1, 2);
  m(0, 0) = Rational(1);
  m(0, 1) = Rational(1);
  auto k = kernel_basis<Rational>(m);
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK(!k(0, 0).is_zero());
}

template <class F>
void rank_nullity_suite(std::mt19937_64& rng, int max_rows = 6, int max_cols = 9) {
  for (int trial = 0; trial < 30; ++trial) {
    int r = 1 + trial % max_rows, c = 1 + (trial * 7) % max_cols;
    int cap = trial % 3 == 0 ? std::min(r, c) / 2 : -1;
    auto m = random_matrix<F>(rng, r, c, cap);
    auto k = kernel_basis<F>(m);
    CHECK(rank<F>(m) + k.cols() == c);
    CHECK(is_zero_matrix<F>(multiply<F>(m, k)));
    CHECK(rank<F>(k) == k.cols());
  }
}

TEST_CASE("rank-nullity over every field") {
  std::mt19937_64 rng(17);
  rank_nullity_suite<Rational>(rng);
  {
    FpModulusScope scope(101);
    rank_nullity_suite<Fp>(rng);
    rank_nullity_suite<FpT>(rng);
  }
  rank_nullity_suite<RationalT>(rng, 4, 5);
}

TEST_CASE("random 5x8 over F_101 kernel") {
  FpModulusScope scope(101);
  std::mt19937_64 rng(5);
  auto m = random_matrix<Fp>(rng, 5, 8);
  auto k = kernel_basis<Fp>(m);
  CHECK(is_zero_matrix<Fp>(multiply<Fp>(m, k)));
  ScalarMatrix<Fp> stacked(5 + k.cols(), 8);
  stacked.topRows(5) = m;
  stacked.bottomRows(k.cols()) = k.transpose();
  CHECK(rank<Fp>(m) + k.cols() == 8);
  CHECK(rank<Fp>(stacked) <= 8);
}

template <class F>
void field_axioms(std::mt19937_64& rng) {
  for (int i = 0; i < 40; ++i) {
    F a = FieldTraits<F>::random(rng), b = FieldTraits<F>::random(rng), c = FieldTraits<F>::random(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * (F(1) / a) == F(1));
    CHECK(a - a == F(0));
  }
}

TEST_CASE("rational function field axioms") {
  std::mt19937_64 rng(3);
  field_axioms<RationalT>(rng);
  FpModulusScope scope(32003);
  field_axioms<FpT>(rng);
  field_axioms<Fp>(rng);
  field_axioms<Rational>(rng);
}

TEST_CASE("rational function canonical form") {
  using P = UniPoly<Rational>;
  // (t^2 - 1)/(2t - 2) = (t + 1)/2
  P num = P::monomial(Rational(1), 2) - P(Rational(1));
  P den = P::monomial(Rational(2), 1) - P(Rational(2));
  RationalT f(num, den);
  CHECK(f.den() == P(Rational(1)));
  CHECK(f.num() == (P::monomial(Rational(1), 1) + P(Rational(1))).scaled(Rational(1, 2)));
  CHECK(f.to_string() == "(1/2*t + 1/2)");
}

TEST_CASE("prime field basics") {
  FpModulusScope scope(32003);
  CHECK((Fp(5) * Fp(5).inverse()) == Fp(1));
  CHECK(Fp(-1).value() == 32002);
  CHECK(Fp(-1).to_string() == "-1");
  CHECK_THROWS(Fp::set_modulus(32004));
}

TEST_CASE("sparse echelon reduces to normal form") {
  FpModulusScope scope(101);
  SparseEchelon<Fp> e(4);
  CHECK(e.insert({Fp(0), Fp(1), Fp(1), Fp(0)}));
  CHECK(e.insert({Fp(1), Fp(0), Fp(2), Fp(0)}));
  CHECK(!e.insert({Fp(1), Fp(1), Fp(3), Fp(0)}));
  std::vector<Fp> v = {Fp(1), Fp(1), Fp(0), Fp(1)};
  e.reduce(v);
  CHECK(v[0].is_zero());
  CHECK(v[1].is_zero());
  CHECK(v[2] == Fp(-3));
  CHECK(e.non_pivots() == std::vector<int>{2, 3});
}

TEST_CASE("solve") {
  ScalarMatrix<Rational> a = identity_matrix<Rational>(2);
  a(0, 1) = Rational(2);
  ScalarVector<Rational> b(2);
  b(0) = Rational(5);
  b(1) = Rational(1);
  auto x = solve<Rational>(a, b);
  REQUIRE(x);
  CHECK((*x)(0) == Rational(3));
  ScalarMatrix<Rational> z = zero_matrix<Rational>(1, 1);
  ScalarVector<Rational> one(1);
  one(0) = Rational(1);
  CHECK(!solve<Rational>(z, one));
}
