#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tate/hom_oracle.hpp"

using namespace tate;
using Q = Rational;

TEST_CASE("Hom oracle on O and O(-3) of P2") {
  auto S = free_module<Q>(Ring::projective(2), {{0, 0}});
  CHECK(homology_ranks(pushforward_via_hom(S, 1)) == std::map<int, int>{{0, 1}});
  auto O3 = free_module<Q>(Ring::projective(2), {{3, 0}});
  auto C = pushforward_via_hom(O3, 1);
  CHECK(C.provenance == Provenance::HomOracle);
  CHECK(homology_ranks(C) == std::map<int, int>{{2, 1}});
  CHECK(composes_to_zero(C));
}

TEST_CASE("Hom oracle is stable in the power") {
  auto M = fixtures::cyclic<Q>(Ring::projective(2), {"x0^2", "x1*x2"});
  auto h = homology_ranks(pushforward_via_hom(M));
  CHECK(homology_ranks(pushforward_via_hom(M, default_oracle_power(M) + 1)) == h);
}

namespace {

template <class F>
std::map<int, int> tate_ranks(const ModulePresentation<F>& M, int j) {
  TateOptions o;
  o.corner = std::max({0, j, regularity(M).value});
  o.left_steps = *o.corner - j + 2;
  auto T = splice_tate(M, o);
  return homology_ranks(minimalize(extract_pushforward(*T, j)));
}

std::string random_monomial(std::mt19937_64& rng, int deg) {
  std::string s;
  for (int k = 0; k < deg; ++k) s += (k ? "*x" : "x") + std::to_string(rng() % 3);
  return s;
}

}  // namespace

TEST_CASE("oracle equivalence on random monomial quotients of P2 over F_101") {
  FpModulusScope scope(101);
  std::mt19937_64 rng(20261014);
  const Ring R = Ring::projective(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::string> ideal;
    int gens = 1 + rng() % 3;
    for (int g = 0; g < gens; ++g) ideal.push_back(random_monomial(rng, 1 + rng() % 3));
    auto M = fixtures::cyclic<Fp>(R, ideal);
    for (int j = -2; j <= 1; ++j) {
      auto Mj = twist(M, j);
      auto oracle = homology_ranks(pushforward_via_hom(Mj));
      auto tate = tate_ranks(M, j);
      INFO("trial " << trial << " twist " << j);
      CHECK(oracle == tate);
      for (auto& [i, v] : tate) CHECK((i >= 0 && i <= 2));
    }
  }
}
