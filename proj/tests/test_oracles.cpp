#include "support.hpp"

#include <doctest.h>

using namespace gitstab;
using namespace gitstab::testing;

namespace {

SparseTensor b1b1() { return SparseTensor::from_terms(DecType(2, {{2, 1, 0}}), {{TermKey{0, 0, {0, 0}}, Rational(1)}}); }

}  // namespace

TEST_CASE("laurent_orbit examples") {
  auto lt = laurent_orbit(OnePS({1, -1}), b1b1());
  REQUIRE(lt.pieces.size() == 1);
  CHECK(lt.pieces.begin()->first == 2);
  CHECK(lt.top_exponent() == 2);
  CHECK_FALSE(lt.limit_exists());
  CHECK_FALSE(lt.limit());

  auto hyper = orthogonal_example(2, FormBasis::hyperbolic);
  for (int t = -2; t <= 2; ++t) {
    auto h = laurent_orbit(OnePS({t, -t}), hyper);
    REQUIRE(h.pieces.size() == 1);
    CHECK(h.top_exponent() == 0);
    REQUIRE(h.limit());
    CHECK(*h.limit() == hyper);
  }
  auto z = laurent_orbit(OnePS({0, 0}), b1b1());
  CHECK(z.top_exponent() == 0);
  CHECK(*z.limit() == b1b1());
}

TEST_CASE("brute_force_instability examples") {
  auto bf = brute_force_instability(b1b1(), 3);
  REQUIRE(bf);
  CHECK(bf->lambda.weights() == IntVec{-1, 1});
  CHECK(bf->q == -2);
  CHECK(bf->optima.size() == 3);  // (-1,1), (-2,2), (-3,3)

  CHECK_FALSE(brute_force_instability(orthogonal_example(2, FormBasis::hyperbolic), 3));

  int visited = 0;
  for_each_sum_zero(2, 1, [&](const IntVec& v) {
    ++visited;
    CHECK((v == IntVec{-1, 1} || v == IntVec{1, -1}));
  });
  CHECK(visited == 2);
  CHECK_THROWS_AS(brute_force_instability(b1b1(), 0), InputError);
}

TEST_CASE("dual_embed examples") {
  auto b1 = dual_embed({{0, {{0, true}}, Rational(1)}}, 2);
  auto expect1 = SparseTensor::from_terms(DecType(2, {{1, 1, 1}}), {{TermKey{0, 0, {1}}, Rational(1)}});
  CHECK(b1 == expect1);
  CHECK(state_set(b1) == std::vector<Character>{{{-1, 0}}});
  auto b2 = dual_embed({{0, {{1, true}}, Rational(1)}}, 2);
  CHECK(b2 == SparseTensor::from_terms(DecType(2, {{1, 1, 1}}), {{TermKey{0, 0, {0}}, Rational(-1)}}));

  auto standard = orthogonal_example(2, FormBasis::standard);
  auto expect = SparseTensor::from_terms(DecType(2, {{2, 1, 2}}), {{TermKey{0, 0, {1, 1}}, Rational(1)},
                                                                    {TermKey{0, 0, {0, 0}}, Rational(1)}});
  CHECK(standard == expect);

  auto r3 = dual_embed({{0, {{0, true}}, Rational(1)}}, 3);
  auto expect3 = SparseTensor::from_terms(
      DecType(3, {{2, 1, 1}}), {{TermKey{0, 0, {1, 2}}, Rational(1)}, {TermKey{0, 0, {2, 1}}, Rational(-1)}});
  CHECK(r3 == expect3);
}

TEST_CASE("property: dual slots have weight -e_i") {
  for (int r = 2; r <= 4; ++r) {
    for (int i = 0; i < r; ++i) {
      auto w = dual_embed({{0, {{i, true}}, Rational(1)}}, r);
      IntVec expect(r, 0);
      expect[i] = -1;
      for (const auto& t : w.terms()) CHECK(weight_of_term(t.key, w.type()).coords == expect);
    }
  }
}

TEST_CASE("property: dual embedding is equivariant") {
  // g acting on V^dual is the inverse transpose; check on diagonal g.
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    int r = uniform(rng, 2, 3);
    int i = uniform(rng, 0, r - 1);
    RatVec diag(r);
    for (auto& d : diag) d = frac(uniform(rng, 1, 4), uniform(rng, 1, 4));
    auto w = dual_embed({{0, {{i, true}}, Rational(1)}}, r);
    auto moved = act(RatMatrix::diagonal(diag), w);
    std::map<TermKey, Rational> scaled;
    for (const auto& t : w.terms()) scaled[t.key] = t.coeff / diag[i];
    CHECK(moved == SparseTensor::from_map(w.type(), scaled));
  }
}

TEST_CASE("orthogonal examples") {
  auto h2 = orthogonal_example(2, FormBasis::hyperbolic);
  CHECK(h2.type().component(0) == DecComponent{2, 1, 2});
  CHECK(torus_instability(h2).verdict == TorusVerdict::torus_semistable);
  CHECK(torus_polystable(h2));

  auto s2 = orthogonal_example(2, FormBasis::standard);
  auto states = state_set(s2);
  CHECK(std::set<Character>(states.begin(), states.end()) == std::set<Character>{{{0, -2}}, {{-2, 0}}});
  CHECK(mu(OnePS({1, -1}), s2) == 2);

  auto h3 = orthogonal_example(3, FormBasis::hyperbolic);
  CHECK(h3.type().component(0) == DecComponent{4, 1, 2});
  CHECK(torus_instability(h3).verdict == TorusVerdict::torus_semistable);
  CHECK(torus_polystable(h3));
  CHECK_THROWS_AS(orthogonal_example(1, FormBasis::standard), InputError);
}

TEST_CASE("property: standard form has mu > 0 for every diagonal lambda") {
  for (int r = 2; r <= 3; ++r) {
    auto w = orthogonal_example(r, FormBasis::standard);
    for_each_sum_zero(r, 3, [&](const IntVec& v) { CHECK(mu(OnePS(v), w) > 0); });
  }
}

TEST_CASE("adjoint example") {
  auto w = adjoint_example();
  CHECK(w.type().component(0) == DecComponent{5, 1, 2});
  CHECK(torus_instability(w).verdict == TorusVerdict::torus_semistable);
  CHECK(mu(adjoint_coroot(), w) == 0);
  auto s = kempf_search(act(restart_matrix(3, 17, 0), w), 5, 3);
  CHECK(s.best.verdict == TorusVerdict::torus_semistable);
}
