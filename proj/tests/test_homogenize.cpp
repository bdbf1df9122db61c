#include "support.hpp"

#include <doctest.h>

using namespace gitstab;
using namespace gitstab::testing;

namespace {

DecType with_v(int r, std::vector<int> vs) {
  std::vector<DecComponent> comps;
  for (int v : vs) comps.push_back({v, 1, 0});
  return DecType(r, comps);
}

}  // namespace

TEST_CASE("choose_omega examples") {
  auto a = choose_omega(with_v(2, {3}));
  CHECK(a.omega == 3);
  CHECK(a.tuples == std::vector<IntVec>{{1}});

  auto b = choose_omega(with_v(2, {1, 2}));
  CHECK(b.omega == 2);
  CHECK(b.tuples == std::vector<IntVec>{{2, 0}, {0, 1}});

  auto c = choose_omega(with_v(3, {2, 3}));
  CHECK(c.omega == 6);
  CHECK(c.tuples == std::vector<IntVec>{{3, 0}, {0, 2}});

  auto k = choose_omega(with_v(2, {1, 2}), 3);
  CHECK(k.omega == 6);
  CHECK(k.tuples.size() == 4);

  CHECK_THROWS_AS(choose_omega(DecType(2, {{2, 1, 1}})), InputError);
  CHECK_THROWS_AS(choose_omega(with_v(2, {1}), 0), InputError);
}

TEST_CASE("plan invariants") {
  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    int r = uniform(rng, 2, 4);
    DecType t = random_inhomogeneous_type(rng, r, 3, 4);
    auto plan = choose_omega(t, uniform(rng, 1, 3));
    for (auto v : plan.v_values) CHECK(plan.omega % v == 0);
    for (std::size_t i = 1; i < plan.v_values.size(); ++i) CHECK(plan.v_values[i - 1] < plan.v_values[i]);
    // Every tuple solves the equation and the list is the full bounded enumeration.
    std::size_t brute = 0;
    std::function<void(std::size_t, std::int64_t)> count = [&](std::size_t j, std::int64_t left) {
      if (j == plan.v_values.size()) {
        brute += left == 0;
        return;
      }
      for (std::int64_t d = 0; d * plan.v_values[j] <= left; ++d) count(j + 1, left - d * plan.v_values[j]);
    };
    count(0, plan.omega);
    CHECK(plan.tuples.size() == brute);
    for (const auto& d : plan.tuples) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < d.size(); ++j) s += d[j] * plan.v_values[j];
      CHECK(s == plan.omega);
    }
    CHECK(plan.target.A > 0);
    CHECK(plan.target.C >= 0);
  }
}

TEST_CASE("nu examples") {
  // Two components with v = 1 and v = 2 and component mu values -1 and 2.
  // r = 2, flag dims [1], alpha 1: gamma = (-1, 1).
  DecType t = with_v(2, {1, 2});
  auto w = SparseTensor::from_terms(t, {{TermKey{0, 0, {0}}, Rational(1)}, {TermKey{1, 0, {1, 1}}, Rational(1)}});
  WeightedFlag f{2, {1}, {Rational(1)}, {}};
  auto comps = mu_filtration_components(f, w);
  REQUIRE(comps[0]);
  REQUIRE(comps[1]);
  CHECK(*comps[0] == -1);
  CHECK(*comps[1] == 2);
  auto plan = choose_omega(t);
  auto nu = nu_filtration(f, w, plan);
  CHECK(nu.nu == 1);
  REQUIRE(nu.explicit_value);
  CHECK(*nu.explicit_value == 1);
  auto audit = sign_equiv_check(f, w, plan);
  CHECK(audit.sign_mu == 1);
  CHECK(audit.sign_nu == 1);
  CHECK(audit.agree);

  // Single component with v = 3.
  DecType t3(4, {{3, 1, 0}});
  auto w3 = SparseTensor::from_terms(t3, {{TermKey{0, 0, {0, 0, 0}}, Rational(1)}});
  WeightedFlag g{4, {1}, {frac(1, 4)}, {}};  // gamma = (-3/4, 1/4)
  CHECK(mu_filtration_tensor(g, w3) == frac(-9, 4));
  auto p3 = choose_omega(t3);
  CHECK(nu_filtration(g, w3, p3).nu == frac(-3, 4));

  // All component mu values zero.
  CHECK(nu_filtration(WeightedFlag{2, {}, {}, {}}, w, plan).nu == 0);
}

TEST_CASE("sign audit cases") {
  DecType t = with_v(2, {1, 2});
  WeightedFlag f{2, {1}, {Rational(1)}, {}};
  auto plan = choose_omega(t);
  // Component values -1 and 0: nu = 0.
  auto zero = SparseTensor::from_terms(t, {{TermKey{0, 0, {0}}, Rational(1)}, {TermKey{1, 0, {0, 1}}, Rational(1)}});
  auto a = sign_equiv_check(f, zero, plan);
  CHECK(a.sign_mu == 0);
  CHECK(a.sign_nu == 0);
  CHECK(a.agree);
  // All negative.
  auto neg = SparseTensor::from_terms(t, {{TermKey{0, 0, {0}}, Rational(1)}, {TermKey{1, 0, {0, 0}}, Rational(1)}});
  auto b = sign_equiv_check(f, neg, plan);
  CHECK(b.sign_mu == -1);
  CHECK(b.sign_nu == -1);
  CHECK(b.agree);
}

TEST_CASE("explicit phi_hat has the target type") {
  DecType t = with_v(2, {1, 2});
  auto w = SparseTensor::from_terms(t, {{TermKey{0, 0, {0}}, Rational(2)}, {TermKey{1, 0, {1, 0}}, Rational(1)}});
  auto plan = choose_omega(t);
  auto hat = build_phi_hat(w, plan);
  REQUIRE(hat);
  CHECK(hat->type().r() == 2);
  REQUIRE(hat->type().size() == 1);
  const auto& c = hat->type().component(0);
  CHECK(c.a == plan.target.A);
  CHECK(c.c == plan.target.C);
  CHECK(c.a - 2 * c.c == static_cast<int>(plan.omega));
  CHECK(build_phi_hat(w, plan, 0) == std::nullopt);
}

TEST_CASE("saturation bound") {
  for (auto r : {2, 3}) {
    DecType t = with_v(r, {1, 2});
    auto plan = choose_omega(t);
    Rng rng(52 + r);
    auto w = random_full_tensor(rng, t, 3);
    auto sat = saturation_bound_check(w, plan);
    CHECK(sat.ok);
    CHECK(sat.per_rank.size() == static_cast<std::size_t>(r - 1));
    CHECK(sat.bound == Rational(plan.target.A * (r - 1)));
  }
}

TEST_CASE("property: sign equivalence, explicit agreement, omega invariance") {
  Rng rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    int r = uniform(rng, 2, 4);
    DecType t = random_inhomogeneous_type(rng, r, 3, 4);
    auto w = random_full_tensor(rng, t, 2);
    WeightedFlag f = random_flag(rng, r);
    auto plan = choose_omega(t);
    auto nu = nu_filtration(f, w, plan);
    if (nu.explicit_value) CHECK(*nu.explicit_value == nu.nu);
    auto audit = sign_equiv_check(f, w, plan);
    CHECK(audit.agree);
    CHECK(audit.sign_nu == sgn(nu.nu));
    CHECK(nu_closed_form(f, w, choose_omega(t, 2)) == nu.nu);
    CHECK(nu_closed_form(f, w, choose_omega(t, 3)) == nu.nu);
  }
}
