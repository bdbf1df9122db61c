#pragma once

// Random instance generators and independent reference computations shared by
// the unit and acceptance tests. The references deliberately avoid the
// library's own weight and gamma helpers.

#include "gitstab/convex.hpp"
#include "gitstab/homogenize.hpp"
#include "gitstab/kempf.hpp"
#include "gitstab/oracles.hpp"
#include "gitstab/sheafcalc.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace gitstab::testing {

using Rng = std::mt19937_64;

/// num/den in canonical form.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational random_coeff(Rng& rng) {
  int num = 0;
  while (num == 0) num = uniform(rng, -5, 5);
  return frac(num, uniform(rng, 1, 3));
}

inline std::vector<int> random_index(Rng& rng, int a, int r) {
  std::vector<int> idx(a);
  for (auto& k : idx) k = uniform(rng, 0, r - 1);
  return idx;
}

/// A tensor with up to max_terms random terms spread over the components.
inline SparseTensor random_tensor(Rng& rng, const DecType& type, int max_terms) {
  std::map<TermKey, Rational> terms;
  const int count = uniform(rng, 1, max_terms);
  for (int t = 0; t < count; ++t) {
    int comp = uniform(rng, 0, static_cast<int>(type.size()) - 1);
    const auto& c = type.component(comp);
    TermKey key{comp, uniform(rng, 0, c.b - 1), random_index(rng, c.a, type.r())};
    terms[key] = random_coeff(rng);
  }
  return SparseTensor::from_map(type, terms);
}

/// Single-component type with a <= max_a and a small det twist.
inline DecType random_single_type(Rng& rng, int r, int max_a) {
  int a = uniform(rng, 1, max_a);
  return DecType(r, {DecComponent{a, uniform(rng, 1, 2), uniform(rng, 0, 2)}});
}

/// Inhomogeneous type: m distinct v values in 1..max_v, each realized as a = v + r c.
inline DecType random_inhomogeneous_type(Rng& rng, int r, int max_m, int max_v) {
  std::vector<int> pool(max_v);
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  const int m = uniform(rng, 1, std::min(max_m, max_v));
  std::vector<DecComponent> comps;
  for (int j = 0; j < m; ++j) {
    int c = uniform(rng, 0, 1);
    comps.push_back({pool[j] + r * c, 1, c});
  }
  // Occasionally a second component sharing a v value.
  if (uniform(rng, 0, 3) == 0) comps.push_back(comps.front());
  return DecType(r, comps);
}

/// Tensor touching every component, so each v value is present.
inline SparseTensor random_full_tensor(Rng& rng, const DecType& type, int terms_per_component) {
  std::map<TermKey, Rational> terms;
  for (std::size_t i = 0; i < type.size(); ++i) {
    const auto& c = type.component(i);
    int count = uniform(rng, 1, terms_per_component);
    for (int t = 0; t < count; ++t) {
      terms[TermKey{static_cast<int>(i), uniform(rng, 0, c.b - 1), random_index(rng, c.a, type.r())}] =
          random_coeff(rng);
    }
  }
  return SparseTensor::from_map(type, terms);
}

inline OnePS random_lambda(Rng& rng, int r, int box, bool sum_zero) {
  IntVec w(r);
  for (auto& x : w) x = uniform(rng, -box, box);
  if (sum_zero) {
    std::int64_t s = std::accumulate(w.begin(), w.end() - 1, std::int64_t{0});
    w.back() = -s;
    return OnePS(w);
  }
  return OnePS(w, GroupMode::GL);
}

inline WeightedFlag random_flag(Rng& rng, int n) {
  WeightedFlag f;
  f.n = n;
  for (int d = 1; d < n; ++d) {
    if (uniform(rng, 0, 1)) {
      f.dims.push_back(d);
      f.alphas.push_back(frac(uniform(rng, 1, 4), uniform(rng, 1, 4)));
    }
  }
  return f;
}

// ---------------------------------------------------------------- references

/// Weight of a term: count each basis index, subtract the det twist.
inline IntVec reference_weight(const TermKey& key, const DecType& type) {
  const auto& c = type.component(key.component);
  IntVec w(type.r(), -c.c);
  for (int k : key.index) ++w[k];
  return w;
}

inline std::int64_t reference_mu(const IntVec& lambda, const SparseTensor& w) {
  std::int64_t best = 0;
  bool first = true;
  for (const auto& t : w.terms()) {
    IntVec chi = reference_weight(t.key, w.type());
    std::int64_t p = 0;
    for (std::size_t i = 0; i < chi.size(); ++i) p += lambda[i] * chi[i];
    if (first || p > best) best = p;
    first = false;
  }
  return best;
}

/// Full length-n gamma profile: coordinate k gets sum_i alpha_i (rk_i - n [k < rk_i]).
inline RatVec reference_gamma_full(const WeightedFlag& f) {
  RatVec g(f.n, Rational(0));
  for (std::size_t i = 0; i < f.dims.size(); ++i) {
    for (int k = 0; k < f.n; ++k) {
      g[k] += f.alphas[i] * (k < f.dims[i] ? Rational(f.dims[i] - f.n) : Rational(f.dims[i]));
    }
  }
  return g;
}

inline Rational reference_mu_filtration(const WeightedFlag& f, const SparseTensor& w) {
  RatVec g = reference_gamma_full(f);
  Rational best;
  bool first = true;
  for (const auto& t : w.terms()) {
    IntVec chi = reference_weight(t.key, w.type());
    Rational p = 0;
    for (std::size_t i = 0; i < chi.size(); ++i) p += g[i] * chi[i];
    if (first || p > best) best = p;
    first = false;
  }
  return best;
}

/// Random polynomial of degree d with the given leading coefficient.
inline Polynomial random_poly(Rng& rng, int d, const Rational& lead) {
  RatVec c(d + 1);
  for (int k = 0; k < d; ++k) c[k] = frac(uniform(rng, -6, 6), uniform(rng, 1, 3));
  c[d] = lead;
  return Polynomial(c);
}

inline AmbientSpace random_ambient(Rng& rng, int d) {
  Rational lead = frac(uniform(rng, 1, 4), uniform(rng, 1, 6));
  return AmbientSpace{d, random_poly(rng, d, lead)};
}

/// Sheaf of the given rank whose degree is forced to `degree` (when set).
inline SheafData random_sheaf(Rng& rng, const AmbientSpace& x, int rank, std::optional<Rational> degree = {}) {
  Polynomial p = random_poly(rng, x.dim, x.structure_hilbert.leading() * rank);
  if (degree) {
    RatVec c = p.coeffs();
    Rational target = (*degree + Rational(rank) * x.normalized_subleading()) / Rational(factorial(x.dim - 1));
    c[x.dim - 1] = target;
    p = Polynomial(c);
  }
  return SheafData::from_hilbert(x, rank, p);
}

inline WeightedFiltration random_filtration(Rng& rng, const AmbientSpace& x, const SheafData& total) {
  WeightedFiltration f;
  f.total = total;
  for (int k = 1; k < total.rank; ++k) {
    if (uniform(rng, 0, 1) || (k == total.rank - 1 && f.steps.empty())) {
      f.steps.push_back(random_sheaf(rng, x, k));
      f.alphas.push_back(frac(uniform(rng, 1, 3), uniform(rng, 1, 3)));
    }
  }
  return f;
}

inline int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace gitstab::testing
