#include "gitstab/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace gitstab {

std::optional<SparseTensor> LaurentTensor::limit() const {
  if (!limit_exists()) return std::nullopt;
  auto it = pieces.find(0);
  if (it == pieces.end()) return std::nullopt;
  return it->second;
}

namespace {

std::int64_t log2_exact(const Rational& ratio) {
  Integer num = abs(ratio.get_num());
  Integer den = ratio.get_den();
  if (ratio <= 0 || mpz_popcount(num.get_mpz_t()) != 1 || mpz_popcount(den.get_mpz_t()) != 1) {
    throw CertificateError("laurent_orbit: coefficient ratio is not a power of two");
  }
  return static_cast<std::int64_t>(mpz_scan1(num.get_mpz_t(), 0)) -
         static_cast<std::int64_t>(mpz_scan1(den.get_mpz_t(), 0));
}

}  // namespace

LaurentTensor laurent_orbit(const OnePS& lambda, const SparseTensor& w) {
  if (static_cast<int>(lambda.rank()) != w.r()) throw InputError("laurent_orbit: rank mismatch");
  RatVec diag;
  for (auto e : lambda.weights()) {
    Rational z = 1;
    for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) z *= 2;
    diag.push_back(e < 0 ? 1 / z : z);
  }
  SparseTensor moved = act(RatMatrix::diagonal(diag), w);
  if (moved.terms().size() != w.terms().size()) {
    throw CertificateError("laurent_orbit: diagonal action changed the support");
  }
  std::map<std::int64_t, std::map<TermKey, Rational>> graded;
  for (std::size_t i = 0; i < w.terms().size(); ++i) {
    const Term& before = w.terms()[i];
    const Term& after = moved.terms()[i];
    if (before.key != after.key) throw CertificateError("laurent_orbit: diagonal action changed the support");
    graded[log2_exact(after.coeff / before.coeff)][before.key] = before.coeff;
  }
  LaurentTensor out;
  for (const auto& [exponent, terms] : graded) {
    out.pieces.emplace(exponent, SparseTensor::from_map(w.type(), terms));
  }
  return out;
}

std::optional<BruteForceResult> brute_force_instability(const SparseTensor& w, int box) {
  if (box < 1) throw InputError("brute_force_instability: box must be >= 1");
  std::optional<BruteForceResult> best;
  for_each_sum_zero(w.r(), box, [&](const IntVec& v) {
    OnePS lambda(v);
    std::int64_t q = mu(lambda, w);
    if (q >= 0) return;
    Rational n = norm_sq(lambda);
    if (!best) {
      best = BruteForceResult{lambda, q, n, {lambda}};
      return;
    }
    int cmp = compare_nu(q, n, best->q, best->norm_sq);
    if (cmp < 0) {
      best = BruteForceResult{lambda, q, n, {lambda}};
    } else if (cmp == 0) {
      best->optima.push_back(lambda);
    }
  });
  if (best) {
    // Report the primitive representative of the optimal ray.
    OnePS primitive(primitive_on_ray(to_rational(best->lambda.weights())));
    best->q = mu(primitive, w);
    best->norm_sq = norm_sq(primitive);
    best->lambda = primitive;
  }
  return best;
}

SparseTensor dual_embed(const std::vector<MixedTerm>& terms, int r, int copies, int c) {
  if (terms.empty()) throw InputError("dual_embed: no terms");
  const auto& pattern = terms.front().slots;
  int primal = 0;
  int dual = 0;
  for (const auto& s : pattern) (s.dual ? dual : primal) += 1;

  std::map<TermKey, Rational> out;
  for (const auto& term : terms) {
    if (term.slots.size() != pattern.size()) throw InputError("dual_embed: terms must share a slot pattern");
    std::vector<std::pair<std::vector<int>, Rational>> partial{{{}, term.coeff}};
    for (std::size_t k = 0; k < term.slots.size(); ++k) {
      const MixedSlot& slot = term.slots[k];
      if (slot.dual != pattern[k].dual) throw InputError("dual_embed: terms must share a slot pattern");
      if (slot.index < 0 || slot.index >= r) throw InputError("dual_embed: index out of range");
      std::vector<std::pair<std::vector<int>, Rational>> next;
      if (!slot.dual) {
        for (auto& [idx, coeff] : partial) {
          idx.push_back(slot.index);
          next.emplace_back(std::move(idx), coeff);
        }
      } else {
        // b_i^dual -> (-1)^i sum_sigma sgn(sigma) b_sigma(1) (x) ... over the complement of i.
        std::vector<int> rest;
        for (int j = 0; j < r; ++j) {
          if (j != slot.index) rest.push_back(j);
        }
        const int base_sign = slot.index % 2 ? -1 : 1;
        std::vector<int> perm = rest;
        do {
          int inversions = 0;
          for (std::size_t a = 0; a < perm.size(); ++a) {
            for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
          }
          const int sgn = base_sign * (inversions % 2 ? -1 : 1);
          for (const auto& [idx, coeff] : partial) {
            auto extended = idx;
            extended.insert(extended.end(), perm.begin(), perm.end());
            next.emplace_back(std::move(extended), coeff * sgn);
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      partial = std::move(next);
    }
    for (auto& [idx, coeff] : partial) out[TermKey{0, term.copy, std::move(idx)}] += coeff;
  }
  DecType type(r, {DecComponent{primal + dual * (r - 1), copies, c + dual}});
  return SparseTensor::from_map(type, out);
}

SparseTensor orthogonal_example(int r, FormBasis basis) {
  if (r < 2) throw InputError("orthogonal_example: r must be >= 2");
  std::vector<MixedTerm> terms;
  for (int i = 0; i < r; ++i) {
    int j = basis == FormBasis::standard ? i : r - 1 - i;
    terms.push_back({0, {{i, true}, {j, true}}, Rational(1)});
  }
  return dual_embed(terms, r);
}

SparseTensor adjoint_example() {
  // Basis b_0 = e, b_1 = h, b_2 = f; [x, y] = sum_k c^k_{xy} b_k.
  constexpr int e = 0, h = 1, f = 2;
  struct Bracket {
    int x, y, z;
    long coeff;
  };
  const Bracket table[] = {
      {h, e, e, 2}, {e, h, e, -2}, {h, f, f, -2}, {f, h, f, 2}, {e, f, h, 1}, {f, e, h, -1},
  };
  std::vector<MixedTerm> terms;
  for (const auto& b : table) {
    terms.push_back({0, {{b.x, true}, {b.y, true}, {b.z, false}}, Rational(b.coeff)});
  }
  return dual_embed(terms, 3);
}

OnePS adjoint_coroot() { return OnePS({1, 0, -1}); }

}  // namespace gitstab
