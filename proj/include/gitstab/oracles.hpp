#pragma once

// Brute-force oracles and the motivating example tensors (orthogonal forms
// and the sl_2 bracket).

#include "gitstab/kempf.hpp"
#include "gitstab/tensor.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gitstab {

/// lambda(z) w graded by powers of z.
struct LaurentTensor {
  std::map<std::int64_t, SparseTensor> pieces;

  std::int64_t top_exponent() const { return pieces.rbegin()->first; }
  /// lim_{z -> infinity} lambda(z) w exists iff no positive exponent occurs.
  bool limit_exists() const { return top_exponent() <= 0; }
  /// The exponent-0 piece when the limit exists and is nonzero.
  std::optional<SparseTensor> limit() const;
};

/// Evaluates lambda(2) through `act` and reads each term's scaling as an
/// exact power of two.
LaurentTensor laurent_orbit(const OnePS& lambda, const SparseTensor& w);

struct BruteForceResult {
  OnePS lambda;
  std::int64_t q = 0;
  Rational norm_sq;
  /// Every enumerated cocharacter attaining the optimum.
  std::vector<OnePS> optima;
};

/// Minimizes mu(lambda, w)/|lambda| over nonzero integral sum-zero lambda with
/// |lambda|_inf <= box and mu < 0; nullopt when no such lambda exists.
std::optional<BruteForceResult> brute_force_instability(const SparseTensor& w, int box);

/// Visits every nonzero integral sum-zero vector of length r in the box, in
/// lexicographic order.
template <typename Fn>
void for_each_sum_zero(int r, int box, Fn&& fn) {
  IntVec v(r, -box);
  if (r == 0) return;
  while (true) {
    std::int64_t head = 0;
    for (int i = 0; i + 1 < r; ++i) head += v[i];
    const std::int64_t last = -head;
    if (last >= -box && last <= box) {
      IntVec full = v;
      full[r - 1] = last;
      bool nonzero = false;
      for (auto x : full) nonzero = nonzero || x != 0;
      if (nonzero) fn(full);
    }
    int pos = r - 2;
    while (pos >= 0 && v[pos] == box) {
      v[pos] = -box;
      --pos;
    }
    if (pos < 0) break;
    ++v[pos];
  }
}

/// A tensor slot that is either a basis vector b_i of V or a dual vector b_i^dual.
struct MixedSlot {
  int index = 0;  // 0-based
  bool dual = false;
};

struct MixedTerm {
  int copy = 0;
  std::vector<MixedSlot> slots;
  Rational coeff;
};

/// Realizes each dual slot through V^dual = Lambda^{r-1} V (x) det^{-1}
/// inside V^{(x)(r-1)} (x) det^{-1}. All terms must share the slot pattern;
/// `copies` and `c` give b and the extra det twist of the component.
SparseTensor dual_embed(const std::vector<MixedTerm>& terms, int r, int copies = 1, int c = 0);

enum class FormBasis { standard, hyperbolic };

/// The symmetric form sum b_i^dual (x) b_i^dual (standard) or
/// sum b_i^dual (x) b_{r+1-i}^dual (hyperbolic), of type (2(r-1), 1, 2).
SparseTensor orthogonal_example(int r, FormBasis basis);

/// The bracket of sl_2 in the basis (e, h, f) as a point of
/// g^dual (x) g^dual (x) g, type (5, 1, 2) after expansion.
SparseTensor adjoint_example();

/// Coroot direction (1, 0, -1) of the adjoint torus for adjoint_example.
OnePS adjoint_coroot();

}  // namespace gitstab
