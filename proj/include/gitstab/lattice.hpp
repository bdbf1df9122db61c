#pragma once

// Characters and one-parameter subgroups of the diagonal maximal torus of
// GL_n, weighted flags, and the dual-flag bookkeeping between a filtration
// of a sheaf and the flag of its dual.

#include "gitstab/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gitstab {

enum class GroupMode { GL, SL };

/// Integer vector in the basis e_1..e_n of X^*(T).
struct Character {
  IntVec coords;

  std::size_t rank() const { return coords.size(); }
  bool operator==(const Character&) const = default;
  auto operator<=>(const Character&) const = default;
};

/// Cocharacter z -> diag(z^{w_1}, ..., z^{w_n}). In SL mode the weights sum to 0.
class OnePS {
 public:
  OnePS() = default;
  explicit OnePS(IntVec weights, GroupMode mode = GroupMode::SL);

  const IntVec& weights() const { return weights_; }
  GroupMode mode() const { return mode_; }
  std::size_t rank() const { return weights_.size(); }
  bool is_trivial() const;

  bool operator==(const OnePS& other) const { return weights_ == other.weights_; }

 private:
  IntVec weights_;
  GroupMode mode_ = GroupMode::SL;
};

/// 0 < V_1 < ... < V_s < K^n with dims d_1 < ... < d_s and weights alpha_i > 0.
/// `gammas`, when present, are the eigenweights gamma_1 < ... < gamma_{s+1}
/// with gamma_{i+1} - gamma_i = alpha_i * n.
struct WeightedFlag {
  int n = 0;
  std::vector<int> dims;
  RatVec alphas;
  std::optional<RatVec> gammas;

  std::size_t length() const { return dims.size(); }
  bool empty() const { return dims.empty(); }

  /// Throws InputError on a violated invariant.
  void validate() const;

  bool same_shape(const WeightedFlag& other) const {
    return n == other.n && dims == other.dims && alphas == other.alphas;
  }
};

/// The weighted flag of a cocharacter together with the basis permutation
/// adapting it: position k of the adapted basis holds original coordinate
/// `permutation[k]`, and V_i is spanned by the first d_i adapted vectors.
struct AdaptedFlag {
  WeightedFlag flag;
  std::vector<int> permutation;
};

std::int64_t pairing(const OnePS& lambda, const Character& chi);
Rational norm_sq(const OnePS& lambda);

AdaptedFlag weighted_flag_of(const OnePS& lambda);

/// Primitive integral sum-zero cocharacter whose weighted flag is `flag`.
OnePS ops_from_flag(const WeightedFlag& flag);

/// Block values (gamma_1, ..., gamma_{s+1}) of
///   sum_i alpha_i * (rk_i - r, ..., rk_i - r, rk_i, ..., rk_i)
/// with rk_i - r repeated rk_i times.
RatVec gamma_vector(const std::vector<int>& ranks, const RatVec& alphas, int r);

/// Repeats block value j over the coordinates of block j.
RatVec expand_blocks(const std::vector<int>& dims, const RatVec& block_values, int n);

/// Index of the block containing 0-based coordinate k: min{ j : k < d_j },
/// or s when k lies past the last flag step.
int block_of(const std::vector<int>& dims, int k);

struct DualFlag {
  std::vector<int> dims;
  RatVec degrees;
};

/// dims''_i = n - d_{s+1-i}, degrees''_i = degrees_{s+1-i}. Assumes the total
/// determinant is trivial.
DualFlag dual_flag(const std::vector<int>& dims, const RatVec& degrees, int n);

/// The weighted flag on the dual space: dims n - d_{s+1-i}, alphas reversed.
WeightedFlag dual_weighted_flag(const WeightedFlag& flag);

/// Applies a permutation to cocharacter coordinates: out[k] = w[perm[k]].
OnePS permute(const OnePS& lambda, const std::vector<int>& perm);

}  // namespace gitstab
