#include "gitstab/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace gitstab {

OnePS::OnePS(IntVec weights, GroupMode mode) : weights_(std::move(weights)), mode_(mode) {
  if (mode_ == GroupMode::SL) {
    std::int64_t s = std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
    if (s != 0) throw InputError("SL one-parameter subgroup must have weights summing to 0");
  }
}

bool OnePS::is_trivial() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [&](std::int64_t w) { return w == weights_.front(); });
}

void WeightedFlag::validate() const {
  if (n <= 0) throw InputError("flag: ambient dimension must be positive");
  if (dims.size() != alphas.size()) throw InputError("flag: one alpha per step required");
  int prev = 0;
  for (int d : dims) {
    if (d <= prev || d >= n) throw InputError("flag: dims must satisfy 0 < d_1 < ... < d_s < n");
    prev = d;
  }
  for (const auto& a : alphas) {
    if (a <= 0) throw InputError("flag: alphas must be positive");
  }
  if (gammas) {
    if (gammas->size() != dims.size() + 1) throw InputError("flag: s+1 gammas required");
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if ((*gammas)[i + 1] - (*gammas)[i] != alphas[i] * n) {
        throw InputError("flag: gamma gaps must equal alpha_i * n");
      }
    }
  }
}

std::int64_t pairing(const OnePS& lambda, const Character& chi) {
  if (lambda.rank() != chi.rank()) throw InputError("pairing: length mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < chi.rank(); ++i) s += lambda.weights()[i] * chi.coords[i];
  return s;
}

Rational norm_sq(const OnePS& lambda) {
  Rational s = 0;
  for (auto w : lambda.weights()) s += Rational(static_cast<long>(w * w));
  return s;
}

AdaptedFlag weighted_flag_of(const OnePS& lambda) {
  const int n = static_cast<int>(lambda.rank());
  const auto& w = lambda.weights();
  AdaptedFlag out;
  out.permutation.resize(n);
  std::iota(out.permutation.begin(), out.permutation.end(), 0);
  std::stable_sort(out.permutation.begin(), out.permutation.end(),
                   [&](int a, int b) { return w[a] < w[b]; });
  out.flag.n = n;
  RatVec gammas;
  for (int k = 0; k < n; ++k) {
    std::int64_t value = w[out.permutation[k]];
    if (k > 0 && value != w[out.permutation[k - 1]]) {
      out.flag.dims.push_back(k);
    }
    if (gammas.empty() || gammas.back() != Rational(static_cast<long>(value))) {
      gammas.emplace_back(static_cast<long>(value));
    }
  }
  for (std::size_t i = 0; i + 1 < gammas.size(); ++i) {
    out.flag.alphas.push_back((gammas[i + 1] - gammas[i]) / n);
  }
  out.flag.gammas = std::move(gammas);
  return out;
}

RatVec gamma_vector(const std::vector<int>& ranks, const RatVec& alphas, int r) {
  WeightedFlag probe{r, ranks, alphas, std::nullopt};
  probe.validate();
  const std::size_t s = ranks.size();
  RatVec blocks(s + 1, Rational(0));
  for (std::size_t i = 0; i < s; ++i) {
    // Block j (0-based) sits inside the first rk_i coordinates iff j <= i.
    for (std::size_t j = 0; j <= s; ++j) {
      blocks[j] += alphas[i] * (j <= i ? ranks[i] - r : ranks[i]);
    }
  }
  return blocks;
}

RatVec expand_blocks(const std::vector<int>& dims, const RatVec& block_values, int n) {
  if (block_values.size() != dims.size() + 1) throw InputError("expand_blocks: s+1 values required");
  RatVec out(n);
  for (int k = 0; k < n; ++k) out[k] = block_values[block_of(dims, k)];
  return out;
}

int block_of(const std::vector<int>& dims, int k) {
  auto it = std::upper_bound(dims.begin(), dims.end(), k);
  return static_cast<int>(it - dims.begin());
}

OnePS ops_from_flag(const WeightedFlag& flag) {
  flag.validate();
  if (flag.empty()) return OnePS(IntVec(flag.n, 0));
  RatVec full = expand_blocks(flag.dims, gamma_vector(flag.dims, flag.alphas, flag.n), flag.n);
  return OnePS(primitive_on_ray(full));
}

DualFlag dual_flag(const std::vector<int>& dims, const RatVec& degrees, int n) {
  if (dims.size() != degrees.size()) throw InputError("dual_flag: one degree per step required");
  DualFlag out;
  const std::size_t s = dims.size();
  for (std::size_t i = 0; i < s; ++i) {
    out.dims.push_back(n - dims[s - 1 - i]);
    out.degrees.push_back(degrees[s - 1 - i]);
  }
  return out;
}

WeightedFlag dual_weighted_flag(const WeightedFlag& flag) {
  WeightedFlag out;
  out.n = flag.n;
  const std::size_t s = flag.dims.size();
  for (std::size_t i = 0; i < s; ++i) {
    out.dims.push_back(flag.n - flag.dims[s - 1 - i]);
    out.alphas.push_back(flag.alphas[s - 1 - i]);
  }
  if (flag.gammas) {
    RatVec g;
    for (auto it = flag.gammas->rbegin(); it != flag.gammas->rend(); ++it) g.push_back(-*it);
    out.gammas = std::move(g);
  }
  return out;
}

OnePS permute(const OnePS& lambda, const std::vector<int>& perm) {
  if (perm.size() != lambda.rank()) throw InputError("permute: length mismatch");
  IntVec out(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out[k] = lambda.weights()[perm[k]];
  return OnePS(std::move(out), lambda.mode());
}

}  // namespace gitstab
