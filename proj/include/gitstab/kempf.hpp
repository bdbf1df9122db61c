#pragma once

// Kempf's optimal destabilizing cocharacter inside the diagonal torus, its
// flag and instability character, and a seeded multi-start search over
// conjugate tori.

#include "gitstab/tensor.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gitstab {

enum class TorusVerdict { torus_semistable, unstable };

/// Weights projected orthogonally onto the sum-zero hyperplane.
struct StateCloud {
  std::vector<RatVec> points;
};

StateCloud project_states(const std::vector<Character>& states);

struct CharacterBlock {
  int size = 0;
  Rational exponent;
};

/// l_T(lambda) = prod det(m_i)^{gamma_i} in flag order, with the permutation
/// that maps flag order back to coordinates.
struct InstabilityCharacter {
  std::vector<CharacterBlock> blocks;
  std::vector<int> permutation;

  /// The character as a coordinate vector in the original basis.
  RatVec expand() const;
};

struct InstabilityResult {
  TorusVerdict verdict = TorusVerdict::torus_semistable;
  std::optional<OnePS> lambda_star;
  std::int64_t q = 0;
  /// m0^2 = q^2 / |lambda*|^2; m0 itself is the negative square root.
  Rational m0_sq = 0;
  AdaptedFlag flag;
  std::vector<CharacterBlock> char_exponents;
  RatVec min_norm_point;
};

/// Orders nu = q / sqrt(n) exactly: negative if nu1 < nu2, 0 if equal.
int compare_nu(std::int64_t q1, const Rational& n1, std::int64_t q2, const Rational& n2);

InstabilityResult torus_instability(const SparseTensor& w);

/// 0 lies in the relative interior of the hull of the projected states.
bool torus_polystable(const SparseTensor& w);
bool polystable_cloud(const StateCloud& cloud);

struct SearchResult {
  InstabilityResult best;
  /// 0 for the identity frame, k >= 1 for the k-th restart.
  int restart = 0;
  /// The frame in which `best` was found: best describes act(g, w).
  RatMatrix g;
  bool heuristic = true;
};

/// Unimodular integer matrix for restart `k` of seed `seed`.
RatMatrix restart_matrix(int r, std::uint64_t seed, int k);

SearchResult kempf_search(const SparseTensor& w, int restarts, std::uint64_t seed);

InstabilityCharacter instability_character(const OnePS& lambda);

struct ChiStar {
  std::int64_t q = 0;
  InstabilityCharacter character;
  RatVec scaled_exponents;
};

/// chi_* = q l_T(lambda) with q = mu(lambda, w) < 0.
ChiStar chi_star(const OnePS& lambda, const SparseTensor& w);

/// -sum_i alpha_i r deg_i.
Rational deg_of_character_line(const RatVec& alphas, const RatVec& degrees, int r);

}  // namespace gitstab
