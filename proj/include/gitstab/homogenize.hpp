#pragma once

// Weighted-projective homogenization of an inhomogeneous decoration: the
// degree-omega products phi^ of its components and the functional
// nu = mu(.; phi^) / omega.

#include "gitstab/tensor.hpp"

#include <optional>
#include <vector>

namespace gitstab {

/// Single-component type (A, B, C) carrying phi^; A - r C = omega.
struct TargetType {
  int A = 0;
  Integer B = 0;
  int C = 0;
};

struct HomogenizationPlan {
  DecType source;
  std::vector<std::int64_t> v_values;
  std::int64_t omega = 0;
  int multiplier = 1;
  /// All d >= 0 with sum_j v_j d_j = omega, descending lexicographic.
  std::vector<IntVec> tuples;
  TargetType target;
};

/// omega = k * lcm(v_1, ..., v_m). Requires every v_i > 0.
HomogenizationPlan choose_omega(const DecType& type, int k = 1);

/// Default cap on the number of terms of an explicitly built phi^.
inline constexpr std::size_t kExplicitTermCap = 20000;

/// phi^ as a tensor of the target type, or nullopt above `term_cap`.
std::optional<SparseTensor> build_phi_hat(const SparseTensor& w, const HomogenizationPlan& plan,
                                          std::size_t term_cap = kExplicitTermCap);

/// (1/omega) max over tuples of sum_j d_j mu~_j.
Rational nu_closed_form(const WeightedFlag& flag, const SparseTensor& w, const HomogenizationPlan& plan);

struct NuValue {
  Rational nu;
  std::optional<Rational> explicit_value;
};

/// Closed form, cross-checked against the explicit phi^ when it fits under
/// the cap. Throws CertificateError on disagreement.
NuValue nu_filtration(const WeightedFlag& flag, const SparseTensor& w, const HomogenizationPlan& plan,
                      std::size_t term_cap = kExplicitTermCap);

struct SignAudit {
  int sign_mu = 0;
  int sign_nu = 0;
  bool agree = false;
  Rational mu;
  Rational nu;
};

SignAudit sign_equiv_check(const WeightedFlag& flag, const SparseTensor& w, const HomogenizationPlan& plan);

struct SaturationAudit {
  Rational max_mu;
  Rational bound;
  bool ok = false;
  /// mu(0 < V_k < V, (1); phi^) for k = 1..r-1.
  RatVec per_rank;
};

SaturationAudit saturation_bound_check(const SparseTensor& w, const HomogenizationPlan& plan);

}  // namespace gitstab
