#pragma once

// Numerical model of torsion-free sheaves (rank, degree, Hilbert polynomial)
// and the semistability functionals M and L on weighted filtrations.

#include "gitstab/homogenize.hpp"
#include "gitstab/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gitstab {

/// Rational polynomial, constant term first, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RatVec coeffs);

  const RatVec& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int k) const;
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Rational& s) const;
  bool operator==(const Polynomial&) const = default;

 private:
  void trim();
  RatVec coeffs_;
};

/// P >= 0 for all large arguments (strict: P > 0 eventually).
bool poly_positive(const Polynomial& p, bool strict);

struct AmbientSpace {
  int dim = 0;
  Polynomial structure_hilbert;

  void validate() const;
  /// (d-1)! coeff_{d-1}(P_O).
  Rational normalized_subleading() const;
};

struct SheafData {
  int rank = 0;
  Rational degree;
  Polynomial hilbert;

  /// Degree read off the x^{d-1} coefficient: (d-1)! coeff_{d-1}(P) - rank (d-1)! coeff_{d-1}(P_O).
  static SheafData from_hilbert(const AmbientSpace& x, int rank, Polynomial hilbert);
  /// Throws InputError unless deg P = d, lead(P) = rank lead(P_O) and the degree is consistent.
  void validate(const AmbientSpace& x) const;
};

struct WeightedFiltration {
  std::vector<SheafData> steps;
  RatVec alphas;
  SheafData total;

  void validate() const;
  std::vector<int> ranks() const;
};

Polynomial M_poly(const WeightedFiltration& f);
/// sum alpha_i (rk(A_i) deg(A) - rk(A) deg(A_i)).
Rational L_slope(const WeightedFiltration& f);
/// Ramanathan's form sum alpha_i (deg(A) rk A_i - deg(A_i) rk A).
Rational ramanathan_slope(const WeightedFiltration& f);

struct Candidate {
  WeightedFiltration filtration;
  /// Flag on V = A^dual, adapted to the decoration tensor.
  WeightedFlag flag;
};

/// The flag on V corresponding to a filtration of A: dual dims, reversed alphas.
WeightedFlag flag_for_filtration(const WeightedFiltration& f);

struct DecoratedObject {
  AmbientSpace ambient;
  SheafData total;
  SparseTensor tensor;
  std::vector<Candidate> candidates;

  void validate() const;
};

enum class Status { stable, semistable_only, unstable };
std::string to_string(Status s);

struct Verdict {
  Status status = Status::stable;
  /// Smallest-index violating candidate (of semistability when unstable,
  /// of stability when semistable_only).
  std::optional<std::size_t> witness;
  /// Candidates that entered the check.
  std::vector<std::size_t> considered;
};

struct DecoratedVerdict {
  Verdict verdict;
  bool epsilon_degree_exact = false;
  std::vector<Polynomial> values;  // M + eps nu, per candidate
  RatVec nus;
};

/// nu for a candidate: via the homogenization plan when the type has v_i > 0,
/// otherwise mu / |v| for homogeneous types (mu when v = 0).
Rational candidate_nu(const DecoratedObject& obj, const Candidate& c);

DecoratedVerdict check_decorated(const DecoratedObject& obj, const Polynomial& epsilon);
/// Reductions are the candidates with mu_filtration_tensor = 0.
Verdict check_honest(const DecoratedObject& obj);
Verdict check_slope(const DecoratedObject& obj);

enum class SlopeMode { stable, semistable };
/// Whether `obj` is slope-(semi)stable, with the first failing candidate.
std::pair<bool, std::optional<std::size_t>> check_slope(const DecoratedObject& obj, SlopeMode mode);

struct CoefficientCheck {
  std::size_t candidate = 0;
  Rational scaled_coefficient;  // (d-1)! coeff_{d-1}(M)
  Rational L;
  bool equal = false;
};

struct ChainReport {
  bool slope_stable = false;
  bool stable = false;
  bool semistable = false;
  bool slope_semistable = false;
  bool monotone = false;
  std::vector<CoefficientCheck> coefficients;
};

/// Throws CertificateError if the chain or a coefficient identity fails.
ChainReport implication_report(const DecoratedObject& obj);

}  // namespace gitstab
