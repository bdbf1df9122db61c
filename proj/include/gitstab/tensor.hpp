#pragma once

// Points of V_{a,b,c} = (+)_i (V^{(x)a_i})^{(+)b_i} (x) (Lambda^r V)^{(x)-c_i}
// stored as sparse exact tensors, with their torus weights and the
// Hilbert-Mumford function.

#include "gitstab/lattice.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace gitstab {

struct DecComponent {
  int a = 0;
  int b = 1;
  int c = 0;
  bool operator==(const DecComponent&) const = default;
};

/// A decoration type (a_i, b_i, c_i)_i over V of dimension r.
class DecType {
 public:
  DecType() = default;
  /// Validates shape; inhomogeneous types must have a_i - r c_i > 0 for all i.
  DecType(int r, std::vector<DecComponent> components);

  int r() const { return r_; }
  const std::vector<DecComponent>& components() const { return components_; }
  const DecComponent& component(std::size_t i) const { return components_.at(i); }
  std::size_t size() const { return components_.size(); }

  /// v_i = a_i - r c_i.
  std::int64_t v(std::size_t i) const;
  bool homogeneous() const;
  /// Distinct v values in increasing order.
  std::vector<std::int64_t> v_values() const;

  bool operator==(const DecType&) const = default;

 private:
  int r_ = 0;
  std::vector<DecComponent> components_;
};

struct TermKey {
  int component = 0;
  int copy = 0;
  std::vector<int> index;  // 0-based basis indices, one per tensor slot

  auto operator<=>(const TermKey&) const = default;
  bool operator==(const TermKey&) const = default;
};

struct Term {
  TermKey key;
  Rational coeff;
};

/// Nonzero sparse tensor: terms sorted by key, keys unique, coefficients
/// nonzero.
class SparseTensor {
 public:
  /// Merges duplicate keys and drops zero coefficients. Throws InputError if
  /// a key does not fit the type or the result is zero.
  static SparseTensor from_terms(DecType type, const std::vector<Term>& terms);
  static SparseTensor from_map(DecType type, const std::map<TermKey, Rational>& terms);

  const DecType& type() const { return type_; }
  const std::vector<Term>& terms() const { return terms_; }
  int r() const { return type_.r(); }

  bool operator==(const SparseTensor& other) const;

 private:
  DecType type_;
  std::vector<Term> terms_;
};

/// Dense r x r rational matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, Rational(0)) {}
  static RatMatrix identity(int n);
  static RatMatrix diagonal(const RatVec& d);
  static RatMatrix permutation(const std::vector<int>& perm);

  int n() const { return n_; }
  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  RatMatrix operator*(const RatMatrix& rhs) const;
  bool operator==(const RatMatrix&) const = default;
  Rational determinant() const;

 private:
  int n_ = 0;
  std::vector<Rational> data_;
};

Character weight_of_term(const TermKey& key, const DecType& type);

/// Distinct weights of the terms of w, sorted.
std::vector<Character> state_set(const SparseTensor& w);

/// mu(lambda, w) = max over WT(w) of <lambda, chi>.
std::int64_t mu(const OnePS& lambda, const SparseTensor& w);

/// g acts as g^{(x)a} det(g)^{-c} on each component.
SparseTensor act(const RatMatrix& g, const SparseTensor& w);

/// mu(A^., alpha; phi_i) for each component i on the flag `flag` of V
/// (absent when the component of w vanishes), via the gamma-weighted
/// cocharacter pairing.
std::vector<std::optional<Rational>> mu_filtration_components(const WeightedFlag& flag,
                                                              const SparseTensor& w);

/// Route (ii): max over terms of <gamma, weight(term)>.
Rational mu_filtration_pairing(const WeightedFlag& flag, const SparseTensor& w);

/// Route (i): the decoration-side formula -min{gamma_{j_1} + ... + gamma_{j_a}}
/// evaluated on the dual filtration of A = V^dual.
Rational mu_filtration_decoration(const WeightedFlag& flag, const SparseTensor& w);

/// Both routes; throws CertificateError when they disagree.
Rational mu_filtration_tensor(const WeightedFlag& flag, const SparseTensor& w);

}  // namespace gitstab
