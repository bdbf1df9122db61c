#include "gitstab/tensor.hpp"

#include <algorithm>
#include <set>

namespace gitstab {

DecType::DecType(int r, std::vector<DecComponent> components)
    : r_(r), components_(std::move(components)) {
  if (r_ <= 0) throw InputError("decoration type: r must be positive");
  if (components_.empty()) throw InputError("decoration type: at least one component required");
  for (const auto& c : components_) {
    if (c.a < 0 || c.b <= 0 || c.c < 0) {
      throw InputError("decoration type: need a >= 0, b >= 1, c >= 0");
    }
  }
  if (!homogeneous()) {
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (v(i) <= 0) throw InputError("inhomogeneous decoration type requires a_i - r*c_i > 0");
    }
  }
}

std::int64_t DecType::v(std::size_t i) const {
  const auto& c = components_.at(i);
  return static_cast<std::int64_t>(c.a) - static_cast<std::int64_t>(r_) * c.c;
}

bool DecType::homogeneous() const {
  for (std::size_t i = 1; i < components_.size(); ++i) {
    if (v(i) != v(0)) return false;
  }
  return true;
}

std::vector<std::int64_t> DecType::v_values() const {
  std::set<std::int64_t> vs;
  for (std::size_t i = 0; i < components_.size(); ++i) vs.insert(v(i));
  return {vs.begin(), vs.end()};
}

SparseTensor SparseTensor::from_map(DecType type, const std::map<TermKey, Rational>& terms) {
  SparseTensor t;
  t.type_ = std::move(type);
  for (const auto& [key, coeff] : terms) {
    if (key.component < 0 || static_cast<std::size_t>(key.component) >= t.type_.size()) {
      throw InputError("tensor term: component out of range");
    }
    const auto& comp = t.type_.component(key.component);
    if (key.copy < 0 || key.copy >= comp.b) throw InputError("tensor term: copy out of range");
    if (static_cast<int>(key.index.size()) != comp.a) {
      throw InputError("tensor term: multi-index length must equal a_i");
    }
    for (int k : key.index) {
      if (k < 0 || k >= t.type_.r()) throw InputError("tensor term: basis index out of range");
    }
    if (coeff != 0) t.terms_.push_back({key, coeff});
  }
  if (t.terms_.empty()) throw InputError("zero tensor");
  return t;
}

SparseTensor SparseTensor::from_terms(DecType type, const std::vector<Term>& terms) {
  std::map<TermKey, Rational> merged;
  for (const auto& term : terms) merged[term.key] += term.coeff;
  return from_map(std::move(type), merged);
}

bool SparseTensor::operator==(const SparseTensor& other) const {
  if (!(type_ == other.type_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].key != other.terms_[i].key || terms_[i].coeff != other.terms_[i].coeff) return false;
  }
  return true;
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const RatVec& d) {
  RatMatrix m(static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RatMatrix RatMatrix::permutation(const std::vector<int>& perm) {
  // Sends b_j to b_{perm[j]}.
  RatMatrix m(static_cast<int>(perm.size()));
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], static_cast<int>(j)) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (n_ != rhs.n_) throw InputError("matrix product: size mismatch");
  RatMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (int j = 0; j < n_; ++j) out(i, j) += (*this)(i, k) * rhs(k, j);
    }
  }
  return out;
}

Rational RatMatrix::determinant() const {
  RatMatrix m = *this;
  Rational det = 1;
  for (int col = 0; col < n_; ++col) {
    int pivot = -1;
    for (int row = col; row < n_; ++row) {
      if (m(row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n_; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (int row = col + 1; row < n_; ++row) {
      if (m(row, col) == 0) continue;
      Rational f = m(row, col) / m(col, col);
      for (int j = col; j < n_; ++j) m(row, j) -= f * m(col, j);
    }
  }
  return det;
}

Character weight_of_term(const TermKey& key, const DecType& type) {
  const int r = type.r();
  const int c = type.component(key.component).c;
  Character chi{IntVec(r, -c)};
  for (int k : key.index) chi.coords[k] += 1;
  return chi;
}

std::vector<Character> state_set(const SparseTensor& w) {
  std::set<Character> states;
  for (const auto& term : w.terms()) states.insert(weight_of_term(term.key, w.type()));
  return {states.begin(), states.end()};
}

std::int64_t mu(const OnePS& lambda, const SparseTensor& w) {
  if (static_cast<int>(lambda.rank()) != w.r()) throw InputError("mu: rank mismatch");
  bool first = true;
  std::int64_t best = 0;
  for (const auto& chi : state_set(w)) {
    std::int64_t p = pairing(lambda, chi);
    if (first || p > best) best = p;
    first = false;
  }
  return best;
}

SparseTensor act(const RatMatrix& g, const SparseTensor& w) {
  const int r = w.r();
  if (g.n() != r) throw InputError("act: matrix size must equal r");
  Rational det = g.determinant();
  if (det == 0) throw InputError("act: singular matrix");

  std::map<TermKey, Rational> out;
  for (const auto& term : w.terms()) {
    const int c = w.type().component(term.key.component).c;
    Rational scale = term.coeff;
    for (int k = 0; k < c; ++k) scale /= det;
    // Expand g b_{i_1} (x) ... (x) g b_{i_a} one slot at a time.
    std::vector<std::pair<std::vector<int>, Rational>> partial{{{}, scale}};
    for (int slot : term.key.index) {
      std::vector<std::pair<std::vector<int>, Rational>> next;
      next.reserve(partial.size() * r);
      for (const auto& [idx, coeff] : partial) {
        for (int row = 0; row < r; ++row) {
          const Rational& entry = g(row, slot);
          if (entry == 0) continue;
          auto extended = idx;
          extended.push_back(row);
          next.emplace_back(std::move(extended), coeff * entry);
        }
      }
      partial = std::move(next);
    }
    for (auto& [idx, coeff] : partial) {
      out[TermKey{term.key.component, term.key.copy, std::move(idx)}] += coeff;
    }
  }
  return SparseTensor::from_map(w.type(), out);
}

namespace {

void check_flag_for(const WeightedFlag& flag, const SparseTensor& w) {
  flag.validate();
  if (flag.n != w.r()) throw InputError("flag dimension must equal r");
}

}  // namespace

std::vector<std::optional<Rational>> mu_filtration_components(const WeightedFlag& flag,
                                                              const SparseTensor& w) {
  check_flag_for(flag, w);
  RatVec gamma = expand_blocks(flag.dims, gamma_vector(flag.dims, flag.alphas, flag.n), flag.n);
  std::vector<std::optional<Rational>> out(w.type().size());
  for (const auto& term : w.terms()) {
    Character chi = weight_of_term(term.key, w.type());
    Rational value = dot(gamma, to_rational(chi.coords));
    auto& slot = out[term.key.component];
    if (!slot || value > *slot) slot = value;
  }
  return out;
}

Rational mu_filtration_pairing(const WeightedFlag& flag, const SparseTensor& w) {
  std::optional<Rational> best;
  for (const auto& value : mu_filtration_components(flag, w)) {
    if (value && (!best || *value > *best)) best = value;
  }
  return *best;
}

Rational mu_filtration_decoration(const WeightedFlag& flag, const SparseTensor& w) {
  check_flag_for(flag, w);
  // V = A^dual with adapted basis b_1..b_r; the filtration of A is the dual
  // flag, and the dual basis vector b_k^* lies in A_j iff k >= d_{s+1-j}.
  const WeightedFlag a_side = dual_weighted_flag(flag);
  const RatVec gamma_a = gamma_vector(a_side.dims, a_side.alphas, flag.n);
  const int s = static_cast<int>(flag.length());
  auto a_block = [&](int k) {
    for (int j = 0; j <= s; ++j) {
      int bound = (s - j >= 1) ? flag.dims[s - j - 1] : 0;
      if (k >= bound) return j;
    }
    return s;
  };

  std::vector<std::optional<Rational>> min_sum(w.type().size());
  for (const auto& term : w.terms()) {
    Rational sum = 0;
    for (int k : term.key.index) sum += gamma_a[a_block(k)];
    auto& slot = min_sum[term.key.component];
    if (!slot || sum < *slot) slot = sum;
  }
  std::optional<Rational> best;
  for (const auto& m : min_sum) {
    if (m && (!best || -*m > *best)) best = -*m;
  }
  return *best;
}

Rational mu_filtration_tensor(const WeightedFlag& flag, const SparseTensor& w) {
  Rational via_pairing = mu_filtration_pairing(flag, w);
  Rational via_decoration = mu_filtration_decoration(flag, w);
  if (via_pairing != via_decoration) {
    throw CertificateError("mu_filtration_tensor: decoration-side value " + to_string(via_decoration) +
                           " differs from cocharacter pairing " + to_string(via_pairing));
  }
  return via_pairing;
}

}  // namespace gitstab
