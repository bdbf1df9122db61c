#include "gitstab/sheafcalc.hpp"

#include <cstdlib>

namespace gitstab {

Polynomial::Polynomial(RatVec coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  RatVec out(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(static_cast<int>(i)) + rhs.coeff(static_cast<int>(i));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + rhs * Rational(-1); }

Polynomial Polynomial::operator*(const Rational& s) const {
  RatVec out = coeffs_;
  for (auto& c : out) c *= s;
  return Polynomial(std::move(out));
}

bool poly_positive(const Polynomial& p, bool strict) {
  if (p.is_zero()) return !strict;
  return p.leading() > 0;
}

void AmbientSpace::validate() const {
  if (dim < 1) throw InputError("ambient: dimension must be positive");
  if (structure_hilbert.degree() != dim) throw InputError("ambient: Hilbert polynomial must have degree dim X");
  if (structure_hilbert.leading() <= 0) throw InputError("ambient: leading coefficient must be positive");
}

Rational AmbientSpace::normalized_subleading() const {
  return structure_hilbert.coeff(dim - 1) * factorial(dim - 1);
}

SheafData SheafData::from_hilbert(const AmbientSpace& x, int rank, Polynomial hilbert) {
  SheafData s;
  s.rank = rank;
  s.degree = hilbert.coeff(x.dim - 1) * factorial(x.dim - 1) - Rational(rank) * x.normalized_subleading();
  s.hilbert = std::move(hilbert);
  s.validate(x);
  return s;
}

void SheafData::validate(const AmbientSpace& x) const {
  if (rank <= 0) throw InputError("sheaf: rank must be positive");
  if (hilbert.degree() != x.dim) throw InputError("sheaf: Hilbert polynomial must have degree dim X");
  if (hilbert.leading() != Rational(rank) * x.structure_hilbert.leading()) {
    throw InputError("sheaf: leading coefficient must be rank * lead(P_O)");
  }
  Rational expected = hilbert.coeff(x.dim - 1) * factorial(x.dim - 1) - Rational(rank) * x.normalized_subleading();
  if (expected != degree) throw InputError("sheaf: degree inconsistent with Hilbert polynomial");
}

void WeightedFiltration::validate() const {
  if (steps.size() != alphas.size()) throw InputError("filtration: one alpha per step required");
  int prev = 0;
  for (const auto& s : steps) {
    if (s.rank <= prev || s.rank >= total.rank) {
      throw InputError("filtration: ranks must satisfy 0 < rk_1 < ... < rk_s < rk(A)");
    }
    prev = s.rank;
  }
  for (const auto& a : alphas) {
    if (a <= 0) throw InputError("filtration: alphas must be positive");
  }
}

std::vector<int> WeightedFiltration::ranks() const {
  std::vector<int> out;
  for (const auto& s : steps) out.push_back(s.rank);
  return out;
}

Polynomial M_poly(const WeightedFiltration& f) {
  f.validate();
  Polynomial m;
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    Polynomial term = f.total.hilbert * Rational(f.steps[i].rank) - f.steps[i].hilbert * Rational(f.total.rank);
    m = m + term * f.alphas[i];
  }
  return m;
}

Rational L_slope(const WeightedFiltration& f) {
  f.validate();
  Rational s = 0;
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    s += f.alphas[i] * (f.steps[i].rank * f.total.degree - f.total.rank * f.steps[i].degree);
  }
  return s;
}

Rational ramanathan_slope(const WeightedFiltration& f) {
  f.validate();
  Rational s = 0;
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    s += f.alphas[i] * (f.total.degree * f.steps[i].rank - f.steps[i].degree * f.total.rank);
  }
  return s;
}

WeightedFlag flag_for_filtration(const WeightedFiltration& f) {
  f.validate();
  WeightedFlag flag;
  flag.n = f.total.rank;
  const std::size_t s = f.steps.size();
  for (std::size_t i = 0; i < s; ++i) {
    flag.dims.push_back(f.total.rank - f.steps[s - 1 - i].rank);
    flag.alphas.push_back(f.alphas[s - 1 - i]);
  }
  return flag;
}

void DecoratedObject::validate() const {
  ambient.validate();
  total.validate(ambient);
  if (total.degree != 0) throw InputError("decorated object: total degree must be 0 (trivial determinant)");
  if (tensor.r() != total.rank) throw InputError("decorated object: tensor dimension must equal rank");
  for (const auto& c : candidates) {
    c.filtration.validate();
    if (c.filtration.total.rank != total.rank || !(c.filtration.total.hilbert == total.hilbert)) {
      throw InputError("decorated object: candidate filtration of a different sheaf");
    }
    for (const auto& s : c.filtration.steps) s.validate(ambient);
    c.flag.validate();
    if (!c.flag.same_shape(flag_for_filtration(c.filtration))) {
      throw InputError("decorated object: flag must be the dual of its filtration (dims n - rk_{s+1-i}, alphas reversed)");
    }
  }
}

std::string to_string(Status s) {
  switch (s) {
    case Status::stable: return "stable";
    case Status::semistable_only: return "semistable_only";
    case Status::unstable: return "unstable";
  }
  return "unknown";
}

namespace {

struct Outcome {
  bool semistable;
  bool stable;
};

template <typename Eval>
Verdict evaluate(const std::vector<std::size_t>& considered, Eval eval) {
  Verdict v;
  v.considered = considered;
  std::optional<std::size_t> first_nonstrict;
  for (std::size_t idx : considered) {
    Outcome o = eval(idx);
    if (!o.semistable) {
      v.status = Status::unstable;
      v.witness = idx;
      return v;
    }
    if (!o.stable && !first_nonstrict) first_nonstrict = idx;
  }
  if (first_nonstrict) {
    v.status = Status::semistable_only;
    v.witness = first_nonstrict;
  } else {
    v.status = Status::stable;
  }
  return v;
}

std::vector<std::size_t> reductions(const DecoratedObject& obj) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < obj.candidates.size(); ++i) {
    if (mu_filtration_tensor(obj.candidates[i].flag, obj.tensor) == 0) out.push_back(i);
  }
  return out;
}

}  // namespace

Rational candidate_nu(const DecoratedObject& obj, const Candidate& c) {
  const DecType& type = obj.tensor.type();
  bool all_positive = true;
  for (std::size_t i = 0; i < type.size(); ++i) all_positive = all_positive && type.v(i) > 0;
  if (all_positive) return nu_filtration(c.flag, obj.tensor, choose_omega(type)).nu;
  // Homogeneous with v <= 0 (DecType rejects inhomogeneous ones).
  Rational m = mu_filtration_tensor(c.flag, obj.tensor);
  std::int64_t v = std::llabs(type.v(0));
  return v == 0 ? m : m / static_cast<long>(v);
}

DecoratedVerdict check_decorated(const DecoratedObject& obj, const Polynomial& epsilon) {
  obj.validate();
  const int d = obj.ambient.dim;
  if (epsilon.is_zero() || epsilon.leading() <= 0) throw InputError("epsilon must be a positive polynomial");
  if (epsilon.degree() > d - 1) throw InputError("epsilon must have degree at most dim X - 1");
  DecoratedVerdict out;
  out.epsilon_degree_exact = epsilon.degree() == d - 1;
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < obj.candidates.size(); ++i) {
    const auto& c = obj.candidates[i];
    Rational nu = candidate_nu(obj, c);
    out.nus.push_back(nu);
    out.values.push_back(M_poly(c.filtration) + epsilon * nu);
    all.push_back(i);
  }
  out.verdict = evaluate(all, [&](std::size_t i) {
    return Outcome{poly_positive(out.values[i], false), poly_positive(out.values[i], true)};
  });
  return out;
}

Verdict check_honest(const DecoratedObject& obj) {
  obj.validate();
  return evaluate(reductions(obj), [&](std::size_t i) {
    Polynomial m = M_poly(obj.candidates[i].filtration);
    return Outcome{poly_positive(m, false), poly_positive(m, true)};
  });
}

Verdict check_slope(const DecoratedObject& obj) {
  obj.validate();
  return evaluate(reductions(obj), [&](std::size_t i) {
    Rational l = L_slope(obj.candidates[i].filtration);
    return Outcome{l >= 0, l > 0};
  });
}

std::pair<bool, std::optional<std::size_t>> check_slope(const DecoratedObject& obj, SlopeMode mode) {
  Verdict v = check_slope(obj);
  if (mode == SlopeMode::stable) {
    return {v.status == Status::stable, v.witness};
  }
  if (v.status == Status::unstable) return {false, v.witness};
  return {true, std::nullopt};
}

ChainReport implication_report(const DecoratedObject& obj) {
  obj.validate();
  ChainReport rep;
  Verdict slope = check_slope(obj);
  Verdict honest = check_honest(obj);
  rep.slope_stable = slope.status == Status::stable;
  rep.slope_semistable = slope.status != Status::unstable;
  rep.stable = honest.status == Status::stable;
  rep.semistable = honest.status != Status::unstable;
  rep.monotone = (!rep.slope_stable || rep.stable) && (!rep.stable || rep.semistable) &&
                 (!rep.semistable || rep.slope_semistable);

  const int d = obj.ambient.dim;
  for (std::size_t i = 0; i < obj.candidates.size(); ++i) {
    const auto& f = obj.candidates[i].filtration;
    CoefficientCheck cc;
    cc.candidate = i;
    cc.scaled_coefficient = M_poly(f).coeff(d - 1) * factorial(d - 1);
    cc.L = L_slope(f);
    cc.equal = cc.scaled_coefficient == cc.L;
    rep.coefficients.push_back(cc);
    if (!cc.equal) {
      throw CertificateError("implication_report: (d-1)! coeff_{d-1}(M) != L for candidate " + std::to_string(i));
    }
  }
  if (!rep.monotone) throw CertificateError("implication_report: verdict chain is not monotone");
  return rep;
}

}  // namespace gitstab
