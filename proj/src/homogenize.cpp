#include "gitstab/homogenize.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gitstab {

namespace {

void enumerate_tuples(const std::vector<std::int64_t>& v, std::size_t j, std::int64_t remaining,
                      IntVec& current, std::vector<IntVec>& out) {
  if (j + 1 == v.size()) {
    if (remaining % v[j] == 0) {
      current[j] = remaining / v[j];
      out.push_back(current);
    }
    return;
  }
  for (std::int64_t d = remaining / v[j]; d >= 0; --d) {
    current[j] = d;
    enumerate_tuples(v, j + 1, remaining - d * v[j], current, out);
  }
  current[j] = 0;
}

Integer multichoose(std::int64_t n, std::int64_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n + k - 1), static_cast<unsigned long>(k));
  return out;
}

// Group index j of each component (position of v_i among the v values).
std::vector<std::size_t> group_of_components(const DecType& type, const std::vector<std::int64_t>& vs) {
  std::vector<std::size_t> out(type.size());
  for (std::size_t i = 0; i < type.size(); ++i) {
    out[i] = static_cast<std::size_t>(std::find(vs.begin(), vs.end(), type.v(i)) - vs.begin());
  }
  return out;
}

void check_plan(const SparseTensor& w, const HomogenizationPlan& plan) {
  if (!(w.type() == plan.source)) throw InputError("homogenization plan does not match the tensor type");
}

// mu~_j: the largest component value in group j, absent if the group vanishes.
std::vector<std::optional<Rational>> group_values(const WeightedFlag& flag, const SparseTensor& w,
                                                  const HomogenizationPlan& plan) {
  auto comps = mu_filtration_components(flag, w);
  auto groups = group_of_components(w.type(), plan.v_values);
  std::vector<std::optional<Rational>> out(plan.v_values.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!comps[i]) continue;
    auto& slot = out[groups[i]];
    if (!slot || *comps[i] > *slot) slot = comps[i];
  }
  return out;
}

struct Copy {
  int component;
  int copy;
};

}  // namespace

HomogenizationPlan choose_omega(const DecType& type, int k) {
  if (k < 1) throw InputError("choose_omega: multiplier must be >= 1");
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (type.v(i) <= 0) throw InputError("choose_omega: every a_i - r*c_i must be positive");
  }
  HomogenizationPlan plan;
  plan.source = type;
  plan.v_values = type.v_values();
  plan.multiplier = k;
  std::int64_t l = 1;
  for (auto v : plan.v_values) l = std::lcm(l, v);
  plan.omega = l * k;

  IntVec current(plan.v_values.size(), 0);
  enumerate_tuples(plan.v_values, 0, plan.omega, current, plan.tuples);

  auto groups = group_of_components(type, plan.v_values);
  std::vector<int> max_a(plan.v_values.size(), 0);
  std::vector<std::int64_t> copies(plan.v_values.size(), 0);
  for (std::size_t i = 0; i < type.size(); ++i) {
    max_a[groups[i]] = std::max(max_a[groups[i]], type.component(i).a);
    copies[groups[i]] += type.component(i).b;
  }
  std::int64_t A = 0;
  Integer B = 0;
  for (const auto& d : plan.tuples) {
    std::int64_t slots = 0;
    Integer count = 1;
    for (std::size_t j = 0; j < d.size(); ++j) {
      slots += d[j] * max_a[j];
      count *= multichoose(copies[j], d[j]);
    }
    A = std::max(A, slots);
    B += count;
  }
  const int r = type.r();
  if ((A - plan.omega) % r != 0) throw CertificateError("choose_omega: slot count incongruent to omega mod r");
  plan.target.A = static_cast<int>(A);
  plan.target.B = B;
  plan.target.C = static_cast<int>((A - plan.omega) / r);
  return plan;
}

std::optional<SparseTensor> build_phi_hat(const SparseTensor& w, const HomogenizationPlan& plan,
                                          std::size_t term_cap) {
  check_plan(w, plan);
  const DecType& type = w.type();
  const int r = type.r();
  if (!plan.target.B.fits_sint_p() || plan.target.B > static_cast<long>(term_cap)) return std::nullopt;

  auto groups = group_of_components(type, plan.v_values);
  std::vector<std::vector<Copy>> copies(plan.v_values.size());
  for (std::size_t i = 0; i < type.size(); ++i) {
    for (int c = 0; c < type.component(i).b; ++c) copies[groups[i]].push_back({static_cast<int>(i), c});
  }
  std::map<std::pair<int, int>, std::vector<const Term*>> by_copy;
  for (const auto& term : w.terms()) by_copy[{term.key.component, term.key.copy}].push_back(&term);

  // Signed permutations of 0..r-1 fill the det (x) det^{-1} padding blocks.
  std::vector<std::pair<std::vector<int>, int>> volume;
  {
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inversions = 0;
      for (int a = 0; a < r; ++a) {
        for (int b = a + 1; b < r; ++b) inversions += perm[a] > perm[b];
      }
      volume.emplace_back(perm, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::map<TermKey, Rational> out;
  std::size_t total_terms = 0;
  int next_copy = 0;

  for (const auto& d : plan.tuples) {
    // Multisets of copies per group, as nondecreasing index sequences.
    std::vector<std::vector<std::vector<int>>> choices(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) {
      std::vector<int> seq(static_cast<std::size_t>(d[j]), 0);
      const int avail = static_cast<int>(copies[j].size());
      if (d[j] > 0 && avail == 0) continue;
      while (true) {
        choices[j].push_back(seq);
        int pos = static_cast<int>(seq.size()) - 1;
        while (pos >= 0 && seq[pos] == avail - 1) --pos;
        if (pos < 0) break;
        ++seq[pos];
        for (std::size_t q = pos + 1; q < seq.size(); ++q) seq[q] = seq[pos];
      }
    }
    std::vector<std::size_t> pick(d.size(), 0);
    while (true) {
      const int target_copy = next_copy++;
      // Ordered list of factors for this product copy.
      std::vector<Copy> factors;
      for (std::size_t j = 0; j < d.size(); ++j) {
        for (int idx : choices[j][pick[j]]) factors.push_back(copies[j][idx]);
      }
      std::vector<std::pair<std::vector<int>, Rational>> partial{{{}, Rational(1)}};
      int slots = 0;
      int twist = 0;
      for (const auto& f : factors) {
        auto it = by_copy.find({f.component, f.copy});
        slots += type.component(f.component).a;
        twist += type.component(f.component).c;
        if (it == by_copy.end()) {
          partial.clear();
          break;
        }
        std::vector<std::pair<std::vector<int>, Rational>> next;
        for (const auto& [idx, coeff] : partial) {
          for (const Term* t : it->second) {
            auto extended = idx;
            extended.insert(extended.end(), t->key.index.begin(), t->key.index.end());
            next.emplace_back(std::move(extended), coeff * t->coeff);
          }
        }
        if (next.size() > term_cap) return std::nullopt;
        partial = std::move(next);
      }
      if (!partial.empty()) {
        const int padding = (plan.target.A - slots) / r;
        if (twist + padding != plan.target.C) throw CertificateError("build_phi_hat: twist bookkeeping mismatch");
        for (int p = 0; p < padding; ++p) {
          std::vector<std::pair<std::vector<int>, Rational>> next;
          for (const auto& [idx, coeff] : partial) {
            for (const auto& [perm, sgn] : volume) {
              auto extended = idx;
              extended.insert(extended.end(), perm.begin(), perm.end());
              next.emplace_back(std::move(extended), coeff * sgn);
            }
          }
          if (next.size() > term_cap) return std::nullopt;
          partial = std::move(next);
        }
        total_terms += partial.size();
        if (total_terms > term_cap) return std::nullopt;
        for (auto& [idx, coeff] : partial) out[TermKey{0, target_copy, std::move(idx)}] += coeff;
      }
      // Advance the mixed-radix choice counter.
      std::size_t j = 0;
      for (; j < d.size(); ++j) {
        if (choices[j].empty()) break;
        if (++pick[j] < choices[j].size()) break;
        pick[j] = 0;
      }
      if (j == d.size() || choices[j].empty()) break;
    }
  }
  DecType target(r, {DecComponent{plan.target.A, static_cast<int>(plan.target.B.get_si()), plan.target.C}});
  return SparseTensor::from_map(target, out);
}

Rational nu_closed_form(const WeightedFlag& flag, const SparseTensor& w, const HomogenizationPlan& plan) {
  check_plan(w, plan);
  auto values = group_values(flag, w, plan);
  std::optional<Rational> best;
  for (const auto& d : plan.tuples) {
    Rational sum = 0;
    bool vanishes = false;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d[j] == 0) continue;
      if (!values[j]) {
        vanishes = true;
        break;
      }
      sum += static_cast<long>(d[j]) * *values[j];
    }
    if (!vanishes && (!best || sum > *best)) best = sum;
  }
  if (!best) throw CertificateError("nu_closed_form: every degree-omega product vanishes");
  return *best / static_cast<long>(plan.omega);
}

NuValue nu_filtration(const WeightedFlag& flag, const SparseTensor& w, const HomogenizationPlan& plan,
                      std::size_t term_cap) {
  NuValue out;
  out.nu = nu_closed_form(flag, w, plan);
  if (auto phi_hat = build_phi_hat(w, plan, term_cap)) {
    out.explicit_value = mu_filtration_tensor(flag, *phi_hat) / static_cast<long>(plan.omega);
    if (*out.explicit_value != out.nu) {
      throw CertificateError("nu: closed form " + to_string(out.nu) + " differs from explicit phi^ value " +
                             to_string(*out.explicit_value));
    }
  }
  return out;
}

SignAudit sign_equiv_check(const WeightedFlag& flag, const SparseTensor& w, const HomogenizationPlan& plan) {
  SignAudit audit;
  audit.mu = mu_filtration_tensor(flag, w);
  audit.nu = nu_filtration(flag, w, plan).nu;
  audit.sign_mu = sign(audit.mu);
  audit.sign_nu = sign(audit.nu);
  audit.agree = audit.sign_mu == audit.sign_nu;
  return audit;
}

SaturationAudit saturation_bound_check(const SparseTensor& w, const HomogenizationPlan& plan) {
  check_plan(w, plan);
  const int r = w.r();
  SaturationAudit audit;
  audit.bound = Rational(plan.target.A) * (r - 1);
  audit.ok = true;
  for (int k = 1; k < r; ++k) {
    WeightedFlag step{r, {k}, {Rational(1)}, std::nullopt};
    Rational value = nu_closed_form(step, w, plan) * static_cast<long>(plan.omega);
    audit.per_rank.push_back(value);
    if (k == 1 || value > audit.max_mu) audit.max_mu = value;
    if (value > audit.bound) audit.ok = false;
  }
  return audit;
}

}  // namespace gitstab
