#include "gitstab/kempf.hpp"

#include "gitstab/convex.hpp"

#include <random>

namespace gitstab {

StateCloud project_states(const std::vector<Character>& states) {
  StateCloud cloud;
  for (const auto& chi : states) {
    const std::size_t n = chi.rank();
    Rational mean = 0;
    for (auto c : chi.coords) mean += Rational(static_cast<long>(c));
    mean /= static_cast<long>(n);
    RatVec p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = Rational(static_cast<long>(chi.coords[i])) - mean;
    cloud.points.push_back(std::move(p));
  }
  return cloud;
}

RatVec InstabilityCharacter::expand() const {
  RatVec flag_order;
  for (const auto& b : blocks) {
    for (int k = 0; k < b.size; ++k) flag_order.push_back(b.exponent);
  }
  RatVec out(flag_order.size());
  for (std::size_t k = 0; k < permutation.size(); ++k) out[permutation[k]] = flag_order[k];
  return out;
}

int compare_nu(std::int64_t q1, const Rational& n1, std::int64_t q2, const Rational& n2) {
  const int s1 = sign(q1);
  const int s2 = sign(q2);
  if (s1 != s2) return s1 < s2 ? -1 : 1;
  if (s1 == 0) return 0;
  Rational lhs = Rational(static_cast<long>(q1)) * Rational(static_cast<long>(q1)) * n2;
  Rational rhs = Rational(static_cast<long>(q2)) * Rational(static_cast<long>(q2)) * n1;
  int cmp = lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  // For negative q a larger q^2/n means a smaller nu.
  return s1 < 0 ? -cmp : cmp;
}

InstabilityResult torus_instability(const SparseTensor& w) {
  StateCloud cloud = project_states(state_set(w));
  MinNormPoint mnp = min_norm_point(cloud.points);
  InstabilityResult res;
  res.min_norm_point = mnp.point;
  bool at_origin = true;
  for (const auto& x : mnp.point) at_origin = at_origin && x == 0;
  if (at_origin) {
    res.verdict = TorusVerdict::torus_semistable;
    return res;
  }
  RatVec direction;
  for (const auto& x : mnp.point) direction.push_back(-x);
  OnePS lambda(primitive_on_ray(direction));
  res.verdict = TorusVerdict::unstable;
  res.q = mu(lambda, w);
  if (res.q >= 0) throw CertificateError("torus_instability: optimal cocharacter has nonnegative mu");
  Rational n = norm_sq(lambda);
  res.m0_sq = Rational(static_cast<long>(res.q)) * Rational(static_cast<long>(res.q)) / n;
  if (res.m0_sq != dot(mnp.point, mnp.point)) {
    throw CertificateError("torus_instability: m0^2 differs from the squared min-norm distance");
  }
  res.flag = weighted_flag_of(lambda);
  res.char_exponents = instability_character(lambda).blocks;
  res.lambda_star = std::move(lambda);
  return res;
}

bool polystable_cloud(const StateCloud& cloud) {
  if (cloud.points.empty()) throw InputError("polystability: empty state set");
  const std::size_t n = cloud.points.front().size();
  const std::size_t k = cloud.points.size();
  // 0 = sum_j mu_j x_j with mu_i > 0 and mu >= 0  <=>  -x_i in cone(points).
  std::vector<RatVec> rows(n, RatVec(k));
  for (std::size_t d = 0; d < n; ++d) {
    for (std::size_t j = 0; j < k; ++j) rows[d][j] = cloud.points[j][d];
  }
  for (std::size_t i = 0; i < k; ++i) {
    RatVec rhs(n);
    for (std::size_t d = 0; d < n; ++d) rhs[d] = -cloud.points[i][d];
    if (!nonnegative_solution(rows, rhs)) return false;
  }
  return true;
}

bool torus_polystable(const SparseTensor& w) { return polystable_cloud(project_states(state_set(w))); }

RatMatrix restart_matrix(int r, std::uint64_t seed, int k) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(k));
  std::uniform_int_distribution<int> pick(0, r - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  RatMatrix g = RatMatrix::identity(r);
  if (r < 2) return g;
  const int factors = 3 * r;
  for (int f = 0; f < factors; ++f) {
    int i = pick(rng);
    int j = pick(rng);
    if (i == j) j = (j + 1) % r;
    int c = coeff(rng);
    if (c == 0) c = 1;
    RatMatrix e = RatMatrix::identity(r);
    e(i, j) = c;
    g = e * g;
  }
  return g;
}

namespace {

bool better(const InstabilityResult& a, const InstabilityResult& b) {
  if (a.verdict != TorusVerdict::unstable) return false;
  if (b.verdict != TorusVerdict::unstable) return true;
  return compare_nu(a.q, norm_sq(*a.lambda_star), b.q, norm_sq(*b.lambda_star)) < 0;
}

}  // namespace

SearchResult kempf_search(const SparseTensor& w, int restarts, std::uint64_t seed) {
  if (restarts < 0) throw InputError("kempf_search: restarts must be nonnegative");
  SearchResult out;
  out.best = torus_instability(w);
  out.restart = 0;
  out.g = RatMatrix::identity(w.r());
  for (int k = 1; k <= restarts; ++k) {
    RatMatrix g = restart_matrix(w.r(), seed, k);
    InstabilityResult candidate = torus_instability(act(g, w));
    if (better(candidate, out.best)) {
      out.best = std::move(candidate);
      out.restart = k;
      out.g = std::move(g);
    }
  }
  return out;
}

InstabilityCharacter instability_character(const OnePS& lambda) {
  std::int64_t total = 0;
  for (auto x : lambda.weights()) total += x;
  if (total != 0) throw InputError("instability_character: cocharacter must be sum-zero");
  AdaptedFlag af = weighted_flag_of(lambda);
  InstabilityCharacter out;
  out.permutation = af.permutation;
  const auto& gammas = *af.flag.gammas;
  const int n = af.flag.n;
  for (std::size_t j = 0; j < gammas.size(); ++j) {
    int lo = j == 0 ? 0 : af.flag.dims[j - 1];
    int hi = j < af.flag.dims.size() ? af.flag.dims[j] : n;
    out.blocks.push_back({hi - lo, gammas[j]});
  }
  return out;
}

ChiStar chi_star(const OnePS& lambda, const SparseTensor& w) {
  ChiStar out;
  out.q = mu(lambda, w);
  if (out.q >= 0) throw InputError("chi_star: defined only when mu(lambda, w) < 0");
  out.character = instability_character(lambda);
  for (const auto& b : out.character.blocks) {
    out.scaled_exponents.push_back(Rational(static_cast<long>(out.q)) * b.exponent);
  }
  return out;
}

Rational deg_of_character_line(const RatVec& alphas, const RatVec& degrees, int r) {
  if (alphas.size() != degrees.size()) throw InputError("deg_of_character_line: one degree per alpha");
  Rational s = 0;
  for (std::size_t i = 0; i < alphas.size(); ++i) s -= alphas[i] * r * degrees[i];
  return s;
}

}  // namespace gitstab
