#include "gitstab/convex.hpp"

#include <algorithm>

namespace gitstab {

namespace {

// Solves the square system M y = rhs exactly; nullopt if M is singular.
std::optional<RatVec> solve_linear(std::vector<RatVec> m, RatVec rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t row = col; row < n; ++row) {
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

// Barycentric coordinates of the least-norm point of the affine hull of the
// given points.
RatVec affine_min_norm(const std::vector<const RatVec*>& pts) {
  const std::size_t k = pts.size();
  std::vector<RatVec> m(k + 1, RatVec(k + 1, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      m[i][j] = dot(*pts[i], *pts[j]);
      m[j][i] = m[i][j];
    }
    m[i][k] = 1;
    m[k][i] = 1;
  }
  RatVec rhs(k + 1, Rational(0));
  rhs[k] = 1;
  auto sol = solve_linear(std::move(m), std::move(rhs));
  if (!sol) throw CertificateError("min_norm_point: active set lost affine independence");
  sol->resize(k);
  return *sol;
}

RatVec combine(const std::vector<const RatVec*>& pts, const RatVec& weights, std::size_t dim) {
  RatVec x(dim, Rational(0));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (weights[i] == 0) continue;
    for (std::size_t d = 0; d < dim; ++d) x[d] += weights[i] * (*pts[i])[d];
  }
  return x;
}

}  // namespace

bool min_norm_certificate_holds(const RatVec& p, const std::vector<RatVec>& points) {
  const Rational pp = dot(p, p);
  return std::all_of(points.begin(), points.end(),
                     [&](const RatVec& x) { return dot(p, x) - pp >= 0; });
}

MinNormPoint min_norm_point(const std::vector<RatVec>& points) {
  if (points.empty()) throw InputError("min_norm_point: empty point set");
  const std::size_t dim = points.front().size();
  for (const auto& p : points) {
    if (p.size() != dim) throw InputError("min_norm_point: points must share a dimension");
  }

  // Deduplicate, keeping the first occurrence; ties below are broken by this
  // index order.
  std::vector<std::size_t> unique;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool seen = false;
    for (std::size_t j : unique) {
      if (points[j] == points[i]) {
        seen = true;
        break;
      }
    }
    if (!seen) unique.push_back(i);
  }

  std::size_t start = unique.front();
  Rational best = dot(points[start], points[start]);
  for (std::size_t i : unique) {
    Rational nrm = dot(points[i], points[i]);
    if (nrm < best) {
      best = nrm;
      start = i;
    }
  }

  std::vector<std::size_t> active{start};
  RatVec lambda{Rational(1)};
  RatVec x = points[start];
  int major = 0;
  const int max_major = 100000;

  auto active_points = [&]() {
    std::vector<const RatVec*> pts;
    for (std::size_t i : active) pts.push_back(&points[i]);
    return pts;
  };

  while (true) {
    if (++major > max_major) throw CertificateError("min_norm_point: iteration limit exceeded");
    const Rational xx = dot(x, x);
    if (xx == 0) break;
    std::size_t entering = unique.front();
    Rational lowest = dot(x, points[entering]);
    for (std::size_t i : unique) {
      Rational v = dot(x, points[i]);
      if (v < lowest) {
        lowest = v;
        entering = i;
      }
    }
    if (lowest >= xx) break;
    if (std::find(active.begin(), active.end(), entering) != active.end()) {
      throw CertificateError("min_norm_point: entering point already active");
    }
    active.push_back(entering);
    lambda.push_back(0);

    while (true) {
      RatVec affine = affine_min_norm(active_points());
      bool interior = std::all_of(affine.begin(), affine.end(), [](const Rational& v) { return v > 0; });
      if (interior) {
        lambda = std::move(affine);
        x = combine(active_points(), lambda, dim);
        break;
      }
      // Step from lambda towards the affine minimizer until a weight hits 0.
      std::optional<Rational> theta;
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (affine[i] > 0) continue;
        Rational gap = lambda[i] - affine[i];
        Rational t = gap == 0 ? Rational(0) : lambda[i] / gap;
        if (!theta || t < *theta) theta = t;
      }
      for (std::size_t i = 0; i < active.size(); ++i) {
        lambda[i] = (1 - *theta) * lambda[i] + *theta * affine[i];
      }
      std::vector<std::size_t> kept;
      RatVec kept_lambda;
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (lambda[i] > 0) {
          kept.push_back(active[i]);
          kept_lambda.push_back(lambda[i]);
        }
      }
      if (kept.size() == active.size() || kept.empty()) {
        throw CertificateError("min_norm_point: minor cycle made no progress");
      }
      active = std::move(kept);
      lambda = std::move(kept_lambda);
      x = combine(active_points(), lambda, dim);
    }
  }

  if (!min_norm_certificate_holds(x, points)) {
    throw CertificateError("min_norm_point: optimality certificate <p, x - p> >= 0 failed");
  }
  MinNormPoint out;
  out.point = std::move(x);
  out.weights.assign(points.size(), Rational(0));
  for (std::size_t i = 0; i < active.size(); ++i) out.weights[active[i]] = lambda[i];
  out.active = std::move(active);
  std::sort(out.active.begin(), out.active.end());
  out.major_iterations = major;
  return out;
}

std::optional<RatVec> nonnegative_solution(const std::vector<RatVec>& rows, const RatVec& rhs) {
  const std::size_t m = rows.size();
  if (rhs.size() != m) throw InputError("nonnegative_solution: one rhs entry per row");
  if (m == 0) return RatVec{};
  const std::size_t n = rows.front().size();
  const std::size_t width = n + m + 1;
  const std::size_t rhs_col = n + m;

  // Phase-one tableau with one artificial variable per row.
  std::vector<RatVec> tab(m, RatVec(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n) throw InputError("nonnegative_solution: ragged matrix");
    const bool flip = rhs[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = flip ? -rows[i][j] : rows[i][j];
    tab[i][n + i] = 1;
    tab[i][rhs_col] = flip ? -rhs[i] : rhs[i];
    basis[i] = n + i;
  }
  RatVec reduced(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) reduced[j] -= tab[i][j];
    reduced[rhs_col] -= tab[i][rhs_col];
  }

  while (true) {
    // Bland's rule: lowest-index improving column, lowest-index leaving basis.
    std::size_t entering = width;
    for (std::size_t j = 0; j < rhs_col; ++j) {
      if (reduced[j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering == width) break;
    std::size_t leaving = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab[i][entering] <= 0) continue;
      Rational ratio = tab[i][rhs_col] / tab[i][entering];
      if (leaving == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == m) throw CertificateError("nonnegative_solution: unbounded phase-one problem");
    Rational piv = tab[leaving][entering];
    for (auto& v : tab[leaving]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leaving || tab[i][entering] == 0) continue;
      Rational f = tab[i][entering];
      for (std::size_t j = 0; j < width; ++j) tab[i][j] -= f * tab[leaving][j];
    }
    if (reduced[entering] != 0) {
      Rational f = reduced[entering];
      for (std::size_t j = 0; j < width; ++j) reduced[j] -= f * tab[leaving][j];
    }
    basis[leaving] = entering;
  }

  if (reduced[rhs_col] != 0) return std::nullopt;
  RatVec x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = tab[i][rhs_col];
  }
  // Re-verify exactly.
  for (std::size_t i = 0; i < m; ++i) {
    if (dot(rows[i], x) != rhs[i]) throw CertificateError("nonnegative_solution: solution check failed");
  }
  return x;
}

}  // namespace gitstab
