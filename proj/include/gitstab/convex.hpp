#pragma once

// Exact-rational convex geometry: Wolfe's minimum-norm-point algorithm and a
// small dense simplex method for feasibility questions.

#include "gitstab/rational.hpp"

#include <optional>
#include <vector>

namespace gitstab {

struct MinNormPoint {
  RatVec point;
  /// Barycentric weights indexed like the input points; zero off the final
  /// active set (a repeated point carries weight only at its first occurrence).
  RatVec weights;
  std::vector<std::size_t> active;
  int major_iterations = 0;
};

/// The unique point of conv(points) with least Euclidean norm. Checks the
/// certificate <p, x - p> >= 0 for every input x before returning and throws
/// CertificateError if it fails.
MinNormPoint min_norm_point(const std::vector<RatVec>& points);

/// True iff <p, x - p> >= 0 for every x in points.
bool min_norm_certificate_holds(const RatVec& p, const std::vector<RatVec>& points);

/// Returns some x >= 0 with A x = b, or nullopt if none exists. `rows` holds
/// the rows of A.
std::optional<RatVec> nonnegative_solution(const std::vector<RatVec>& rows, const RatVec& rhs);

}  // namespace gitstab
