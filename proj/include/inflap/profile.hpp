#pragma once

#include <vector>

namespace inflap {

/// Boundary speed profile: samples of |grad u| along the outer boundary,
/// ordered by the boundary parameter and treated as circular (first and last
/// samples are adjacent).
struct BoundaryProfile {
  struct Sample {
    double theta = 0.0;
    double arclength = 0.0;
    double grad = 0.0;       // |grad u| at the boundary point
    double curvature = 0.0;  // NaN where undefined (polygon vertices)
  };
  std::vector<Sample> samples;
};

}  // namespace inflap
