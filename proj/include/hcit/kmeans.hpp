#pragma once

#include <cstdint>
#include <vector>

#include "hcit/geometry.hpp"

namespace hcit {

struct KMeansResult {
  std::vector<int> assignments;       // per point, 0..k-1
  std::vector<Point> centroids;       // size k
  std::vector<double> wcss_history;   // after each Lloyd iteration
  int iterations = 0;
  bool converged = false;
};

double wcss(const std::vector<Point>& points, const std::vector<int>& assignments,
            const std::vector<Point>& centroids);

// Lloyd's algorithm with deterministic farthest-point initialization (the
// first pick is seeded). Empty clusters are repaired by reseeding with the
// point farthest from its current centroid.
KMeansResult kmeans(const std::vector<Point>& points, int k, std::uint64_t seed,
                    double tol = 1e-9, int max_iter = 100);

}  // namespace hcit
