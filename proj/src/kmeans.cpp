#include "hcit/kmeans.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "hcit/error.hpp"

namespace hcit {

namespace {

double sq_dist(const Point& a, const Point& b) {
  double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

std::vector<Point> init_farthest_point(const std::vector<Point>& points, int k,
                                       size_t first) {
  std::vector<Point> centroids;
  centroids.push_back(points[first]);
  while (static_cast<int>(centroids.size()) < k) {
    size_t best = 0;
    double best_d = -1.0;
    for (size_t i = 0; i < points.size(); ++i) {
      double d = std::numeric_limits<double>::max();
      for (const Point& c : centroids) d = std::min(d, sq_dist(points[i], c));
      if (d > best_d) {
        best_d = d;
        best = i;
      }
    }
    centroids.push_back(points[best]);
  }
  return centroids;
}

struct LloydRun {
  std::vector<int> assignments;
  std::vector<Point> centroids;
  std::vector<double> wcss_history;
  int iterations = 0;
  bool converged = false;
  double final_wcss = 0.0;
};

LloydRun lloyd(const std::vector<Point>& points, int k, size_t first,
               double tol, int max_iter) {
  LloydRun run;
  run.centroids = init_farthest_point(points, k, first);
  run.assignments.assign(points.size(), 0);

  for (int iter = 0; iter < max_iter; ++iter) {
    // Assignment step; ties go to the lowest centroid index.
    for (size_t i = 0; i < points.size(); ++i) {
      int best = 0;
      double best_d = std::numeric_limits<double>::max();
      for (int c = 0; c < k; ++c) {
        double d = sq_dist(points[i], run.centroids[static_cast<size_t>(c)]);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      run.assignments[i] = best;
    }

    // Repair empty clusters with the point farthest from its own centroid.
    std::vector<int> counts(static_cast<size_t>(k), 0);
    for (int a : run.assignments) ++counts[static_cast<size_t>(a)];
    for (int c = 0; c < k; ++c) {
      if (counts[static_cast<size_t>(c)] > 0) continue;
      size_t worst = 0;
      double worst_d = -1.0;
      for (size_t i = 0; i < points.size(); ++i) {
        if (counts[static_cast<size_t>(run.assignments[i])] <= 1) continue;
        double d = sq_dist(points[i],
                           run.centroids[static_cast<size_t>(run.assignments[i])]);
        if (d > worst_d) {
          worst_d = d;
          worst = i;
        }
      }
      --counts[static_cast<size_t>(run.assignments[worst])];
      run.assignments[worst] = c;
      ++counts[static_cast<size_t>(c)];
      run.centroids[static_cast<size_t>(c)] = points[worst];
    }

    // Update step.
    std::vector<Point> next(static_cast<size_t>(k), Point{0.0, 0.0});
    for (size_t i = 0; i < points.size(); ++i) {
      next[static_cast<size_t>(run.assignments[i])].x += points[i].x;
      next[static_cast<size_t>(run.assignments[i])].y += points[i].y;
    }
    double move = 0.0;
    for (int c = 0; c < k; ++c) {
      next[static_cast<size_t>(c)].x /= counts[static_cast<size_t>(c)];
      next[static_cast<size_t>(c)].y /= counts[static_cast<size_t>(c)];
      move = std::max(move, distance(next[static_cast<size_t>(c)],
                                     run.centroids[static_cast<size_t>(c)]));
      run.centroids[static_cast<size_t>(c)] = next[static_cast<size_t>(c)];
    }

    run.wcss_history.push_back(wcss(points, run.assignments, run.centroids));
    run.iterations = iter + 1;
    if (move <= tol) {
      run.converged = true;
      break;
    }
  }
  run.final_wcss = run.wcss_history.back();
  return run;
}

}  // namespace

double wcss(const std::vector<Point>& points, const std::vector<int>& assignments,
            const std::vector<Point>& centroids) {
  double total = 0.0;
  for (size_t i = 0; i < points.size(); ++i)
    total += sq_dist(points[i], centroids[static_cast<size_t>(assignments[i])]);
  return total;
}

KMeansResult kmeans(const std::vector<Point>& points, int k, std::uint64_t seed,
                    double tol, int max_iter) {
  if (k < 1 || k > static_cast<int>(points.size()))
    throw Error(ErrorKind::simulation,
                "kmeans k out of range: " + std::to_string(k));
  if (tol < 0.0)
    throw Error(ErrorKind::simulation, "kmeans tol must be nonnegative");
  if (max_iter < 1)
    throw Error(ErrorKind::simulation, "kmeans max_iter must be at least 1");

  std::set<std::pair<double, double>> distinct;
  for (const Point& p : points) distinct.insert({p.x, p.y});
  if (static_cast<int>(distinct.size()) < k)
    throw Error(ErrorKind::simulation,
                "kmeans has fewer distinct points than k");

  std::mt19937_64 rng(seed);
  int restarts = std::min<int>(4, static_cast<int>(points.size()));
  LloydRun best;
  bool have = false;
  for (int r = 0; r < restarts; ++r) {
    size_t first = static_cast<size_t>(rng() % points.size());
    LloydRun run = lloyd(points, k, first, tol, max_iter);
    if (!have || run.final_wcss < best.final_wcss) {
      best = run;
      have = true;
    }
  }

  KMeansResult result;
  result.assignments = best.assignments;
  result.centroids = best.centroids;
  result.wcss_history = best.wcss_history;
  result.iterations = best.iterations;
  result.converged = best.converged;
  return result;
}

}  // namespace hcit
