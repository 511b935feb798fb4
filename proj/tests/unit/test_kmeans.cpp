#include <cmath>
#include <random>

#include "doctest.h"
#include "hcit/error.hpp"
#include "hcit/kmeans.hpp"

using namespace hcit;

namespace {

// Exhaustive oracle: minimum WCSS over every assignment of points to exactly
// k nonempty clusters. Feasible for the small instances used here.
double optimal_wcss(const std::vector<Point>& points, int k) {
  size_t n = points.size();
  std::vector<int> assign(n, 0);
  double best = std::numeric_limits<double>::max();
  while (true) {
    std::vector<int> counts(static_cast<size_t>(k), 0);
    for (int a : assign) ++counts[static_cast<size_t>(a)];
    bool feasible = true;
    for (int c : counts) feasible = feasible && c > 0;
    if (feasible) {
      std::vector<Point> centroids(static_cast<size_t>(k), Point{0, 0});
      for (size_t i = 0; i < n; ++i) {
        centroids[static_cast<size_t>(assign[i])].x += points[i].x;
        centroids[static_cast<size_t>(assign[i])].y += points[i].y;
      }
      for (int c = 0; c < k; ++c) {
        centroids[static_cast<size_t>(c)].x /= counts[static_cast<size_t>(c)];
        centroids[static_cast<size_t>(c)].y /= counts[static_cast<size_t>(c)];
      }
      best = std::min(best, wcss(points, assign, centroids));
    }
    size_t pos = 0;
    while (pos < n && assign[pos] == k - 1) assign[pos++] = 0;
    if (pos == n) break;
    ++assign[pos];
  }
  return best;
}

std::vector<std::vector<int>> groups_of(const std::vector<int>& assignments,
                                        int k) {
  std::vector<std::vector<int>> groups(static_cast<size_t>(k));
  for (size_t i = 0; i < assignments.size(); ++i)
    groups[static_cast<size_t>(assignments[i])].push_back(
        static_cast<int>(i));
  return groups;
}

}  // namespace

TEST_CASE("k = 1 returns the arithmetic mean of the points") {
  std::vector<Point> pts{{1, 2}, {3, 6}, {5, 4}, {7, 0}};
  KMeansResult r = kmeans(pts, 1, 0);
  CHECK(r.centroids.size() == 1);
  CHECK(std::abs(r.centroids[0].x - 4.0) < 1e-12);
  CHECK(std::abs(r.centroids[0].y - 3.0) < 1e-12);
}

TEST_CASE("k = n makes every point its own centroid with zero WCSS") {
  std::vector<Point> pts{{0, 0}, {2, 0}, {5, 5}};
  KMeansResult r = kmeans(pts, 3, 0);
  CHECK(wcss(pts, r.assignments, r.centroids) == 0.0);
}

TEST_CASE("two well-separated pairs split cleanly at k = 2") {
  std::vector<Point> pts{{0, 0}, {1, 0}, {10, 0}, {11, 0}};
  KMeansResult r = kmeans(pts, 2, 0);
  auto groups = groups_of(r.assignments, 2);
  std::sort(groups.begin(), groups.end());
  CHECK(groups[0] == std::vector<int>{0, 1});
  CHECK(groups[1] == std::vector<int>{2, 3});
  CHECK(wcss(pts, r.assignments, r.centroids) ==
        doctest::Approx(optimal_wcss(pts, 2)));
}

TEST_CASE("WCSS never increases across Lloyd iterations") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> coord(0.0, 100.0);
  for (int round = 0; round < 25; ++round) {
    std::vector<Point> pts;
    int n = 4 + static_cast<int>(rng() % 30);
    for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
    int k = 1 + static_cast<int>(rng() % 5);
    if (k > n) k = n;
    KMeansResult r = kmeans(pts, k, round);
    for (size_t i = 1; i < r.wcss_history.size(); ++i)
      CHECK(r.wcss_history[i] <= r.wcss_history[i - 1] + 1e-9);
  }
}

TEST_CASE("small instances land within 10% of the exhaustive optimum") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> coord(0.0, 20.0);
  for (int round = 0; round < 20; ++round) {
    std::vector<Point> pts;
    int n = 4 + static_cast<int>(rng() % 5);  // 4..8
    for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
    int k = 2 + static_cast<int>(rng() % 2);  // 2..3
    KMeansResult r = kmeans(pts, k, round * 7 + 1);
    double got = wcss(pts, r.assignments, r.centroids);
    double best = optimal_wcss(pts, k);
    CHECK(got <= best * 1.10 + 1e-9);
  }
}

TEST_CASE("deterministic for a fixed seed") {
  std::vector<Point> pts{{0, 0}, {4, 1}, {9, 2}, {1, 8}, {7, 7}, {3, 3}};
  KMeansResult a = kmeans(pts, 3, 123);
  KMeansResult b = kmeans(pts, 3, 123);
  CHECK(a.assignments == b.assignments);
}

TEST_CASE("rejects k out of range and degenerate duplicate sets") {
  std::vector<Point> pts{{0, 0}, {1, 1}};
  CHECK_THROWS_AS(kmeans(pts, 0, 0), Error);
  CHECK_THROWS_AS(kmeans(pts, 3, 0), Error);
  std::vector<Point> dup{{2, 2}, {2, 2}, {2, 2}};
  CHECK_THROWS_AS(kmeans(dup, 2, 0), Error);
}
