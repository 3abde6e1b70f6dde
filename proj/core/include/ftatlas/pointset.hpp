#pragma once

// Finite point sets in R^d or in the Heisenberg group with its quasi-metric.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ftatlas/heisenberg.hpp"

namespace ftatlas {

enum class Space { kEuclidean, kHeisenberg };

using Point = std::vector<double>;

class PointSet {
 public:
  /// Throws kDuplicatePoints for repeated points (see collapse_family) and
  /// kSizeMismatch for points of the wrong dimension.
  static PointSet euclidean(std::size_t dimension, std::vector<Point> points);
  static PointSet heisenberg(const std::vector<HeisPoint>& points);

  Space space() const noexcept { return space_; }
  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const noexcept { return points_; }
  PointSet subset(const std::vector<std::size_t>& indices) const;

 private:
  PointSet(Space space, std::size_t dimension, std::vector<Point> points);
  Space space_;
  std::size_t dimension_;
  std::vector<Point> points_;
};

HeisPoint to_heis(const Point& p);
Point from_heis(const HeisPoint& p);

double distance(Space space, const Point& p, const Point& q);

/// A point in both closed s-balls B(p, s) and B(q, s), or nothing.
/// Heisenberg: p^-1 q must factor as u v with |u|, |v| <= s; by concavity the
/// best split is symmetric in the horizontal plane, leaving a concave
/// one-dimensional maximization solved by ternary search.
std::optional<Point> ball_intersection_witness(Space space, const Point& p, const Point& q, double s);
bool balls_intersect(Space space, const Point& p, const Point& q, double s);
/// Closed s-balls around the points are pairwise disjoint.
bool is_separated(const PointSet& set, double s);

struct GridSpec {
  Point lower;
  Point upper;
  /// Grid points per axis (>= 1; a single point sits at `lower`).
  std::vector<std::size_t> counts;
};

std::vector<Point> grid_centers(const GridSpec& grid);

struct SeparationReport {
  double radius = 0.0;
  std::size_t max_ball_occupancy = 0;
  /// Lowest-index center attaining the maximum.
  Point witness_center;
  std::size_t witness_index = 0;
  std::vector<std::pair<double, bool>> separated_at;
};

/// Threads: 0 reads FT_ATLAS_THREADS, falling back to the hardware count.
std::size_t resolve_threads(std::size_t requested);

/// max over centers c of #{p : d(c, p) <= r}. Throws kEmptyCenters, kBadParams.
SeparationReport separation_scan(const PointSet& set, double r, const std::vector<Point>& centers,
                                 const std::vector<double>& separation_queries = {}, std::size_t threads = 0);
SeparationReport separation_scan(const PointSet& set, double r, const GridSpec& grid,
                                 const std::vector<double>& separation_queries = {}, std::size_t threads = 0);

struct Partition {
  /// Indices into the input set, each part in input order.
  std::vector<std::vector<std::size_t>> parts;
  /// max over p of #{q != p : closed s-balls of p and q meet}.
  std::size_t packing_constant = 0;
  bool bound_holds = false;
};

/// Greedy maximal s-separated subsets in input order, repeated until the set
/// is exhausted.
Partition greedy_partition(const PointSet& set, double s, std::size_t threads = 0);

struct CollapsedFamily {
  PointSet set;
  std::vector<std::size_t> multiplicity;
  std::size_t max_multiplicity = 0;
};

/// Removes repetitions keeping first occurrences. Throws kSizeMismatch.
CollapsedFamily collapse_family(Space space, std::size_t dimension, const std::vector<Point>& family);

/// Gamma = {exp(-V_{M,l}) : 1 <= M <= n_max, 1 <= l <= M}, ordered by (M, l).
PointSet counterexample_set(std::int64_t n_max);
/// Pointwise inverses of a Heisenberg set.
PointSet inverse_set(const PointSet& set);

/// Minimum pairwise distance and the attaining pair.
struct MinDistance {
  double distance = 0.0;
  std::size_t first = 0;
  std::size_t second = 0;
};
MinDistance min_pairwise_distance(const PointSet& set, std::size_t threads = 0);

/// max d(p,r) / (d(p,q) + d(q,r)) over seeded random triples with
/// coordinates uniform in [-scale, scale].
double quasi_triangle_ratio(std::size_t samples, std::uint64_t seed, double scale);

}  // namespace ftatlas
