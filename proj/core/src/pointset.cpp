#include "ftatlas/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <thread>

#include "ftatlas/error.hpp"

namespace ftatlas {

namespace {

// Runs fn(begin, end) over contiguous chunks of [0, n).
template <typename Fn>
void parallel_chunks(std::size_t n, std::size_t threads, Fn fn) {
  threads = std::max<std::size_t>(1, std::min(threads, n / 64 + 1));
  if (threads == 1) {
    fn(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk, end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(fn, begin, end);
  }
  for (auto& th : pool) th.join();
}

// (s^4 - r^4)^(1/4), the largest |x3| with |(x_h, x3)| <= s when |x_h| = r.
double vertical_room(double s, double r) {
  const double v = s * s * s * s - r * r * r * r;
  return v <= 0.0 ? 0.0 : std::sqrt(std::sqrt(v));
}

std::optional<Point> heis_witness(const HeisPoint& p, const HeisPoint& q, double s) {
  const HeisPoint g = heis_multiply(heis_inverse(p), q);
  if (quasi_norm(g) <= s) return from_heis(p);
  const double len = std::hypot(g.x1, g.x2);
  if (len > 2.0 * s) return std::nullopt;
  const double w_max = std::sqrt(std::max(0.0, s * s - 0.25 * len * len));
  // Splitting g = u v with u_h = g_h / 2 + w g_perp / |g_h| leaves
  // u3 + v3 = g3 + w |g_h| / 2 and room 2 a(|u_h|) for it.
  auto slack = [&](double w) {
    return 2.0 * vertical_room(s, std::sqrt(0.25 * len * len + w * w)) - std::abs(g.x3 + 0.5 * w * len);
  };
  double lo = -w_max, hi = w_max;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, s); ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (slack(m1) < slack(m2))
      lo = m1;
    else
      hi = m2;
  }
  const double w = 0.5 * (lo + hi);
  if (slack(w) < 0.0) return std::nullopt;
  HeisPoint u{0.5 * g.x1, 0.5 * g.x2, 0.5 * (g.x3 + 0.5 * w * len)};
  if (len > 0.0) {
    u.x1 += w * (-g.x2) / len;
    u.x2 += w * g.x1 / len;
  }
  return from_heis(heis_multiply(p, u));
}

bool exact_equal(const Point& a, const Point& b) { return a == b; }

}  // namespace

PointSet::PointSet(Space space, std::size_t dimension, std::vector<Point> points)
    : space_(space), dimension_(dimension), points_(std::move(points)) {
  for (const auto& p : points_)
    if (p.size() != dimension_)
      throw Error(ErrorCode::kSizeMismatch, "point of dimension " + std::to_string(p.size()) + " in a " +
                                                std::to_string(dimension_) + "-dimensional set");
  std::vector<std::size_t> order(points_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points_[a] < points_[b]; });
  for (std::size_t k = 1; k < order.size(); ++k)
    if (exact_equal(points_[order[k - 1]], points_[order[k]]))
      throw Error(ErrorCode::kDuplicatePoints, "points " + std::to_string(std::min(order[k - 1], order[k])) + " and " +
                                                   std::to_string(std::max(order[k - 1], order[k])) +
                                                   " coincide; collapse the family first");
}

PointSet PointSet::euclidean(std::size_t dimension, std::vector<Point> points) {
  if (dimension == 0) throw Error(ErrorCode::kBadParams, "Euclidean dimension must be positive");
  return PointSet(Space::kEuclidean, dimension, std::move(points));
}

PointSet PointSet::heisenberg(const std::vector<HeisPoint>& points) {
  std::vector<Point> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(from_heis(p));
  return PointSet(Space::kHeisenberg, 3, std::move(pts));
}

PointSet PointSet::subset(const std::vector<std::size_t>& indices) const {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (std::size_t i : indices) pts.push_back(points_.at(i));
  return PointSet(space_, dimension_, std::move(pts));
}

HeisPoint to_heis(const Point& p) {
  if (p.size() != 3) throw Error(ErrorCode::kSizeMismatch, "Heisenberg points have three coordinates");
  return {p[0], p[1], p[2]};
}

Point from_heis(const HeisPoint& p) { return {p.x1, p.x2, p.x3}; }

double distance(Space space, const Point& p, const Point& q) {
  if (space == Space::kHeisenberg) return quasi_distance(to_heis(p), to_heis(q));
  if (p.size() != q.size()) throw Error(ErrorCode::kSizeMismatch, "points of different dimension");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += (p[i] - q[i]) * (p[i] - q[i]);
  return std::sqrt(sum);
}

std::optional<Point> ball_intersection_witness(Space space, const Point& p, const Point& q, double s) {
  if (s < 0.0) throw Error(ErrorCode::kBadParams, "ball radius must be nonnegative");
  if (space == Space::kHeisenberg) return heis_witness(to_heis(p), to_heis(q), s);
  if (distance(space, p, q) > 2.0 * s) return std::nullopt;
  Point mid(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mid[i] = 0.5 * (p[i] + q[i]);
  return mid;
}

bool balls_intersect(Space space, const Point& p, const Point& q, double s) {
  return ball_intersection_witness(space, p, q, s).has_value();
}

bool is_separated(const PointSet& set, double s) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (balls_intersect(set.space(), set[i], set[j], s)) return false;
  return true;
}

std::vector<Point> grid_centers(const GridSpec& grid) {
  const std::size_t d = grid.lower.size();
  if (grid.upper.size() != d || grid.counts.size() != d)
    throw Error(ErrorCode::kSizeMismatch, "grid bounds and counts differ in dimension");
  std::size_t total = d == 0 ? 0 : 1;
  for (std::size_t c : grid.counts) total *= c;
  std::vector<Point> out;
  out.reserve(total);
  std::vector<std::size_t> ix(d, 0);
  for (std::size_t k = 0; k < total; ++k) {
    Point p(d);
    for (std::size_t a = 0; a < d; ++a) {
      const double t = grid.counts[a] > 1 ? static_cast<double>(ix[a]) / static_cast<double>(grid.counts[a] - 1) : 0.0;
      p[a] = grid.lower[a] + t * (grid.upper[a] - grid.lower[a]);
    }
    out.push_back(std::move(p));
    for (std::size_t a = d; a-- > 0;) {
      if (++ix[a] < grid.counts[a]) break;
      ix[a] = 0;
    }
  }
  return out;
}

std::size_t resolve_threads(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FT_ATLAS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SeparationReport separation_scan(const PointSet& set, double r, const std::vector<Point>& centers,
                                 const std::vector<double>& separation_queries, std::size_t threads) {
  if (!(r > 0.0)) throw Error(ErrorCode::kBadParams, "scan radius must be positive");
  if (centers.empty()) throw Error(ErrorCode::kEmptyCenters, "no scan centers");
  for (const auto& c : centers)
    if (c.size() != set.dimension()) throw Error(ErrorCode::kSizeMismatch, "center dimension differs from the set");
  std::vector<std::size_t> counts(centers.size());
  parallel_chunks(centers.size(), resolve_threads(threads), [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      std::size_t k = 0;
      for (const auto& p : set.points())
        if (distance(set.space(), centers[c], p) <= r) ++k;
      counts[c] = k;
    }
  });
  SeparationReport rep;
  rep.radius = r;
  const auto best = std::max_element(counts.begin(), counts.end());
  rep.witness_index = static_cast<std::size_t>(best - counts.begin());
  rep.max_ball_occupancy = *best;
  rep.witness_center = centers[rep.witness_index];
  for (double s : separation_queries) rep.separated_at.emplace_back(s, is_separated(set, s));
  return rep;
}

SeparationReport separation_scan(const PointSet& set, double r, const GridSpec& grid,
                                 const std::vector<double>& separation_queries, std::size_t threads) {
  return separation_scan(set, r, grid_centers(grid), separation_queries, threads);
}

Partition greedy_partition(const PointSet& set, double s, std::size_t threads) {
  if (!(s > 0.0)) throw Error(ErrorCode::kBadParams, "separation radius must be positive");
  const std::size_t n = set.size();
  std::vector<std::vector<char>> conflict(n, std::vector<char>(n, 0));
  parallel_chunks(n, resolve_threads(threads), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) conflict[i][j] = balls_intersect(set.space(), set[i], set[j], s) ? 1 : 0;
  });
  Partition part;
  for (std::size_t i = 0; i < n; ++i) {
    const auto deg = static_cast<std::size_t>(std::count(conflict[i].begin(), conflict[i].end(), 1));
    part.packing_constant = std::max(part.packing_constant, deg);
  }
  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;
  while (!remaining.empty()) {
    std::vector<std::size_t> chosen, rest;
    for (std::size_t i : remaining) {
      const bool clash = std::any_of(chosen.begin(), chosen.end(), [&](std::size_t j) { return conflict[i][j] != 0; });
      (clash ? rest : chosen).push_back(i);
    }
    part.parts.push_back(std::move(chosen));
    remaining = std::move(rest);
  }
  part.bound_holds = part.parts.size() <= part.packing_constant + 1;
  return part;
}

CollapsedFamily collapse_family(Space space, std::size_t dimension, const std::vector<Point>& family) {
  std::map<Point, std::size_t> slot;
  std::vector<Point> unique;
  std::vector<std::size_t> mult;
  for (const auto& p : family) {
    if (p.size() != dimension) throw Error(ErrorCode::kSizeMismatch, "point dimension differs from the family");
    const auto [it, inserted] = slot.try_emplace(p, unique.size());
    if (inserted) {
      unique.push_back(p);
      mult.push_back(0);
    }
    ++mult[it->second];
  }
  const std::size_t max_mult = mult.empty() ? 0 : *std::max_element(mult.begin(), mult.end());
  PointSet set = space == Space::kHeisenberg ? PointSet::heisenberg([&] {
    std::vector<HeisPoint> h;
    for (const auto& p : unique) h.push_back(to_heis(p));
    return h;
  }())
                                             : PointSet::euclidean(dimension, std::move(unique));
  return {std::move(set), std::move(mult), max_mult};
}

PointSet counterexample_set(std::int64_t n_max) {
  if (n_max < 1) throw Error(ErrorCode::kBadParams, "N_max must be at least 1");
  std::vector<HeisPoint> pts;
  pts.reserve(static_cast<std::size_t>(n_max * (n_max + 1) / 2));
  for (std::int64_t m = 1; m <= n_max; ++m)
    for (std::int64_t l = 1; l <= m; ++l) pts.push_back(heis_inverse(heis_v(m, l)));
  return PointSet::heisenberg(pts);
}

PointSet inverse_set(const PointSet& set) {
  if (set.space() != Space::kHeisenberg) throw Error(ErrorCode::kBadParams, "inverse_set needs a Heisenberg set");
  std::vector<HeisPoint> pts;
  for (const auto& p : set.points()) pts.push_back(heis_inverse(to_heis(p)));
  return PointSet::heisenberg(pts);
}

MinDistance min_pairwise_distance(const PointSet& set, std::size_t threads) {
  const std::size_t n = set.size();
  if (n < 2) throw Error(ErrorCode::kBadParams, "need at least two points");
  std::vector<MinDistance> best(n, MinDistance{INFINITY, 0, 0});
  parallel_chunks(n, resolve_threads(threads), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d = distance(set.space(), set[i], set[j]);
        if (d < best[i].distance) best[i] = {d, i, j};
      }
  });
  MinDistance out = best.front();
  for (const auto& b : best)
    if (b.distance < out.distance) out = b;
  return out;
}

double quasi_triangle_ratio(std::size_t samples, std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-scale, scale);
  auto draw = [&] { return HeisPoint{coord(rng), coord(rng), coord(rng)}; };
  double worst = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const HeisPoint p = draw(), q = draw(), r = draw();
    const double denom = quasi_distance(p, q) + quasi_distance(q, r);
    if (denom > 0.0) worst = std::max(worst, quasi_distance(p, r) / denom);
  }
  return worst;
}

}  // namespace ftatlas
