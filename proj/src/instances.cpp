#include "flippath/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "flippath/error.hpp"

namespace flippath {

namespace {

constexpr std::int64_t kRadius = 1000;
constexpr int kMaxAttempts = 10000;

bool strictly_inside(std::span<const Point> pts, const std::vector<int>& hull, const Point& p) {
  for (std::size_t k = 0; k < hull.size(); ++k)
    if (orient(pts[hull[k]], pts[hull[(k + 1) % hull.size()]], p) <= 0) return false;
  return true;
}

std::vector<Point> circle_points(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    const double t = angle(rng);
    pts.push_back({std::llround(kRadius * std::cos(t)), std::llround(kRadius * std::sin(t))});
  }
  return pts;
}

bool valid_general(const std::vector<Point>& pts) {
  try {
    return PointSet(pts).general_position();
  } catch (const Error&) {
    return false;
  }
}

void check_n(int n, int min) {
  if (n < min) throw Error(ErrorCode::DegenerateInput, "instance needs at least " + std::to_string(min) + " points");
}

}  // namespace

std::string_view to_string(PositionClass c) {
  switch (c) {
    case PositionClass::Convex: return "convex";
    case PositionClass::OneInside: return "one-inside";
    case PositionClass::OneOutside: return "one-outside";
    case PositionClass::General: return "general";
  }
  return "general";
}

std::optional<int> find_outside_point(const PointSet& ps) {
  const int n = ps.size();
  if (n < 4 || !ps.general_position()) return std::nullopt;
  auto sorted_hull = ps.hull();
  std::sort(sorted_hull.begin(), sorted_hull.end());
  for (int x : sorted_hull) {
    std::vector<Point> rest;
    for (int i = 0; i < n; ++i)
      if (i != x) rest.push_back(ps[i]);
    const auto hull = convex_hull(rest);
    if (static_cast<int>(hull.size()) != n - 1) continue;
    bool outside = false;
    for (std::size_t k = 0; k < hull.size(); ++k)
      if (orient(rest[hull[k]], rest[hull[(k + 1) % hull.size()]], ps[x]) < 0) outside = true;
    if (outside) return x;
  }
  return std::nullopt;
}

PositionClass detect_class(const PointSet& ps) {
  const int n = ps.size();
  if (n >= 3 && ps.convex_position()) return PositionClass::Convex;
  if (n >= 4 && static_cast<int>(ps.hull().size()) == n - 1 && ps.general_position()) {
    std::vector<char> on_hull(static_cast<std::size_t>(n), 0);
    for (int h : ps.hull()) on_hull[static_cast<std::size_t>(h)] = 1;
    const int inner = static_cast<int>(std::find(on_hull.begin(), on_hull.end(), 0) - on_hull.begin());
    if (strictly_inside(ps.points(), ps.hull(), ps[inner])) return PositionClass::OneInside;
  }
  if (find_outside_point(ps)) return PositionClass::OneOutside;
  return PositionClass::General;
}

PointSet random_convex(int n, std::uint64_t seed) {
  check_n(n, 3);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto pts = circle_points(n, rng);
    if (!valid_general(pts)) continue;
    PointSet ps(pts);
    if (ps.convex_position()) return ps;
  }
  throw Error(ErrorCode::DegenerateInput, "could not sample a convex instance");
}

PointSet random_one_inside(int n, std::uint64_t seed) {
  check_n(n, 4);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-kRadius, kRadius);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto pts = circle_points(n - 1, rng);
    if (!valid_general(pts) || !PointSet(pts).convex_position()) continue;
    const auto hull = convex_hull(pts);
    for (int inner = 0; inner < 100; ++inner) {
      const Point p{coord(rng), coord(rng)};
      if (!strictly_inside(pts, hull, p)) continue;
      auto all = pts;
      all.push_back(p);
      if (valid_general(all)) return PointSet(all);
    }
  }
  throw Error(ErrorCode::DegenerateInput, "could not sample a one-inside instance");
}

PointSet random_one_outside(int n, std::uint64_t seed) {
  check_n(n, 4);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> dist(1.05, 3.0);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto pts = circle_points(n - 1, rng);
    if (!valid_general(pts) || !PointSet(pts).convex_position()) continue;
    const auto hull = convex_hull(pts);
    for (int outer = 0; outer < 100; ++outer) {
      const double t = angle(rng);
      const double r = dist(rng) * kRadius;
      const Point p{std::llround(r * std::cos(t)), std::llround(r * std::sin(t))};
      bool outside = false;
      for (std::size_t k = 0; k < hull.size(); ++k)
        if (orient(pts[hull[k]], pts[hull[(k + 1) % hull.size()]], p) < 0) outside = true;
      if (!outside) continue;
      auto all = pts;
      all.push_back(p);
      if (valid_general(all)) return PointSet(all);
    }
  }
  throw Error(ErrorCode::DegenerateInput, "could not sample a one-outside instance");
}

PointSet random_general(int n, std::uint64_t seed, std::int64_t box) {
  check_n(n, 3);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-box, box);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
    if (valid_general(pts)) return PointSet(pts);
  }
  throw Error(ErrorCode::DegenerateInput, "could not sample a general-position instance");
}

}  // namespace flippath
