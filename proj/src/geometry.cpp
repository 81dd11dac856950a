#include "flippath/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "flippath/error.hpp"

namespace flippath {

namespace {

std::int64_t dot(const Point& o, const Point& u, const Point& v) {
  return (u.x - o.x) * (v.x - o.x) + (u.y - o.y) * (v.y - o.y);
}

std::string to_text(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// Two segments sharing endpoint `s` overlap beyond it iff they leave s in the
// same direction along one line.
bool overlap_from_shared(const Point& s, const Point& u, const Point& v) {
  return orient(s, u, v) == 0 && dot(s, u, v) > 0;
}

std::vector<int> monotone_chain(std::span<const Point> points) {
  std::vector<int> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return points[i] < points[j]; });
  if (idx.size() < 3) return idx;

  std::vector<int> hull(2 * idx.size());
  std::size_t k = 0;
  for (int i : idx) {
    while (k >= 2 && orient(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0) --k;
    hull[k++] = i;
  }
  for (std::size_t t = idx.size() - 1, lower = k + 1; t-- > 0;) {
    const int i = idx[t];
    while (k >= lower && orient(points[hull[k - 2]], points[hull[k - 1]], points[i]) <= 0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

void check_obstacles(const Point& q, std::span<const LineSegment> obstacles) {
  if (obstacles.empty()) throw Error(ErrorCode::InvalidArgument, "obstacle set is empty");
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    const auto& s = obstacles[i];
    if (s.a == s.b) throw Error(ErrorCode::InvalidArgument, "degenerate obstacle at " + to_text(s.a));
    if (on_segment(s.a, s.b, q))
      throw Error(ErrorCode::PointOnObstacle, "query point " + to_text(q) + " lies on an obstacle");
    for (std::size_t j = 0; j < i; ++j) {
      const auto& t = obstacles[j];
      if (!segments_intersect(s.a, s.b, t.a, t.b)) continue;
      const Point* shared = nullptr;
      const Point* u = nullptr;
      const Point* v = nullptr;
      int common = 0;
      for (const Point* x : {&s.a, &s.b}) {
        for (const Point* y : {&t.a, &t.b}) {
          if (*x == *y) {
            ++common;
            shared = x;
            u = (x == &s.a) ? &s.b : &s.a;
            v = (y == &t.a) ? &t.b : &t.a;
          }
        }
      }
      if (common != 1 || overlap_from_shared(*shared, *u, *v))
        throw Error(ErrorCode::OverlappingObstacles,
                    "obstacles " + std::to_string(j) + " and " + std::to_string(i) +
                        " meet outside a common endpoint");
    }
  }
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorCode::PointOnObstacle: return "PointOnObstacle";
    case ErrorCode::OverlappingObstacles: return "OverlappingObstacles";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::NotPlane: return "NotPlane";
    case ErrorCode::RemovedNotPresent: return "RemovedNotPresent";
    case ErrorCode::AddedAlreadyPresent: return "AddedAlreadyPresent";
    case ErrorCode::ResultNotPath: return "ResultNotPath";
    case ErrorCode::ResultNotPlane: return "ResultNotPlane";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::VertexNotFound: return "VertexNotFound";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::NotConvexPosition: return "NotConvexPosition";
    case ErrorCode::NotOneOutside: return "NotOneOutside";
    case ErrorCode::InstanceMismatch: return "InstanceMismatch";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::NotStronglyCanonical: return "NotStronglyCanonical";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ProofDeviation: return "ProofDeviation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool on_segment(const Point& p, const Point& q, const Point& r) {
  return orient(p, q, r) == 0 && std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
         std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

bool open_segment_hits(const Point& p, const Point& q, const Point& a, const Point& b) {
  if (p == q) return false;
  const int o1 = orient(p, q, a);
  const int o2 = orient(p, q, b);
  if (o1 == 0 && o2 == 0) {
    // Collinear: compare projections onto p->q against the open range (0, len).
    const std::int64_t len = dot(p, q, q);
    const std::int64_t ta = dot(p, q, a);
    const std::int64_t tb = dot(p, q, b);
    return std::max(ta, tb) > 0 && std::min(ta, tb) < len;
  }
  if (o1 * o2 > 0) return false;
  if (a == b) return false;
  // [a, b] crosses line pq at a single point; it must fall strictly between p and q.
  return orient(a, b, p) * orient(a, b, q) < 0;
}

Segment::Segment(int a, int b) : a_(std::min(a, b)), b_(std::max(a, b)) {
  if (a == b) throw Error(ErrorCode::InvalidArgument, "segment endpoints coincide: " + std::to_string(a));
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (p.x > kCoordinateLimit || p.x < -kCoordinateLimit || p.y > kCoordinateLimit || p.y < -kCoordinateLimit)
      throw Error(ErrorCode::CoordinateOutOfRange, "point " + std::to_string(i) + " " + to_text(p));
  }
  std::vector<Point> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
    throw Error(ErrorCode::DuplicatePoint, "point " + to_text(*it) + " appears twice");

  hull_ = monotone_chain(points_);
  const int n = size();
  for (int i = 0; i < n && general_position_; ++i)
    for (int j = i + 1; j < n && general_position_; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orient(points_[i], points_[j], points_[k]) == 0) {
          general_position_ = false;
          break;
        }
}

void PointSet::check_index(int i) const {
  if (i < 0 || i >= size())
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) + " not in [0, " + std::to_string(size()) + ")");
}

bool segments_conflict(const Segment& s1, const Segment& s2, const PointSet& ps) {
  for (int v : {s1.a(), s1.b(), s2.a(), s2.b()}) ps.check_index(v);
  if (s1 == s2) return true;
  for (int v : {s1.a(), s1.b()}) {
    if (s2.has(v)) return overlap_from_shared(ps[v], ps[s1.other(v)], ps[s2.other(v)]);
  }
  return segments_intersect(ps[s1.a()], ps[s1.b()], ps[s2.a()], ps[s2.b()]);
}

std::vector<int> convex_hull(std::span<const Point> points) {
  if (points.size() < 3) throw Error(ErrorCode::DegenerateInput, "convex hull needs at least 3 points");
  auto hull = monotone_chain(points);
  if (hull.size() < 3) throw Error(ErrorCode::DegenerateInput, "all points are collinear");
  return hull;
}

bool in_shadow(const Point& q, const LineSegment& s, const Point& p) {
  return open_segment_hits(q, p, s.a, s.b);
}

bool sees(const Point& q, const Point& p, std::span<const LineSegment> obstacles) {
  for (const auto& s : obstacles)
    if (on_segment(s.a, s.b, q))
      throw Error(ErrorCode::PointOnObstacle, "query point " + to_text(q) + " lies on an obstacle");
  return std::none_of(obstacles.begin(), obstacles.end(),
                      [&](const LineSegment& s) { return open_segment_hits(q, p, s.a, s.b); });
}

std::vector<Point> visible_endpoints(const Point& q, std::span<const LineSegment> obstacles) {
  check_obstacles(q, obstacles);
  std::set<Point> seen;
  for (const auto& s : obstacles)
    for (const Point& e : {s.a, s.b})
      if (!seen.contains(e) && sees(q, e, obstacles)) seen.insert(e);
  return {seen.begin(), seen.end()};
}

VisibilityClass classify_visibility(const Point& q, std::span<const LineSegment> obstacles) {
  auto visible = visible_endpoints(q, obstacles);
  if (visible.size() == 2) {
    for (const auto& s : obstacles) {
      const auto lo = std::min(s.a, s.b);
      const auto hi = std::max(s.a, s.b);
      if (visible[0] != lo || visible[1] != hi) continue;
      const bool rest_hidden = std::all_of(obstacles.begin(), obstacles.end(), [&](const LineSegment& t) {
        if (t == s) return true;
        for (const Point& e : {t.a, t.b})
          if (e != s.a && e != s.b && !in_shadow(q, s, e)) return false;
        return true;
      });
      if (rest_hidden) return ExactlyOneSegment{s};
    }
  }
  if (visible.size() < 3)
    throw Error(ErrorCode::ProofDeviation,
                "query point " + to_text(q) + " sees only " + std::to_string(visible.size()) +
                    " endpoints and no single segment fully");
  return AtLeastThreeEndpoints{std::move(visible)};
}

}  // namespace flippath
