#pragma once

// Exact integer predicates on bounded lattice points, plus endpoint
// visibility among non-crossing obstacle segments.

#include <cstdint>
#include <compare>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace flippath {

/// |x|, |y| must not exceed this bound; every 3-point determinant then fits
/// comfortably in 64 bits.
inline constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 20;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

/// Sign of the turn p -> q -> r: +1 left, 0 collinear, -1 right.
constexpr int orient(const Point& p, const Point& q, const Point& r) {
  const std::int64_t det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return (det > 0) - (det < 0);
}

/// True iff r lies on the closed segment [p, q].
bool on_segment(const Point& p, const Point& q, const Point& r);

/// Closed-segment intersection test, collinear overlap included.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

/// True iff the open segment (p, q) meets the closed segment [a, b].
/// A degenerate [a, b] (a == b) is treated as a single point.
bool open_segment_hits(const Point& p, const Point& q, const Point& a, const Point& b);

/// Unordered pair of point indices; stored with the smaller index first.
class Segment {
 public:
  Segment(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }
  bool has(int v) const { return a_ == v || b_ == v; }
  /// The endpoint that is not `v`; `v` must be an endpoint.
  int other(int v) const { return v == a_ ? b_ : a_; }

  friend auto operator<=>(const Segment&, const Segment&) = default;

 private:
  int a_;
  int b_;
};

/// Immutable point set with cached hull and general-position flag.
class PointSet {
 public:
  /// Rejects duplicate points and coordinates outside the allowed range.
  explicit PointSet(std::vector<Point> points);

  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](int i) const { return points_[static_cast<std::size_t>(i)]; }
  std::span<const Point> points() const { return points_; }

  /// Extreme points in counterclockwise order from the lexicographically
  /// smallest one. For fewer than three points or a collinear set this is the
  /// degenerate chain (the one or two extreme points).
  const std::vector<int>& hull() const { return hull_; }
  bool general_position() const { return general_position_; }
  bool convex_position() const { return size() >= 3 && static_cast<int>(hull_.size()) == size(); }

  void check_index(int i) const;

 private:
  std::vector<Point> points_;
  std::vector<int> hull_;
  bool general_position_ = true;
};

/// True iff the two closed segments meet anywhere other than at a shared
/// endpoint index.
bool segments_conflict(const Segment& s1, const Segment& s2, const PointSet& ps);

/// Extreme points in counterclockwise order starting at the lexicographically
/// smallest point. Throws on fewer than three points or an all-collinear set.
std::vector<int> convex_hull(std::span<const Point> points);

/// Obstacle given by explicit coordinates.
struct LineSegment {
  Point a;
  Point b;

  friend constexpr auto operator<=>(const LineSegment&, const LineSegment&) = default;
};

/// True iff the open segment (q, p) misses every closed obstacle. Throws when
/// q lies on an obstacle.
bool sees(const Point& q, const Point& p, std::span<const LineSegment> obstacles);

/// Obstacle endpoints visible from q, deduplicated and sorted. Requires a
/// non-empty obstacle set whose members are pairwise disjoint or share only a
/// common endpoint, and q off every obstacle.
std::vector<Point> visible_endpoints(const Point& q, std::span<const LineSegment> obstacles);

/// q sees exactly the closed obstacle `segment` and nothing else.
struct ExactlyOneSegment {
  LineSegment segment;
};

/// q sees at least three distinct obstacle endpoints.
struct AtLeastThreeEndpoints {
  std::vector<Point> endpoints;
};

using VisibilityClass = std::variant<ExactlyOneSegment, AtLeastThreeEndpoints>;

/// Certified two-way split of what q can see. The single-segment outcome is
/// decided by endpoint visibility plus exact containment of every other
/// obstacle in the shadow cast by that segment.
VisibilityClass classify_visibility(const Point& q, std::span<const LineSegment> obstacles);

/// True iff the open segment from q to `p` meets the closed segment `s`, that
/// is, p is hidden from q by s alone.
bool in_shadow(const Point& q, const LineSegment& s, const Point& p);

}  // namespace flippath
