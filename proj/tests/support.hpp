#pragma once

#include <random>
#include <utility>
#include <vector>

#include "flippath/geometry.hpp"
#include "oracles.hpp"

namespace support {

using flippath::LineSegment;
using flippath::Point;

struct ObstacleCase {
  std::vector<LineSegment> obstacles;
  Point q;
};

// Small-grid obstacle sets so collinear and endpoint-sharing configurations
// show up often. Segments are added greedily while they stay non-crossing.
inline ObstacleCase random_obstacles(std::mt19937_64& rng, int grid = 6, int want = 4) {
  std::uniform_int_distribution<int> c(-grid, grid);
  ObstacleCase out;
  for (int tries = 0; tries < 200 && static_cast<int>(out.obstacles.size()) < want; ++tries) {
    const Point a{c(rng), c(rng)};
    const Point b{c(rng), c(rng)};
    if (a == b) continue;
    bool ok = true;
    for (const auto& s : out.obstacles) {
      if (!oracle::closed_meet(a, b, s.a, s.b)) continue;
      // Touching is allowed only at one shared endpoint.
      const bool shared = a == s.a || a == s.b || b == s.a || b == s.b;
      if (!shared) {
        ok = false;
        break;
      }
      const Point& m = (a == s.a || a == s.b) ? a : b;
      const Point& u = m == a ? b : a;
      const Point& v = m == s.a ? s.b : s.a;
      if (u == v || (oracle::cross(m, u, v) == 0 &&
                     static_cast<oracle::i128>(u.x - m.x) * (v.x - m.x) + static_cast<oracle::i128>(u.y - m.y) * (v.y - m.y) > 0)) {
        ok = false;
        break;
      }
    }
    if (ok) out.obstacles.push_back({a, b});
  }
  for (;;) {
    const Point q{c(rng) * 2, c(rng) * 2};
    bool on = false;
    for (const auto& s : out.obstacles) on = on || oracle::closed_meet(s.a, s.b, q, q);
    if (!on) {
      out.q = q;
      return out;
    }
  }
}

inline std::vector<std::pair<Point, Point>> as_pairs(const std::vector<LineSegment>& obs, std::int64_t scale = 1) {
  std::vector<std::pair<Point, Point>> out;
  for (const auto& s : obs) out.push_back({{s.a.x * scale, s.a.y * scale}, {s.b.x * scale, s.b.y * scale}});
  return out;
}

// Whether q sees the point at parameter k/den along s (inclusive), decided by
// the oracle on a scaled copy so the sample has integer coordinates.
inline bool sample_seen(const ObstacleCase& c, const LineSegment& s, int k, int den) {
  const auto scaled = as_pairs(c.obstacles, den);
  const Point q{c.q.x * den, c.q.y * den};
  const Point p{s.a.x * (den - k) + s.b.x * k, s.a.y * (den - k) + s.b.y * k};
  return oracle::sees(q, p, scaled);
}

}  // namespace support
