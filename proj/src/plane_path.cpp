#include "flippath/plane_path.hpp"

#include <algorithm>
#include <string>

#include "flippath/error.hpp"

namespace flippath {

namespace {

std::string seg_text(const Segment& s) {
  return "{" + std::to_string(s.a()) + "," + std::to_string(s.b()) + "}";
}

void canonicalize(std::vector<int>& order) {
  if (!order.empty() && order.front() > order.back()) std::reverse(order.begin(), order.end());
}

// Shared enumeration of every flip of p. `conflicts(x, y, j)` reports whether
// the candidate segment {x,y} conflicts with path segment j.
template <typename ConflictFn>
std::vector<std::pair<Flip, PlanePath>> neighbors_impl(const PlanePath& p, ConflictFn&& conflicts) {
  const auto order = p.order();
  const int n = p.size();
  std::vector<std::pair<Flip, PlanePath>> out;
  if (n < 2) return out;
  out.reserve(static_cast<std::size_t>(3 * n));

  for (int k = 0; k + 1 < n; ++k) {
    const Segment removed(order[k], order[k + 1]);
    // Removing segment k leaves A = order[0..k] and B = order[k+1..n-1]; a
    // flip reconnects one end of A to one end of B.
    std::vector<std::pair<int, int>> joins;
    for (int x : {order[0], order[k]})
      for (int y : {order[k + 1], order[n - 1]}) {
        if (Segment(x, y) == removed) continue;
        if (std::find(joins.begin(), joins.end(), std::pair{x, y}) != joins.end()) continue;
        joins.emplace_back(x, y);
      }

    for (auto [x, y] : joins) {
      bool plane = true;
      for (int j = 0; j + 1 < n && plane; ++j)
        if (j != k && conflicts(x, y, j)) plane = false;
      if (!plane) continue;

      std::vector<int> next;
      next.reserve(static_cast<std::size_t>(n));
      if (x == order[k])
        next.insert(next.end(), order.begin(), order.begin() + k + 1);
      else
        next.insert(next.end(), std::make_reverse_iterator(order.begin() + k + 1), order.rend());
      if (y == order[k + 1])
        next.insert(next.end(), order.begin() + k + 1, order.end());
      else
        next.insert(next.end(), order.rbegin(), std::make_reverse_iterator(order.begin() + k + 1));
      canonicalize(next);
      out.emplace_back(Flip{removed, Segment(x, y)}, PlanePath::trusted(std::move(next)));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.second < r.second; });
  out.erase(std::unique(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.second == r.second; }),
            out.end());
  return out;
}

std::vector<int> orient_witness(std::span<const int> order, const PointSet& ps, Flip& flip) {
  const int n = static_cast<int>(order.size());
  std::vector<LineSegment> obstacles;
  for (int j = 1; j + 1 < n; ++j) obstacles.push_back({ps[order[j]], ps[order[j + 1]]});
  const Point q = ps[order[0]];
  for (int i = 2; i < n; ++i) {
    if (!sees(q, ps[order[i]], obstacles)) continue;
    flip = Flip{Segment(order[i - 1], order[i]), Segment(order[0], order[i])};
    std::vector<int> next(order.rend() - i, order.rend());
    next.insert(next.end(), order.begin() + i, order.end());
    return next;
  }
  throw Error(ErrorCode::ProofDeviation, "no point beyond the second is visible from the first extremity");
}

void check_witness_input(const PlanePath& p, const PointSet& ps) {
  if (p.size() < 3) throw Error(ErrorCode::DegenerateInput, "witness needs at least 3 points");
  if (p.size() != ps.size()) throw Error(ErrorCode::InstanceMismatch, "path and point set sizes differ");
  if (!ps.general_position()) throw Error(ErrorCode::NotGeneralPosition, "witness requires general position");
}

}  // namespace

PlanePath::PlanePath(std::vector<int> order) : order_(std::move(order)) { canonicalize(order_); }

PlanePath PlanePath::trusted(std::vector<int> order) { return PlanePath(std::move(order)); }

PlanePath PlanePath::make(std::vector<int> order, const PointSet& ps) {
  const int n = static_cast<int>(order.size());
  if (n != ps.size()) throw Error(ErrorCode::NotPermutation, "order has " + std::to_string(n) + " entries for " +
                                                                 std::to_string(ps.size()) + " points");
  if (n < 2) throw Error(ErrorCode::DegenerateInput, "a path needs at least 2 points");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::NotPermutation, "entry " + std::to_string(v) + " is out of range or repeated");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (int i = 0; i + 1 < n; ++i)
    for (int j = i + 1; j + 1 < n; ++j) {
      const Segment si(order[i], order[i + 1]);
      const Segment sj(order[j], order[j + 1]);
      if (segments_conflict(si, sj, ps))
        throw Error(ErrorCode::NotPlane, "segments " + seg_text(si) + " and " + seg_text(sj) + " conflict");
    }
  return PlanePath(std::move(order));
}

std::vector<Segment> PlanePath::segments() const {
  std::vector<Segment> out;
  out.reserve(order_.size());
  for (std::size_t i = 0; i + 1 < order_.size(); ++i) out.emplace_back(order_[i], order_[i + 1]);
  return out;
}

bool PlanePath::contains(const Segment& s) const {
  const int i = position(s.a());
  if (i < 0) return false;
  return (i > 0 && order_[static_cast<std::size_t>(i - 1)] == s.b()) ||
         (i + 1 < size() && order_[static_cast<std::size_t>(i + 1)] == s.b());
}

int PlanePath::position(int v) const {
  auto it = std::find(order_.begin(), order_.end(), v);
  return it == order_.end() ? -1 : static_cast<int>(it - order_.begin());
}

std::vector<int> PlanePath::neighbours(int v) const {
  std::vector<int> out;
  const int i = position(v);
  if (i < 0) return out;
  if (i > 0) out.push_back(order_[static_cast<std::size_t>(i - 1)]);
  if (i + 1 < size()) out.push_back(order_[static_cast<std::size_t>(i + 1)]);
  return out;
}

int PlanePath::degree(int v) const { return static_cast<int>(neighbours(v).size()); }

ConflictTable::ConflictTable(const PointSet& ps)
    : n_(ps.size()), segment_count_(n_ * (n_ - 1) / 2), ids_(static_cast<std::size_t>(n_ * n_), -1) {
  std::vector<Segment> segs;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b) {
      ids_[static_cast<std::size_t>(a * n_ + b)] = ids_[static_cast<std::size_t>(b * n_ + a)] =
          static_cast<int>(segs.size());
      segs.emplace_back(a, b);
    }
  bits_.assign(static_cast<std::size_t>(segment_count_) * static_cast<std::size_t>(segment_count_), 0);
  for (int i = 0; i < segment_count_; ++i)
    for (int j = i; j < segment_count_; ++j) {
      const bool c = segments_conflict(segs[static_cast<std::size_t>(i)], segs[static_cast<std::size_t>(j)], ps);
      bits_[static_cast<std::size_t>(i * segment_count_ + j)] = bits_[static_cast<std::size_t>(j * segment_count_ + i)] =
          c ? 1 : 0;
    }
}

PlanePath apply_flip(const PlanePath& p, const Flip& f, const PointSet& ps) {
  const int n = p.size();
  if (n != ps.size()) throw Error(ErrorCode::InstanceMismatch, "path and point set sizes differ");
  if (f.removed == f.added) throw Error(ErrorCode::InvalidArgument, "flip removes and adds the same segment");
  for (int v : {f.added.a(), f.added.b()}) ps.check_index(v);
  if (!p.contains(f.removed)) throw Error(ErrorCode::RemovedNotPresent, seg_text(f.removed) + " is not in the path");
  if (p.contains(f.added)) throw Error(ErrorCode::AddedAlreadyPresent, seg_text(f.added) + " is already in the path");

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  auto segs = p.segments();
  std::erase(segs, f.removed);
  segs.push_back(f.added);
  for (const auto& s : segs) {
    adj[static_cast<std::size_t>(s.a())].push_back(s.b());
    adj[static_cast<std::size_t>(s.b())].push_back(s.a());
  }
  int start = -1;
  for (int v = 0; v < n; ++v) {
    const auto deg = adj[static_cast<std::size_t>(v)].size();
    if (deg > 2) throw Error(ErrorCode::ResultNotPath, "vertex " + std::to_string(v) + " would have degree " + std::to_string(deg));
    if (deg == 1 && start < 0) start = v;
  }
  if (start < 0) throw Error(ErrorCode::ResultNotPath, "edge set closes a cycle");
  std::vector<int> order{start};
  for (int prev = -1, cur = start;;) {
    int next = -1;
    for (int w : adj[static_cast<std::size_t>(cur)])
      if (w != prev) next = w;
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n)
    throw Error(ErrorCode::ResultNotPath, "edge set is disconnected");

  for (const auto& s : segs)
    if (s != f.added && segments_conflict(s, f.added, ps))
      throw Error(ErrorCode::ResultNotPlane, seg_text(f.added) + " conflicts with " + seg_text(s));
  return PlanePath::trusted(std::move(order));
}

std::vector<std::pair<Flip, PlanePath>> neighbors(const PlanePath& p, const PointSet& ps) {
  const auto order = p.order();
  return neighbors_impl(p, [&](int x, int y, int j) {
    return segments_conflict(Segment(x, y), Segment(order[j], order[j + 1]), ps);
  });
}

std::vector<std::pair<Flip, PlanePath>> neighbors(const PlanePath& p, const ConflictTable& table) {
  const auto order = p.order();
  std::vector<int> ids;
  ids.reserve(order.size());
  for (std::size_t j = 0; j + 1 < order.size(); ++j) ids.push_back(table.segment_id(order[j], order[j + 1]));
  return neighbors_impl(p, [&](int x, int y, int j) {
    return table.conflict(table.segment_id(x, y), ids[static_cast<std::size_t>(j)]);
  });
}

std::vector<Segment> symmetric_difference(const PlanePath& p, const PlanePath& q) {
  auto a = p.segments();
  auto b = q.segments();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Segment> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::optional<Flip> flip_between(const PlanePath& p, const PlanePath& q) {
  const auto diff = symmetric_difference(p, q);
  if (diff.size() != 2) return std::nullopt;
  if (p.contains(diff[0])) return Flip{diff[0], diff[1]};
  return Flip{diff[1], diff[0]};
}

std::vector<PlanePath> replay(const FlipSequence& seq, const PointSet& ps) {
  std::vector<PlanePath> out{seq.start};
  for (const auto& f : seq.flips) out.push_back(apply_flip(out.back(), f, ps));
  return out;
}

PlanePath final_path(const FlipSequence& seq, const PointSet& ps) { return replay(seq, ps).back(); }

FlipSequence reversed(const FlipSequence& seq, const PointSet& ps) {
  FlipSequence out{final_path(seq, ps), {}};
  for (auto it = seq.flips.rbegin(); it != seq.flips.rend(); ++it) out.flips.push_back(Flip{it->added, it->removed});
  return out;
}

FlipSequence concat(FlipSequence a, const FlipSequence& b, const PointSet& ps) {
  if (final_path(a, ps) != b.start)
    throw Error(ErrorCode::InvalidArgument, "second sequence does not start where the first one ends");
  a.flips.insert(a.flips.end(), b.flips.begin(), b.flips.end());
  return a;
}

Witness isolated_vertex_witness(const PlanePath& p, const PointSet& ps) {
  check_witness_input(p, ps);
  Flip flip{Segment(0, 1), Segment(0, 1)};
  auto next = orient_witness(p.order(), ps, flip);
  return Witness{flip, PlanePath::trusted(std::move(next))};
}

std::pair<Witness, Witness> three_component_witness(const PlanePath& p, const PointSet& ps) {
  check_witness_input(p, ps);
  auto first = isolated_vertex_witness(p, ps);
  std::vector<int> rev(p.order().rbegin(), p.order().rend());
  Flip flip{Segment(0, 1), Segment(0, 1)};
  auto next = orient_witness(rev, ps, flip);
  return {std::move(first), Witness{flip, PlanePath::trusted(std::move(next))}};
}

}  // namespace flippath
