#include "flippath/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "flippath/error.hpp"
#include "flippath/instances.hpp"

namespace flippath {

namespace {

std::string seg_text(const Segment& s) {
  return "{" + std::to_string(s.a()) + "," + std::to_string(s.b()) + "}";
}

constexpr int kRepairDepth = 8;

int mod(int a, int m) { return ((a % m) + m) % m; }

// Applies flips one at a time with full validation and records them.
class Walker {
 public:
  Walker(PlanePath start, const PointSet& ps) : seq_{start, {}}, current_(std::move(start)), ps_(ps) {}

  const PlanePath& current() const { return current_; }
  const FlipSequence& sequence() const { return seq_; }
  FlipSequence take() { return std::move(seq_); }
  int count() const { return seq_.size(); }

  void flip(const Flip& f, std::string_view context) {
    try {
      current_ = apply_flip(current_, f, ps_);
    } catch (const Error& e) {
      throw Error(ErrorCode::ProofDeviation, std::string(context) + ": remove " + seg_text(f.removed) + " add " +
                                                 seg_text(f.added) + " failed (" + e.what() + ")");
    }
    seq_.flips.push_back(f);
    if (observer_) observer_(current_);
  }

  bool try_flip(const Flip& f) {
    if (!current_.contains(f.removed) || current_.contains(f.added)) return false;
    try {
      current_ = apply_flip(current_, f, ps_);
    } catch (const Error&) {
      return false;
    }
    seq_.flips.push_back(f);
    if (observer_) observer_(current_);
    return true;
  }

  void observe(std::function<void(const PlanePath&)> fn) { observer_ = std::move(fn); }

 private:
  FlipSequence seq_;
  PlanePath current_;
  const PointSet& ps_;
  std::function<void(const PlanePath&)> observer_;
};

// Points of one side of xi, listed from the free extremity to the point
// attached to xi.
std::vector<int> side_toward(const PlanePath& p, int xi, int attach) {
  const auto order = p.order();
  const int i = p.position(xi);
  if (i > 0 && order[i - 1] == attach) return {order.begin(), order.begin() + i};
  if (i + 1 < p.size() && order[i + 1] == attach) return {order.rbegin(), order.rend() - i - 1};
  throw Error(ErrorCode::ProofDeviation, "point " + std::to_string(attach) + " is not adjacent to xi");
}

// Hull edges of a subset of a convex-position set: consecutive members in
// cyclic order. `rank` maps a point to its cyclic position.
struct SubsetHull {
  std::vector<int> cyclic;  // subset sorted by position
  std::vector<int> slot;    // point -> index into `cyclic`, -1 outside

  SubsetHull(std::span<const int> members, const std::function<int(int)>& rank, int n) : slot(static_cast<std::size_t>(n), -1) {
    cyclic.assign(members.begin(), members.end());
    std::sort(cyclic.begin(), cyclic.end(), [&](int a, int b) { return rank(a) < rank(b); });
    for (std::size_t k = 0; k < cyclic.size(); ++k) slot[static_cast<std::size_t>(cyclic[k])] = static_cast<int>(k);
  }

  bool edge(int a, int b) const {
    const int m = static_cast<int>(cyclic.size());
    const int sa = slot[static_cast<std::size_t>(a)];
    const int sb = slot[static_cast<std::size_t>(b)];
    if (sa < 0 || sb < 0) return false;
    return mod(sa - sb, m) == 1 || mod(sb - sa, m) == 1;
  }
};

// Runs the convex sweep on the side that ends at `attach` (the preserved
// extremity); `side` is refreshed from the walker after every flip.
int convex_sweep(Walker& w, const std::function<std::vector<int>()>& side, const SubsetHull& hull) {
  int flips = 0;
  for (;;) {
    const auto q = side();
    const int k = static_cast<int>(q.size());
    int first_bad = -1;
    for (int j = 0; j + 1 < k; ++j)
      if (!hull.edge(q[static_cast<std::size_t>(j)], q[static_cast<std::size_t>(j + 1)])) {
        first_bad = j;
        break;
      }
    if (first_bad < 0) return flips;
    if (first_bad + 2 == k)
      throw Error(ErrorCode::ProofDeviation, "convex sweep reached the preserved segment");
    w.flip(Flip{Segment(q[static_cast<std::size_t>(first_bad)], q[static_cast<std::size_t>(first_bad + 1)]),
                Segment(q[0], q[static_cast<std::size_t>(first_bad + 1)])},
           "convex sweep");
    ++flips;
  }
}

// Closure neighbours of xi: the points adjacent to xi once the two
// extremities are joined.
std::pair<int, int> closure_neighbours(const PlanePath& p, int xi) {
  const auto order = p.order();
  const int i = p.position(xi);
  const int n = p.size();
  if (i == 0) return {order[1], order[static_cast<std::size_t>(n - 1)]};
  if (i == n - 1) return {order[static_cast<std::size_t>(n - 2)], order[0]};
  return {order[static_cast<std::size_t>(i - 1)], order[static_cast<std::size_t>(i + 1)]};
}

// Extremity reached from xi's neighbour `v` without passing xi.
int extremity_beyond(const PlanePath& p, int xi, int v) {
  const int i = p.position(xi);
  const int j = p.position(v);
  return j < i ? p.front() : p.back();
}

// Removes `chord` and reconnects the two pieces by a free hull edge of C.
bool transfer(Walker& w, const Segment& chord, const OneOutsideInstance& inst) {
  const auto order = w.current().order();
  const int n = static_cast<int>(order.size());
  const int j = std::min(w.current().position(chord.a()), w.current().position(chord.b()));
  const int left[2] = {order[0], order[static_cast<std::size_t>(j)]};
  const int right[2] = {order[static_cast<std::size_t>(j + 1)], order[static_cast<std::size_t>(n - 1)]};
  std::vector<Segment> candidates;
  for (int l : left)
    for (int r : right)
      if (l != r && inst.hull_consecutive(l, r) && Segment(l, r) != chord) candidates.emplace_back(l, r);
  std::sort(candidates.begin(), candidates.end());
  for (const auto& c : candidates)
    if (w.try_flip(Flip{chord, c})) return true;
  return false;
}

// Breadth-first search over flips that keep the degree of xi, stopping at
// the first canonical path; neighbours are visited in their sorted order so
// the result is deterministic.
std::vector<Flip> nearest_canonical(const PlanePath& start, const OneOutsideInstance& inst, int max_depth) {
  const int xi = inst.xi();
  const int degree = start.degree(xi);
  const ConflictTable table(inst.points());
  std::map<PlanePath, std::pair<PlanePath, Flip>> parent;
  std::vector<PlanePath> frontier{start};
  parent.emplace(start, std::pair{start, Flip{Segment(0, 1), Segment(0, 1)}});
  for (int depth = 0; depth < max_depth; ++depth) {
    std::vector<PlanePath> next;
    for (const auto& v : frontier) {
      for (auto& [f, q] : neighbors(v, table)) {
        if (q.degree(xi) != degree || parent.contains(q)) continue;
        parent.emplace(q, std::pair{v, f});
        if (is_canonical(q, inst)) {
          std::vector<Flip> walk;
          for (PlanePath cur = q; cur != start;) {
            const auto& [prev, flip] = parent.at(cur);
            walk.push_back(flip);
            cur = prev;
          }
          std::reverse(walk.begin(), walk.end());
          return walk;
        }
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  throw Error(ErrorCode::ProofDeviation, "no canonical path within " + std::to_string(max_depth) + " flips");
}

void require_instance(const PlanePath& p, const OneOutsideInstance& inst) {
  if (p.size() != inst.size())
    throw Error(ErrorCode::InstanceMismatch, "path has " + std::to_string(p.size()) + " points, instance has " +
                                                 std::to_string(inst.size()));
}

class CanonicalRouter {
 public:
  CanonicalRouter(const OneOutsideInstance& inst, const PlanePath& target) : inst_(inst), xi_(inst.xi()), target_(target) {
    const auto [a0, b0] = std::pair{target.front(), target.back()};
    a0_ = a0;
    b0_ = b0;
    const auto [al, be] = closure_neighbours(target, xi_);
    alpha0_ = al;
    beta0_ = be;
  }

  void run(Walker& w, std::vector<RouteCase>& cases) {
    const PlanePath& p = w.current();
    if (p == target_) return;
    const auto [alpha, beta] = closure_neighbours(p, xi_);
    const Segment ends(p.front(), p.back());

    if (Segment(alpha, beta) == Segment(alpha0_, beta0_)) {
      cases.push_back(RouteCase::MoveHole);
      w.flip(Flip{Segment(a0_, b0_), ends}, "case 1");
      return;
    }
    const auto ca = classify_segment(Segment(xi_, alpha), inst_);
    const auto cb = classify_segment(Segment(xi_, beta), inst_);
    if (ca == SegmentClass::Outer && cb == SegmentClass::Outer && inst_.hull_consecutive(alpha, beta)) {
      cases.push_back(RouteCase::MoveSpike);
      move_spike(w, alpha, beta);
      return;
    }
    for (auto [v, cv, other] : {std::tuple{alpha, ca, beta}, std::tuple{beta, cb, alpha}}) {
      if (cv == SegmentClass::Inner && !p.contains(Segment(xi_, v))) {
        cases.push_back(RouteCase::PhantomInner);
        // xi is an extremity; `other` is its path neighbour and the hull
        // neighbour q of `other` away from v takes over as xi's neighbour.
        const int q = inst_.next(other) == v ? inst_.prev(other) : inst_.next(other);
        w.flip(Flip{Segment(q, other), Segment(q, xi_)}, "case 3");
        run(w, cases);
        return;
      }
    }
    for (auto [v, cv] : {std::pair{alpha, ca}, std::pair{beta, cb}}) {
      if (cv == SegmentClass::Inner && p.contains(Segment(xi_, v))) {
        cases.push_back(RouteCase::InnerOut);
        const int a = extremity_beyond(p, xi_, v);
        w.flip(Flip{Segment(xi_, v), Segment(xi_, a)}, "case 4");
        if (classify_segment(Segment(xi_, a), inst_) != SegmentClass::Outer)
          throw Error(ErrorCode::ProofDeviation, "case 4 produced a non-outer segment");
        run(w, cases);
        return;
      }
    }
    cases.push_back(RouteCase::ShrinkSpike);
    for (int v : {alpha, beta}) {
      const int a = extremity_beyond(p, xi_, v);
      if (classify_segment(Segment(xi_, a), inst_) == SegmentClass::Outer) {
        w.flip(Flip{Segment(xi_, v), Segment(xi_, a)}, "case 5");
        run(w, cases);
        return;
      }
    }
    throw Error(ErrorCode::ProofDeviation, "case 5 found no outer extremity");
  }

 private:
  void move_spike(Walker& w, int alpha, int beta) {
    const Segment ends(w.current().front(), w.current().back());
    if (ends != Segment(alpha0_, beta0_)) w.flip(Flip{Segment(alpha0_, beta0_), ends}, "case 2 hole");
    // Now the extremities are alpha0 and beta0 and xi sits between alpha and beta.
    for (int end : {alpha0_, beta0_}) {
      const PlanePath& p = w.current();
      const int i = p.position(xi_);
      const int side_neighbour = p.position(end) < i ? p.order()[static_cast<std::size_t>(i - 1)]
                                                      : p.order()[static_cast<std::size_t>(i + 1)];
      if (side_neighbour != end) w.flip(Flip{Segment(xi_, side_neighbour), Segment(xi_, end)}, "case 2 spike");
    }
    (void)alpha;
    (void)beta;
    if (w.current() != target_) {
      const Segment e(w.current().front(), w.current().back());
      w.flip(Flip{Segment(a0_, b0_), e}, "case 2 closing hole");
    }
  }

  const OneOutsideInstance& inst_;
  int xi_;
  PlanePath target_;
  int a0_ = -1, b0_ = -1, alpha0_ = -1, beta0_ = -1;
};

}  // namespace

OneOutsideInstance::OneOutsideInstance(PointSet ps, int xi) : ps_(std::move(ps)), xi_(xi) {
  const int n = ps_.size();
  if (xi < 0 || xi >= n) throw Error(ErrorCode::NotOneOutside, "outside point index out of range");
  if (n < 4) throw Error(ErrorCode::NotOneOutside, "need at least 3 convex points plus the outside point");
  if (!ps_.general_position()) throw Error(ErrorCode::NotOneOutside, "points are not in general position");
  std::vector<Point> rest;
  std::vector<int> back;
  for (int i = 0; i < n; ++i)
    if (i != xi) {
      rest.push_back(ps_[i]);
      back.push_back(i);
    }
  const auto hull = convex_hull(rest);
  if (static_cast<int>(hull.size()) != n - 1) throw Error(ErrorCode::NotOneOutside, "remaining points are not in convex position");
  for (int h : hull) c_order_.push_back(back[static_cast<std::size_t>(h)]);
  position_.assign(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < hull_size(); ++k) position_[static_cast<std::size_t>(c_order_[static_cast<std::size_t>(k)])] = k;

  const Point& x = ps_[xi];
  const int m = hull_size();
  std::vector<char> outer(static_cast<std::size_t>(m), 0);
  bool outside = false;
  for (int k = 0; k < m; ++k) {
    const Point& p = ps_[hull_point(k)];
    const Point& nx = ps_[hull_point(k + 1)];
    const Point& pv = ps_[hull_point(k - 1)];
    if (orient(p, nx, x) < 0) outside = true;
    // The segment enters the interior iff xi lies strictly inside the cone
    // spanned by the two hull edges at p.
    const bool inner = orient(p, nx, x) > 0 && orient(pv, p, x) > 0;
    outer[static_cast<std::size_t>(k)] = inner ? 0 : 1;
  }
  if (!outside) throw Error(ErrorCode::NotOneOutside, "point " + std::to_string(xi) + " is not outside the hull");
  outer_count_ = static_cast<int>(std::count(outer.begin(), outer.end(), 1));
  if (outer_count_ == m) {
    outer_start_ = 0;
  } else {
    for (int k = 0; k < m; ++k)
      if (outer[static_cast<std::size_t>(k)] && !outer[static_cast<std::size_t>(mod(k - 1, m))]) outer_start_ = k;
    for (int t = 0; t < outer_count_; ++t)
      if (!outer[static_cast<std::size_t>(mod(outer_start_ + t, m))])
        throw Error(ErrorCode::ProofDeviation, "outer positions are not contiguous");
  }
  if (outer_count_ < 2) throw Error(ErrorCode::ProofDeviation, "fewer than two outer segments");
}

std::optional<OneOutsideInstance> OneOutsideInstance::detect(const PointSet& ps) {
  const auto xi = find_outside_point(ps);
  if (!xi) return std::nullopt;
  return OneOutsideInstance(ps, *xi);
}

int OneOutsideInstance::hull_point(int position) const {
  return c_order_[static_cast<std::size_t>(mod(position, hull_size()))];
}

bool OneOutsideInstance::hull_consecutive(int a, int b) const {
  const int pa = hull_position(a);
  const int pb = hull_position(b);
  if (pa < 0 || pb < 0) return false;
  const int m = hull_size();
  return mod(pa - pb, m) == 1 || mod(pb - pa, m) == 1;
}

int OneOutsideInstance::outer_offset(int v) const {
  const int pv = hull_position(v);
  if (pv < 0) return -1;
  const int off = mod(pv - outer_start_, hull_size());
  return off < outer_count_ ? off : -1;
}

bool OneOutsideInstance::is_outer_point(int v) const { return outer_offset(v) >= 0; }

SegmentClass classify_segment(const Segment& s, const OneOutsideInstance& inst) {
  const int xi = inst.xi();
  if (s.has(xi)) return inst.is_outer_point(s.other(xi)) ? SegmentClass::Outer : SegmentClass::Inner;
  return inst.hull_consecutive(s.a(), s.b()) ? SegmentClass::Convex : SegmentClass::NonCanonical;
}

bool is_canonical(const PlanePath& p, const OneOutsideInstance& inst) {
  require_instance(p, inst);
  const auto segs = p.segments();
  return std::none_of(segs.begin(), segs.end(),
                      [&](const Segment& s) { return classify_segment(s, inst) == SegmentClass::NonCanonical; });
}

bool is_strongly_canonical(const PlanePath& p, const OneOutsideInstance& inst) {
  if (!is_canonical(p, inst)) return false;
  const int xi = inst.xi();
  if (p.is_extremity(xi)) return false;
  const auto nb = p.neighbours(xi);
  return inst.hull_consecutive(nb[0], nb[1]) && classify_segment(Segment(xi, nb[0]), inst) == SegmentClass::Outer &&
         classify_segment(Segment(xi, nb[1]), inst) == SegmentClass::Outer;
}

FlipSequence canonicalize_convex(const PlanePath& p, const PointSet& ps, int preserved_extremity) {
  if (p.size() != ps.size()) throw Error(ErrorCode::InstanceMismatch, "path and point set sizes differ");
  if (!ps.convex_position()) throw Error(ErrorCode::NotConvexPosition, "points are not in convex position");
  if (!p.is_extremity(preserved_extremity))
    throw Error(ErrorCode::InvalidArgument, "point " + std::to_string(preserved_extremity) + " is not an extremity");
  std::vector<int> rank(static_cast<std::size_t>(ps.size()));
  for (std::size_t k = 0; k < ps.hull().size(); ++k) rank[static_cast<std::size_t>(ps.hull()[k])] = static_cast<int>(k);
  const auto order = p.order();
  const SubsetHull hull(order, [&](int v) { return rank[static_cast<std::size_t>(v)]; }, ps.size());
  Walker w(p, ps);
  auto side = [&] {
    const auto cur = w.current().order();
    if (cur.back() == preserved_extremity) return std::vector<int>(cur.begin(), cur.end());
    return std::vector<int>(cur.rbegin(), cur.rend());
  };
  convex_sweep(w, side, hull);
  return w.take();
}

ToCanonicalReport to_canonical_report(const PlanePath& p, const OneOutsideInstance& inst) {
  require_instance(p, inst);
  const int xi = inst.xi();
  const int degree = p.degree(xi);
  Walker w(p, inst.points());
  w.observe([&](const PlanePath& cur) {
    if (cur.degree(xi) != degree) throw Error(ErrorCode::ProofDeviation, "canonicalisation changed the degree of xi");
  });
  ToCanonicalReport report{{p, {}}, {}, {}};
  const auto attachments = p.neighbours(xi);
  const int i = p.position(xi);
  const auto rank = [&](int v) { return inst.hull_position(v); };

  for (int attach : attachments) {
    SideReport& rep = (p.position(attach) < i) ? report.first : report.second;
    const auto members = side_toward(w.current(), xi, attach);
    rep.points = static_cast<int>(members.size());
    if (members.size() < 3) continue;
    const SubsetHull hull(members, rank, inst.size());
    auto side = [&] { return side_toward(w.current(), xi, attach); };
    rep.sweep_flips = convex_sweep(w, side, hull);
    const auto q = side();
    const int k = static_cast<int>(q.size());
    const int before_attach = q[static_cast<std::size_t>(k - 2)];
    if (!inst.hull_consecutive(before_attach, attach)) {
      w.flip(Flip{Segment(before_attach, attach), Segment(q[0], attach)}, "closing flip");
      rep.closing_flips = 1;
    }
  }

  // A side whose attachment is interior to its arc keeps one chord of C after
  // the sweep. Cut it and hand the detached piece to the other side through a
  // hull edge; if no such edge is free, first rotate the side about its
  // attachment so that the chord's other endpoint faces the gap.
  if (!is_canonical(w.current(), inst)) {
    const PlanePath& cur = w.current();
    const auto segs = cur.segments();
    const auto chord = std::find_if(segs.begin(), segs.end(), [&](const Segment& s) {
      return classify_segment(s, inst) == SegmentClass::NonCanonical;
    });
    const int ci = cur.position(xi);
    const int x = cur.order()[static_cast<std::size_t>(cur.position(chord->a()) < ci ? ci - 1 : ci + 1)];
    SideReport& rep = (p.position(x) < i) ? report.first : report.second;
    const int before = w.count();
    if (!transfer(w, *chord, inst) || !is_canonical(w.current(), inst))
      for (const auto& f : nearest_canonical(w.current(), inst, kRepairDepth)) w.flip(f, "repair search");
    rep.repair_flips = w.count() - before;
  }

  report.sequence = w.take();
  return report;
}

FlipSequence to_canonical(const PlanePath& p, const OneOutsideInstance& inst) {
  auto report = to_canonical_report(p, inst);
  return std::move(report.sequence);
}

int case_bound(RouteCase c) {
  switch (c) {
    case RouteCase::Identity: return 0;
    case RouteCase::MoveHole: return 1;
    case RouteCase::MoveSpike: return 4;
    case RouteCase::PhantomInner: return 5;
    case RouteCase::InnerOut: return 6;
    case RouteCase::ShrinkSpike: return 5;
  }
  return kConnectBound;
}

ConnectReport connect_canonical_report(const PlanePath& p, const PlanePath& p0, const OneOutsideInstance& inst) {
  require_instance(p, inst);
  require_instance(p0, inst);
  if (!is_canonical(p, inst)) throw Error(ErrorCode::NotCanonical, "start path is not canonical");
  if (!is_strongly_canonical(p0, inst)) throw Error(ErrorCode::NotStronglyCanonical, "target path is not strongly canonical");
  Walker w(p, inst.points());
  w.observe([&](const PlanePath& cur) {
    if (!is_canonical(cur, inst)) throw Error(ErrorCode::ProofDeviation, "router left the canonical paths");
  });
  CanonicalRouter router(inst, p0);
  ConnectReport report{{p, {}}, RouteCase::Identity, {}};
  router.run(w, report.cases);
  if (w.current() != p0) throw Error(ErrorCode::ProofDeviation, "router stopped before the target");
  if (!report.cases.empty()) report.first_case = report.cases.front();
  report.sequence = w.take();
  return report;
}

FlipSequence connect_canonical(const PlanePath& p, const PlanePath& p0, const OneOutsideInstance& inst) {
  return connect_canonical_report(p, p0, inst).sequence;
}

PlanePath pivot_path(const OneOutsideInstance& inst) {
  const int u = inst.outer_start();
  std::vector<int> order{inst.hull_point(u), inst.xi()};
  for (int t = 1; t < inst.hull_size(); ++t) order.push_back(inst.hull_point(u + t));
  return PlanePath::make(std::move(order), inst.points());
}

PlanePath ladder_path(const OneOutsideInstance& inst, int attach, int far_end) {
  if (!inst.hull_consecutive(attach, far_end))
    throw Error(ErrorCode::InvalidArgument, "ladder extremity must be a hull neighbour of the attachment");
  std::vector<int> order{inst.xi(), attach};
  const bool ccw = inst.next(far_end) == attach;  // walk away from far_end
  for (int t = 1; t < inst.hull_size(); ++t)
    order.push_back(inst.hull_point(inst.hull_position(attach) + (ccw ? t : -t)));
  return PlanePath::make(std::move(order), inst.points());
}

FlipSequence route(const PlanePath& pa, const PlanePath& pb, const OneOutsideInstance& inst) {
  require_instance(pa, inst);
  require_instance(pb, inst);
  const PointSet& ps = inst.points();
  if (pa == pb) return FlipSequence{pa, {}};
  const PlanePath pivot = pivot_path(inst);
  auto to_a = to_canonical(pa, inst);
  auto to_b = to_canonical(pb, inst);
  auto ca = final_path(to_a, ps);
  auto cb = final_path(to_b, ps);
  auto leg_a = connect_canonical(ca, pivot, inst);
  auto leg_b = connect_canonical(cb, pivot, inst);
  auto seq = concat(std::move(to_a), leg_a, ps);
  seq = concat(std::move(seq), reversed(leg_b, ps), ps);
  return concat(std::move(seq), reversed(to_b, ps), ps);
}

namespace {

void require_degree(const PlanePath& p, const OneOutsideInstance& inst, int degree) {
  if (p.degree(inst.xi()) != degree)
    throw Error(ErrorCode::DegreeMismatch, "xi has degree " + std::to_string(p.degree(inst.xi())) + ", expected " +
                                               std::to_string(degree));
}

// Ladder index of a canonical degree-1 path: 2k for P_{i,i-1}, 2k+1 for
// P_{i,i+1}, where i is the k-th point of the outer interval.
int ladder_index(const PlanePath& p, const OneOutsideInstance& inst) {
  const int xi = inst.xi();
  const int attach = p.neighbours(xi).front();
  const int far_end = p.front() == xi ? p.back() : p.front();
  const int k = inst.outer_offset(attach);
  if (k < 0) throw Error(ErrorCode::ProofDeviation, "degree-1 canonical path attached through an inner segment");
  return 2 * k + (far_end == inst.next(attach) ? 1 : 0);
}

}  // namespace

FlipSequence route_degree1(const PlanePath& pa, const PlanePath& pb, const OneOutsideInstance& inst) {
  require_instance(pa, inst);
  require_instance(pb, inst);
  require_degree(pa, inst, 1);
  require_degree(pb, inst, 1);
  const PointSet& ps = inst.points();
  if (pa == pb) return FlipSequence{pa, {}};
  auto to_a = to_canonical(pa, inst);
  auto to_b = to_canonical(pb, inst);
  const PlanePath ca = final_path(to_a, ps);
  const PlanePath cb = final_path(to_b, ps);

  Walker w(ca, ps);
  const int xi = inst.xi();
  int idx = ladder_index(ca, inst);
  const int goal = ladder_index(cb, inst);
  const int u = inst.outer_start();
  while (idx != goal) {
    const int k = idx / 2;
    const int pi = inst.hull_point(u + k);
    if (idx < goal) {
      if (idx % 2 == 0)  // P_{i,i-1} -> P_{i,i+1}
        w.flip(Flip{Segment(pi, inst.next(pi)), Segment(inst.prev(pi), pi)}, "ladder rung");
      else  // P_{i,i+1} -> P_{i+1,i}
        w.flip(Flip{Segment(xi, pi), Segment(xi, inst.next(pi))}, "ladder step");
      ++idx;
    } else {
      if (idx % 2 == 1)  // P_{i,i+1} -> P_{i,i-1}
        w.flip(Flip{Segment(inst.prev(pi), pi), Segment(pi, inst.next(pi))}, "ladder rung");
      else  // P_{i,i-1} -> P_{i-1,i}
        w.flip(Flip{Segment(xi, pi), Segment(xi, inst.prev(pi))}, "ladder step");
      --idx;
    }
    require_degree(w.current(), inst, 1);
  }
  if (w.current() != cb) throw Error(ErrorCode::ProofDeviation, "ladder walk missed the target");
  auto seq = concat(std::move(to_a), w.take(), ps);
  return concat(std::move(seq), reversed(to_b, ps), ps);
}

FlipSequence route_degree2(const PlanePath& pa, const PlanePath& pb, const OneOutsideInstance& inst) {
  require_instance(pa, inst);
  require_instance(pb, inst);
  require_degree(pa, inst, 2);
  require_degree(pb, inst, 2);
  auto seq = route(pa, pb, inst);
  for (const auto& path : replay(seq, inst.points()))
    if (path.degree(inst.xi()) != 2) throw Error(ErrorCode::ProofDeviation, "a flip changed the degree of xi");
  return seq;
}

}  // namespace flippath
