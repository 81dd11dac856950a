#pragma once

// Flip routing for a convex set C plus one point xi outside its hull.
//
// Terminology: a segment is canonical when it is a hull edge of C ("convex")
// or is incident to xi. A xi-segment is "outer" when it misses the interior
// of hull(C) and "inner" otherwise. A canonical path uses canonical segments
// only; a strongly canonical path additionally has xi in its interior with
// two outer segments to hull-consecutive points.

#include <optional>
#include <span>
#include <vector>

#include "flippath/plane_path.hpp"

namespace flippath {

enum class SegmentClass { Convex, Outer, Inner, NonCanonical };

class OneOutsideInstance {
 public:
  /// Throws NotOneOutside unless removing `xi` leaves at least three points
  /// in convex position with xi strictly outside their hull, all in general
  /// position.
  OneOutsideInstance(PointSet ps, int xi);

  /// Picks the outside point automatically (smallest qualifying index).
  static std::optional<OneOutsideInstance> detect(const PointSet& ps);

  const PointSet& points() const { return ps_; }
  int size() const { return ps_.size(); }
  int xi() const { return xi_; }
  /// Hull of C, counterclockwise, as point indices.
  const std::vector<int>& c_order() const { return c_order_; }
  int hull_size() const { return static_cast<int>(c_order_.size()); }
  /// Position of a point of C in c_order(); -1 for xi.
  int hull_position(int v) const { return position_[static_cast<std::size_t>(v)]; }
  int hull_point(int position) const;
  /// Counterclockwise / clockwise neighbours on hull(C).
  int next(int v) const { return hull_point(hull_position(v) + 1); }
  int prev(int v) const { return hull_point(hull_position(v) - 1); }
  bool hull_consecutive(int a, int b) const;

  /// Start position u and length of the cyclic interval of C-positions whose
  /// xi-segment is outer.
  int outer_start() const { return outer_start_; }
  int outer_count() const { return outer_count_; }
  bool is_outer_point(int v) const;
  /// Offset of v inside the outer interval, or -1.
  int outer_offset(int v) const;

 private:
  PointSet ps_;
  int xi_;
  std::vector<int> c_order_;
  std::vector<int> position_;
  int outer_start_ = 0;
  int outer_count_ = 0;
};

SegmentClass classify_segment(const Segment& s, const OneOutsideInstance& inst);
bool is_canonical(const PlanePath& p, const OneOutsideInstance& inst);
bool is_strongly_canonical(const PlanePath& p, const OneOutsideInstance& inst);

/// Convex canonicalisation: repeatedly replace the first segment q_i q_{i+1}
/// (counting from the free end q_1) that is not a hull edge by q_1 q_{i+1}.
/// The preserved extremity q_n and its segment are never touched and no hull
/// edge is ever removed. `ps` must be in convex position.
FlipSequence canonicalize_convex(const PlanePath& p, const PointSet& ps, int preserved_extremity);

/// Flip counts of the sweep on one side of xi, exposed for tests.
struct SideReport {
  int points = 0;           ///< number of points on this side
  int sweep_flips = 0;      ///< flips of the convex sweep
  int closing_flips = 0;    ///< extra flip swapping a chord at xi's neighbour
  int repair_flips = 0;     ///< flips moving xi's attachment to an arc end
};

struct ToCanonicalReport {
  FlipSequence sequence;
  SideReport first;   ///< points before xi in the stored order
  SideReport second;  ///< points after xi
};

/// Flip walk from p to a canonical path that never changes the degree of xi.
/// Throws InstanceMismatch when the path's size differs from the instance's.
FlipSequence to_canonical(const PlanePath& p, const OneOutsideInstance& inst);
ToCanonicalReport to_canonical_report(const PlanePath& p, const OneOutsideInstance& inst);

/// The five cases of the canonical-to-strongly-canonical router.
enum class RouteCase { Identity = 0, MoveHole = 1, MoveSpike = 2, PhantomInner = 3, InnerOut = 4, ShrinkSpike = 5 };

struct ConnectReport {
  FlipSequence sequence;
  RouteCase first_case = RouteCase::Identity;
  std::vector<RouteCase> cases;  ///< every case entered, outermost first
};

/// Walk of at most 6 flips through canonical paths only, from canonical p to
/// strongly canonical p0. Throws NotCanonical / NotStronglyCanonical.
FlipSequence connect_canonical(const PlanePath& p, const PlanePath& p0, const OneOutsideInstance& inst);
ConnectReport connect_canonical_report(const PlanePath& p, const PlanePath& p0, const OneOutsideInstance& inst);

/// Per-case length bound of the router.
int case_bound(RouteCase c);

/// Fixed strongly canonical pivot: xi between p_u and p_{u+1}, with p_u alone
/// on its side: p_u, xi, p_{u+1}, p_{u+2}, ..., p_{u-1}.
PlanePath pivot_path(const OneOutsideInstance& inst);

/// pa -> canonical -> pivot -> canonical -> pb.
FlipSequence route(const PlanePath& pa, const PlanePath& pb, const OneOutsideInstance& inst);

/// Router inside the subgraph where xi has degree 1: canonicalise both ends,
/// then walk the ladder P_{i,i-1} - P_{i,i+1} - P_{i+1,i} - ... along the
/// outer interval. Throws DegreeMismatch.
FlipSequence route_degree1(const PlanePath& pa, const PlanePath& pb, const OneOutsideInstance& inst);

/// Same pipeline as route(), asserting that xi keeps degree 2 at every step.
/// Throws DegreeMismatch for bad inputs and ProofDeviation if a step would
/// change the degree.
FlipSequence route_degree2(const PlanePath& pa, const PlanePath& pb, const OneOutsideInstance& inst);

/// Degree-1 canonical path with xi attached to `attach` and `far_end` as the
/// other extremity (P_{i,j}).
PlanePath ladder_path(const OneOutsideInstance& inst, int attach, int far_end);

/// Length bounds, clamped at zero for small n.
inline int bound_route(int n) { return 2 * n; }
inline int bound_route_degree1(int n) { return n * 4 - 15 > 0 ? 4 * n - 15 : 0; }
inline int bound_route_degree2(int n) { return 2 * n; }
inline int bound_to_canonical(int n) { return n - 6 > 0 ? n - 6 : 0; }
inline int bound_canonicalize_convex(int n) { return n - 3 > 0 ? n - 3 : 0; }
inline constexpr int kConnectBound = 6;

}  // namespace flippath
