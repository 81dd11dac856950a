#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "flippath/geometry.hpp"

namespace flippath {

/// Plane spanning path, stored in canonical orientation (first index smaller
/// than last) since a path and its reversal are the same drawing.
class PlanePath {
 public:
  /// Validates that `order` is a permutation of 0..n-1 and that no two of its
  /// segments conflict. Throws NotPermutation / NotPlane.
  static PlanePath make(std::vector<int> order, const PointSet& ps);

  /// Skips validation. Only for orders already known to be plane paths.
  static PlanePath trusted(std::vector<int> order);

  std::span<const int> order() const { return order_; }
  int size() const { return static_cast<int>(order_.size()); }
  int front() const { return order_.front(); }
  int back() const { return order_.back(); }
  bool is_extremity(int v) const { return v == front() || v == back(); }

  std::vector<Segment> segments() const;
  bool contains(const Segment& s) const;
  int degree(int v) const;
  /// Path neighbours of v (one or two entries).
  std::vector<int> neighbours(int v) const;
  int position(int v) const;

  friend auto operator<=>(const PlanePath&, const PlanePath&) = default;

 private:
  explicit PlanePath(std::vector<int> order);
  std::vector<int> order_;
};

struct Flip {
  Segment removed;
  Segment added;

  friend auto operator<=>(const Flip&, const Flip&) = default;
};

/// A start path plus the flips to apply in order.
struct FlipSequence {
  PlanePath start;
  std::vector<Flip> flips;

  int size() const { return static_cast<int>(flips.size()); }
  bool empty() const { return flips.empty(); }
};

/// Precomputed segment-vs-segment conflict matrix for one point set.
class ConflictTable {
 public:
  explicit ConflictTable(const PointSet& ps);

  int point_count() const { return n_; }
  int segment_id(int a, int b) const { return ids_[static_cast<std::size_t>(a * n_ + b)]; }
  bool conflict(int seg1, int seg2) const {
    return bits_[static_cast<std::size_t>(seg1 * segment_count_ + seg2)] != 0;
  }
  bool conflict(int a, int b, int c, int d) const { return conflict(segment_id(a, b), segment_id(c, d)); }

 private:
  int n_;
  int segment_count_;
  std::vector<int> ids_;
  std::vector<unsigned char> bits_;
};

/// Validating flip. Throws RemovedNotPresent, AddedAlreadyPresent,
/// ResultNotPath or ResultNotPlane.
PlanePath apply_flip(const PlanePath& p, const Flip& f, const PointSet& ps);

/// Every path one flip away, with its flip, sorted by resulting path.
std::vector<std::pair<Flip, PlanePath>> neighbors(const PlanePath& p, const PointSet& ps);
std::vector<std::pair<Flip, PlanePath>> neighbors(const PlanePath& p, const ConflictTable& table);

/// Segments present in exactly one of the two paths.
std::vector<Segment> symmetric_difference(const PlanePath& p, const PlanePath& q);

/// The flip turning p into q, if the two paths are flip-adjacent.
std::optional<Flip> flip_between(const PlanePath& p, const PlanePath& q);

/// Replays a sequence with full validation; returns every visited path,
/// starting with seq.start.
std::vector<PlanePath> replay(const FlipSequence& seq, const PointSet& ps);

/// Path reached after the last flip.
PlanePath final_path(const FlipSequence& seq, const PointSet& ps);

/// The same walk traversed backwards: starts at final_path(seq) and ends at
/// seq.start.
FlipSequence reversed(const FlipSequence& seq, const PointSet& ps);

/// Concatenation of two walks; b must start where a ends.
FlipSequence concat(FlipSequence a, const FlipSequence& b, const PointSet& ps);

struct Witness {
  Flip flip;
  PlanePath path;
};

/// Non-isolation witness at the first extremity: the smallest-position point
/// p_i (i >= 3) visible from p_1, with p_{i-1}p_i swapped for p_1p_i.
Witness isolated_vertex_witness(const PlanePath& p, const PointSet& ps);

/// Witnesses at both extremities; together with p they are pairwise distinct.
std::pair<Witness, Witness> three_component_witness(const PlanePath& p, const PointSet& ps);

}  // namespace flippath
