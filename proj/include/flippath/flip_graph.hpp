#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "flippath/plane_path.hpp"

namespace flippath {

/// Enumeration and graph construction refuse larger inputs unless the caller
/// raises the cap explicitly.
inline constexpr int kDefaultCap = 9;

/// Every plane spanning path exactly once, sorted lexicographically.
/// Backtracking with incremental conflict pruning; the start vertices are
/// distributed over OpenMP threads.
std::vector<PlanePath> enumerate_plane_paths(const PointSet& ps, int cap = kDefaultCap);
/// Single-threaded reference for the above.
std::vector<PlanePath> enumerate_plane_paths_serial(const PointSet& ps, int cap = kDefaultCap);

/// Explicit flip graph over a sorted vertex list. Adjacency lists are sorted.
class FlipGraph {
 public:
  FlipGraph() = default;
  /// Checks sortedness, symmetry and absence of self-loops.
  FlipGraph(std::vector<PlanePath> vertices, std::vector<std::vector<int>> adjacency);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  long long edge_count() const;
  const std::vector<PlanePath>& vertices() const { return vertices_; }
  const PlanePath& vertex(int id) const { return vertices_[static_cast<std::size_t>(id)]; }
  const std::vector<int>& adjacent(int id) const { return adjacency_[static_cast<std::size_t>(id)]; }
  std::optional<int> id_of(const PlanePath& p) const;

 private:
  std::vector<PlanePath> vertices_;
  std::vector<std::vector<int>> adjacency_;
};

/// Per-vertex neighbour resolution runs in parallel.
FlipGraph build(const PointSet& ps, int cap = kDefaultCap);
FlipGraph build_serial(const PointSet& ps, int cap = kDefaultCap);

/// Subgraph induced by the vertices satisfying `keep`, re-indexed in order.
FlipGraph induced_subgraph(const FlipGraph& g, const std::function<bool(const PlanePath&)>& keep);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> components(const FlipGraph& g);

/// Hop distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const FlipGraph& g, int source);

/// Largest BFS eccentricity. Throws DisconnectedGraph. Sources run in parallel.
int diameter(const FlipGraph& g);
int diameter_serial(const FlipGraph& g);

/// A minimum-length flip walk from a to b. Throws VertexNotFound / Unreachable.
FlipSequence shortest_flip_path(const FlipGraph& g, const PlanePath& a, const PlanePath& b);

}  // namespace flippath
