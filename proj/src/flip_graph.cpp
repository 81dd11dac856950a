#include "flippath/flip_graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "flippath/error.hpp"

namespace flippath {

namespace {

void check_size(const PointSet& ps, int cap) {
  if (ps.size() < 3) throw Error(ErrorCode::DegenerateInput, "flip graphs need at least 3 points");
  if (ps.size() > cap)
    throw Error(ErrorCode::CapExceeded,
                std::to_string(ps.size()) + " points exceeds the cap of " + std::to_string(cap));
}

// Depth-first extension of `order`; a candidate is pruned as soon as its
// newest segment conflicts with an earlier one.
void extend(const ConflictTable& table, std::vector<int>& order, std::vector<int>& seg_ids,
            std::vector<char>& used, std::vector<PlanePath>& out) {
  const int n = table.point_count();
  if (static_cast<int>(order.size()) == n) {
    if (order.front() < order.back()) out.push_back(PlanePath::trusted(order));
    return;
  }
  const int last = order.back();
  for (int v = 0; v < n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    const int id = table.segment_id(last, v);
    bool plane = true;
    // The segment just before `last` shares an endpoint; the table handles
    // that case exactly (overlap only when collinear and same direction).
    for (int s : seg_ids)
      if (table.conflict(id, s)) {
        plane = false;
        break;
      }
    if (!plane) continue;
    used[static_cast<std::size_t>(v)] = 1;
    order.push_back(v);
    seg_ids.push_back(id);
    extend(table, order, seg_ids, used, out);
    seg_ids.pop_back();
    order.pop_back();
    used[static_cast<std::size_t>(v)] = 0;
  }
}

std::vector<PlanePath> paths_from(const ConflictTable& table, int start) {
  const int n = table.point_count();
  std::vector<int> order{start};
  std::vector<int> seg_ids;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[static_cast<std::size_t>(start)] = 1;
  std::vector<PlanePath> out;
  extend(table, order, seg_ids, used, out);
  return out;
}

std::vector<int> resolve_neighbours(const std::vector<PlanePath>& vertices, const ConflictTable& table, int id) {
  std::vector<int> adj;
  for (const auto& [flip, path] : neighbors(vertices[static_cast<std::size_t>(id)], table)) {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), path);
    if (it == vertices.end() || *it != path)
      throw Error(ErrorCode::ProofDeviation, "flip produced a path missing from the enumeration");
    adj.push_back(static_cast<int>(it - vertices.begin()));
  }
  std::sort(adj.begin(), adj.end());
  return adj;
}

int eccentricity(const FlipGraph& g, int source) {
  const auto dist = bfs_distances(g, source);
  int ecc = 0;
  for (int d : dist) {
    if (d < 0) return -1;
    ecc = std::max(ecc, d);
  }
  return ecc;
}

}  // namespace

std::vector<PlanePath> enumerate_plane_paths_serial(const PointSet& ps, int cap) {
  check_size(ps, cap);
  const ConflictTable table(ps);
  std::vector<PlanePath> out;
  for (int s = 0; s < ps.size(); ++s) {
    auto part = paths_from(table, s);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PlanePath> enumerate_plane_paths(const PointSet& ps, int cap) {
  check_size(ps, cap);
  const ConflictTable table(ps);
  const int n = ps.size();
  std::vector<std::vector<PlanePath>> parts(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
  for (int s = 0; s < n; ++s) parts[static_cast<std::size_t>(s)] = paths_from(table, s);
  std::vector<PlanePath> out;
  for (auto& part : parts) out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  std::sort(out.begin(), out.end());
  return out;
}

FlipGraph::FlipGraph(std::vector<PlanePath> vertices, std::vector<std::vector<int>> adjacency)
    : vertices_(std::move(vertices)), adjacency_(std::move(adjacency)) {
  if (vertices_.size() != adjacency_.size())
    throw Error(ErrorCode::InvalidArgument, "vertex and adjacency counts differ");
  if (std::adjacent_find(vertices_.begin(), vertices_.end(), std::greater_equal<>()) != vertices_.end())
    throw Error(ErrorCode::InvalidArgument, "vertices must be strictly increasing");
  const int n = vertex_count();
  for (int v = 0; v < n; ++v) {
    auto& adj = adjacency_[static_cast<std::size_t>(v)];
    std::sort(adj.begin(), adj.end());
    for (int w : adj) {
      if (w < 0 || w >= n || w == v)
        throw Error(ErrorCode::InvalidArgument, "bad edge " + std::to_string(v) + "-" + std::to_string(w));
      const auto& back = adjacency_[static_cast<std::size_t>(w)];
      if (std::find(back.begin(), back.end(), v) == back.end())
        throw Error(ErrorCode::InvalidArgument, "edge " + std::to_string(v) + "-" + std::to_string(w) + " is one-sided");
    }
  }
}

long long FlipGraph::edge_count() const {
  long long twice = 0;
  for (const auto& adj : adjacency_) twice += static_cast<long long>(adj.size());
  return twice / 2;
}

std::optional<int> FlipGraph::id_of(const PlanePath& p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || *it != p) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

FlipGraph build_serial(const PointSet& ps, int cap) {
  auto vertices = enumerate_plane_paths_serial(ps, cap);
  const ConflictTable table(ps);
  std::vector<std::vector<int>> adjacency(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v)
    adjacency[v] = resolve_neighbours(vertices, table, static_cast<int>(v));
  return FlipGraph(std::move(vertices), std::move(adjacency));
}

FlipGraph build(const PointSet& ps, int cap) {
  auto vertices = enumerate_plane_paths(ps, cap);
  const ConflictTable table(ps);
  const long long count = static_cast<long long>(vertices.size());
  std::vector<std::vector<int>> adjacency(vertices.size());
  bool failed = false;
#pragma omp parallel for schedule(dynamic, 64)
  for (long long v = 0; v < count; ++v) {
    try {
      adjacency[static_cast<std::size_t>(v)] = resolve_neighbours(vertices, table, static_cast<int>(v));
    } catch (...) {
#pragma omp atomic write
      failed = true;
    }
  }
  if (failed) throw Error(ErrorCode::ProofDeviation, "flip produced a path missing from the enumeration");
  return FlipGraph(std::move(vertices), std::move(adjacency));
}

FlipGraph induced_subgraph(const FlipGraph& g, const std::function<bool(const PlanePath&)>& keep) {
  std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<PlanePath> vertices;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (keep(g.vertex(v))) {
      new_id[static_cast<std::size_t>(v)] = static_cast<int>(vertices.size());
      vertices.push_back(g.vertex(v));
    }
  std::vector<std::vector<int>> adjacency(vertices.size());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int nv = new_id[static_cast<std::size_t>(v)];
    if (nv < 0) continue;
    for (int w : g.adjacent(v))
      if (const int nw = new_id[static_cast<std::size_t>(w)]; nw >= 0) adjacency[static_cast<std::size_t>(nv)].push_back(nw);
  }
  return FlipGraph(std::move(vertices), std::move(adjacency));
}

std::vector<std::vector<int>> components(const FlipGraph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> frontier;
    frontier.push(s);
    label[static_cast<std::size_t>(s)] = c;
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      out.back().push_back(v);
      for (int w : g.adjacent(v))
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = c;
          frontier.push(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::vector<int> bfs_distances(const FlipGraph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> frontier{source};
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const int v = frontier[head];
    for (int w : g.adjacent(v))
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        frontier.push_back(w);
      }
  }
  return dist;
}

int diameter_serial(const FlipGraph& g) {
  int best = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    const int ecc = eccentricity(g, s);
    if (ecc < 0) throw Error(ErrorCode::DisconnectedGraph, "vertex " + std::to_string(s) + " cannot reach every vertex");
    best = std::max(best, ecc);
  }
  return best;
}

int diameter(const FlipGraph& g) {
  const int n = g.vertex_count();
  int best = 0;
  bool disconnected = false;
#pragma omp parallel for schedule(dynamic, 16) reduction(max : best) reduction(|| : disconnected)
  for (int s = 0; s < n; ++s) {
    const int ecc = eccentricity(g, s);
    if (ecc < 0)
      disconnected = true;
    else
      best = std::max(best, ecc);
  }
  if (disconnected) throw Error(ErrorCode::DisconnectedGraph, "flip graph has more than one component");
  return best;
}

FlipSequence shortest_flip_path(const FlipGraph& g, const PlanePath& a, const PlanePath& b) {
  const auto ia = g.id_of(a);
  const auto ib = g.id_of(b);
  if (!ia || !ib) throw Error(ErrorCode::VertexNotFound, "path is not a vertex of the graph");
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> frontier{*ia};
  parent[static_cast<std::size_t>(*ia)] = *ia;
  for (std::size_t head = 0; head < frontier.size() && parent[static_cast<std::size_t>(*ib)] < 0; ++head) {
    const int v = frontier[head];
    for (int w : g.adjacent(v))
      if (parent[static_cast<std::size_t>(w)] < 0) {
        parent[static_cast<std::size_t>(w)] = v;
        frontier.push_back(w);
      }
  }
  if (parent[static_cast<std::size_t>(*ib)] < 0) throw Error(ErrorCode::Unreachable, "paths lie in different components");
  std::vector<int> walk;
  for (int v = *ib; v != *ia; v = parent[static_cast<std::size_t>(v)]) walk.push_back(v);
  walk.push_back(*ia);
  std::reverse(walk.begin(), walk.end());
  FlipSequence seq{a, {}};
  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    seq.flips.push_back(*flip_between(g.vertex(walk[i]), g.vertex(walk[i + 1])));
  return seq;
}

}  // namespace flippath
