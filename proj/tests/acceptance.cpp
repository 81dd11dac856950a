// Acceptance run: one PASS/FAIL line per criterion. Exits 0 unless something
// crashes; pass --strict to turn any FAIL into a nonzero exit.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "flippath/canonical.hpp"
#include "flippath/error.hpp"
#include "flippath/flip_graph.hpp"
#include "flippath/instances.hpp"
#include "flippath/io.hpp"
#include "flippath/verify.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace flippath;

namespace {

// Pinned limits. Bounds are exact (tolerance zero); these are the sizes and
// time budgets of the run.
constexpr double kEnumerateBudgetSec = 60.0;
constexpr double kRouteBudgetSec = 300.0;
constexpr int kMinEnumerateSets = 20;
constexpr int kMinConnectivitySets = 30;
constexpr int kMinObstacleSets = 200;
constexpr int kObstacleSets = 400;
constexpr std::uint64_t kRouteSeedsN6 = 12;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Tally {
  long long checked = 0;
  long long failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what();
  }
  std::string summary() const {
    return std::to_string(checked) + " checks, " + std::to_string(failed) + " failed" +
           (failed ? " (first: " + first_failure + ")" : "");
  }
};

std::string str(const PlanePath& p) {
  std::ostringstream out;
  write_path(out, p);
  auto s = out.str();
  s.pop_back();
  return "[" + s + "]";
}

std::vector<Point> coords(const PointSet& ps) { return {ps.points().begin(), ps.points().end()}; }

PointSet of_class(PositionClass c, int n, std::uint64_t seed) {
  switch (c) {
    case PositionClass::Convex: return random_convex(n, seed);
    case PositionClass::OneInside: return random_one_inside(n, seed);
    case PositionClass::OneOutside: return random_one_outside(n, seed);
    default: return random_general(n, seed);
  }
}

constexpr PositionClass kClasses[] = {PositionClass::Convex, PositionClass::OneInside, PositionClass::OneOutside,
                                      PositionClass::General};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome enumeration_matches_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  int sets = 0;
  const PointSet triangle({{0, 0}, {4, 0}, {1, 3}});
  std::vector<PointSet> family{triangle};
  for (int n = 4; n <= 7; ++n)
    for (auto c : kClasses)
      for (std::uint64_t s = 1; s <= 2; ++s) family.push_back(of_class(c, n, s + static_cast<std::uint64_t>(n)));
  for (const auto& ps : family) {
    ++sets;
    std::set<std::vector<int>> got;
    for (const auto& p : enumerate_plane_paths(ps)) got.insert({p.order().begin(), p.order().end()});
    const auto want = oracle::plane_paths(coords(ps));
    t.expect(got == want, [&] {
      return "n=" + std::to_string(ps.size()) + " got " + std::to_string(got.size()) + " want " + std::to_string(want.size());
    });
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = t.failed == 0 && sets >= kMinEnumerateSets && secs < kEnumerateBudgetSec;
  o.detail = std::to_string(sets) + " sets, " + t.summary() + ", " + std::to_string(secs) + " s (limit 60)";
  return o;
}

std::vector<PointSet> connectivity_family() {
  std::vector<PointSet> out;
  for (int n = 4; n <= 8; ++n)
    for (auto c : kClasses)
      for (std::uint64_t s = 1; s <= 2; ++s) out.push_back(of_class(c, n, s));
  return out;
}

Outcome graphs_connected() {
  Tally t;
  std::string dump;
  for (const auto& ps : connectivity_family()) {
    const auto r = verify_instance(ps, detect_class(ps));
    const bool ok = r.checks.front().pass;  // component count == 1
    t.expect(ok, [&] { return "disconnected n=" + std::to_string(ps.size()); });
    if (!ok) dump += r.counterexample;
  }
  if (!dump.empty()) std::cout << dump;
  Outcome o;
  o.pass = t.failed == 0 && t.checked >= kMinConnectivitySets;
  o.detail = std::to_string(t.checked) + " sets n<=8, " + t.summary();
  return o;
}

Outcome witnesses_and_component_size() {
  Tally t;
  int instances = 0;
  for (int n = 4; n <= 7; ++n)
    for (auto c : kClasses) {
      const auto ps = of_class(c, n, 3);
      const auto g = build(ps);
      ++instances;
      for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& p = g.vertex(v);
        const auto is_neighbour = [&](const PlanePath& q) {
          const auto id = g.id_of(q);
          return id && std::binary_search(g.adjacent(v).begin(), g.adjacent(v).end(), *id);
        };
        const auto w = isolated_vertex_witness(p, ps);
        t.expect(apply_flip(p, w.flip, ps) == w.path && is_neighbour(w.path), [&] { return "isolated witness at " + str(p); });
        const auto [a, b] = three_component_witness(p, ps);
        t.expect(a.path != p && b.path != p && a.path != b.path && is_neighbour(a.path) && is_neighbour(b.path),
                 [&] { return "component witness at " + str(p); });
      }
      std::size_t smallest = static_cast<std::size_t>(g.vertex_count());
      for (const auto& comp : components(g)) smallest = std::min(smallest, comp.size());
      t.expect(smallest >= 3, [&] { return "component of size " + std::to_string(smallest); });
    }
  return {t.failed == 0, std::to_string(instances) + " instances, " + t.summary()};
}

Outcome bounds_for(PositionClass cls, const std::string& what) {
  Tally t;
  std::string measured;
  for (int n = 5; n <= 8; ++n)
    for (std::uint64_t s = 1; s <= 3; ++s) {
      const auto r = verify_instance(of_class(cls, n, s), cls);
      for (const auto& c : r.checks) {
        if (c.relation == Relation::Record) continue;
        t.expect(c.pass, [&] {
          return c.name + " n=" + std::to_string(n) + " measured " + std::to_string(c.measured) + " bound " +
                 std::to_string(c.bound);
        });
        if (s == 1 && c.name.find("diameter") != std::string::npos)
          measured += " " + c.name + "(n=" + std::to_string(n) + ")=" + std::to_string(c.measured);
      }
    }
  return {t.failed == 0, what + ", " + t.summary() + ";" + measured};
}

struct RouteStats {
  Tally tally;
  int max_route = 0, max_deg1 = 0, max_deg2 = 0;
};

void check_route(RouteStats& st, const OneOutsideInstance& inst, const PlanePath& a, const PlanePath& b, int bfs,
                 const std::string& where) {
  const auto& ps = inst.points();
  const int n = inst.size();
  const int xi = inst.xi();
  auto attempt = [&](const char* name, auto&& fn, int bound, int degree, int& max_len) {
    try {
      const auto seq = fn();
      const auto walk = replay(seq, ps);
      bool degree_ok = true;
      if (degree > 0)
        for (const auto& q : walk) degree_ok = degree_ok && q.degree(xi) == degree;
      max_len = std::max(max_len, seq.size());
      st.tally.expect(walk.back() == b && seq.size() <= bound && seq.size() >= bfs && degree_ok, [&] {
        return std::string(name) + " " + where + " " + str(a) + "->" + str(b) + " length " + std::to_string(seq.size()) +
               " bound " + std::to_string(bound) + " bfs " + std::to_string(bfs);
      });
    } catch (const Error& e) {
      st.tally.expect(false, [&] { return std::string(name) + " " + where + " threw " + e.what(); });
    }
  };
  attempt("route", [&] { return route(a, b, inst); }, bound_route(n), 0, st.max_route);
  const int da = a.degree(xi);
  if (da != b.degree(xi)) return;
  if (da == 1) attempt("route_degree1", [&] { return route_degree1(a, b, inst); }, bound_route_degree1(n), 1, st.max_deg1);
  if (da == 2) attempt("route_degree2", [&] { return route_degree2(a, b, inst); }, bound_route_degree2(n), 2, st.max_deg2);
}

Outcome constructive_routes() {
  const auto t0 = std::chrono::steady_clock::now();
  RouteStats st;
  // Every one-outside instance n=6 from a fixed seed range, all ordered pairs.
  for (std::uint64_t s = 1; s <= kRouteSeedsN6; ++s) {
    const OneOutsideInstance inst(random_one_outside(6, s), 5);
    const auto g = build(inst.points());
    for (int a = 0; a < g.vertex_count(); ++a) {
      const auto dist = bfs_distances(g, a);
      for (int b = 0; b < g.vertex_count(); ++b)
        check_route(st, inst, g.vertex(a), g.vertex(b), dist[static_cast<std::size_t>(b)], "n=6 seed=" + std::to_string(s));
    }
  }
  // n=7: pairs of canonical paths (strongly canonical ones included).
  for (std::uint64_t s = 1; s <= 2; ++s) {
    const OneOutsideInstance inst(random_one_outside(7, s), 6);
    const auto g = build(inst.points());
    std::vector<int> canon;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (is_canonical(g.vertex(v), inst)) canon.push_back(v);
    for (int a : canon) {
      const auto dist = bfs_distances(g, a);
      for (int b : canon)
        check_route(st, inst, g.vertex(a), g.vertex(b), dist[static_cast<std::size_t>(b)], "n=7 seed=" + std::to_string(s));
    }
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = st.tally.failed == 0 && secs < kRouteBudgetSec;
  o.detail = st.tally.summary() + "; longest route " + std::to_string(st.max_route) + ", degree-1 " +
             std::to_string(st.max_deg1) + ", degree-2 " + std::to_string(st.max_deg2) + "; " + std::to_string(secs) +
             " s (limit 300)";
  return o;
}

bool hull_edge(const Segment& s, const std::vector<int>& hull) {
  const std::size_t h = hull.size();
  for (std::size_t i = 0; i < h; ++i)
    if (Segment(hull[i], hull[(i + 1) % h]) == s) return true;
  return false;
}

// Largest hop distance from any path to its nearest canonical path, over the
// whole flip graph: what any canonicalisation procedure must at least spend.
int farthest_from_canonical(const FlipGraph& g, const OneOutsideInstance& inst) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> queue;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (is_canonical(g.vertex(v), inst)) {
      dist[static_cast<std::size_t>(v)] = 0;
      queue.push_back(v);
    }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (int w : g.adjacent(queue[head]))
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(queue[head])] + 1;
        queue.push_back(w);
      }
  return *std::max_element(dist.begin(), dist.end());
}

Outcome sub_procedure_bounds() {
  Tally convex, canon, connect;
  int worst_canon = 0;
  std::string floor;
  for (int n = 3; n <= 7; ++n)
    for (std::uint64_t s = 1; s <= 2; ++s) {
      const auto ps = random_convex(n, s);
      for (const auto& p : enumerate_plane_paths(ps))
        for (int end : {p.front(), p.back()}) {
          const auto seq = canonicalize_convex(p, ps, end);
          bool keeps_hull = true;
          for (const auto& f : seq.flips) keeps_hull = keeps_hull && !hull_edge(f.removed, ps.hull());
          convex.expect(seq.size() <= bound_canonicalize_convex(n) && keeps_hull,
                        [&] { return "convex n=" + std::to_string(n) + " " + str(p) + " length " + std::to_string(seq.size()); });
        }
    }
  for (int n = 5; n <= 7; ++n)
    for (std::uint64_t s = 1; s <= 3; ++s) {
      const OneOutsideInstance inst(random_one_outside(n, s), n - 1);
      const auto paths = enumerate_plane_paths(inst.points());
      if (s == 1) floor += " n=" + std::to_string(n) + ":" + std::to_string(farthest_from_canonical(build(inst.points()), inst));
      std::vector<PlanePath> strong;
      for (const auto& p : paths) {
        const auto seq = to_canonical(p, inst);
        worst_canon = std::max(worst_canon, seq.size());
        canon.expect(seq.size() <= bound_to_canonical(n) && is_canonical(final_path(seq, inst.points()), inst), [&] {
          return "n=" + std::to_string(n) + " seed=" + std::to_string(s) + " " + str(p) + " length " +
                 std::to_string(seq.size()) + " bound " + std::to_string(bound_to_canonical(n));
        });
        if (is_strongly_canonical(p, inst)) strong.push_back(p);
      }
      for (const auto& p : paths) {
        if (!is_canonical(p, inst)) continue;
        for (const auto& p0 : strong) {
          const auto seq = connect_canonical(p, p0, inst);
          bool all_canon = true;
          for (const auto& q : replay(seq, inst.points())) all_canon = all_canon && is_canonical(q, inst);
          connect.expect(seq.size() <= kConnectBound && all_canon, [&] { return str(p) + "->" + str(p0); });
        }
      }
    }
  Outcome o;
  o.pass = convex.failed == 0 && canon.failed == 0 && connect.failed == 0;
  o.detail = "canonicalize_convex " + convex.summary() + "; to_canonical " + canon.summary() + ", longest " +
             std::to_string(worst_canon) + " (exact minimum over the flip graph" + floor + "); connect_canonical " +
             connect.summary();
  return o;
}

bool collinear_with_some_obstacle(const support::ObstacleCase& c) {
  return std::any_of(c.obstacles.begin(), c.obstacles.end(), [&](const LineSegment& s) { return oracle::cross(c.q, s.a, s.b) == 0; });
}

Outcome visibility() {
  std::mt19937_64 rng(7);
  std::vector<support::ObstacleCase> cases;
  // A viewer on the supporting line of a lone segment.
  cases.push_back({{LineSegment{{0, 0}, {4, 0}}}, {-2, 0}});
  while (static_cast<int>(cases.size()) < kObstacleSets) cases.push_back(support::random_obstacles(rng, 6, 1 + static_cast<int>(cases.size()) % 6));
  Tally t;
  int collinear = 0;
  for (const auto& c : cases) {
    collinear += collinear_with_some_obstacle(c);
    const auto vis = visible_endpoints(c.q, c.obstacles);
    std::set<Point> want;
    for (const auto& s : c.obstacles)
      for (const auto& p : {s.a, s.b})
        if (oracle::sees(c.q, p, support::as_pairs(c.obstacles))) want.insert(p);
    const auto where = [&] {
      return "q=(" + std::to_string(c.q.x) + "," + std::to_string(c.q.y) + ") with " + std::to_string(c.obstacles.size()) +
             " obstacles, " + std::to_string(vis.size()) + " visible";
    };
    t.expect(std::set<Point>(vis.begin(), vis.end()) == want, where);
    t.expect(vis.size() >= 2, where);
    try {
      const auto cls = classify_visibility(c.q, c.obstacles);
      if (const auto* one = std::get_if<ExactlyOneSegment>(&cls))
        t.expect(vis.size() == 2 && (vis.front() == std::min(one->segment.a, one->segment.b)), where);
      else
        t.expect(vis.size() >= 3 && std::get<AtLeastThreeEndpoints>(cls).endpoints == vis, where);
    } catch (const Error& e) {
      t.expect(false, [&] { return where() + ", classify: " + e.what(); });
    }
  }
  Outcome o;
  o.pass = t.failed == 0 && static_cast<int>(cases.size()) >= kMinObstacleSets;
  o.detail = std::to_string(cases.size()) + " obstacle sets (" + std::to_string(collinear) + " with a collinear viewer), " + t.summary();
  return o;
}

std::string slurp(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome golden_determinism() {
  const std::filesystem::path dir = FLIPPATH_TEST_DIR;
  const auto tri = read_points_file(dir / "data" / "triangle.pts");
  const auto sq = read_points_file(dir / "data" / "square_xi.pts");
  const auto a = read_path_file(dir / "data" / "square_a.path", sq);
  const auto b = read_path_file(dir / "data" / "square_b.path", sq);
  Tally t;
  for (int run = 0; run < 3; ++run) {
    const auto g_tri = run % 2 ? build_serial(tri) : build(tri);
    const auto g_sq = run % 2 ? build_serial(sq) : build(sq);
    const auto seq = shortest_flip_path(g_sq, a, b);
    std::ostringstream edges, dot, svg;
    write_edge_list(edges, g_tri);
    write_dot(dot, g_sq);
    write_svg_strip(svg, seq, sq);
    t.expect(edges.str() == slurp(dir / "golden" / "triangle.edges"), [] { return std::string("edge list"); });
    t.expect(dot.str() == slurp(dir / "golden" / "square_xi.dot"), [] { return std::string("dot"); });
    t.expect(svg.str() == slurp(dir / "golden" / "square_xi_walk.svg"), [] { return std::string("svg"); });
  }
  return {t.failed == 0, t.summary()};
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"enumeration equals brute force", enumeration_matches_oracle},
      {"flip graphs connected", graphs_connected},
      {"witness neighbours, components >= 3", witnesses_and_component_size},
      {"convex diameter <= 2n-6", [] { return bounds_for(PositionClass::Convex, "convex n=5..8"); }},
      {"one-outside diameters", [] { return bounds_for(PositionClass::OneOutside, "one-outside n=5..8"); }},
      {"constructive routes", constructive_routes},
      {"sub-procedure bounds", sub_procedure_bounds},
      {"visibility dichotomy", visibility},
      {"golden determinism", golden_determinism},
  };
  int failed = 0;
  int k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", seconds_since(t0));
    std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << " " << name << " -- " << o.detail << " [" << secs
              << " s]" << std::endl;
  }
  std::cout << (9 - failed) << "/9 criteria pass\n";
  return strict && failed ? 1 : 0;
}
