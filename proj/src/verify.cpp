#include "flippath/verify.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "flippath/canonical.hpp"
#include "flippath/error.hpp"
#include "flippath/io.hpp"

namespace flippath {

namespace {

Check make_check(std::string name, std::string source, Relation rel, long long bound, long long measured) {
  Check c{std::move(name), std::move(source), rel, bound, measured, true};
  switch (rel) {
    case Relation::AtMost: c.pass = measured <= bound; break;
    case Relation::AtLeast: c.pass = measured >= bound; break;
    case Relation::Equal: c.pass = measured == bound; break;
    case Relation::Record: c.pass = true; break;
  }
  return c;
}

std::string_view relation_text(Relation r) {
  switch (r) {
    case Relation::AtMost: return "<=";
    case Relation::AtLeast: return ">=";
    case Relation::Equal: return "==";
    case Relation::Record: return "recorded";
  }
  return "?";
}

// Connectivity and diameter of one (sub)graph; the diameter check is only
// added when the graph is connected.
void graph_checks(RunReport& r, const FlipGraph& g, const std::string& label, const std::string& source,
                  long long bound, Relation rel) {
  const auto comps = components(g);
  r.checks.push_back(make_check(label + " components", "subgraph is connected", Relation::Equal, 1,
                                static_cast<long long>(comps.size())));
  if (comps.size() == 1) r.checks.push_back(make_check(label + " diameter", source, rel, bound, diameter(g)));
}

std::string dump(const PointSet& ps, const FlipGraph& g) {
  std::ostringstream out;
  out << "# points\n";
  write_points(out, ps);
  const auto comps = components(g);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    out << "# component " << c << " (" << comps[c].size() << " paths)\n";
    for (int v : comps[c]) write_path(out, g.vertex(v));
  }
  return out.str();
}

}  // namespace

bool RunReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

RunReport verify_instance(const PointSet& ps, PositionClass position, int cap) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport r;
  r.n = ps.size();
  r.position = position;
  const FlipGraph g = build(ps, cap);
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  const int n = r.n;

  const auto comps = components(g);
  r.checks.push_back(make_check("components", "the flip graph is connected", Relation::Equal, 1,
                                static_cast<long long>(comps.size())));
  std::size_t smallest = comps.empty() ? 0 : comps.front().size();
  for (const auto& c : comps) smallest = std::min(smallest, c.size());
  r.checks.push_back(make_check("min component size", "no isolated vertex; no component of 2 vertices", Relation::AtLeast, 3,
                                static_cast<long long>(smallest)));
  if (comps.size() != 1) {
    r.counterexample = dump(ps, g);
  } else {
    const int d = diameter(g);
    switch (position) {
      case PositionClass::Convex:
        r.checks.push_back(make_check("diameter", "convex position: diameter at most 2n-6",
                                      n >= 5 ? Relation::AtMost : Relation::Record, 2LL * n - 6, d));
        break;
      case PositionClass::OneInside:
        r.checks.push_back(make_check("diameter", "one point inside: diameter at most 2n-4", Relation::AtMost, 2LL * n - 4, d));
        break;
      case PositionClass::OneOutside:
        r.checks.push_back(make_check("diameter", "one point outside: diameter at most 2n", Relation::AtMost, 2LL * n, d));
        break;
      case PositionClass::General:
        r.checks.push_back(make_check("diameter", "no bound for general position", Relation::Record, 0, d));
        break;
    }
  }
  if (position == PositionClass::OneOutside) {
    const auto xi = find_outside_point(ps);
    if (!xi) throw Error(ErrorCode::NotOneOutside, "point set has no outside point");
    const int x = *xi;
    graph_checks(r, induced_subgraph(g, [x](const PlanePath& p) { return p.degree(x) == 1; }), "degree-1",
                 "one point outside, xi of degree 1: diameter at most 4n-15", std::max(1, 4 * n - 15), Relation::AtMost);
    graph_checks(r, induced_subgraph(g, [x](const PlanePath& p) { return p.degree(x) == 2; }), "degree-2",
                 "one point outside, xi of degree 2: diameter at most 2n", 2LL * n, Relation::AtMost);
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void write_report(std::ostream& out, const RunReport& r) {
  out << "n " << r.n << " class " << to_string(r.position) << " vertices " << r.vertices << " edges " << r.edges << '\n';
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": measured " << c.measured << ' ' << relation_text(c.relation);
    if (c.relation != Relation::Record) out << ' ' << c.bound;
    out << " [" << c.source << "]\n";
  }
  out << "time_ms " << static_cast<long long>(r.millis) << '\n';
  if (!r.counterexample.empty()) out << "CONNECTIVITY-COUNTEREXAMPLE\n" << r.counterexample << "END-COUNTEREXAMPLE\n";
  if (!r.pass()) {
    out << "FAILURES\n";
    for (const auto& c : r.checks)
      if (!c.pass)
        out << "failure name=\"" << c.name << "\" relation=" << relation_text(c.relation) << " bound=" << c.bound
            << " measured=" << c.measured << '\n';
    out << "END-FAILURES\n";
  }
}

}  // namespace flippath
