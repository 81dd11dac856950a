// flippath: enumerate, verify, route and export flip graphs of plane spanning
// paths.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "flippath/canonical.hpp"
#include "flippath/error.hpp"
#include "flippath/flip_graph.hpp"
#include "flippath/instances.hpp"
#include "flippath/io.hpp"
#include "flippath/verify.hpp"

using namespace flippath;

namespace {

PositionClass resolve_class(const std::string& name, const PointSet& ps) {
  const PositionClass detected = detect_class(ps);
  if (name == "auto") return detected;
  const PositionClass wanted = name == "convex"        ? PositionClass::Convex
                               : name == "one-outside" ? PositionClass::OneOutside
                                                       : PositionClass::OneInside;
  const bool ok = wanted == detected || (wanted == PositionClass::OneOutside && find_outside_point(ps).has_value());
  if (!ok)
    throw Error(ErrorCode::InvalidArgument,
                "point set is " + std::string(to_string(detected)) + ", not " + std::string(to_string(wanted)));
  return wanted;
}

PointSet random_instance(const std::string& cls, int n, std::uint64_t seed) {
  if (cls == "convex") return random_convex(n, seed);
  if (cls == "one-outside") return random_one_outside(n, seed);
  if (cls == "one-inside") return random_one_inside(n, seed);
  return random_general(n, seed);
}

OneOutsideInstance require_one_outside(const PointSet& ps) {
  auto inst = OneOutsideInstance::detect(ps);
  if (!inst) throw Error(ErrorCode::NotOneOutside, "constructive routing needs a one-outside point set");
  return *inst;
}

int run_enumerate(const std::string& points, bool list, int cap) {
  const auto ps = read_points_file(points);
  const auto paths = enumerate_plane_paths(ps, cap);
  std::cout << paths.size() << " plane spanning paths\n";
  if (list)
    for (const auto& p : paths) write_path(std::cout, p);
  return 0;
}

int run_verify(const std::string& points, const std::string& cls, const std::vector<int>& random, std::uint64_t seed,
               int cap) {
  bool all = true;
  auto one = [&](const PointSet& ps, const std::string& label) {
    const auto report = verify_instance(ps, resolve_class(cls, ps), cap);
    std::cout << "instance " << label << '\n';
    write_report(std::cout, report);
    all = all && report.pass();
  };
  if (!random.empty()) {
    const std::string gen = cls == "auto" ? "general" : cls;
    for (int k = 0; k < random[0]; ++k) {
      const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
      one(random_instance(gen, random[1], s), gen + " seed " + std::to_string(s));
    }
  } else {
    one(read_points_file(points), points);
  }
  std::cout << (all ? "all checks passed\n" : "some checks failed\n");
  return all ? 0 : 1;
}

FlipSequence bfs_route(const PointSet& ps, const PlanePath& a, const PlanePath& b, int cap) {
  return shortest_flip_path(build(ps, cap), a, b);
}

int run_route(const std::string& points, const std::string& fa, const std::string& fb, const std::string& method, int cap) {
  const auto ps = read_points_file(points);
  const auto a = read_path_file(fa, ps);
  const auto b = read_path_file(fb, ps);
  std::optional<FlipSequence> bfs, cons;
  if (method != "constructive") bfs = bfs_route(ps, a, b, cap);
  if (method != "bfs") cons = route(a, b, require_one_outside(ps));
  const auto& shown = cons ? *cons : *bfs;
  write_flips(std::cout, shown);
  std::cout << shown.size() << " flips\n";
  if (!cons) return 0;
  const int bound = bound_route(ps.size());
  bool ok = cons->size() <= bound;
  std::cout << (ok ? "PASS" : "FAIL") << " constructive length " << cons->size() << " <= " << bound
            << " [one point outside: route length at most 2n]\n";
  if (bfs) {
    const bool not_shorter = cons->size() >= bfs->size();
    ok = ok && not_shorter;
    std::cout << "bfs " << bfs->size() << " constructive " << cons->size() << '\n';
    std::cout << (not_shorter ? "PASS" : "FAIL") << " constructive length >= bfs length\n";
  }
  if (!ok) std::cout << "FAILURES\nfailure name=\"route bound\" measured=" << cons->size() << " bound=" << bound << "\nEND-FAILURES\n";
  return ok ? 0 : 1;
}

int run_export(const std::string& points, const std::string& format, const std::string& output, const std::string& fa,
               const std::string& fb, const std::string& method, int cap) {
  const auto ps = read_points_file(points);
  std::ostringstream out;
  if (format == "svg") {
    if (fa.empty()) throw Error(ErrorCode::InvalidArgument, "svg export needs --path-a");
    const auto a = read_path_file(fa, ps);
    FlipSequence seq{a, {}};
    if (!fb.empty()) {
      const auto b = read_path_file(fb, ps);
      seq = method == "constructive" ? route(a, b, require_one_outside(ps)) : bfs_route(ps, a, b, cap);
    }
    write_svg_strip(out, seq, ps);
  } else {
    const auto g = build(ps, cap);
    if (format == "dot")
      write_dot(out, g);
    else
      write_edge_list(out, g);
  }
  if (output.empty() || output == "-")
    std::cout << out.str();
  else
    write_text_file(output, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flip graphs of plane spanning paths"};
  app.require_subcommand(1);
  app.fallthrough();
  int cap = kDefaultCap;
  app.add_option("--cap", cap, "largest point count for brute-force enumeration")->check(CLI::Range(3, 16));

  auto* en = app.add_subcommand("enumerate", "count (and list) all plane spanning paths");
  std::string points;
  bool list = false;
  en->add_option("points", points, "points file")->required();
  en->add_flag("--list", list, "print every path");

  auto* ve = app.add_subcommand("verify", "check connectivity and diameter bounds");
  std::string cls = "auto";
  std::vector<int> random;
  std::uint64_t seed = 1;
  ve->add_option("points", points, "points file");
  ve->add_option("--class", cls, "position class")->check(CLI::IsMember({"auto", "convex", "one-outside", "one-inside"}));
  ve->add_option("--random", random, "verify K random instances of N points")->expected(2)->type_name("K N");
  ve->add_option("--seed", seed, "first seed for --random");

  auto* ro = app.add_subcommand("route", "flip sequence between two paths");
  std::string fa, fb, method = "both";
  ro->add_option("points", points, "points file")->required();
  ro->add_option("path_a", fa, "start path file")->required();
  ro->add_option("path_b", fb, "target path file")->required();
  ro->add_option("--method", method, "routing engine")->check(CLI::IsMember({"bfs", "constructive", "both"}));

  auto* ex = app.add_subcommand("export", "write the flip graph or a flip sequence figure");
  std::string format = "edges", output;
  std::string export_method = "bfs";
  ex->add_option("points", points, "points file")->required();
  ex->add_option("--format", format, "output format")->check(CLI::IsMember({"dot", "edges", "svg"}));
  ex->add_option("-o,--output", output, "output file (default stdout)");
  ex->add_option("--path-a", fa, "svg: start path file");
  ex->add_option("--path-b", fb, "svg: target path file");
  ex->add_option("--method", export_method, "svg: routing engine")->check(CLI::IsMember({"bfs", "constructive"}));

  CLI11_PARSE(app, argc, argv);
  try {
    if (*en) return run_enumerate(points, list, cap);
    if (*ve) {
      if (random.empty() && points.empty()) throw Error(ErrorCode::InvalidArgument, "verify needs a points file or --random");
      return run_verify(points, cls, random, seed, cap);
    }
    if (*ro) return run_route(points, fa, fb, method, cap);
    if (*ex) return run_export(points, format, output, fa, fb, export_method, cap);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
