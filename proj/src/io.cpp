#include "flippath/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "flippath/error.hpp"

namespace flippath {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

template <typename T>
bool parse_int(const std::string& s, T& value) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

std::ifstream open_input(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + file.string());
  return in;
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

PointSet parse_points(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const auto tok = tokens(strip_comment(line));
    if (tok.empty()) continue;
    const auto where = "line " + std::to_string(lineno) + ": ";
    if (tok.size() != 2) throw Error(ErrorCode::ParseError, where + "expected two integers, got " + std::to_string(tok.size()) + " fields");
    Point p;
    if (!parse_int(tok[0], p.x) || !parse_int(tok[1], p.y))
      throw Error(ErrorCode::ParseError, where + "malformed coordinate '" + line + "'");
    if (p.x < -kCoordinateLimit || p.x > kCoordinateLimit || p.y < -kCoordinateLimit || p.y > kCoordinateLimit)
      throw Error(ErrorCode::CoordinateOutOfRange, where + "coordinate magnitude exceeds 2^20");
    pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

PointSet read_points_file(const std::filesystem::path& file) {
  auto in = open_input(file);
  return parse_points(in);
}

void write_points(std::ostream& out, const PointSet& ps) {
  for (const auto& p : ps.points()) out << p.x << ' ' << p.y << '\n';
}

PlanePath parse_path(std::istream& in, const PointSet& ps) {
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const auto tok = tokens(strip_comment(line));
    if (tok.empty()) continue;
    std::vector<int> order;
    for (const auto& t : tok) {
      int v = 0;
      if (!parse_int(t, v))
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": malformed index '" + t + "'");
      order.push_back(v);
    }
    return PlanePath::make(std::move(order), ps);
  }
  throw Error(ErrorCode::ParseError, "path file contains no indices");
}

PlanePath read_path_file(const std::filesystem::path& file, const PointSet& ps) {
  auto in = open_input(file);
  return parse_path(in, ps);
}

void write_path(std::ostream& out, const PlanePath& p) {
  const auto order = p.order();
  for (std::size_t i = 0; i < order.size(); ++i) out << (i ? " " : "") << order[i];
  out << '\n';
}

std::string format_segment(const Segment& s) {
  return "{" + std::to_string(s.a()) + "," + std::to_string(s.b()) + "}";
}

void write_flips(std::ostream& out, const FlipSequence& seq) {
  for (const auto& f : seq.flips) out << "remove " << format_segment(f.removed) << " add " << format_segment(f.added) << '\n';
}

void write_edge_list(std::ostream& out, const FlipGraph& g) {
  out << "vertices " << g.vertex_count() << " edges " << g.edge_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "v " << v;
    for (int i : g.vertex(v).order()) out << ' ' << i;
    out << '\n';
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : g.adjacent(v))
      if (v < w) out << "e " << v << ' ' << w << '\n';
}

void write_dot(std::ostream& out, const FlipGraph& g) {
  out << "graph flips {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"";
    const auto order = g.vertex(v).order();
    for (std::size_t i = 0; i < order.size(); ++i) out << (i ? " " : "") << order[i];
    out << "\"];\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : g.adjacent(v))
      if (v < w) out << "  " << v << " -- " << w << ";\n";
  out << "}\n";
}

void write_svg_strip(std::ostream& out, const FlipSequence& seq, const PointSet& ps) {
  constexpr double kFrame = 200.0;
  constexpr double kMargin = 15.0;
  const auto paths = replay(seq, ps);

  std::int64_t min_x = ps[0].x, max_x = ps[0].x, min_y = ps[0].y, max_y = ps[0].y;
  for (const auto& p : ps.points()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span = static_cast<double>(std::max<std::int64_t>({max_x - min_x, max_y - min_y, 1}));
  const double scale = (kFrame - 2 * kMargin) / span;
  // SVG's y axis points down; flip it so drawings match the usual orientation.
  auto px = [&](int i, std::size_t frame) {
    return fixed2(static_cast<double>(frame) * kFrame + kMargin + static_cast<double>(ps[i].x - min_x) * scale);
  };
  auto py = [&](int i) { return fixed2(kFrame - kMargin - static_cast<double>(ps[i].y - min_y) * scale); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed2(kFrame * static_cast<double>(paths.size()))
      << "\" height=\"" << fixed2(kFrame) << "\">\n";
  for (std::size_t k = 0; k < paths.size(); ++k) {
    out << "<g id=\"frame" << k << "\">\n";
    out << "<rect x=\"" << fixed2(static_cast<double>(k) * kFrame) << "\" y=\"0.00\" width=\"" << fixed2(kFrame)
        << "\" height=\"" << fixed2(kFrame) << "\" fill=\"white\" stroke=\"#cccccc\"/>\n";
    const Segment* removed = k < seq.flips.size() ? &seq.flips[k].removed : nullptr;
    const Segment* inserted = k > 0 ? &seq.flips[k - 1].added : nullptr;
    for (const auto& s : paths[k].segments()) {
      out << "<line x1=\"" << px(s.a(), k) << "\" y1=\"" << py(s.a()) << "\" x2=\"" << px(s.b(), k) << "\" y2=\"" << py(s.b())
          << "\"";
      if (removed && s == *removed)
        out << " stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"5,4\"";
      else if (inserted && s == *inserted)
        out << " stroke=\"#d62728\" stroke-width=\"3\"";
      else
        out << " stroke=\"black\" stroke-width=\"1.5\"";
      out << "/>\n";
    }
    for (int i = 0; i < ps.size(); ++i)
      out << "<circle cx=\"" << px(i, k) << "\" cy=\"" << py(i) << "\" r=\"3\" fill=\"black\"/>\n";
    out << "</g>\n";
  }
  out << "</svg>\n";
}

void write_text_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + file.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + file.string());
}

}  // namespace flippath
