#pragma once

// Text formats shared by the CLI and the tests.
//
//   points file  one "x y" pair of signed integers per line; '#' starts a
//                comment, blank lines are skipped
//   path file    one line of space-separated 0-based indices
//   edge list    "vertices N edges M", then "v <id> <order>" per vertex and
//                "e <id> <id>" per edge (smaller id first, sorted)

#include <filesystem>
#include <iosfwd>
#include <string>

#include "flippath/flip_graph.hpp"

namespace flippath {

/// Throws ParseError with the 1-based line number, or CoordinateOutOfRange /
/// DuplicatePoint for well-formed but invalid input.
PointSet parse_points(std::istream& in);
PointSet read_points_file(const std::filesystem::path& file);
void write_points(std::ostream& out, const PointSet& ps);

/// Reads the first non-blank, non-comment line and validates it as a plane
/// path on `ps`.
PlanePath parse_path(std::istream& in, const PointSet& ps);
PlanePath read_path_file(const std::filesystem::path& file, const PointSet& ps);
void write_path(std::ostream& out, const PlanePath& p);

std::string format_segment(const Segment& s);
/// One "remove {a,b} add {c,d}" line per flip.
void write_flips(std::ostream& out, const FlipSequence& seq);

void write_edge_list(std::ostream& out, const FlipGraph& g);
void write_dot(std::ostream& out, const FlipGraph& g);

/// One frame per visited path, left to right. In each frame the segment the
/// next flip removes is dashed and the segment the previous flip inserted is
/// highlighted.
void write_svg_strip(std::ostream& out, const FlipSequence& seq, const PointSet& ps);

/// Writes `text` to `file`; throws IoError if the file cannot be written.
void write_text_file(const std::filesystem::path& file, const std::string& text);

}  // namespace flippath
