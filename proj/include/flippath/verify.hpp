#pragma once

// Bound checks over a brute-force flip graph, as reported by `verify`.

#include <iosfwd>
#include <string>
#include <vector>

#include "flippath/flip_graph.hpp"
#include "flippath/instances.hpp"

namespace flippath {

enum class Relation { AtMost, AtLeast, Equal, Record };

struct Check {
  std::string name;
  std::string source;  ///< the statement the bound instantiates
  Relation relation = Relation::Record;
  long long bound = 0;
  long long measured = 0;
  bool pass = true;
};

struct RunReport {
  int n = 0;
  PositionClass position = PositionClass::General;
  long long vertices = 0;
  long long edges = 0;
  std::vector<Check> checks;
  double millis = 0.0;
  /// Filled when the graph is disconnected.
  std::string counterexample;

  bool pass() const;
};

/// Builds F(S) and evaluates every bound that applies to `position`. For
/// one-outside sets the outside point is detected automatically.
RunReport verify_instance(const PointSet& ps, PositionClass position, int cap = kDefaultCap);

void write_report(std::ostream& out, const RunReport& r);

}  // namespace flippath
