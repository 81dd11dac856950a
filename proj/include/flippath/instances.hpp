#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "flippath/geometry.hpp"

namespace flippath {

enum class PositionClass { Convex, OneInside, OneOutside, General };

std::string_view to_string(PositionClass c);

/// Detects the most specific class: convex beats one-outside (a convex set is
/// trivially one point outside the rest), then one-inside, then one-outside.
PositionClass detect_class(const PointSet& ps);

/// For a one-outside set, the smallest index whose removal leaves a set in
/// convex position with that point strictly outside its hull.
std::optional<int> find_outside_point(const PointSet& ps);

/// Random instances in general position, reproducible from the seed.
PointSet random_convex(int n, std::uint64_t seed);
/// n-1 points in convex position plus one point strictly inside their hull.
PointSet random_one_inside(int n, std::uint64_t seed);
/// n-1 points in convex position plus one point strictly outside their hull
/// (the outside point has the last index).
PointSet random_one_outside(int n, std::uint64_t seed);
PointSet random_general(int n, std::uint64_t seed, std::int64_t box = 40);

}  // namespace flippath
