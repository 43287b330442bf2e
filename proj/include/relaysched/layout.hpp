#ifndef RELAYSCHED_LAYOUT_HPP
#define RELAYSCHED_LAYOUT_HPP

#include <iosfwd>
#include <random>
#include <vector>

#include "relaysched/scenario.hpp"

namespace relaysched {

struct NodeLayout {
    Vec2 bs;
    std::vector<Vec2> rs;
    std::vector<Vec2> ms;
};

double distance(const Vec2& a, const Vec2& b);

// Cell mode: MSs uniform over the disc (by area), RSs at equally spaced
// angles on the circle of radius rs_circle_ratio * cell_radius.
// NormalizedPlane mode: copies the fixed positions from the config.
NodeLayout generate_layout(const ScenarioConfig& cfg, std::mt19937_64& rng);

void dump_layout_csv(const NodeLayout& layout, std::ostream& out);

}  // namespace relaysched

#endif
