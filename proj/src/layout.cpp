#include "relaysched/layout.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "relaysched/util.hpp"

namespace relaysched {

double distance(const Vec2& a, const Vec2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

NodeLayout generate_layout(const ScenarioConfig& cfg, std::mt19937_64& rng) {
    cfg.validate();
    NodeLayout layout;

    if (cfg.geometry_mode == GeometryMode::NormalizedPlane) {
        layout.bs = cfg.bs_position;
        layout.rs = cfg.fixed_rs_positions;
        layout.ms = cfg.fixed_ms_positions;
        return layout;
    }

    layout.bs = {0.0, 0.0};

    layout.rs.reserve(cfg.num_rs);
    const double rs_radius = cfg.relay_radius();
    for (int r = 0; r < cfg.num_rs; ++r) {
        const double angle = 2.0 * std::numbers::pi * r / cfg.num_rs;
        layout.rs.push_back({rs_radius * std::cos(angle), rs_radius * std::sin(angle)});
    }

    // Uniform over the disc: radius via sqrt so density is uniform by area.
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    layout.ms.reserve(cfg.num_ms);
    for (int k = 0; k < cfg.num_ms; ++k) {
        const double radius = cfg.cell_radius * std::sqrt(unit(rng));
        const double angle = 2.0 * std::numbers::pi * unit(rng);
        layout.ms.push_back({radius * std::cos(angle), radius * std::sin(angle)});
    }
    return layout;
}

void dump_layout_csv(const NodeLayout& layout, std::ostream& out) {
    out << "node,index,x,y\n";
    out << "bs,1," << format_double(layout.bs.x) << ',' << format_double(layout.bs.y) << '\n';
    for (std::size_t r = 0; r < layout.rs.size(); ++r)
        out << "rs," << r + 1 << ',' << format_double(layout.rs[r].x) << ','
            << format_double(layout.rs[r].y) << '\n';
    for (std::size_t k = 0; k < layout.ms.size(); ++k)
        out << "ms," << k + 1 << ',' << format_double(layout.ms[k].x) << ','
            << format_double(layout.ms[k].y) << '\n';
}

}  // namespace relaysched
