#ifndef RELAYSCHED_SCENARIO_HPP
#define RELAYSCHED_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace relaysched {

// Relay forwarding strategy. One-way relaying behaves identically under the
// two DF variants; they differ only in how the two-way relay combines the
// bidirectional messages (bitwise XOR vs. superposition).
enum class RelayStrategy { Af, DfXor, DfSup };

enum class GeometryMode { Cell, NormalizedPlane };

const char* to_string(RelayStrategy s);
const char* to_string(GeometryMode m);
RelayStrategy parse_relay_strategy(const std::string& s);

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Scenario parameters shared by the channel generator and all solvers.
// Powers are per-subcarrier transmit SNRs in dB: the noise power is
// normalized to one, so a node with power p dB over a unit-gain link sees a
// receive SNR of 10^(p/10).
struct ScenarioConfig {
    int num_ms = 4;            // K
    int num_rs = 10;           // M
    int num_subcarriers = 16;  // N

    double cell_radius = 2000.0;    // meters
    double rs_circle_ratio = 0.5;   // d: RS circle radius / cell radius

    double path_loss_exponent = 4.0;
    double shadowing_sigma_db = 5.8;
    // Reference point of the power law: gain = ref_gain * (dist/ref_dist)^-exp.
    // ref_distance <= 0 selects the cell radius, i.e. the configured gain at
    // the cell edge before shadowing and fading.
    double path_loss_ref_distance = 0.0;
    double path_loss_ref_gain = 1.0;
    // Ceiling on the large-scale gain (path loss x shadowing): a passive
    // channel never amplifies, and the power law is only meaningful beyond
    // its reference distance anyway.
    double path_loss_max_gain = 1.0;

    double max_delay_spread_s = 5e-6;
    // <= 0 selects 1 / (max_delay_spread * N): total bandwidth * delay spread
    // of about one, giving fading that is correlated across the band.
    double subcarrier_spacing_hz = 0.0;
    int num_taps = 8;

    double power_bs_db = 10.0;
    double power_rs_db = 7.0;
    double power_ms_db = 5.0;

    RelayStrategy relay_strategy = RelayStrategy::DfXor;
    double xi = 0.5;     // AF two-way power split
    double theta = 0.5;  // SUP two-way power split

    std::uint64_t rng_seed = 1;

    GeometryMode geometry_mode = GeometryMode::Cell;
    // NormalizedPlane only: explicit node positions. Sizes must match
    // num_rs / num_ms.
    Vec2 bs_position{0.0, 0.0};
    std::vector<Vec2> fixed_rs_positions;
    std::vector<Vec2> fixed_ms_positions;

    // Pre-assignment rule of the suboptimal schemes: two-way relaying is
    // chosen when the BS-RS and MS-RS large-scale losses differ by at most
    // this many dB.
    double twoway_balance_band_db = 6.0;

    int exact_vertex_cap = 400;

    // Applies the default power profile P_B = P_R + 3 dB = P_M + 5 dB.
    void set_bs_power_db(double bs_db);

    double relay_radius() const { return rs_circle_ratio * cell_radius; }

    // Throws std::invalid_argument on out-of-range parameters.
    void validate() const;

    // Plain-text key/value file ("key = value", '#' comments).
    static ScenarioConfig from_file(const std::string& path);
    static ScenarioConfig from_string(const std::string& text);

    // The fixed four-subcarrier, one-MS, two-RS walkthrough geometry:
    // BS (0,0), MS (10,0), RSs (4,3) and (4,-3) on a radius-10 plane,
    // XOR-based DF relaying, BS power 10 dB per subcarrier.
    static ScenarioConfig toy_example();
};

}  // namespace relaysched

#endif
