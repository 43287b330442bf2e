#ifndef RELAYSCHED_CHANNEL_HPP
#define RELAYSCHED_CHANNEL_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <vector>

#include "relaysched/layout.hpp"
#include "relaysched/scenario.hpp"

namespace relaysched {

enum class NodeKind : std::uint8_t { Bs, Rs, Ms };

struct NodeRef {
    NodeKind kind;
    int index = 0;  // RS or MS index; ignored for the BS

    static NodeRef bs() { return {NodeKind::Bs, 0}; }
    static NodeRef rs(int r) { return {NodeKind::Rs, r}; }
    static NodeRef ms(int k) { return {NodeKind::Ms, k}; }
};

struct DegenerateGeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One fading draw for a scenario: per-link, per-subcarrier channel power
// gains (path loss x shadowing x frequency-selective Rayleigh fading) plus
// the scenario constants solvers need (powers, relay strategy, xi, theta).
// Immutable after generation; reciprocity holds per link and subcarrier, so
// the directional asymmetry of SNRs comes from transmit powers and from the
// two directions possibly riding on different subcarriers.
// Explicit gain tables for building a realization without the random
// generator (debugging and tests). Index layouts match the accessors:
// bs_ms[k*N+n], bs_rs[r*N+n], ms_rs[(k*M+r)*N+n].
struct ChannelTables {
    int num_ms = 0;
    int num_rs = 0;
    int num_subcarriers = 0;
    double power_bs_db = 10.0;
    double power_rs_db = 7.0;
    double power_ms_db = 5.0;
    RelayStrategy strategy = RelayStrategy::DfXor;
    double xi = 0.5;
    double theta = 0.5;
    std::vector<double> gains_bs_ms;
    std::vector<double> gains_bs_rs;
    std::vector<double> gains_ms_rs;
};

class ChannelRealization {
public:
    static ChannelRealization generate(const ScenarioConfig& cfg, const NodeLayout& layout,
                                       std::mt19937_64& rng);

    // Wraps explicit gain tables; large-scale terms are taken as the
    // per-link mean gain over subcarriers.
    static ChannelRealization from_tables(const ChannelTables& tables);

    int num_ms() const { return num_ms_; }
    int num_rs() const { return num_rs_; }
    int num_subcarriers() const { return num_sc_; }

    RelayStrategy strategy() const { return strategy_; }
    double xi() const { return xi_; }
    double theta() const { return theta_; }

    // Linear per-subcarrier transmit power (noise power is one).
    double tx_power(NodeKind kind) const;

    // Symmetric channel power gain of the link {a,b} on subcarrier n.
    // Throws std::invalid_argument for unknown links (BS-BS, MS-MS, RS-RS).
    double gain(NodeRef a, NodeRef b, int n) const;

    // Path loss x shadowing of the link {a,b} (no small-scale term).
    double large_scale(NodeRef a, NodeRef b) const;

    // Receive SNR of the directed link from -> to on subcarrier n:
    // tx_power(from) * gain({from,to}, n).
    double snr(NodeRef from, NodeRef to, int n) const;

    // One row per link and subcarrier: link, endpoints, subcarrier, gain.
    void dump_csv(std::ostream& out) const;

private:
    int num_ms_ = 0;
    int num_rs_ = 0;
    int num_sc_ = 0;
    double power_bs_ = 1.0;
    double power_rs_ = 1.0;
    double power_ms_ = 1.0;
    RelayStrategy strategy_ = RelayStrategy::DfXor;
    double xi_ = 0.5;
    double theta_ = 0.5;

    // gains_bs_ms_[k*N+n], gains_bs_rs_[r*N+n], gains_ms_rs_[(k*M+r)*N+n]
    std::vector<double> gains_bs_ms_;
    std::vector<double> gains_bs_rs_;
    std::vector<double> gains_ms_rs_;
    std::vector<double> ls_bs_ms_;
    std::vector<double> ls_bs_rs_;
    std::vector<double> ls_ms_rs_;

    const double* link_gains(NodeRef a, NodeRef b) const;
    double link_large_scale(NodeRef a, NodeRef b) const;
    void check_subcarrier(int n) const;
};

}  // namespace relaysched

#endif
