#ifndef RELAYSCHED_RATES_HPP
#define RELAYSCHED_RATES_HPP

#include <cstdint>
#include <vector>

#include "relaysched/channel.hpp"
#include "relaysched/scenario.hpp"

namespace relaysched {

// The five feasible pairings of downlink/uplink transmission styles under the
// three-slot protocol (slot 1: BS transmits, slot 2: MSs transmit, slot 3:
// relays forward). The four infeasible pairings are unrepresentable.
enum class ModeTag : std::uint8_t {
    DirectBoth,         // a: both directions direct, slots 1-2 only
    DirectDownRelayUp,  // b: downlink direct, uplink one-way relayed
    RelayDownDirectUp,  // c: downlink one-way relayed, uplink direct
    DualRelay,          // d: both one-way relayed via two distinct relays
    TwoWayRelay,        // e: one relay network-codes both directions
};

char mode_letter(ModeTag tag);  // 'a'..'e'

struct TransmissionMode {
    ModeTag tag = ModeTag::DirectBoth;
    int relay_down = -1;  // modes c, d, e
    int relay_up = -1;    // modes b, d, e (== relay_down for e)

    static TransmissionMode direct();
    static TransmissionMode direct_down_relay_up(int relay);
    static TransmissionMode relay_down_direct_up(int relay);
    // Throws std::invalid_argument when the two relays coincide.
    static TransmissionMode dual_relay(int relay_down, int relay_up);
    static TransmissionMode two_way(int relay);

    bool uses_slot3() const { return tag != ModeTag::DirectBoth; }
    std::vector<int> relays() const;
};

// Subcarriers used by one traffic session, per slot. n3 is -1 for mode a.
struct SessionSubcarriers {
    int n1 = 0;
    int n2 = 0;
    int n3 = -1;
};

struct RatePair {
    double down = 0.0;
    double up = 0.0;
    double sum() const { return down + up; }
};

// log2(1+snr) scaled by the 1/3 pre-log of the three-slot frame.
double slot_rate(double snr);

// Cascaded SNR of a two-hop AF link: g1*g2 / (1 + g1 + g2).
double af_cascade_snr(double snr_hop1, double snr_hop2);

// Mode a: both directions direct.
RatePair rate_direct_both(double snr_bm_n1, double snr_mb_n2);

// Mode b: downlink direct on n1; uplink MS->RS on n2, RS->BS on n3.
RatePair rate_direct_down_relay_up(double snr_bm_n1, double snr_mr_n2, double snr_rb_n3,
                                   RelayStrategy strategy);

// Mode c: downlink BS->RS on n1, RS->MS on n3; uplink direct on n2.
RatePair rate_relay_down_direct_up(double snr_br_n1, double snr_rm_n3, double snr_mb_n2,
                                   RelayStrategy strategy);

// Mode d: downlink via relay 1, uplink via relay 2, both forwarding on the
// same n3. Under AF each destination also receives the other relay's
// amplified noise, which the cross terms below account for.
struct DualRelaySnrs {
    double bs_r1_n1 = 0.0;  // BS -> RS1 on n1
    double r1_ms_n3 = 0.0;  // RS1 -> MS on n3
    double ms_r2_n2 = 0.0;  // MS -> RS2 on n2
    double r2_bs_n3 = 0.0;  // RS2 -> BS on n3
    double r2_ms_n3 = 0.0;  // RS2 -> MS on n3 (AF cross term)
    double r1_bs_n3 = 0.0;  // RS1 -> BS on n3 (AF cross term)
};
RatePair rate_dual_relay(const DualRelaySnrs& s, RelayStrategy strategy);

// Mode e: three-step two-way relaying. AF additionally needs the raw channel
// power gains on n3 and the relay power, because the relay's broadcast scaling
// splits its power between the two superimposed signals.
struct TwoWaySnrs {
    double bs_rs_n1 = 0.0;
    double ms_rs_n2 = 0.0;
    double rs_bs_n3 = 0.0;
    double rs_ms_n3 = 0.0;
    double gain_rs_ms_n3 = 0.0;
    double gain_rs_bs_n3 = 0.0;
    double relay_power = 0.0;
};
RatePair rate_two_way(const TwoWaySnrs& s, RelayStrategy strategy, double xi, double theta);

// Fetches the directional SNRs for (ms, mode, subcarriers) from the
// realization and dispatches to the mode formula. Throws
// std::invalid_argument when subcarriers and mode are inconsistent.
RatePair session_rate(const ChannelRealization& real, int ms, const TransmissionMode& mode,
                      const SessionSubcarriers& sc);

}  // namespace relaysched

#endif
