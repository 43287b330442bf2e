#include "relaysched/rates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relaysched {

char mode_letter(ModeTag tag) {
    switch (tag) {
        case ModeTag::DirectBoth: return 'a';
        case ModeTag::DirectDownRelayUp: return 'b';
        case ModeTag::RelayDownDirectUp: return 'c';
        case ModeTag::DualRelay: return 'd';
        case ModeTag::TwoWayRelay: return 'e';
    }
    return '?';
}

TransmissionMode TransmissionMode::direct() { return {ModeTag::DirectBoth, -1, -1}; }

TransmissionMode TransmissionMode::direct_down_relay_up(int relay) {
    if (relay < 0) throw std::invalid_argument("mode b needs a relay");
    return {ModeTag::DirectDownRelayUp, -1, relay};
}

TransmissionMode TransmissionMode::relay_down_direct_up(int relay) {
    if (relay < 0) throw std::invalid_argument("mode c needs a relay");
    return {ModeTag::RelayDownDirectUp, relay, -1};
}

TransmissionMode TransmissionMode::dual_relay(int relay_down, int relay_up) {
    if (relay_down < 0 || relay_up < 0) throw std::invalid_argument("mode d needs two relays");
    if (relay_down == relay_up)
        throw std::invalid_argument("mode d needs two distinct relays");
    return {ModeTag::DualRelay, relay_down, relay_up};
}

TransmissionMode TransmissionMode::two_way(int relay) {
    if (relay < 0) throw std::invalid_argument("mode e needs a relay");
    return {ModeTag::TwoWayRelay, relay, relay};
}

std::vector<int> TransmissionMode::relays() const {
    switch (tag) {
        case ModeTag::DirectBoth: return {};
        case ModeTag::DirectDownRelayUp: return {relay_up};
        case ModeTag::RelayDownDirectUp: return {relay_down};
        case ModeTag::DualRelay: return {relay_down, relay_up};
        case ModeTag::TwoWayRelay: return {relay_down};
    }
    return {};
}

double slot_rate(double snr) { return std::log2(1.0 + snr) / 3.0; }

double af_cascade_snr(double snr_hop1, double snr_hop2) {
    return snr_hop1 * snr_hop2 / (1.0 + snr_hop1 + snr_hop2);
}

RatePair rate_direct_both(double snr_bm_n1, double snr_mb_n2) {
    return {slot_rate(snr_bm_n1), slot_rate(snr_mb_n2)};
}

RatePair rate_direct_down_relay_up(double snr_bm_n1, double snr_mr_n2, double snr_rb_n3,
                                   RelayStrategy strategy) {
    RatePair r;
    r.down = slot_rate(snr_bm_n1);
    if (strategy == RelayStrategy::Af) {
        r.up = slot_rate(af_cascade_snr(snr_mr_n2, snr_rb_n3));
    } else {
        r.up = std::min(slot_rate(snr_mr_n2), slot_rate(snr_rb_n3));
    }
    return r;
}

RatePair rate_relay_down_direct_up(double snr_br_n1, double snr_rm_n3, double snr_mb_n2,
                                   RelayStrategy strategy) {
    RatePair r;
    if (strategy == RelayStrategy::Af) {
        r.down = slot_rate(af_cascade_snr(snr_br_n1, snr_rm_n3));
    } else {
        r.down = std::min(slot_rate(snr_br_n1), slot_rate(snr_rm_n3));
    }
    r.up = slot_rate(snr_mb_n2);
    return r;
}

RatePair rate_dual_relay(const DualRelaySnrs& s, RelayStrategy strategy) {
    RatePair r;
    if (strategy == RelayStrategy::Af) {
        const double down_num = s.bs_r1_n1 * s.r1_ms_n3 * (1.0 + s.ms_r2_n2);
        const double down_den = s.r1_ms_n3 * (1.0 + s.ms_r2_n2) +
                                s.r2_ms_n3 * (1.0 + s.bs_r1_n1) +
                                (1.0 + s.ms_r2_n2) * (1.0 + s.bs_r1_n1);
        const double up_num = s.ms_r2_n2 * s.r2_bs_n3 * (1.0 + s.bs_r1_n1);
        const double up_den = s.r1_bs_n3 * (1.0 + s.ms_r2_n2) +
                              s.r2_bs_n3 * (1.0 + s.bs_r1_n1) +
                              (1.0 + s.ms_r2_n2) * (1.0 + s.bs_r1_n1);
        r.down = slot_rate(down_num / down_den);
        r.up = slot_rate(up_num / up_den);
    } else {
        r.down = std::min(slot_rate(s.bs_r1_n1), slot_rate(s.r1_ms_n3));
        r.up = std::min(slot_rate(s.ms_r2_n2), slot_rate(s.r2_bs_n3));
    }
    return r;
}

RatePair rate_two_way(const TwoWaySnrs& s, RelayStrategy strategy, double xi, double theta) {
    RatePair r;
    switch (strategy) {
        case RelayStrategy::Af: {
            const double a2 = xi * s.relay_power / (1.0 + s.bs_rs_n1);
            const double b2 = (1.0 - xi) * s.relay_power / (1.0 + s.ms_rs_n2);
            r.down = slot_rate(a2 * s.bs_rs_n1 * s.gain_rs_ms_n3 /
                               (1.0 + (a2 + b2) * s.gain_rs_ms_n3));
            r.up = slot_rate(b2 * s.ms_rs_n2 * s.gain_rs_bs_n3 /
                             (1.0 + (a2 + b2) * s.gain_rs_bs_n3));
            break;
        }
        case RelayStrategy::DfXor: {
            // Broadcast phase limits both directions by the weaker of the
            // RS->BS and RS->MS links.
            const double bcast = std::min(slot_rate(s.rs_bs_n3), slot_rate(s.rs_ms_n3));
            r.down = std::min(slot_rate(s.bs_rs_n1), bcast);
            r.up = std::min(slot_rate(s.ms_rs_n2), bcast);
            break;
        }
        case RelayStrategy::DfSup: {
            r.down = std::min(slot_rate(s.bs_rs_n1), slot_rate(theta * s.rs_ms_n3));
            r.up = std::min(slot_rate(s.ms_rs_n2), slot_rate((1.0 - theta) * s.rs_bs_n3));
            break;
        }
    }
    return r;
}

RatePair session_rate(const ChannelRealization& real, int ms, const TransmissionMode& mode,
                      const SessionSubcarriers& sc) {
    if (mode.uses_slot3() != (sc.n3 >= 0))
        throw std::invalid_argument("slot-3 subcarrier inconsistent with mode");
    const NodeRef bs = NodeRef::bs();
    const NodeRef m = NodeRef::ms(ms);
    switch (mode.tag) {
        case ModeTag::DirectBoth:
            return rate_direct_both(real.snr(bs, m, sc.n1), real.snr(m, bs, sc.n2));
        case ModeTag::DirectDownRelayUp: {
            const NodeRef r = NodeRef::rs(mode.relay_up);
            return rate_direct_down_relay_up(real.snr(bs, m, sc.n1), real.snr(m, r, sc.n2),
                                             real.snr(r, bs, sc.n3), real.strategy());
        }
        case ModeTag::RelayDownDirectUp: {
            const NodeRef r = NodeRef::rs(mode.relay_down);
            return rate_relay_down_direct_up(real.snr(bs, r, sc.n1), real.snr(r, m, sc.n3),
                                             real.snr(m, bs, sc.n2), real.strategy());
        }
        case ModeTag::DualRelay: {
            if (mode.relay_down == mode.relay_up)
                throw std::invalid_argument("mode d needs two distinct relays");
            const NodeRef r1 = NodeRef::rs(mode.relay_down);
            const NodeRef r2 = NodeRef::rs(mode.relay_up);
            DualRelaySnrs s;
            s.bs_r1_n1 = real.snr(bs, r1, sc.n1);
            s.r1_ms_n3 = real.snr(r1, m, sc.n3);
            s.ms_r2_n2 = real.snr(m, r2, sc.n2);
            s.r2_bs_n3 = real.snr(r2, bs, sc.n3);
            s.r2_ms_n3 = real.snr(r2, m, sc.n3);
            s.r1_bs_n3 = real.snr(r1, bs, sc.n3);
            return rate_dual_relay(s, real.strategy());
        }
        case ModeTag::TwoWayRelay: {
            const NodeRef r = NodeRef::rs(mode.relay_down);
            TwoWaySnrs s;
            s.bs_rs_n1 = real.snr(bs, r, sc.n1);
            s.ms_rs_n2 = real.snr(m, r, sc.n2);
            s.rs_bs_n3 = real.snr(r, bs, sc.n3);
            s.rs_ms_n3 = real.snr(r, m, sc.n3);
            s.gain_rs_ms_n3 = real.gain(r, m, sc.n3);
            s.gain_rs_bs_n3 = real.gain(r, bs, sc.n3);
            s.relay_power = real.tx_power(NodeKind::Rs);
            return rate_two_way(s, real.strategy(), real.xi(), real.theta());
        }
    }
    throw std::invalid_argument("unknown transmission mode");
}

}  // namespace relaysched
