#include "relaysched/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "relaysched/util.hpp"

namespace relaysched {

namespace {

double half_rate(double snr) { return std::log2(1.0 + snr) / 2.0; }
double quarter_rate(double snr) { return std::log2(1.0 + snr) / 4.0; }

}  // namespace

Bm1Result solve_bm1(const ChannelRealization& real) {
    Bm1Result res;
    const int n_sc = real.num_subcarriers();
    const NodeRef bs = NodeRef::bs();
    res.downlink_ms.resize(n_sc);
    res.uplink_ms.resize(n_sc);
    for (int n = 0; n < n_sc; ++n) {
        int best_dl = 0, best_ul = 0;
        double snr_dl = real.snr(bs, NodeRef::ms(0), n);
        double snr_ul = real.snr(NodeRef::ms(0), bs, n);
        for (int k = 1; k < real.num_ms(); ++k) {
            const double dl = real.snr(bs, NodeRef::ms(k), n);
            const double ul = real.snr(NodeRef::ms(k), bs, n);
            if (dl > snr_dl) { snr_dl = dl; best_dl = k; }
            if (ul > snr_ul) { snr_ul = ul; best_ul = k; }
        }
        res.downlink_ms[n] = best_dl;
        res.uplink_ms[n] = best_ul;
        res.throughput += half_rate(snr_dl) + half_rate(snr_ul);
    }
    return res;
}

namespace {

// One direction of the four-sub-slot relaying protocol as a clique problem.
// Vertex ids: [0, N) direct on subcarrier n in the direction's first
// sub-slot (the second sub-slot is reserved for relay forwarding); then
// relay pairs (n1, n2) at id N + n1*N + n2, first hop on n1, second on n2.
struct DirectionGraph {
    WeightedGraph graph;
    int n_sc = 0;
};

DirectionGraph build_direction_graph(const ChannelRealization& real, bool downlink) {
    const int n_sc = real.num_subcarriers();
    const int n_ms = real.num_ms();
    const int n_rs = real.num_rs();
    const bool af = real.strategy() == RelayStrategy::Af;
    const NodeRef bs = NodeRef::bs();

    DirectionGraph dg;
    dg.n_sc = n_sc;
    const int count = n_rs > 0 ? n_sc + n_sc * n_sc : n_sc;
    dg.graph.weights.assign(count, 0.0);

    // A direct session sends once, in the sources' sub-slot.
    for (int n = 0; n < n_sc; ++n) {
        double best = 0.0;
        for (int k = 0; k < n_ms; ++k) {
            const NodeRef m = NodeRef::ms(k);
            const double snr = downlink ? real.snr(bs, m, n) : real.snr(m, bs, n);
            best = std::max(best, quarter_rate(snr));
        }
        dg.graph.weights[n] = best;
    }
    for (int n1 = 0; n1 < n_sc && n_rs > 0; ++n1) {
        for (int n2 = 0; n2 < n_sc; ++n2) {
            double best = 0.0;
            for (int k = 0; k < n_ms; ++k) {
                const NodeRef m = NodeRef::ms(k);
                for (int r = 0; r < n_rs; ++r) {
                    const NodeRef rs = NodeRef::rs(r);
                    const double hop1 =
                        downlink ? real.snr(bs, rs, n1) : real.snr(m, rs, n1);
                    const double hop2 =
                        downlink ? real.snr(rs, m, n2) : real.snr(rs, bs, n2);
                    const double rate =
                        af ? quarter_rate(af_cascade_snr(hop1, hop2))
                           : std::min(quarter_rate(hop1), quarter_rate(hop2));
                    best = std::max(best, rate);
                }
            }
            dg.graph.weights[n_sc + n1 * n_sc + n2] = best;
        }
    }

    dg.graph.adj = AdjacencyMatrix(count);
    dg.graph.adj.fill_complete();
    auto clear_pair = [&](int u, int v) {
        auto ru = dg.graph.adj.mutable_row(u);
        ru[v / 64] &= ~(1ULL << (v % 64));
        auto rv = dg.graph.adj.mutable_row(v);
        rv[u / 64] &= ~(1ULL << (u % 64));
    };
    auto sub_slot = [&](int id, int sub) {
        if (id < n_sc) return sub == 0 ? id : -1;  // direct: first sub-slot only
        const int rel = id - n_sc;
        return sub == 0 ? rel / n_sc : rel % n_sc;
    };
    for (int u = 0; u < count; ++u)
        for (int v = u + 1; v < count; ++v)
            for (int sub = 0; sub < 2; ++sub) {
                const int a = sub_slot(u, sub);
                if (a >= 0 && a == sub_slot(v, sub)) {
                    clear_pair(u, v);
                    break;
                }
            }
    return dg;
}

}  // namespace

Bm2Result solve_bm2(const ChannelRealization& real, const AcoParams& aco) {
    Bm2Result res;
    for (int dir = 0; dir < 2; ++dir) {
        const DirectionGraph dg = build_direction_graph(real, dir == 0);
        AcoParams params = aco;
        params.rng_seed = derive_seed(aco.rng_seed, 0xb2 + dir);
        const SolveResult sol = solve_aco(dg.graph, params);
        (dir == 0 ? res.downlink : res.uplink) = sol.total_weight;
    }
    res.throughput = res.downlink + res.uplink;
    return res;
}

Restriction preassign_modes(const ScenarioConfig& cfg, const NodeLayout& layout,
                            const ChannelRealization& real) {
    Restriction out(real.num_ms());
    const double inner_radius = cfg.relay_radius();
    for (int k = 0; k < real.num_ms(); ++k) {
        ModeAssignment& a = out[k];
        const double dist_bs = distance(layout.bs, layout.ms[k]);
        if (real.num_rs() == 0 || dist_bs <= inner_radius) {
            a.direct = true;
            continue;
        }
        int nearest = 0;
        double best = distance(layout.ms[k], layout.rs[0]);
        for (int r = 1; r < real.num_rs(); ++r) {
            const double d = distance(layout.ms[k], layout.rs[r]);
            if (d < best) { best = d; nearest = r; }
        }
        a.direct = false;
        a.relay = nearest;
        const double ls_br = linear_to_db(real.large_scale(NodeRef::bs(), NodeRef::rs(nearest)));
        const double ls_mr =
            linear_to_db(real.large_scale(NodeRef::ms(k), NodeRef::rs(nearest)));
        a.coop_mode = std::abs(ls_br - ls_mr) <= cfg.twoway_balance_band_db
                          ? ModeTag::TwoWayRelay
                          : ModeTag::DirectDownRelayUp;
    }
    return out;
}

SuboptimalResult solve_suboptimal(const ChannelRealization& real, const ScenarioConfig& cfg,
                                  const NodeLayout& layout, SubcarrierPolicy policy,
                                  const AcoParams& aco, std::uint64_t seed) {
    const Restriction restriction = preassign_modes(cfg, layout, real);
    SuboptimalResult res;

    if (policy == SubcarrierPolicy::Adaptive) {
        const ConflictGraph graph = build_graph(real, &restriction);
        if (graph.size() == 0) return res;
        AcoParams params = aco;
        params.rng_seed = seed;
        const SolveResult sol = solve_aco(graph.graph, params);
        res.allocation = clique_to_allocation(real, graph, sol.clique);
        res.throughput = res.allocation.total_throughput();
        return res;
    }

    // Random policy: independent subcarrier permutation per slot, one session
    // per permutation column, MS drawn uniformly.
    std::mt19937_64 rng(seed);
    const int n_sc = real.num_subcarriers();
    std::vector<int> slot1(n_sc), slot2(n_sc), slot3(n_sc);
    std::iota(slot1.begin(), slot1.end(), 0);
    std::iota(slot2.begin(), slot2.end(), 0);
    std::iota(slot3.begin(), slot3.end(), 0);
    std::shuffle(slot1.begin(), slot1.end(), rng);
    std::shuffle(slot2.begin(), slot2.end(), rng);
    std::shuffle(slot3.begin(), slot3.end(), rng);
    std::uniform_int_distribution<int> pick_ms(0, real.num_ms() - 1);

    for (int i = 0; i < n_sc; ++i) {
        Session s;
        s.ms = pick_ms(rng);
        const ModeAssignment& a = restriction[s.ms];
        if (a.direct) {
            s.mode = TransmissionMode::direct();
            s.sc = {slot1[i], slot2[i], -1};
        } else {
            s.mode = a.coop_mode == ModeTag::TwoWayRelay
                         ? TransmissionMode::two_way(a.relay)
                         : TransmissionMode::direct_down_relay_up(a.relay);
            s.sc = {slot1[i], slot2[i], slot3[i]};
        }
        s.rate = session_rate(real, s.ms, s.mode, s.sc);
        res.allocation.sessions.push_back(s);
    }
    res.throughput = res.allocation.total_throughput();
    return res;
}

}  // namespace relaysched
