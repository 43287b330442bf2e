#include "relaysched/conflict_graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "relaysched/util.hpp"

namespace relaysched {

bool slot_disjoint(const Vertex& a, const Vertex& b) {
    for (int slot = 0; slot < 3; ++slot) {
        const int sa = a.occupied(slot);
        const int sb = b.occupied(slot);
        if (sa >= 0 && sa == sb) return false;
    }
    return true;
}

std::vector<Vertex> enumerate_vertices(int num_subcarriers) {
    const int n = num_subcarriers;
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(n) * n + static_cast<std::size_t>(n) * n * n);
    for (int n1 = 0; n1 < n; ++n1)
        for (int n2 = 0; n2 < n; ++n2) out.push_back({n1, n2, -1});
    for (int n1 = 0; n1 < n; ++n1)
        for (int n2 = 0; n2 < n; ++n2)
            for (int n3 = 0; n3 < n; ++n3) out.push_back({n1, n2, n3});
    return out;
}

void for_each_relay_candidate(int num_rs,
                              const std::function<void(const TransmissionMode&)>& fn) {
    for (int r = 0; r < num_rs; ++r) fn(TransmissionMode::direct_down_relay_up(r));
    for (int r = 0; r < num_rs; ++r) fn(TransmissionMode::relay_down_direct_up(r));
    for (int r = 0; r < num_rs; ++r)
        for (int r2 = 0; r2 < num_rs; ++r2)
            if (r2 != r) fn(TransmissionMode::dual_relay(r, r2));
    for (int r = 0; r < num_rs; ++r) fn(TransmissionMode::two_way(r));
}

VertexLabel weigh_direct(const ChannelRealization& real, const Vertex& v,
                         const Restriction* restriction) {
    VertexLabel best;
    const SessionSubcarriers sc{v.n1, v.n2, -1};
    for (int k = 0; k < real.num_ms(); ++k) {
        if (restriction && !(*restriction)[k].direct) continue;
        const double w = session_rate(real, k, TransmissionMode::direct(), sc).sum();
        if (w > best.weight) best = {k, TransmissionMode::direct(), w};
    }
    return best;
}

VertexLabel weigh_relay(const ChannelRealization& real, const Vertex& v,
                        const Restriction* restriction) {
    VertexLabel best;
    const SessionSubcarriers sc{v.n1, v.n2, v.n3};
    for (int k = 0; k < real.num_ms(); ++k) {
        auto consider = [&](const TransmissionMode& mode) {
            const double w = session_rate(real, k, mode, sc).sum();
            if (w > best.weight) best = {k, mode, w};
        };
        if (restriction) {
            const ModeAssignment& a = (*restriction)[k];
            if (a.direct) continue;
            consider(a.coop_mode == ModeTag::TwoWayRelay
                         ? TransmissionMode::two_way(a.relay)
                         : TransmissionMode::direct_down_relay_up(a.relay));
        } else {
            for_each_relay_candidate(real.num_rs(), consider);
        }
    }
    return best;
}

namespace {

// Per-hop rate and SNR tables so the O(N^3 * K * M^2) weighting loop stays
// log-free on the DF paths. Entries are exactly what session_rate computes
// for the same hop: slot_rate(real.snr(...)).
struct HopTables {
    int num_ms = 0, num_rs = 0, num_sc = 0;
    RelayStrategy strategy = RelayStrategy::DfXor;
    double xi = 0.5, theta = 0.5, relay_power = 0.0;

    std::vector<double> dl_direct, ul_direct;          // [k*N+n]
    std::vector<double> rate_bs_rs, rate_rs_bs;        // [r*N+n]
    std::vector<double> rate_ms_rs, rate_rs_ms;        // [(k*M+r)*N+n]
    std::vector<double> sup_rs_ms;                     // [(k*M+r)*N+n]
    std::vector<double> sup_rs_bs;                     // [r*N+n]
    std::vector<double> snr_bs_rs, snr_rs_bs;          // [r*N+n]
    std::vector<double> snr_ms_rs, snr_rs_ms;          // [(k*M+r)*N+n]
    std::vector<double> gain_rs_ms;                    // [(k*M+r)*N+n]
    std::vector<double> gain_rs_bs;                    // [r*N+n]

    explicit HopTables(const ChannelRealization& real)
        : num_ms(real.num_ms()),
          num_rs(real.num_rs()),
          num_sc(real.num_subcarriers()),
          strategy(real.strategy()),
          xi(real.xi()),
          theta(real.theta()),
          relay_power(real.tx_power(NodeKind::Rs)) {
        const int n_sc = num_sc;
        const NodeRef bs = NodeRef::bs();
        dl_direct.resize(static_cast<std::size_t>(num_ms) * n_sc);
        ul_direct.resize(dl_direct.size());
        for (int k = 0; k < num_ms; ++k) {
            const NodeRef m = NodeRef::ms(k);
            for (int n = 0; n < n_sc; ++n) {
                dl_direct[k * n_sc + n] = slot_rate(real.snr(bs, m, n));
                ul_direct[k * n_sc + n] = slot_rate(real.snr(m, bs, n));
            }
        }
        rate_bs_rs.resize(static_cast<std::size_t>(num_rs) * n_sc);
        rate_rs_bs.resize(rate_bs_rs.size());
        snr_bs_rs.resize(rate_bs_rs.size());
        snr_rs_bs.resize(rate_bs_rs.size());
        sup_rs_bs.resize(rate_bs_rs.size());
        gain_rs_bs.resize(rate_bs_rs.size());
        for (int r = 0; r < num_rs; ++r) {
            const NodeRef rs = NodeRef::rs(r);
            for (int n = 0; n < n_sc; ++n) {
                const std::size_t i = static_cast<std::size_t>(r) * n_sc + n;
                snr_bs_rs[i] = real.snr(bs, rs, n);
                snr_rs_bs[i] = real.snr(rs, bs, n);
                rate_bs_rs[i] = slot_rate(snr_bs_rs[i]);
                rate_rs_bs[i] = slot_rate(snr_rs_bs[i]);
                sup_rs_bs[i] = slot_rate((1.0 - theta) * snr_rs_bs[i]);
                gain_rs_bs[i] = real.gain(rs, bs, n);
            }
        }
        rate_ms_rs.resize(static_cast<std::size_t>(num_ms) * num_rs * n_sc);
        rate_rs_ms.resize(rate_ms_rs.size());
        snr_ms_rs.resize(rate_ms_rs.size());
        snr_rs_ms.resize(rate_ms_rs.size());
        sup_rs_ms.resize(rate_ms_rs.size());
        gain_rs_ms.resize(rate_ms_rs.size());
        for (int k = 0; k < num_ms; ++k) {
            const NodeRef m = NodeRef::ms(k);
            for (int r = 0; r < num_rs; ++r) {
                const NodeRef rs = NodeRef::rs(r);
                for (int n = 0; n < n_sc; ++n) {
                    const std::size_t i =
                        (static_cast<std::size_t>(k) * num_rs + r) * n_sc + n;
                    snr_ms_rs[i] = real.snr(m, rs, n);
                    snr_rs_ms[i] = real.snr(rs, m, n);
                    rate_ms_rs[i] = slot_rate(snr_ms_rs[i]);
                    rate_rs_ms[i] = slot_rate(snr_rs_ms[i]);
                    sup_rs_ms[i] = slot_rate(theta * snr_rs_ms[i]);
                    gain_rs_ms[i] = real.gain(rs, m, n);
                }
            }
        }
    }

    VertexLabel weigh_direct_vertex(const Vertex& v, const Restriction* restriction) const {
        VertexLabel best;
        for (int k = 0; k < num_ms; ++k) {
            if (restriction && !(*restriction)[k].direct) continue;
            const double w = dl_direct[k * num_sc + v.n1] + ul_direct[k * num_sc + v.n2];
            if (w > best.weight) best = {k, TransmissionMode::direct(), w};
        }
        return best;
    }

    VertexLabel weigh_relay_vertex(const Vertex& v, const Restriction* restriction) const {
        VertexLabel best;
        const int n_sc = num_sc;
        const bool af = strategy == RelayStrategy::Af;
        const bool sup = strategy == RelayStrategy::DfSup;
        for (int k = 0; k < num_ms; ++k) {
            const std::size_t kbase = static_cast<std::size_t>(k) * num_rs;
            auto up_via = [&](int r) {
                const std::size_t kr = (kbase + r) * n_sc;
                const std::size_t rb = static_cast<std::size_t>(r) * n_sc;
                if (af)
                    return slot_rate(af_cascade_snr(snr_ms_rs[kr + v.n2], snr_rs_bs[rb + v.n3]));
                return std::min(rate_ms_rs[kr + v.n2], rate_rs_bs[rb + v.n3]);
            };
            auto down_via = [&](int r) {
                const std::size_t kr = (kbase + r) * n_sc;
                const std::size_t rb = static_cast<std::size_t>(r) * n_sc;
                if (af)
                    return slot_rate(af_cascade_snr(snr_bs_rs[rb + v.n1], snr_rs_ms[kr + v.n3]));
                return std::min(rate_bs_rs[rb + v.n1], rate_rs_ms[kr + v.n3]);
            };
            auto two_way_sum = [&](int r) {
                const std::size_t kr = (kbase + r) * n_sc;
                const std::size_t rb = static_cast<std::size_t>(r) * n_sc;
                if (af) {
                    TwoWaySnrs s;
                    s.bs_rs_n1 = snr_bs_rs[rb + v.n1];
                    s.ms_rs_n2 = snr_ms_rs[kr + v.n2];
                    s.gain_rs_ms_n3 = gain_rs_ms[kr + v.n3];
                    s.gain_rs_bs_n3 = gain_rs_bs[rb + v.n3];
                    s.relay_power = relay_power;
                    const RatePair p = rate_two_way(s, RelayStrategy::Af, xi, theta);
                    return p.down + p.up;
                }
                if (sup) {
                    return std::min(rate_bs_rs[rb + v.n1], sup_rs_ms[kr + v.n3]) +
                           std::min(rate_ms_rs[kr + v.n2], sup_rs_bs[rb + v.n3]);
                }
                const double bcast = std::min(rate_rs_bs[rb + v.n3], rate_rs_ms[kr + v.n3]);
                return std::min(rate_bs_rs[rb + v.n1], bcast) +
                       std::min(rate_ms_rs[kr + v.n2], bcast);
            };
            auto dual_sum = [&](int r1, int r2) {
                if (af) {
                    DualRelaySnrs s;
                    s.bs_r1_n1 = snr_bs_rs[static_cast<std::size_t>(r1) * n_sc + v.n1];
                    s.r1_ms_n3 = snr_rs_ms[(kbase + r1) * n_sc + v.n3];
                    s.ms_r2_n2 = snr_ms_rs[(kbase + r2) * n_sc + v.n2];
                    s.r2_bs_n3 = snr_rs_bs[static_cast<std::size_t>(r2) * n_sc + v.n3];
                    s.r2_ms_n3 = snr_rs_ms[(kbase + r2) * n_sc + v.n3];
                    s.r1_bs_n3 = snr_rs_bs[static_cast<std::size_t>(r1) * n_sc + v.n3];
                    const RatePair p = rate_dual_relay(s, RelayStrategy::Af);
                    return p.down + p.up;
                }
                return std::min(rate_bs_rs[static_cast<std::size_t>(r1) * n_sc + v.n1],
                                rate_rs_ms[(kbase + r1) * n_sc + v.n3]) +
                       std::min(rate_ms_rs[(kbase + r2) * n_sc + v.n2],
                                rate_rs_bs[static_cast<std::size_t>(r2) * n_sc + v.n3]);
            };

            auto consider = [&](double w, const TransmissionMode& mode) {
                if (w > best.weight) best = {k, mode, w};
            };

            if (restriction) {
                const ModeAssignment& a = (*restriction)[k];
                if (a.direct) continue;
                if (a.coop_mode == ModeTag::TwoWayRelay)
                    consider(two_way_sum(a.relay), TransmissionMode::two_way(a.relay));
                else
                    consider(dl_direct[k * n_sc + v.n1] + up_via(a.relay),
                             TransmissionMode::direct_down_relay_up(a.relay));
                continue;
            }
            for (int r = 0; r < num_rs; ++r)
                consider(dl_direct[k * n_sc + v.n1] + up_via(r),
                         TransmissionMode::direct_down_relay_up(r));
            for (int r = 0; r < num_rs; ++r)
                consider(down_via(r) + ul_direct[k * n_sc + v.n2],
                         TransmissionMode::relay_down_direct_up(r));
            for (int r1 = 0; r1 < num_rs; ++r1)
                for (int r2 = 0; r2 < num_rs; ++r2)
                    if (r2 != r1)
                        consider(dual_sum(r1, r2), TransmissionMode::dual_relay(r1, r2));
            for (int r = 0; r < num_rs; ++r)
                consider(two_way_sum(r), TransmissionMode::two_way(r));
        }
        return best;
    }
};

// Vertices sharing a subcarrier in some slot form an independent set, so the
// adjacency is the complete graph with those groups cleared out.
void build_adjacency(const std::vector<Vertex>& vertices, AdjacencyMatrix& adj) {
    const int count = static_cast<int>(vertices.size());
    adj = AdjacencyMatrix(count);
    adj.fill_complete();
    const int words = adj.words_per_row();

    std::vector<int> group;
    std::vector<std::uint64_t> mask(words);
    for (int slot = 0; slot < 3; ++slot) {
        // Group ids by occupied subcarrier in this slot.
        std::vector<std::vector<int>> groups;
        for (int v = 0; v < count; ++v) {
            const int sc = vertices[v].occupied(slot);
            if (sc < 0) continue;
            if (sc >= static_cast<int>(groups.size())) groups.resize(sc + 1);
            groups[sc].push_back(v);
        }
        for (const auto& members : groups) {
            if (members.size() < 2) continue;
            std::fill(mask.begin(), mask.end(), 0);
            for (int v : members) mask[v / 64] |= 1ULL << (v % 64);
            for (int v : members) {
                auto row = adj.mutable_row(v);
                for (int w = 0; w < words; ++w) row[w] &= ~mask[w];
            }
        }
    }
}

}  // namespace

ConflictGraph build_graph(const ChannelRealization& real, const Restriction* restriction) {
    if (restriction && static_cast<int>(restriction->size()) != real.num_ms())
        throw std::invalid_argument("restriction size must match the number of MSs");

    const HopTables tables(real);
    const std::vector<Vertex> all = enumerate_vertices(real.num_subcarriers());

    ConflictGraph g;
    g.vertices.reserve(all.size());
    g.labels.reserve(all.size());
    for (const Vertex& v : all) {
        const VertexLabel label = v.is_direct() ? tables.weigh_direct_vertex(v, restriction)
                                                : tables.weigh_relay_vertex(v, restriction);
        if (label.weight == kNoAssignmentWeight) continue;  // unassignable, prune
        g.vertices.push_back(v);
        g.labels.push_back(label);
    }
    g.graph.weights.resize(g.vertices.size());
    for (std::size_t i = 0; i < g.labels.size(); ++i) g.graph.weights[i] = g.labels[i].weight;
    build_adjacency(g.vertices, g.graph.adj);
    return g;
}

Allocation clique_to_allocation(const ChannelRealization& real, const ConflictGraph& graph,
                                std::span<const int> clique) {
    std::vector<int> ids(clique.begin(), clique.end());
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (!graph.graph.adj.adjacent(ids[i], ids[j]))
                throw std::invalid_argument("not a clique: vertices " + std::to_string(ids[i]) +
                                            " and " + std::to_string(ids[j]) + " conflict");

    Allocation alloc;
    alloc.sessions.reserve(ids.size());
    for (int id : ids) {
        const Vertex& v = graph.vertices[id];
        const VertexLabel& label = graph.labels[id];
        Session s;
        s.ms = label.ms;
        s.mode = label.mode;
        s.sc = {v.n1, v.n2, v.is_direct() ? -1 : v.n3};
        s.rate = session_rate(real, s.ms, s.mode, s.sc);
        alloc.sessions.push_back(s);
    }
    return alloc;
}

void export_graph(const ConflictGraph& graph, std::ostream& out) {
    const int count = graph.size();
    out << count << '\n';
    for (int id = 0; id < count; ++id) {
        const Vertex& v = graph.vertices[id];
        const VertexLabel& label = graph.labels[id];
        out << id << ' ' << format_double(label.weight, 17) << ' ' << v.n1 + 1 << ' '
            << v.n2 + 1 << ' ';
        if (v.is_direct()) out << '-';
        else out << v.n3 + 1;
        out << ' ' << label.ms + 1 << ' ' << mode_letter(label.mode.tag) << ' ';
        const auto relays = label.mode.relays();
        if (relays.empty()) out << '-';
        for (std::size_t i = 0; i < relays.size(); ++i)
            out << (i ? "," : "") << relays[i] + 1;
        out << '\n';
    }
    for (int u = 0; u < count; ++u)
        for (int v = u + 1; v < count; ++v)
            if (graph.graph.adj.adjacent(u, v)) out << u << ' ' << v << '\n';
}

ImportedGraph import_graph(std::istream& in) {
    int count = 0;
    if (!(in >> count) || count < 0) throw std::runtime_error("graph file: bad vertex count");
    ImportedGraph g;
    g.graph.weights.resize(count);
    g.label_text.resize(count);
    g.graph.adj = AdjacencyMatrix(count);
    std::string line;
    std::getline(in, line);
    for (int i = 0; i < count; ++i) {
        if (!std::getline(in, line)) throw std::runtime_error("graph file: truncated vertex list");
        std::istringstream ls(line);
        int id = 0;
        double weight = 0.0;
        if (!(ls >> id >> weight) || id < 0 || id >= count)
            throw std::runtime_error("graph file: bad vertex line: " + line);
        g.graph.weights[id] = weight;
        std::string rest;
        std::getline(ls, rest);
        if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
        g.label_text[id] = rest;
    }
    int u = 0, v = 0;
    while (in >> u >> v) {
        if (u < 0 || v < 0 || u >= count || v >= count || u == v)
            throw std::runtime_error("graph file: bad edge");
        g.graph.adj.set(u, v);
    }
    return g;
}

}  // namespace relaysched
