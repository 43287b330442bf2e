#ifndef RELAYSCHED_CONFLICT_GRAPH_HPP
#define RELAYSCHED_CONFLICT_GRAPH_HPP

#include <functional>
#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "relaysched/allocation.hpp"
#include "relaysched/channel.hpp"
#include "relaysched/graph.hpp"
#include "relaysched/rates.hpp"

namespace relaysched {

// A vertex is a subcarrier pair (n1,n2) for direct transmission or a tuple
// (n1,n2,n3) for the relay-assisted modes; n3 < 0 marks a direct pair.
struct Vertex {
    int n1 = 0;
    int n2 = 0;
    int n3 = -1;

    bool is_direct() const { return n3 < 0; }
    // Subcarrier occupied in slot t (0-based), or -1. Direct pairs occupy
    // nothing in slot 3.
    int occupied(int slot) const {
        switch (slot) {
            case 0: return n1;
            case 1: return n2;
            default: return n3 < 0 ? -1 : n3;
        }
    }
};

// Two vertices can coexist in a schedule iff the subcarriers they occupy
// differ in every slot where both occupy one.
bool slot_disjoint(const Vertex& a, const Vertex& b);

// All N^2 direct pairs followed by all N^3 relay tuples, lexicographic.
std::vector<Vertex> enumerate_vertices(int num_subcarriers);

constexpr double kNoAssignmentWeight = -std::numeric_limits<double>::infinity();

// Best (MS, mode, relays) assignment for one vertex; weight is the rate-pair
// sum it achieves on the vertex's subcarriers. Ties break to the lowest
// (ms, mode, relays) tuple. weight == kNoAssignmentWeight means no candidate
// exists (no relays, or every MS restricted away from this vertex kind).
struct VertexLabel {
    int ms = -1;
    TransmissionMode mode;
    double weight = kNoAssignmentWeight;
};

// Per-MS pre-assignment used by the suboptimal schemes: a direct-only MS
// competes for direct pairs, a cooperative MS for relay tuples with its
// fixed mode and relay.
struct ModeAssignment {
    bool direct = true;
    ModeTag coop_mode = ModeTag::TwoWayRelay;  // TwoWayRelay or DirectDownRelayUp
    int relay = -1;
};
using Restriction = std::vector<ModeAssignment>;

VertexLabel weigh_direct(const ChannelRealization& real, const Vertex& v,
                         const Restriction* restriction = nullptr);
VertexLabel weigh_relay(const ChannelRealization& real, const Vertex& v,
                        const Restriction* restriction = nullptr);

// Enumerates the relay-vertex candidate set for one MS in tie-break order:
// mode b over relays, mode c over relays, mode d over ordered relay pairs,
// mode e over relays. Candidate count is 3M + M(M-1).
void for_each_relay_candidate(int num_rs, const std::function<void(const TransmissionMode&)>& fn);

struct ConflictGraph {
    std::vector<Vertex> vertices;  // unassignable vertices already pruned
    std::vector<VertexLabel> labels;
    WeightedGraph graph;

    int size() const { return static_cast<int>(vertices.size()); }
};

ConflictGraph build_graph(const ChannelRealization& real,
                          const Restriction* restriction = nullptr);

// Interprets a clique back as a schedule. Throws std::invalid_argument naming
// the offending pair when the vertex set is not pairwise adjacent.
Allocation clique_to_allocation(const ChannelRealization& real, const ConflictGraph& graph,
                                std::span<const int> clique);

// Plain-text export: first line is the vertex count, then one line per
// vertex (id, weight, subcarriers, label) and one line per edge (id pair).
// Subcarrier, MS and relay numbers are 1-based in the file.
void export_graph(const ConflictGraph& graph, std::ostream& out);

// Reads the exported format back as a solver-ready graph. Label text is
// retained verbatim per vertex for printing.
struct ImportedGraph {
    WeightedGraph graph;
    std::vector<std::string> label_text;
};
ImportedGraph import_graph(std::istream& in);

}  // namespace relaysched

#endif
