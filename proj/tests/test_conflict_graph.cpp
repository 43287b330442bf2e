#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "relaysched/allocation.hpp"
#include "relaysched/conflict_graph.hpp"
#include "relaysched/exact.hpp"

using namespace relaysched;

TEST_CASE("vertex enumeration counts N^2 + N^3") {
    CHECK(enumerate_vertices(2).size() == 12);
    CHECK(enumerate_vertices(16).size() == 256 + 4096);
    const auto single = enumerate_vertices(1);
    REQUIRE(single.size() == 2);
    CHECK(single[0].is_direct());
    CHECK(single[0].n1 == 0);
    CHECK(single[0].n2 == 0);
    CHECK(!single[1].is_direct());
    CHECK(single[1].n3 == 0);
}

TEST_CASE("slot disjointness rule") {
    const Vertex d12{0, 1, -1};
    const Vertex d21{1, 0, -1};
    const Vertex d13{0, 2, -1};
    CHECK(slot_disjoint(d12, d21));
    CHECK(!slot_disjoint(d12, d13));  // share subcarrier 0 in slot 1
    // Direct pairs occupy nothing in slot 3, so a matching n3 is vacuous.
    const Vertex relay{2, 3, 0};
    CHECK(slot_disjoint(d12, relay));
    CHECK(!slot_disjoint(Vertex{2, 1, -1}, relay));  // slot-1 clash on 2
    CHECK(!slot_disjoint(relay, Vertex{3, 2, 0}));   // slot-3 clash on 0
}

TEST_CASE("direct weighting maximizes over MSs") {
    const ScenarioConfig cfg = test::small_scenario(3, 4, 0, 41);
    const ChannelRealization real = test::realize(cfg);
    for (const Vertex& v : enumerate_vertices(3)) {
        if (!v.is_direct()) continue;
        const VertexLabel label = weigh_direct(real, v);
        double best = -1.0;
        int best_k = -1;
        for (int k = 0; k < cfg.num_ms; ++k) {
            const double w =
                session_rate(real, k, TransmissionMode::direct(), {v.n1, v.n2, -1}).sum();
            if (w > best) { best = w; best_k = k; }
        }
        CHECK(label.ms == best_k);
        CHECK(label.weight == best);
        CHECK(label.mode.tag == ModeTag::DirectBoth);
    }
}

TEST_CASE("relay weighting matches exhaustive candidate scan") {
    const ScenarioConfig cfg = test::small_scenario(2, 2, 2, 43);
    for (RelayStrategy strategy :
         {RelayStrategy::Af, RelayStrategy::DfXor, RelayStrategy::DfSup}) {
        ScenarioConfig c = cfg;
        c.relay_strategy = strategy;
        const ChannelRealization real = test::realize(c);
        for (const Vertex& v : enumerate_vertices(2)) {
            if (v.is_direct()) continue;
            const VertexLabel label = weigh_relay(real, v);
            double best = -1.0;
            for (int k = 0; k < c.num_ms; ++k)
                for_each_relay_candidate(c.num_rs, [&](const TransmissionMode& mode) {
                    best = std::max(
                        best, session_rate(real, k, mode, {v.n1, v.n2, v.n3}).sum());
                });
            CHECK(label.weight == doctest::Approx(best).epsilon(1e-14));
        }
    }
}

TEST_CASE("relay candidate count is 3M + M(M-1) per MS") {
    for (int m : {1, 2, 3, 10}) {
        int count = 0;
        for_each_relay_candidate(m, [&](const TransmissionMode&) { ++count; });
        CHECK(count == 3 * m + m * (m - 1));
    }
    // K=4, M=10: 480 candidate evaluations per relay vertex.
    int count = 0;
    for (int k = 0; k < 4; ++k)
        for_each_relay_candidate(10, [&](const TransmissionMode&) { ++count; });
    CHECK(count == 480);
}

TEST_CASE("single relay never yields dual-relay labels") {
    const ScenarioConfig cfg = test::small_scenario(2, 2, 1, 47);
    const ChannelRealization real = test::realize(cfg);
    const ConflictGraph g = build_graph(real);
    for (const VertexLabel& label : g.labels) CHECK(label.mode.tag != ModeTag::DualRelay);
}

TEST_CASE("no relays prunes every relay vertex") {
    const ScenarioConfig cfg = test::small_scenario(2, 2, 0, 48);
    const ChannelRealization real = test::realize(cfg);
    CHECK(weigh_relay(real, Vertex{0, 1, 1}).weight == kNoAssignmentWeight);
    const ConflictGraph g = build_graph(real);
    CHECK(g.size() == 4);  // only the N^2 direct pairs survive
    for (const Vertex& v : g.vertices) CHECK(v.is_direct());
}

TEST_CASE("build_graph labels agree with the standalone weighting ops") {
    const ScenarioConfig cfg = test::small_scenario(2, 2, 2, 49);
    for (RelayStrategy strategy :
         {RelayStrategy::Af, RelayStrategy::DfXor, RelayStrategy::DfSup}) {
        ScenarioConfig c = cfg;
        c.relay_strategy = strategy;
        const ChannelRealization real = test::realize(c);
        const ConflictGraph g = build_graph(real);
        REQUIRE(g.size() == 12);
        for (int i = 0; i < g.size(); ++i) {
            const Vertex& v = g.vertices[i];
            const VertexLabel want =
                v.is_direct() ? weigh_direct(real, v) : weigh_relay(real, v);
            CHECK(g.labels[i].ms == want.ms);
            CHECK(g.labels[i].weight == want.weight);
            CHECK(g.labels[i].mode.tag == want.mode.tag);
            CHECK(g.labels[i].mode.relay_down == want.mode.relay_down);
            CHECK(g.labels[i].mode.relay_up == want.mode.relay_up);
        }
    }
}

TEST_CASE("adjacency matches the pairwise disjointness rule") {
    const ScenarioConfig cfg = test::small_scenario(3, 1, 1, 51);
    const ChannelRealization real = test::realize(cfg);
    const ConflictGraph g = build_graph(real);
    for (int u = 0; u < g.size(); ++u) {
        CHECK(!g.graph.adj.adjacent(u, u));
        for (int v = 0; v < g.size(); ++v)
            CHECK(g.graph.adj.adjacent(u, v) == slot_disjoint(g.vertices[u], g.vertices[v]));
    }
}

TEST_CASE("cliques translate to valid allocations") {
    const ScenarioConfig cfg = test::small_scenario(2, 2, 2, 53);
    const ChannelRealization real = test::realize(cfg);
    const ConflictGraph g = build_graph(real);

    SUBCASE("empty clique") {
        const Allocation alloc = clique_to_allocation(real, g, {});
        CHECK(alloc.sessions.empty());
        CHECK(alloc.total_throughput() == 0.0);
    }

    SUBCASE("non-clique input names the offending pair") {
        // Direct vertices (0,0) and (0,1) share subcarrier 0 in slot 1.
        const int bad[] = {0, 1};
        CHECK_THROWS_WITH_AS(clique_to_allocation(real, g, bad),
                             doctest::Contains("not a clique"), std::invalid_argument);
    }

    SUBCASE("solver cliques satisfy the exclusivity constraints") {
        const SolveResult sol = solve_exact(g.graph);
        const Allocation alloc = clique_to_allocation(real, g, sol.clique);
        CHECK(!check_allocation(alloc, cfg.num_subcarriers).has_value());
        CHECK(alloc.total_throughput() == doctest::Approx(sol.total_weight).epsilon(1e-12));
    }
}

TEST_CASE("restriction limits labels to pre-assigned candidates") {
    const ScenarioConfig cfg = test::small_scenario(2, 2, 2, 57);
    const ChannelRealization real = test::realize(cfg);
    Restriction restriction(2);
    restriction[0] = {true, ModeTag::TwoWayRelay, -1};
    restriction[1] = {false, ModeTag::DirectDownRelayUp, 1};
    const ConflictGraph g = build_graph(real, &restriction);
    for (int i = 0; i < g.size(); ++i) {
        const VertexLabel& label = g.labels[i];
        if (g.vertices[i].is_direct()) {
            CHECK(label.ms == 0);
        } else {
            CHECK(label.ms == 1);
            CHECK(label.mode.tag == ModeTag::DirectDownRelayUp);
            CHECK(label.mode.relay_up == 1);
        }
    }
}

TEST_CASE("graph export and import round trip") {
    const ScenarioConfig cfg = test::small_scenario(2, 1, 1, 59);
    const ChannelRealization real = test::realize(cfg);
    const ConflictGraph g = build_graph(real);
    std::stringstream file;
    export_graph(g, file);
    const ImportedGraph imported = import_graph(file);
    REQUIRE(imported.graph.size() == g.size());
    for (int v = 0; v < g.size(); ++v)
        CHECK(imported.graph.weights[v] == g.graph.weights[v]);
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < g.size(); ++v)
            CHECK(imported.graph.adj.adjacent(u, v) == g.graph.adj.adjacent(u, v));
    CHECK(test::enumerate_max_clique_weight(imported.graph) ==
          doctest::Approx(test::enumerate_max_clique_weight(g.graph)));
}

TEST_CASE("allocation checker pinpoints slot conflicts") {
    Allocation alloc;
    Session a;
    a.ms = 0;
    a.mode = TransmissionMode::direct();
    a.sc = {3, 0, -1};
    Session b = a;
    b.sc = {3, 1, -1};
    alloc.sessions = {a, b};
    const auto violation = check_allocation(alloc, 4);
    REQUIRE(violation.has_value());
    CHECK(violation->slot == 1);
    CHECK(violation->subcarrier == 3);

    CHECK(!check_allocation(Allocation{}, 4).has_value());

    Allocation inconsistent;
    Session c;
    c.mode = TransmissionMode::direct();
    c.sc = {0, 0, 2};  // slot-3 subcarrier despite mode a
    inconsistent.sessions = {c};
    CHECK(check_allocation(inconsistent, 4).has_value());
}

TEST_CASE("any clique has at most N vertices") {
    const ScenarioConfig cfg = test::small_scenario(2, 2, 2, 61);
    const ChannelRealization real = test::realize(cfg);
    const ConflictGraph g = build_graph(real);
    const SolveResult sol = solve_exact(g.graph);
    CHECK(static_cast<int>(sol.clique.size()) <= cfg.num_subcarriers);
}
