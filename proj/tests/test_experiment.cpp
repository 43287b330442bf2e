#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "relaysched/experiment.hpp"

using namespace relaysched;

namespace {

ExperimentSpec tiny_spec() {
    ExperimentSpec spec;
    spec.scenario = test::small_scenario(3, 2, 2, 1);
    spec.schemes = {Scheme::Bm1};
    spec.strategies = {RelayStrategy::DfXor};
    spec.sweep_kind = SweepKind::PowerDb;
    spec.sweep_values = {0.0, 10.0};
    spec.num_realizations = 3;
    spec.base_seed = 11;
    spec.aco.max_iterations = 40;
    return spec;
}

}  // namespace

TEST_CASE("row count is sweep x realizations x schemes x strategies") {
    ExperimentSpec spec = tiny_spec();
    spec.schemes = {Scheme::Bm1, Scheme::Proposed};
    spec.strategies = {RelayStrategy::DfXor, RelayStrategy::Af};
    const auto rows = run_experiment(spec);
    CHECK(rows.size() == 2u * 3u * 2u * 2u);
    for (const auto& row : rows) CHECK(row.ok);
}

TEST_CASE("runs are deterministic apart from wall-clock times") {
    ExperimentSpec spec = tiny_spec();
    spec.schemes = {Scheme::Bm1, Scheme::Proposed, Scheme::SuboptRandom};
    spec.num_threads = 2;
    const auto a = run_experiment(spec);
    const auto b = run_experiment(spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].sweep_value == b[i].sweep_value);
        CHECK(a[i].scheme == b[i].scheme);
        CHECK(a[i].seed == b[i].seed);
        CHECK(a[i].throughput == b[i].throughput);
        CHECK(a[i].ok == b[i].ok);
    }
}

TEST_CASE("single-thread and multi-thread runs agree") {
    ExperimentSpec spec = tiny_spec();
    spec.num_threads = 1;
    const auto a = run_experiment(spec);
    spec.num_threads = 2;
    const auto b = run_experiment(spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].throughput == b[i].throughput);
}

TEST_CASE("summary statistics") {
    std::vector<ResultRow> rows;
    ResultRow row;
    row.sweep_value = 5.0;
    row.scheme = Scheme::Bm1;
    row.strategy = RelayStrategy::DfXor;

    SUBCASE("single row has zero standard error") {
        row.throughput = 2.5;
        rows.push_back(row);
        const auto summary = summarize(rows);
        REQUIRE(summary.size() == 1);
        CHECK(summary[0].count == 1);
        CHECK(summary[0].mean == doctest::Approx(2.5));
        CHECK(summary[0].stderr_mean == 0.0);
    }

    SUBCASE("constant rows have zero standard error") {
        for (int i = 0; i < 5; ++i) {
            row.throughput = 1.25;
            rows.push_back(row);
        }
        const auto summary = summarize(rows);
        REQUIRE(summary.size() == 1);
        CHECK(summary[0].count == 5);
        CHECK(summary[0].mean == doctest::Approx(1.25));
        CHECK(summary[0].stderr_mean == doctest::Approx(0.0));
    }

    SUBCASE("mean matches independent recomputation") {
        double total = 0.0;
        for (int i = 0; i < 8; ++i) {
            row.throughput = 0.5 * i;
            total += row.throughput;
            rows.push_back(row);
        }
        const auto summary = summarize(rows);
        REQUIRE(summary.size() == 1);
        CHECK(summary[0].mean == doctest::Approx(total / 8.0));
    }

    SUBCASE("error rows are excluded and groups kept separate") {
        rows.push_back(row);
        ResultRow bad = row;
        bad.ok = false;
        rows.push_back(bad);
        ResultRow other = row;
        other.scheme = Scheme::Proposed;
        rows.push_back(other);
        const auto summary = summarize(rows);
        REQUIRE(summary.size() == 2);
        CHECK(summary[0].count == 1);
        CHECK(summary[1].count == 1);
    }
}

TEST_CASE("CSV writers emit one line per row plus a header") {
    ExperimentSpec spec = tiny_spec();
    const auto rows = run_experiment(spec);
    std::ostringstream out;
    write_rows_csv(rows, out);
    int lines = 0;
    std::istringstream in(out.str());
    std::string line;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == static_cast<int>(rows.size()) + 1);

    std::ostringstream again;
    write_rows_csv(rows, again);
    CHECK(out.str() == again.str());
}

TEST_CASE("toy walkthrough solves the fixed geometry") {
    const ToyResult res = run_toy(5);
    CHECK(res.graph.size() > 0);
    CHECK(static_cast<int>(res.solve.clique.size()) <= 4);
    CHECK(res.graph.graph.is_maximal_clique(res.solve.clique));
    CHECK(!check_allocation(res.allocation, 4).has_value());

    // The rendered grid must place every session exactly where its vertex
    // occupies a subcarrier.
    for (std::size_t i = 0; i < res.allocation.sessions.size(); ++i) {
        const Session& s = res.allocation.sessions[i];
        const std::string tag = std::to_string(i + 1) + mode_letter(s.mode.tag);
        CHECK(res.grid.find(tag) != std::string::npos);
    }
    CHECK(res.grid.find("slot 1") != std::string::npos);
    CHECK(res.grid.find("slot 3") != std::string::npos);

    // Same seed, same result.
    const ToyResult res2 = run_toy(5);
    CHECK(res2.solve.clique == res.solve.clique);
    CHECK(res2.grid == res.grid);
}

TEST_CASE("toy occupancy matches the clique's occupied slots") {
    const ToyResult res = run_toy(9);
    std::set<int> slot1, slot2, slot3;
    for (int id : res.solve.clique) {
        const Vertex& v = res.graph.vertices[id];
        CHECK(slot1.insert(v.n1).second);
        CHECK(slot2.insert(v.n2).second);
        if (!v.is_direct()) CHECK(slot3.insert(v.n3).second);
    }
    for (std::size_t i = 0; i < res.allocation.sessions.size(); ++i) {
        const Session& s = res.allocation.sessions[i];
        CHECK(slot1.count(s.sc.n1) == 1);
        CHECK(slot2.count(s.sc.n2) == 1);
        if (s.mode.uses_slot3()) CHECK(slot3.count(s.sc.n3) == 1);
    }
}

TEST_CASE("relay radius sweep touches the scenario") {
    ExperimentSpec spec = tiny_spec();
    spec.sweep_kind = SweepKind::RelayRadiusRatio;
    spec.sweep_values = {0.2, 0.8};
    spec.schemes = {Scheme::Proposed};
    const auto rows = run_experiment(spec);
    CHECK(rows.size() == 2u * 3u);
    const auto summary = summarize(rows);
    REQUIRE(summary.size() == 2);
    CHECK(summary[0].sweep_value == 0.2);
    CHECK(summary[1].sweep_value == 0.8);
}
