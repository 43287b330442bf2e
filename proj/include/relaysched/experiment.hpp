#ifndef RELAYSCHED_EXPERIMENT_HPP
#define RELAYSCHED_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "relaysched/aco.hpp"
#include "relaysched/allocation.hpp"
#include "relaysched/baselines.hpp"
#include "relaysched/conflict_graph.hpp"
#include "relaysched/scenario.hpp"

namespace relaysched {

enum class Scheme { Proposed, Bm1, Bm2, SuboptAdaptive, SuboptRandom };

const char* to_string(Scheme s);
Scheme parse_scheme(const std::string& s);

enum class SweepKind { None, PowerDb, RelayRadiusRatio };

struct ExperimentSpec {
    ScenarioConfig scenario;
    std::vector<Scheme> schemes{Scheme::Proposed, Scheme::Bm1, Scheme::Bm2};
    std::vector<RelayStrategy> strategies{RelayStrategy::DfXor};
    SweepKind sweep_kind = SweepKind::None;
    std::vector<double> sweep_values;  // one entry per swept point; unused for None
    int num_realizations = 200;
    std::uint64_t base_seed = 1;
    int num_threads = 0;  // 0 = hardware concurrency
    AcoParams aco;
};

struct ResultRow {
    double sweep_value = 0.0;
    Scheme scheme = Scheme::Proposed;
    RelayStrategy strategy = RelayStrategy::DfXor;
    std::uint64_t seed = 0;
    double throughput = 0.0;  // bits/s/Hz summed over subcarriers
    double solve_time_s = 0.0;
    bool ok = true;
    std::string error;
};

// Runs |sweep| x num_realizations x |schemes| x |strategies| evaluations.
// Every scheme and strategy at one (sweep value, realization) sees the
// identical layout and channel draw; realizations run in parallel with
// derived seeds and rows come back in deterministic order. Solver failures
// become error rows; the run continues.
std::vector<ResultRow> run_experiment(const ExperimentSpec& spec);

struct SummaryRow {
    double sweep_value = 0.0;
    Scheme scheme = Scheme::Proposed;
    RelayStrategy strategy = RelayStrategy::DfXor;
    int count = 0;
    double mean = 0.0;
    double stderr_mean = 0.0;
};

// Mean and standard error of throughput per (sweep value, scheme, strategy),
// error rows excluded; empty groups omitted.
std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows);

void write_rows_csv(const std::vector<ResultRow>& rows, std::ostream& out);
void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out);

struct ToyResult {
    ConflictGraph graph;
    SolveResult solve;
    Allocation allocation;
    std::string grid;
};

// The fixed-geometry walkthrough: builds the toy scenario, solves it with the
// default ACO settings and renders the slot-by-subcarrier occupancy grid.
ToyResult run_toy(std::uint64_t seed);

}  // namespace relaysched

#endif
