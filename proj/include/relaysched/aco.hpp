#ifndef RELAYSCHED_ACO_HPP
#define RELAYSCHED_ACO_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "relaysched/graph.hpp"

namespace relaysched {

// MAX-MIN ant-system parameters; the defaults are the reference settings.
struct AcoParams {
    double tau_min = 0.01;
    double tau_max = 6.0;
    double alpha = 1.0;   // pheromone exponent
    double rho = 0.99;    // trail persistence per round
    int num_ants = 10;
    int max_iterations = 500;
    std::uint64_t rng_seed = 1;
    // Optional greedy bias: sampling probability gains a weight^beta factor.
    // Off by default; the reference construction rule is pheromone-only.
    double heuristic_beta = 0.0;
    // When set, iteration stops early once this weight is reached (used by
    // tests that know the optimum).
    std::optional<double> known_optimum;
};

struct SolveResult {
    std::vector<int> clique;  // ascending vertex ids
    double total_weight = 0.0;
    int iterations_used = 0;
    std::vector<double> weight_trace;  // best-so-far after each iteration
    // Trail range observed after each update round; stays within
    // [tau_min, tau_max] by construction.
    double min_tau_seen = 0.0;
    double max_tau_seen = 0.0;
};

// Grows a maximal clique: uniformly random first vertex, then repeated draws
// from the common-neighbor candidate set with probability proportional to
// tau^alpha (times weight^beta when enabled).
std::vector<int> construct_clique(const WeightedGraph& graph, std::span<const double> tau,
                                  double alpha, double heuristic_beta, std::mt19937_64& rng);

// Evaporates every trail by rho, rewards members of the best clique with
// 1/(1 + W(best) - W(iter)), then clamps all trails into [tau_min, tau_max].
void update_pheromones(std::vector<double>& tau, std::span<const int> best_clique,
                       double best_weight, double iter_weight, const AcoParams& params);

SolveResult solve_aco(const WeightedGraph& graph, const AcoParams& params);

}  // namespace relaysched

#endif
