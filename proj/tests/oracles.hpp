// Independent reference implementations used to cross-check the library:
// literal transcriptions of the AF rate expressions, direct enumeration of
// feasible schedules, and plain clique enumeration. These deliberately avoid
// the library's solver and table code paths.
#ifndef RELAYSCHED_TEST_ORACLES_HPP
#define RELAYSCHED_TEST_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "relaysched/channel.hpp"
#include "relaysched/graph.hpp"
#include "relaysched/rates.hpp"
#include "relaysched/scenario.hpp"

namespace relaysched::test {

// Literal evaluation of the one-way AF relay rate (cascade SNR through two
// hops), computed in long double with its own factoring.
double oracle_af_one_way_rate(double snr_hop1, double snr_hop2);

// Literal evaluation of the dual-relay AF rate pair including the amplified
// noise received from the opposite relay.
RatePair oracle_af_dual_rate(double bs_r1, double r1_ms, double ms_r2, double r2_bs,
                             double r2_ms, double r1_bs);

// Literal evaluation of the two-way AF rate pair with the power-split
// scaling coefficients.
RatePair oracle_af_two_way_rate(double bs_rs, double ms_rs, double gain_rs_ms,
                                double gain_rs_bs, double relay_power, double xi);

// Direct maximization over feasible schedules: enumerates every session
// candidate (MS, mode, relays, subcarriers) and searches all per-slot
// conflict-free subsets. Exponential; intended for desk-size instances.
double brute_force_schedule_optimum(const ChannelRealization& real);

// Maximum-weight clique by plain recursive enumeration of all cliques.
double enumerate_max_clique_weight(const WeightedGraph& graph);

// Kolmogorov-Smirnov statistic of samples against a CDF.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

// Small random scenario and graph helpers shared by the test suites.
ScenarioConfig small_scenario(int num_subcarriers, int num_ms, int num_rs, std::uint64_t seed);
ChannelRealization realize(const ScenarioConfig& cfg);
WeightedGraph random_graph(int num_vertices, double edge_prob, std::uint64_t seed);

}  // namespace relaysched::test

#endif
