#ifndef RELAYSCHED_BASELINES_HPP
#define RELAYSCHED_BASELINES_HPP

#include <cstdint>
#include <vector>

#include "relaysched/aco.hpp"
#include "relaysched/allocation.hpp"
#include "relaysched/channel.hpp"
#include "relaysched/conflict_graph.hpp"
#include "relaysched/layout.hpp"

namespace relaysched {

// BM1: two-slot TDD without relays. Greedy per-subcarrier assignment to the
// best MS in each direction is optimal; rates carry the 1/2 pre-log.
struct Bm1Result {
    double throughput = 0.0;
    std::vector<int> downlink_ms;  // chosen MS per subcarrier (ties: lowest)
    std::vector<int> uplink_ms;
};
Bm1Result solve_bm1(const ChannelRealization& real);

// BM2: four-sub-slot TDD with one-way relaying; downlink and uplink solved
// as independent clique problems by the ACO solver. Each direction's first
// sub-slot carries source transmissions and its second carries relay
// forwarding, so a direct session sends once at the 1/4 pre-log while a
// relayed session uses n1 in the first sub-slot and n2 in the second with
// the 1/4-pre-log two-hop rate. Without relays this degrades to the BM1
// assignment at half its rate, which is what makes BM1 overtake BM2 once
// direct links are strong.
struct Bm2Result {
    double throughput = 0.0;
    double downlink = 0.0;
    double uplink = 0.0;
};
Bm2Result solve_bm2(const ChannelRealization& real, const AcoParams& aco);

// Distance-based mode pre-assignment of the suboptimal schemes: direct inside
// the relay circle; outside it, two-way relaying via the nearest RS when the
// BS-RS and MS-RS large-scale losses are within the configured band, else
// direct downlink with one-way relayed uplink.
Restriction preassign_modes(const ScenarioConfig& cfg, const NodeLayout& layout,
                            const ChannelRealization& real);

enum class SubcarrierPolicy { Adaptive, Random };

struct SuboptimalResult {
    double throughput = 0.0;
    Allocation allocation;
};
SuboptimalResult solve_suboptimal(const ChannelRealization& real, const ScenarioConfig& cfg,
                                  const NodeLayout& layout, SubcarrierPolicy policy,
                                  const AcoParams& aco, std::uint64_t seed);

}  // namespace relaysched

#endif
