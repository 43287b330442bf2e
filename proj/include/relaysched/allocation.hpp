#ifndef RELAYSCHED_ALLOCATION_HPP
#define RELAYSCHED_ALLOCATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "relaysched/rates.hpp"

namespace relaysched {

struct Session {
    int ms = 0;
    TransmissionMode mode;
    SessionSubcarriers sc;
    RatePair rate;
};

// A conflict-free schedule under the three-slot protocol: a set of sessions
// in which each subcarrier is used at most once per time slot.
struct Allocation {
    std::vector<Session> sessions;
    double total_throughput() const;
};

struct Violation {
    std::string what;
    int slot = -1;        // 1-based; -1 when not slot-related
    int subcarrier = -1;  // 0-based; -1 when not slot-related
};

// Verifies per-slot subcarrier exclusivity and mode/subcarrier consistency.
// Returns the first violation found, or nullopt when the allocation is valid.
std::optional<Violation> check_allocation(const Allocation& alloc, int num_subcarriers);

// Plain-text time-frequency grid: one row per slot, one column per
// subcarrier, each cell showing the owning session and its mode letter.
std::string render_grid(const Allocation& alloc, int num_subcarriers);

}  // namespace relaysched

#endif
