#include "relaysched/allocation.hpp"

#include <sstream>
#include <vector>

namespace relaysched {

double Allocation::total_throughput() const {
    double total = 0.0;
    for (const Session& s : sessions) total += s.rate.sum();
    return total;
}

std::optional<Violation> check_allocation(const Allocation& alloc, int num_subcarriers) {
    std::vector<std::vector<int>> owner(3, std::vector<int>(num_subcarriers, -1));

    for (std::size_t i = 0; i < alloc.sessions.size(); ++i) {
        const Session& s = alloc.sessions[i];
        const bool slot3 = s.mode.uses_slot3();
        if (s.mode.tag == ModeTag::DualRelay && s.mode.relay_down == s.mode.relay_up)
            return Violation{"session " + std::to_string(i + 1) +
                             ": dual-relay mode with identical relays"};
        if (slot3 != (s.sc.n3 >= 0))
            return Violation{"session " + std::to_string(i + 1) +
                             ": slot-3 subcarrier inconsistent with mode"};

        const int used[3] = {s.sc.n1, s.sc.n2, slot3 ? s.sc.n3 : -1};
        for (int slot = 0; slot < 3; ++slot) {
            const int sc = used[slot];
            if (sc < 0) continue;
            if (sc >= num_subcarriers)
                return Violation{"session " + std::to_string(i + 1) + ": subcarrier out of range",
                                 slot + 1, sc};
            if (owner[slot][sc] >= 0) {
                std::ostringstream msg;
                msg << "subcarrier " << sc << " in slot " << slot + 1 << " used by sessions "
                    << owner[slot][sc] + 1 << " and " << i + 1;
                return Violation{msg.str(), slot + 1, sc};
            }
            owner[slot][sc] = static_cast<int>(i);
        }
    }
    return std::nullopt;
}

std::string render_grid(const Allocation& alloc, int num_subcarriers) {
    std::vector<std::vector<std::string>> cell(3, std::vector<std::string>(num_subcarriers, "--"));
    for (std::size_t i = 0; i < alloc.sessions.size(); ++i) {
        const Session& s = alloc.sessions[i];
        const std::string tag = std::to_string(i + 1) + mode_letter(s.mode.tag);
        cell[0][s.sc.n1] = tag;
        cell[1][s.sc.n2] = tag;
        if (s.mode.uses_slot3()) cell[2][s.sc.n3] = tag;
    }

    std::ostringstream out;
    out << "      ";
    for (int n = 0; n < num_subcarriers; ++n) out << " sc" << n + 1 << (n + 1 < 10 ? " " : "");
    out << '\n';
    for (int slot = 0; slot < 3; ++slot) {
        out << "slot " << slot + 1;
        for (int n = 0; n < num_subcarriers; ++n) {
            out << "  " << cell[slot][n];
            if (cell[slot][n].size() < 3) out << ' ';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace relaysched
