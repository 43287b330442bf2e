#include "relaysched/graph.hpp"

namespace relaysched {

AdjacencyMatrix::AdjacencyMatrix(int num_vertices)
    : num_vertices_(num_vertices),
      words_per_row_((num_vertices + 63) / 64),
      words_(static_cast<std::size_t>(num_vertices) * words_per_row_, 0) {}

void AdjacencyMatrix::set(int u, int v) {
    if (u == v) return;
    words_[static_cast<std::size_t>(u) * words_per_row_ + v / 64] |= 1ULL << (v % 64);
    words_[static_cast<std::size_t>(v) * words_per_row_ + u / 64] |= 1ULL << (u % 64);
}

bool AdjacencyMatrix::adjacent(int u, int v) const {
    return (words_[static_cast<std::size_t>(u) * words_per_row_ + v / 64] >> (v % 64)) & 1ULL;
}

void AdjacencyMatrix::fill_complete() {
    if (num_vertices_ == 0) return;
    std::uint64_t tail = ~0ULL;
    if (num_vertices_ % 64 != 0) tail = (1ULL << (num_vertices_ % 64)) - 1;
    for (int u = 0; u < num_vertices_; ++u) {
        auto r = mutable_row(u);
        for (int w = 0; w < words_per_row_; ++w) r[w] = ~0ULL;
        r[words_per_row_ - 1] = tail;
        r[u / 64] &= ~(1ULL << (u % 64));
    }
}

double WeightedGraph::clique_weight(std::span<const int> members) const {
    double total = 0.0;
    for (int v : members) total += weights[v];
    return total;
}

bool WeightedGraph::is_clique(std::span<const int> members) const {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!adj.adjacent(members[i], members[j])) return false;
    return true;
}

bool WeightedGraph::is_maximal_clique(std::span<const int> members) const {
    if (!is_clique(members)) return false;
    for (int v = 0; v < size(); ++v) {
        bool inside = false;
        bool adjacent_to_all = true;
        for (int m : members) {
            if (m == v) { inside = true; break; }
            if (!adj.adjacent(v, m)) { adjacent_to_all = false; break; }
        }
        if (!inside && adjacent_to_all) return false;
    }
    return true;
}

}  // namespace relaysched
