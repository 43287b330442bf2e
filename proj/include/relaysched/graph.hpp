#ifndef RELAYSCHED_GRAPH_HPP
#define RELAYSCHED_GRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace relaysched {

// Dense symmetric adjacency bitset. Row access is exposed as raw words so
// solvers can intersect candidate sets with bitwise ANDs.
class AdjacencyMatrix {
public:
    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(int num_vertices);

    int size() const { return num_vertices_; }
    int words_per_row() const { return words_per_row_; }

    void set(int u, int v);  // symmetric; ignores u == v
    bool adjacent(int u, int v) const;

    // Complete graph minus self-loops; builders then clear conflicting pairs.
    void fill_complete();

    std::span<const std::uint64_t> row(int u) const {
        return {words_.data() + static_cast<std::size_t>(u) * words_per_row_,
                static_cast<std::size_t>(words_per_row_)};
    }

    // For bulk construction; callers are responsible for keeping the
    // relation symmetric and irreflexive.
    std::span<std::uint64_t> mutable_row(int u) {
        return {words_.data() + static_cast<std::size_t>(u) * words_per_row_,
                static_cast<std::size_t>(words_per_row_)};
    }

private:
    int num_vertices_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> words_;
};

struct WeightedGraph {
    std::vector<double> weights;
    AdjacencyMatrix adj;

    int size() const { return static_cast<int>(weights.size()); }
    double clique_weight(std::span<const int> members) const;
    bool is_clique(std::span<const int> members) const;
    // True when no vertex outside the set is adjacent to all members.
    bool is_maximal_clique(std::span<const int> members) const;
};

}  // namespace relaysched

#endif
