#include "relaysched/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

namespace relaysched {

namespace {

// Depth-first maximum-weight clique search over a weight-descending vertex
// order. When bounding is on, a candidate set is discarded once the current
// weight plus the residual bound (per independence class, the heaviest
// remaining candidate) cannot beat the incumbent.
struct Search {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> adj;    // reordered rows
    std::vector<double> weight;        // reordered
    std::vector<int> color;            // independence class per vertex
    int num_colors = 0;
    bool use_bound = true;

    std::vector<std::uint64_t> color_epoch;
    std::uint64_t epoch = 0;

    std::vector<std::vector<std::uint64_t>> cand_buf;
    std::vector<int> current;
    std::vector<int> best;
    double best_weight = 0.0;

    double residual_bound(const std::uint64_t* cand) {
        ++epoch;
        double bound = 0.0;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                const int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const int c = color[v];
                // Candidates arrive in descending weight, so the first seen
                // member of a class is its heaviest.
                if (color_epoch[c] != epoch) {
                    color_epoch[c] = epoch;
                    bound += weight[v];
                }
            }
        }
        return bound;
    }

    void dfs(int depth, double current_weight) {
        if (current_weight > best_weight) {
            best_weight = current_weight;
            best = current;
        }
        std::uint64_t* cand = cand_buf[depth].data();
        if (use_bound && current_weight + residual_bound(cand) <= best_weight) return;

        double remaining = 0.0;
        if (use_bound)
            for (int w = 0; w < words; ++w) {
                std::uint64_t bits = cand[w];
                while (bits) {
                    remaining += weight[w * 64 + std::countr_zero(bits)];
                    bits &= bits - 1;
                }
            }

        for (int w = 0; w < words; ++w) {
            while (cand[w]) {
                const int v = w * 64 + std::countr_zero(cand[w]);
                cand[w] &= cand[w] - 1;
                if (use_bound) {
                    if (current_weight + remaining <= best_weight) return;
                    remaining -= weight[v];
                }
                std::uint64_t* child = cand_buf[depth + 1].data();
                const std::uint64_t* vrow = &adj[static_cast<std::size_t>(v) * words];
                for (int i = 0; i < words; ++i) child[i] = cand[i] & vrow[i];
                current.push_back(v);
                dfs(depth + 1, current_weight + weight[v]);
                current.pop_back();
            }
        }
    }
};

}  // namespace

SolveResult solve_exact(const WeightedGraph& graph, int vertex_cap) {
    const int n = graph.size();
    if (n > vertex_cap)
        throw GraphSizeError("graph has " + std::to_string(n) + " vertices, exact solver cap is " +
                             std::to_string(vertex_cap));
    SolveResult res;
    if (n == 0) return res;

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return graph.weights[a] > graph.weights[b]; });

    Search s;
    s.n = n;
    s.words = (n + 63) / 64;
    s.use_bound = n > 25;  // tiny graphs: plain exhaustive clique enumeration
    s.weight.resize(n);
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) {
        s.weight[i] = graph.weights[order[i]];
        position[order[i]] = i;
    }
    s.adj.assign(static_cast<std::size_t>(n) * s.words, 0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (graph.adj.adjacent(order[u], order[v])) {
                s.adj[static_cast<std::size_t>(u) * s.words + v / 64] |= 1ULL << (v % 64);
                s.adj[static_cast<std::size_t>(v) * s.words + u / 64] |= 1ULL << (u % 64);
            }

    // Greedy partition into independence classes: each vertex joins the first
    // class with no neighbor of it, in weight order.
    s.color.assign(n, -1);
    std::vector<std::vector<int>> classes;
    for (int v = 0; v < n; ++v) {
        int assigned = -1;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            bool clash = false;
            for (int m : classes[c]) {
                if ((s.adj[static_cast<std::size_t>(v) * s.words + m / 64] >> (m % 64)) & 1ULL) {
                    clash = true;
                    break;
                }
            }
            if (!clash) {
                assigned = static_cast<int>(c);
                break;
            }
        }
        if (assigned < 0) {
            assigned = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        classes[assigned].push_back(v);
        s.color[v] = assigned;
    }
    s.num_colors = static_cast<int>(classes.size());
    s.color_epoch.resize(s.num_colors, 0);

    s.cand_buf.assign(n + 1, std::vector<std::uint64_t>(s.words, 0));
    auto& root = s.cand_buf[0];
    for (int v = 0; v < n; ++v) root[v / 64] |= 1ULL << (v % 64);
    s.dfs(0, 0.0);

    res.total_weight = s.best_weight;
    res.clique.reserve(s.best.size());
    for (int v : s.best) res.clique.push_back(order[v]);
    std::sort(res.clique.begin(), res.clique.end());
    return res;
}

}  // namespace relaysched
