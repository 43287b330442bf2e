#include "relaysched/aco.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace relaysched {

namespace {

void validate(const AcoParams& p) {
    if (!(p.tau_min > 0.0) || !(p.tau_min < p.tau_max))
        throw std::invalid_argument("need 0 < tau_min < tau_max");
    if (!(p.rho > 0.0 && p.rho < 1.0)) throw std::invalid_argument("rho must lie in (0,1)");
    if (p.num_ants < 1) throw std::invalid_argument("num_ants must be >= 1");
    if (p.max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
}

// Candidate scores and selection share these buffers across ants.
struct ConstructScratch {
    std::vector<int> candidates;
    std::vector<double> scores;
};

void construct_into(const WeightedGraph& graph, std::span<const double> tau, double alpha,
                    double beta, std::mt19937_64& rng, ConstructScratch& scratch,
                    std::vector<int>& clique) {
    clique.clear();
    const int n = graph.size();
    if (n == 0) return;

    std::uniform_int_distribution<int> pick_first(0, n - 1);
    const int first = pick_first(rng);
    clique.push_back(first);

    auto& cand = scratch.candidates;
    cand.clear();
    const auto row = graph.adj.row(first);
    for (int w = 0; w < static_cast<int>(row.size()); ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
            const int v = w * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            cand.push_back(v);
        }
    }

    const bool plain = alpha == 1.0 && beta == 0.0;
    auto& score = scratch.scores;
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    while (!cand.empty()) {
        score.resize(cand.size());
        double total = 0.0;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            const int v = cand[i];
            double s = plain ? tau[v] : std::pow(tau[v], alpha);
            if (beta != 0.0) s *= std::pow(graph.weights[v], beta);
            total += s;
            score[i] = s;
        }
        double draw = unit(rng) * total;
        std::size_t chosen = cand.size() - 1;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            draw -= score[i];
            if (draw < 0.0) { chosen = i; break; }
        }
        const int vi = cand[chosen];
        clique.push_back(vi);

        const auto vrow = graph.adj.row(vi);
        std::size_t keep = 0;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            const int v = cand[i];
            if ((vrow[v / 64] >> (v % 64)) & 1ULL) cand[keep++] = v;
        }
        cand.resize(keep);
    }
    std::sort(clique.begin(), clique.end());
}

}  // namespace

std::vector<int> construct_clique(const WeightedGraph& graph, std::span<const double> tau,
                                  double alpha, double heuristic_beta, std::mt19937_64& rng) {
    ConstructScratch scratch;
    std::vector<int> clique;
    construct_into(graph, tau, alpha, heuristic_beta, rng, scratch, clique);
    return clique;
}

void update_pheromones(std::vector<double>& tau, std::span<const int> best_clique,
                       double best_weight, double iter_weight, const AcoParams& params) {
    if (iter_weight > best_weight)
        throw std::invalid_argument("iteration clique cannot outweigh the best clique");
    const double reward = 1.0 / (1.0 + best_weight - iter_weight);
    for (double& t : tau) t *= params.rho;
    for (int v : best_clique) tau[v] += reward;
    for (double& t : tau) t = std::clamp(t, params.tau_min, params.tau_max);
}

SolveResult solve_aco(const WeightedGraph& graph, const AcoParams& params) {
    validate(params);
    SolveResult res;
    res.min_tau_seen = params.tau_max;
    res.max_tau_seen = params.tau_min;
    if (graph.size() == 0) return res;

    std::vector<double> tau(graph.size(), params.tau_max);
    std::mt19937_64 rng(params.rng_seed);
    ConstructScratch scratch;
    std::vector<int> ant_clique;
    std::vector<int> iter_clique;
    std::vector<int> best_clique;
    double best_weight = 0.0;

    for (int iter = 0; iter < params.max_iterations; ++iter) {
        double iter_weight = -1.0;
        for (int ant = 0; ant < params.num_ants; ++ant) {
            construct_into(graph, tau, params.alpha, params.heuristic_beta, rng, scratch,
                           ant_clique);
            const double w = graph.clique_weight(ant_clique);
            if (w > iter_weight) {
                iter_weight = w;
                iter_clique = ant_clique;
            }
        }
        if (iter_weight > best_weight) {
            best_weight = iter_weight;
            best_clique = iter_clique;
        }
        update_pheromones(tau, best_clique, best_weight, iter_weight, params);
        const auto [lo, hi] = std::minmax_element(tau.begin(), tau.end());
        res.min_tau_seen = std::min(res.min_tau_seen, *lo);
        res.max_tau_seen = std::max(res.max_tau_seen, *hi);
        res.weight_trace.push_back(best_weight);
        res.iterations_used = iter + 1;
        if (params.known_optimum && best_weight >= *params.known_optimum - 1e-12) break;
    }

    res.clique = best_clique;
    res.total_weight = best_weight;
    return res;
}

}  // namespace relaysched
