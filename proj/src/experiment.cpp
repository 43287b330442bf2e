#include "relaysched/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "relaysched/channel.hpp"
#include "relaysched/exact.hpp"
#include "relaysched/layout.hpp"
#include "relaysched/util.hpp"

namespace relaysched {

const char* to_string(Scheme s) {
    switch (s) {
        case Scheme::Proposed: return "proposed";
        case Scheme::Bm1: return "bm1";
        case Scheme::Bm2: return "bm2";
        case Scheme::SuboptAdaptive: return "subopt-adaptive";
        case Scheme::SuboptRandom: return "subopt-random";
    }
    return "?";
}

Scheme parse_scheme(const std::string& s) {
    if (s == "proposed") return Scheme::Proposed;
    if (s == "bm1") return Scheme::Bm1;
    if (s == "bm2") return Scheme::Bm2;
    if (s == "subopt-adaptive") return Scheme::SuboptAdaptive;
    if (s == "subopt-random") return Scheme::SuboptRandom;
    throw std::invalid_argument("unknown scheme: " + s);
}

namespace {

ScenarioConfig apply_sweep(const ScenarioConfig& base, SweepKind kind, double value) {
    ScenarioConfig cfg = base;
    switch (kind) {
        case SweepKind::None:
            break;
        case SweepKind::PowerDb:
            // RS and MS powers follow the BS power with the fixed offsets.
            cfg.set_bs_power_db(value);
            break;
        case SweepKind::RelayRadiusRatio:
            cfg.rs_circle_ratio = value;
            break;
    }
    return cfg;
}

double evaluate_scheme(Scheme scheme, const ScenarioConfig& cfg, const NodeLayout& layout,
                       const ChannelRealization& real, const AcoParams& base_aco,
                       std::uint64_t solver_seed) {
    AcoParams aco = base_aco;
    aco.rng_seed = solver_seed;
    switch (scheme) {
        case Scheme::Proposed: {
            const ConflictGraph graph = build_graph(real);
            return solve_aco(graph.graph, aco).total_weight;
        }
        case Scheme::Bm1:
            return solve_bm1(real).throughput;
        case Scheme::Bm2:
            return solve_bm2(real, aco).throughput;
        case Scheme::SuboptAdaptive:
            return solve_suboptimal(real, cfg, layout, SubcarrierPolicy::Adaptive, aco,
                                    solver_seed)
                .throughput;
        case Scheme::SuboptRandom:
            return solve_suboptimal(real, cfg, layout, SubcarrierPolicy::Random, aco, solver_seed)
                .throughput;
    }
    throw std::invalid_argument("unknown scheme");
}

}  // namespace

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec) {
    spec.scenario.validate();
    if (spec.num_realizations < 1) throw std::invalid_argument("num_realizations must be >= 1");
    if (spec.schemes.empty() || spec.strategies.empty())
        throw std::invalid_argument("schemes and strategies must be non-empty");
    std::vector<double> sweep = spec.sweep_values;
    if (spec.sweep_kind == SweepKind::None) {
        sweep = {spec.scenario.power_bs_db};
    } else if (sweep.empty()) {
        throw std::invalid_argument("sweep value list must be non-empty");
    }

    const int n_schemes = static_cast<int>(spec.schemes.size());
    const int n_strategies = static_cast<int>(spec.strategies.size());
    const int rows_per_task = n_schemes * n_strategies;
    const int num_tasks = static_cast<int>(sweep.size()) * spec.num_realizations;
    std::vector<ResultRow> rows(static_cast<std::size_t>(num_tasks) * rows_per_task);

    auto run_task = [&](int task) {
        const int sweep_idx = task / spec.num_realizations;
        const int realization = task % spec.num_realizations;
        const double sweep_value = sweep[sweep_idx];
        const ScenarioConfig cfg = apply_sweep(spec.scenario, spec.sweep_kind, sweep_value);
        const std::uint64_t real_seed = derive_seed(spec.base_seed, sweep_idx, realization);

        std::mt19937_64 layout_rng(derive_seed(real_seed, 1));
        NodeLayout layout;
        std::string setup_error;
        try {
            layout = generate_layout(cfg, layout_rng);
        } catch (const std::exception& e) {
            setup_error = e.what();
        }

        for (int st = 0; st < n_strategies; ++st) {
            ScenarioConfig cfg_strategy = cfg;
            cfg_strategy.relay_strategy = spec.strategies[st];
            // The channel draw depends only on the seed, never the strategy,
            // so every scheme and strategy sees the identical realization.
            ChannelRealization real;
            std::string error = setup_error;
            if (error.empty()) {
                std::mt19937_64 channel_rng(derive_seed(real_seed, 2));
                try {
                    real = ChannelRealization::generate(cfg_strategy, layout, channel_rng);
                } catch (const std::exception& e) {
                    error = e.what();
                }
            }
            for (int sc = 0; sc < n_schemes; ++sc) {
                ResultRow& row =
                    rows[(static_cast<std::size_t>(task) * n_schemes + sc) * n_strategies + st];
                row.sweep_value = sweep_value;
                row.scheme = spec.schemes[sc];
                row.strategy = spec.strategies[st];
                row.seed = real_seed;
                if (!error.empty()) {
                    row.ok = false;
                    row.error = error;
                    continue;
                }
                const auto start = std::chrono::steady_clock::now();
                try {
                    row.throughput =
                        evaluate_scheme(spec.schemes[sc], cfg_strategy, layout, real, spec.aco,
                                        derive_seed(real_seed, 100 + sc, st));
                } catch (const std::exception& e) {
                    row.ok = false;
                    row.error = e.what();
                }
                row.solve_time_s =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
            }
        }
    };

    int threads = spec.num_threads > 0 ? spec.num_threads
                                       : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, num_tasks));
    if (threads == 1) {
        for (int t = 0; t < num_tasks; ++t) run_task(t);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i)
            pool.emplace_back([&] {
                for (int t = next.fetch_add(1); t < num_tasks; t = next.fetch_add(1)) run_task(t);
            });
        for (auto& th : pool) th.join();
    }
    return rows;
}

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows) {
    struct Accum {
        SummaryRow out;
        double m2 = 0.0;
    };
    std::vector<Accum> groups;
    for (const ResultRow& row : rows) {
        if (!row.ok) continue;
        Accum* acc = nullptr;
        for (Accum& g : groups)
            if (g.out.sweep_value == row.sweep_value && g.out.scheme == row.scheme &&
                g.out.strategy == row.strategy) {
                acc = &g;
                break;
            }
        if (!acc) {
            groups.push_back({});
            acc = &groups.back();
            acc->out.sweep_value = row.sweep_value;
            acc->out.scheme = row.scheme;
            acc->out.strategy = row.strategy;
        }
        // Welford running mean/variance.
        acc->out.count += 1;
        const double delta = row.throughput - acc->out.mean;
        acc->out.mean += delta / acc->out.count;
        acc->m2 += delta * (row.throughput - acc->out.mean);
    }
    std::vector<SummaryRow> out;
    out.reserve(groups.size());
    for (const Accum& g : groups) {
        SummaryRow row = g.out;
        row.stderr_mean =
            row.count > 1 ? std::sqrt(g.m2 / (row.count - 1) / row.count) : 0.0;
        out.push_back(row);
    }
    return out;
}

void write_rows_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
    out << "sweep_value,scheme,strategy,seed,throughput_bps_hz,solve_time_s,ok,error\n";
    for (const ResultRow& r : rows) {
        out << format_double(r.sweep_value) << ',' << to_string(r.scheme) << ','
            << to_string(r.strategy) << ',' << r.seed << ',' << format_double(r.throughput)
            << ',' << format_double(r.solve_time_s, 4) << ',' << (r.ok ? 1 : 0) << ','
            << r.error << '\n';
    }
}

void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
    out << "sweep_value,scheme,strategy,num_realizations,mean_throughput,stderr_throughput\n";
    for (const SummaryRow& r : rows) {
        out << format_double(r.sweep_value) << ',' << to_string(r.scheme) << ','
            << to_string(r.strategy) << ',' << r.count << ',' << format_double(r.mean) << ','
            << format_double(r.stderr_mean) << '\n';
    }
}

ToyResult run_toy(std::uint64_t seed) {
    const ScenarioConfig cfg = ScenarioConfig::toy_example();
    std::mt19937_64 layout_rng(derive_seed(seed, 1));
    const NodeLayout layout = generate_layout(cfg, layout_rng);
    std::mt19937_64 channel_rng(derive_seed(seed, 2));
    const ChannelRealization real = ChannelRealization::generate(cfg, layout, channel_rng);

    ToyResult res;
    res.graph = build_graph(real);
    AcoParams aco;
    aco.rng_seed = derive_seed(seed, 3);
    res.solve = solve_aco(res.graph.graph, aco);
    res.allocation = clique_to_allocation(real, res.graph, res.solve.clique);
    res.grid = render_grid(res.allocation, cfg.num_subcarriers);
    return res;
}

}  // namespace relaysched
