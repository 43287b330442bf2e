// Command-line front end: channel inspection, per-mode rate evaluation,
// single-realization solves, graph export, and the Monte-Carlo sweeps.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relaysched/channel.hpp"
#include "relaysched/conflict_graph.hpp"
#include "relaysched/exact.hpp"
#include "relaysched/experiment.hpp"
#include "relaysched/util.hpp"

using namespace relaysched;

namespace {

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

std::vector<RelayStrategy> parse_strategies(const std::string& csv) {
    std::vector<RelayStrategy> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_relay_strategy(item));
    if (out.empty()) throw std::invalid_argument("no strategies given");
    return out;
}

std::vector<Scheme> parse_schemes(const std::string& csv) {
    std::vector<Scheme> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_scheme(item));
    if (out.empty()) throw std::invalid_argument("no schemes given");
    return out;
}

void print_solve_result(const ConflictGraph& graph, const SolveResult& sol) {
    std::cout << "clique of " << sol.clique.size() << " vertices, total weight "
              << format_double(sol.total_weight) << " bits/s/Hz\n";
    for (int id : sol.clique) {
        const Vertex& v = graph.vertices[id];
        const VertexLabel& label = graph.labels[id];
        std::cout << "  (" << v.n1 + 1 << ',' << v.n2 + 1;
        if (!v.is_direct()) std::cout << ',' << v.n3 + 1;
        std::cout << ") mode " << mode_letter(label.mode.tag) << " ms " << label.ms + 1;
        const auto relays = label.mode.relays();
        if (!relays.empty()) {
            std::cout << " rs ";
            for (std::size_t i = 0; i < relays.size(); ++i)
                std::cout << (i ? "," : "") << relays[i] + 1;
        }
        std::cout << " weight " << format_double(label.weight, 6) << '\n';
    }
}

void write_trace_csv(const SolveResult& sol, std::ostream& out) {
    out << "iteration,best_weight\n";
    for (std::size_t i = 0; i < sol.weight_trace.size(); ++i)
        out << i + 1 << ',' << format_double(sol.weight_trace[i]) << '\n';
}

int run_experiment_command(const ExperimentSpec& spec, const std::string& out_path,
                           const std::string& summary_path) {
    const std::vector<ResultRow> rows = run_experiment(spec);
    if (!out_path.empty()) {
        auto out = open_output(out_path);
        write_rows_csv(rows, out);
    } else {
        write_rows_csv(rows, std::cout);
    }
    const auto summary = summarize(rows);
    if (!summary_path.empty()) {
        auto out = open_output(summary_path);
        write_summary_csv(summary, out);
    } else if (!out_path.empty()) {
        write_summary_csv(summary, std::cout);
    }
    int errors = 0;
    for (const auto& row : rows)
        if (!row.ok) {
            ++errors;
            std::cerr << "error row: scheme " << to_string(row.scheme) << " seed " << row.seed
                      << ": " << row.error << '\n';
        }
    return errors == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relay-assisted bidirectional OFDMA scheduling simulator"};
    app.require_subcommand(1);

    // ---- rates: evaluate one mode from explicit linear SNRs ----
    auto* rates = app.add_subcommand("rates", "evaluate a transmission mode from explicit SNRs");
    std::string mode_name = "a", strategy_name = "df-xor";
    double xi = 0.5, theta = 0.5, relay_power_db = 7.0;
    double g_bm = 0, g_mb = 0, g_mr = 0, g_rb = 0, g_br = 0, g_rm = 0;
    double g_br1 = 0, g_r1m = 0, g_mr2 = 0, g_r2b = 0, g_r2m = 0, g_r1b = 0;
    double gain_rm = 1.0, gain_rb = 1.0;
    rates->add_option("--mode", mode_name, "transmission mode: a, b, c, d or e")->required();
    rates->add_option("--strategy", strategy_name, "af, df-xor or df-sup");
    rates->add_option("--xi", xi);
    rates->add_option("--theta", theta);
    rates->add_option("--relay-power-db", relay_power_db, "relay power for mode e AF");
    rates->add_option("--snr-bm", g_bm, "BS->MS (linear)");
    rates->add_option("--snr-mb", g_mb, "MS->BS (linear)");
    rates->add_option("--snr-mr", g_mr, "MS->RS (linear)");
    rates->add_option("--snr-rb", g_rb, "RS->BS (linear)");
    rates->add_option("--snr-br", g_br, "BS->RS (linear)");
    rates->add_option("--snr-rm", g_rm, "RS->MS (linear)");
    rates->add_option("--snr-br1", g_br1)->description("BS->RS1 (mode d)");
    rates->add_option("--snr-r1m", g_r1m)->description("RS1->MS (mode d)");
    rates->add_option("--snr-mr2", g_mr2)->description("MS->RS2 (mode d)");
    rates->add_option("--snr-r2b", g_r2b)->description("RS2->BS (mode d)");
    rates->add_option("--snr-r2m", g_r2m)->description("RS2->MS (mode d)");
    rates->add_option("--snr-r1b", g_r1b)->description("RS1->BS (mode d)");
    rates->add_option("--gain-rm", gain_rm, "raw |h|^2 RS-MS on slot 3 (mode e AF)");
    rates->add_option("--gain-rb", gain_rb, "raw |h|^2 RS-BS on slot 3 (mode e AF)");

    // ---- shared options for config-driven commands ----
    std::string config_path, graph_path, out_path, summary_path, strategy_csv, scheme_csv;
    std::uint64_t seed = 1;
    int realizations = 200;
    int threads = 0;
    int aco_iterations = 500;
    std::string powers_csv = "0,5,10,15,20";
    std::string ratios_csv = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";

    std::string strategy_override;
    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        auto* opt = cmd->add_option("--config", config_path, "scenario config file");
        if (needs_config) opt->required();
        cmd->add_option("--seed", seed, "base seed");
        cmd->add_option("--out", out_path, "output CSV path (default: stdout)");
        cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
        cmd->add_option("--aco-iterations", aco_iterations, "ACO iteration budget");
        cmd->add_option("--strategy", strategy_override,
                        "override the config relay strategy: af, df-xor or df-sup");
    };
    auto add_sweep_common = [&](CLI::App* cmd) {
        add_common(cmd, true);
        cmd->add_option("--summary", summary_path, "summary CSV path");
        cmd->add_option("--realizations", realizations, "channel realizations per point");
        cmd->add_option("--strategies", strategy_csv, "comma list: af,df-xor,df-sup");
        cmd->add_option("--schemes", scheme_csv,
                        "comma list: proposed,bm1,bm2,subopt-adaptive,subopt-random");
    };

    auto* toy = app.add_subcommand("toy", "solve the fixed four-subcarrier walkthrough");
    toy->add_option("--seed", seed, "channel seed");

    auto* solve = app.add_subcommand("solve", "solve one realization or an exported graph file");
    add_common(solve, false);
    solve->add_option("--graph", graph_path, "exported graph file (instead of --config)");
    bool solve_exact_flag = false;
    solve->add_flag("--exact", solve_exact_flag, "use the exact branch-and-bound solver");

    auto* run = app.add_subcommand("run", "evaluate schemes over seeded realizations");
    add_sweep_common(run);

    auto* sweep_power = app.add_subcommand("sweep-power", "sweep the BS per-subcarrier power");
    add_sweep_common(sweep_power);
    sweep_power->add_option("--powers", powers_csv, "comma list of BS powers in dB");

    auto* sweep_radius =
        app.add_subcommand("sweep-relay-radius", "sweep the relay circle radius ratio");
    add_sweep_common(sweep_radius);
    sweep_radius->add_option("--ratios", ratios_csv, "comma list of radius ratios in [0,1]");

    auto* export_cmd = app.add_subcommand("export-graph", "write the conflict graph to a file");
    add_common(export_cmd, true);

    auto* dump = app.add_subcommand("dump-channel", "dump layout and channel gains as CSV");
    add_common(dump, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (rates->parsed()) {
            const RelayStrategy strategy = parse_relay_strategy(strategy_name);
            RatePair pair;
            if (mode_name == "a") pair = rate_direct_both(g_bm, g_mb);
            else if (mode_name == "b")
                pair = rate_direct_down_relay_up(g_bm, g_mr, g_rb, strategy);
            else if (mode_name == "c")
                pair = rate_relay_down_direct_up(g_br, g_rm, g_mb, strategy);
            else if (mode_name == "d")
                pair = rate_dual_relay({g_br1, g_r1m, g_mr2, g_r2b, g_r2m, g_r1b}, strategy);
            else if (mode_name == "e")
                pair = rate_two_way(
                    {g_br, g_mr, g_rb, g_rm, gain_rm, gain_rb, db_to_linear(relay_power_db)},
                    strategy, xi, theta);
            else throw std::invalid_argument("unknown mode: " + mode_name);
            std::cout << "rate_down," << format_double(pair.down, 12) << "\n"
                      << "rate_up," << format_double(pair.up, 12) << "\n";
            return 0;
        }

        if (toy->parsed()) {
            const ToyResult res = run_toy(seed);
            print_solve_result(res.graph, res.solve);
            std::cout << res.grid;
            return 0;
        }

        auto load_config = [&] {
            ScenarioConfig cfg = ScenarioConfig::from_file(config_path);
            if (!strategy_override.empty())
                cfg.relay_strategy = parse_relay_strategy(strategy_override);
            return cfg;
        };
        auto load_realization = [&](const ScenarioConfig& cfg) {
            std::mt19937_64 layout_rng(derive_seed(seed, 1));
            NodeLayout layout = generate_layout(cfg, layout_rng);
            std::mt19937_64 channel_rng(derive_seed(seed, 2));
            ChannelRealization real = ChannelRealization::generate(cfg, layout, channel_rng);
            return std::pair{std::move(layout), std::move(real)};
        };

        if (solve->parsed()) {
            AcoParams aco;
            aco.max_iterations = aco_iterations;
            aco.rng_seed = derive_seed(seed, 3);
            if (!graph_path.empty()) {
                std::ifstream in(graph_path);
                if (!in) throw std::runtime_error("cannot open graph file: " + graph_path);
                const ImportedGraph g = import_graph(in);
                const SolveResult sol =
                    solve_exact_flag ? solve_exact(g.graph, g.graph.size()) : solve_aco(g.graph, aco);
                std::cout << "clique of " << sol.clique.size() << " vertices, total weight "
                          << format_double(sol.total_weight) << "\n";
                for (int id : sol.clique)
                    std::cout << "  vertex " << id << ": " << g.label_text[id] << '\n';
                if (!out_path.empty()) {
                    auto out = open_output(out_path);
                    write_trace_csv(sol, out);
                }
                return 0;
            }
            if (config_path.empty())
                throw std::invalid_argument("solve needs --config or --graph");
            const ScenarioConfig cfg = load_config();
            const auto [layout, real] = load_realization(cfg);
            const ConflictGraph graph = build_graph(real);
            const SolveResult sol = solve_exact_flag
                                        ? solve_exact(graph.graph, cfg.exact_vertex_cap)
                                        : solve_aco(graph.graph, aco);
            print_solve_result(graph, sol);
            const Allocation alloc = clique_to_allocation(real, graph, sol.clique);
            std::cout << render_grid(alloc, cfg.num_subcarriers);
            if (!out_path.empty()) {
                auto out = open_output(out_path);
                write_trace_csv(sol, out);
            }
            return 0;
        }

        if (export_cmd->parsed()) {
            const ScenarioConfig cfg = load_config();
            const auto [layout, real] = load_realization(cfg);
            const ConflictGraph graph = build_graph(real);
            if (!out_path.empty()) {
                auto out = open_output(out_path);
                export_graph(graph, out);
            } else {
                export_graph(graph, std::cout);
            }
            return 0;
        }

        if (dump->parsed()) {
            const ScenarioConfig cfg = load_config();
            const auto [layout, real] = load_realization(cfg);
            if (!out_path.empty()) {
                auto out = open_output(out_path);
                dump_layout_csv(layout, out);
                real.dump_csv(out);
            } else {
                dump_layout_csv(layout, std::cout);
                real.dump_csv(std::cout);
            }
            return 0;
        }

        // run / sweep-power / sweep-relay-radius
        ExperimentSpec spec;
        spec.scenario = ScenarioConfig::from_file(config_path);
        spec.base_seed = seed;
        spec.num_realizations = realizations;
        spec.num_threads = threads;
        spec.aco.max_iterations = aco_iterations;
        if (!strategy_csv.empty()) spec.strategies = parse_strategies(strategy_csv);
        else if (!strategy_override.empty())
            spec.strategies = {parse_relay_strategy(strategy_override)};
        else spec.strategies = {spec.scenario.relay_strategy};
        if (!scheme_csv.empty()) spec.schemes = parse_schemes(scheme_csv);

        auto parse_values = [](const std::string& csv) {
            std::vector<double> out;
            std::stringstream ss(csv);
            std::string item;
            while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
            return out;
        };
        if (run->parsed()) {
            spec.sweep_kind = SweepKind::None;
        } else if (sweep_power->parsed()) {
            spec.sweep_kind = SweepKind::PowerDb;
            spec.sweep_values = parse_values(powers_csv);
        } else {
            spec.sweep_kind = SweepKind::RelayRadiusRatio;
            spec.sweep_values = parse_values(ratios_csv);
        }
        return run_experiment_command(spec, out_path, summary_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
