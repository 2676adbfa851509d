#include "hgatsp/cli.hpp"

#include "hgatsp/errors.hpp"
#include "hgatsp/experiment.hpp"
#include "hgatsp/synthetic.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>

namespace hgatsp {

namespace {

struct GaFlags {
    std::string crossover = "pmx";
    std::string l1_rule = "first";
    bool no_l1 = false;
    bool no_l2 = false;
};

void add_ga_flags(CLI::App* cmd, GaParams& p, GaFlags& f) {
    cmd->add_option("--generations", p.generations, "Generations per run")->capture_default_str();
    cmd->add_option("--pop-size", p.pop_size, "Population size (even, >= 4)")->capture_default_str();
    cmd->add_option("--pm", p.p_m, "Pairwise swap mutation probability")->capture_default_str();
    cmd->add_option("--pm2", p.p_m2, "Segment reversal selection probability")->capture_default_str();
    cmd->add_option("--crossover", f.crossover, "Crossover operator")
        ->check(CLI::IsMember({"pmx", "ox", "cx"}))
        ->capture_default_str();
    cmd->add_option("--l1-rule", f.l1_rule, "Window pass rule")
        ->check(CLI::IsMember({"first", "best"}))
        ->capture_default_str();
    cmd->add_option("--seed", p.seed, "Base random seed")->capture_default_str();
    cmd->add_flag("--no-l1", f.no_l1, "Disable the 4-city window pass");
    cmd->add_flag("--no-l2", f.no_l2, "Disable the random segment reversal");
}

void apply_flags(GaParams& p, const GaFlags& f) {
    p.crossover = parse_crossover(f.crossover);
    p.window_rule = f.l1_rule == "best" ? WindowRule::BestWindow : WindowRule::FirstImprovement;
    p.l1_enabled = !f.no_l1;
    p.l2_enabled = !f.no_l2;
}

// Writes through `fallback` when path is empty or "-".
template <typename Fn>
void write_to(const std::string& path, std::ostream& fallback, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(fallback);
        return;
    }
    std::ofstream file(path);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    fn(file);
    file.close();
    if (!file) throw IoError("failed writing '" + path + "'");
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hybrid genetic algorithm for the (asymmetric) traveling salesman problem", "hgatsp"};
    app.require_subcommand(1);

    GaParams params;
    GaFlags flags;
    std::string instance_path;

    auto* solve = app.add_subcommand("solve", "Run the GA once and print the best tour");
    solve->add_option("--instance", instance_path, "TSPLIB file ('-' for stdin)")->required();
    add_ga_flags(solve, params, flags);
    Length target = -1;
    solve->add_option("--target-length", target, "Stop once a tour of at most this length is found");

    ExperimentConfig cfg;
    std::string per_run_out;
    auto* compare = app.add_subcommand("compare", "Repeated runs of the conventional GA and the hybrid");
    compare->add_option("--instance", instance_path, "TSPLIB file ('-' for stdin)")->required();
    add_ga_flags(compare, params, flags);
    compare->add_option("--runs", cfg.runs, "Independent runs per variant")->capture_default_str();
    compare->add_option("--out", cfg.output_path, "Convergence CSV path (default stdout)");
    compare->add_option("--per-run-out", per_run_out, "Per-run best-length series CSV");
    compare->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();

    auto* validate = app.add_subcommand("validate", "Parse an instance and report its dimensions");
    validate->add_option("--instance", instance_path, "TSPLIB file ('-' for stdin)")->required();

    std::size_t gen_n = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_kind = "atsp";
    std::string gen_out;
    auto* generate = app.add_subcommand("generate", "Write a random instance in TSPLIB EXPLICIT format");
    generate->add_option("--n", gen_n, "City count")->required()->check(CLI::Range(3, 100000));
    generate->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
    generate->add_option("--kind", gen_kind, "atsp (stretched Euclidean), road (street network) or tsp (Euclidean)")
        ->check(CLI::IsMember({"atsp", "road", "tsp"}))
        ->capture_default_str();
    generate->add_option("--out", gen_out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*solve) {
            apply_flags(params, flags);
            if (target >= 0) params.target_length = target;
            const Instance inst = load_instance(instance_path);
            const RunResult r = run(inst, params);
            out << "best_length: " << *r.final_best.length << '\n'
                << "tour: " << format_tour(r.final_best.order) << '\n';
            err << fmt::format("{}: n={} generations={} wall_time={:.3f}s\n", inst.name, inst.size(),
                               r.stats.size(), r.wall_time);
        } else if (*compare) {
            apply_flags(params, flags);
            cfg.instance_path = instance_path;
            cfg.params = params;
            const ExperimentReport report = run_experiment(cfg);
            write_to(cfg.output_path, out, [&](std::ostream& s) { emit_convergence_csv(report, s); });
            if (!per_run_out.empty()) {
                write_to(per_run_out, out, [&](std::ostream& s) { emit_per_run_csv(report, s); });
            }
            for (const auto& v : report.variants) {
                err << fmt::format("{}: final mean={:.1f} min={} max={} sd={:.1f} wall/run={:.3f}s\n",
                                   v.label, v.final_mean, v.final_min, v.final_max, v.final_stddev,
                                   v.mean_wall_time);
            }
        } else if (*validate) {
            const Instance inst = load_instance(instance_path);
            out << "name: " << inst.name << '\n'
                << "type: " << (inst.kind == InstanceKind::Symmetric ? "TSP" : "ATSP") << '\n'
                << "dimension: " << inst.size() << '\n'
                << "symmetric_weights: " << (inst.weights.is_symmetric() ? "yes" : "no") << '\n';
        } else if (*generate) {
            const Instance inst = gen_kind == "tsp"    ? random_euclidean(gen_n, gen_seed)
                                  : gen_kind == "road" ? random_road_network(gen_n, gen_seed)
                                                       : random_asymmetric(gen_n, gen_seed);
            write_to(gen_out, out, [&](std::ostream& s) { write_explicit(inst, s); });
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace hgatsp
