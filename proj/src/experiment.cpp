#include "hgatsp/experiment.hpp"

#include "hgatsp/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <thread>

namespace hgatsp {

std::vector<Variant> default_variants() {
    return {{"conventional", false, false}, {"hybrid", true, true}};
}

std::vector<std::string> ExperimentConfig::violations() const {
    std::vector<std::string> out = params.violations();
    if (runs < 1) out.push_back("runs must be at least 1");
    if (jobs < 1) out.push_back("jobs must be at least 1");
    if (params.target_length) out.push_back("target length stop is not allowed in experiments");
    if (variants.empty()) out.push_back("at least one variant is required");
    std::set<std::string> seen;
    for (const auto& v : variants) {
        if (v.label.empty()) out.push_back("variant labels must be non-empty");
        if (v.label.find_first_of(",\n\"") != std::string::npos) {
            out.push_back("variant label '" + v.label + "' contains a CSV delimiter");
        }
        if (!seen.insert(v.label).second) out.push_back("duplicate variant label '" + v.label + "'");
    }
    return out;
}

void ExperimentConfig::validate() const {
    const auto v = violations();
    if (v.empty()) return;
    std::string msg = "invalid experiment configuration:";
    for (const auto& s : v) msg += "\n  " + s;
    throw InvalidInput(msg);
}

GaParams variant_params(const GaParams& base, const Variant& v, std::size_t run) {
    GaParams p = base;
    p.l1_enabled = v.l1;
    p.l2_enabled = v.l2;
    p.seed = base.seed + run;
    return p;
}

namespace {

VariantReport aggregate(const Variant& v, std::vector<RunSeries> runs, std::size_t generations) {
    VariantReport r;
    r.label = v.label;
    r.mean_curve.assign(generations, 0.0);
    const auto count = static_cast<double>(runs.size());
    for (std::size_t g = 0; g < generations; ++g) {
        double sum = 0.0;
        for (const auto& run : runs) sum += static_cast<double>(run.best_lengths[g]);
        r.mean_curve[g] = sum / count;
    }
    double sum = 0.0, wall = 0.0;
    r.final_min = runs.front().final_best;
    r.final_max = runs.front().final_best;
    for (const auto& run : runs) {
        sum += static_cast<double>(run.final_best);
        wall += run.wall_time;
        r.final_min = std::min(r.final_min, run.final_best);
        r.final_max = std::max(r.final_max, run.final_best);
    }
    r.final_mean = sum / count;
    r.mean_wall_time = wall / count;
    if (runs.size() > 1) {
        double ss = 0.0;
        for (const auto& run : runs) {
            const double e = static_cast<double>(run.final_best) - r.final_mean;
            ss += e * e;
        }
        r.final_stddev = std::sqrt(ss / (count - 1.0));
    }
    r.runs = std::move(runs);
    return r;
}

} // namespace

ExperimentReport run_experiment(const Instance& inst, const ExperimentConfig& cfg) {
    cfg.validate();
    // Variants may differ only in their local-search flags.
    for (const auto& v : cfg.variants) {
        const GaParams p = variant_params(cfg.params, v, 0);
        if (p.pop_size != cfg.params.pop_size || p.p_m != cfg.params.p_m || p.p_m2 != cfg.params.p_m2 ||
            p.generations != cfg.params.generations || p.crossover != cfg.params.crossover ||
            p.seed != cfg.params.seed || p.window_rule != cfg.params.window_rule) {
            throw InvalidInput("variant '" + v.label + "' changes more than the local-search flags");
        }
    }

    const std::size_t tasks = cfg.variants.size() * cfg.runs;
    std::vector<RunSeries> series(tasks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t task = next++; task < tasks; task = next++) {
            const Variant& v = cfg.variants[task / cfg.runs];
            const GaParams p = variant_params(cfg.params, v, task % cfg.runs);
            RunResult r = run(inst.weights, p);
            RunSeries& s = series[task];
            s.seed = p.seed;
            s.best_lengths.reserve(r.stats.size());
            for (const auto& g : r.stats) s.best_lengths.push_back(g.best_length);
            s.final_best = *r.final_best.length;
            s.wall_time = r.wall_time;
        }
    };
    const std::size_t threads = std::min(cfg.jobs, tasks);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    ExperimentReport report;
    report.generations = cfg.params.generations;
    for (std::size_t vi = 0; vi < cfg.variants.size(); ++vi) {
        std::vector<RunSeries> runs(std::make_move_iterator(series.begin() + vi * cfg.runs),
                                    std::make_move_iterator(series.begin() + (vi + 1) * cfg.runs));
        report.variants.push_back(aggregate(cfg.variants[vi], std::move(runs), report.generations));
    }
    return report;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    return run_experiment(load_instance(cfg.instance_path), cfg);
}

const VariantReport* ExperimentReport::find(std::string_view label) const {
    for (const auto& v : variants) {
        if (v.label == label) return &v;
    }
    return nullptr;
}

void emit_convergence_csv(const ExperimentReport& report, std::ostream& out) {
    std::vector<const VariantReport*> ordered;
    for (const auto& v : report.variants) ordered.push_back(&v);
    std::sort(ordered.begin(), ordered.end(),
              [](const VariantReport* a, const VariantReport* b) { return a->label < b->label; });

    out << "generation,variant,mean_best_length\n";
    for (std::size_t g = 0; g < report.generations; ++g) {
        for (const auto* v : ordered) out << fmt::format("{},{},{}\n", g + 1, v->label, v->mean_curve[g]);
    }
    out.flush();
    if (!out) throw IoError("failed writing convergence CSV");
}

void emit_per_run_csv(const ExperimentReport& report, std::ostream& out) {
    out << "variant,run,seed,generation,best_length\n";
    for (const auto& v : report.variants) {
        for (std::size_t r = 0; r < v.runs.size(); ++r) {
            const auto& run = v.runs[r];
            for (std::size_t g = 0; g < run.best_lengths.size(); ++g) {
                out << fmt::format("{},{},{},{},{}\n", v.label, r, run.seed, g + 1, run.best_lengths[g]);
            }
        }
    }
    out.flush();
    if (!out) throw IoError("failed writing per-run CSV");
}

std::vector<ConvergenceCurve> parse_convergence_csv(std::istream& in) {
    std::vector<ConvergenceCurve> curves;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1) {
            if (line != "generation,variant,mean_best_length") throw ParseError("unexpected CSV header", 1);
            continue;
        }
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) throw ParseError("expected 3 fields", lineno);
        const std::string label = line.substr(c1 + 1, c2 - c1 - 1);
        double value{};
        const char* b = line.data() + c2 + 1;
        const char* e = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(b, e, value);
        if (ec != std::errc() || ptr != e) throw ParseError("bad mean_best_length", lineno);
        auto it = std::find_if(curves.begin(), curves.end(),
                               [&](const ConvergenceCurve& c) { return c.label == label; });
        if (it == curves.end()) {
            curves.push_back({label, {}});
            it = curves.end() - 1;
        }
        it->values.push_back(value);
    }
    return curves;
}

} // namespace hgatsp
