#pragma once

#include "hgatsp/engine.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hgatsp {

struct Variant {
    std::string label;
    bool l1 = true;
    bool l2 = true;
};

/// The baseline GA and the hybrid with both local strategies.
std::vector<Variant> default_variants();

struct ExperimentConfig {
    std::string instance_path;
    std::size_t runs = 30;
    GaParams params;
    std::vector<Variant> variants = default_variants();
    std::string output_path;
    /// Worker threads for independent runs; output does not depend on it.
    std::size_t jobs = 1;

    std::vector<std::string> violations() const;
    void validate() const;
};

/// Base parameters with the variant's local-search flags and the run's seed (base + run).
GaParams variant_params(const GaParams& base, const Variant& v, std::size_t run);

struct RunSeries {
    std::uint64_t seed = 0;
    std::vector<Length> best_lengths;
    Length final_best = 0;
    double wall_time = 0.0;
};

struct VariantReport {
    std::string label;
    /// Mean over runs of the best length after each generation.
    std::vector<double> mean_curve;
    double final_mean = 0.0;
    Length final_min = 0;
    Length final_max = 0;
    /// Sample standard deviation of the final best lengths (0 for a single run).
    double final_stddev = 0.0;
    double mean_wall_time = 0.0;
    std::vector<RunSeries> runs;
};

struct ExperimentReport {
    std::size_t generations = 0;
    std::vector<VariantReport> variants;

    const VariantReport* find(std::string_view label) const;
};

ExperimentReport run_experiment(const ExperimentConfig& cfg);
ExperimentReport run_experiment(const Instance& inst, const ExperimentConfig& cfg);

/// `generation,variant,mean_best_length`, rows ordered by generation then label.
/// Numbers use the shortest text that parses back to the same double.
void emit_convergence_csv(const ExperimentReport& report, std::ostream& out);

/// `variant,run,seed,generation,best_length` for every run of every variant.
void emit_per_run_csv(const ExperimentReport& report, std::ostream& out);

/// One curve per variant, keyed by label, from emit_convergence_csv output.
struct ConvergenceCurve {
    std::string label;
    std::vector<double> values;
};
std::vector<ConvergenceCurve> parse_convergence_csv(std::istream& in);

} // namespace hgatsp
