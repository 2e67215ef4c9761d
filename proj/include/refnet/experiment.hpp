#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "refnet/bpa.hpp"
#include "refnet/referral.hpp"

namespace refnet {

struct NetworkSource {
    enum class Kind { Bpa, Files };
    Kind kind = Kind::Bpa;
    BpaParams bpa;
    std::string edge_path;
    std::string label_path;
    std::string minority_token = "red";

    std::string id() const;
};

// One configuration drives every mode; modes ignore the fields they do not
// use. Values come from an optional JSON config file, overridden by CLI
// flags (flags win).
struct ExperimentConfig {
    NetworkSource network;
    std::vector<StrategyKind> strategies = {StrategyKind::Random, StrategyKind::PopularityDriven,
                                            StrategyKind::AcceptanceDriven, StrategyKind::Linear};
    int replicates = 100;
    std::uint64_t seed = 1;
    int threads = 0;  // 0 = all hardware threads
    std::string out_dir = "out";
    bool write_ledgers = false;

    // sweep / theory-grid modes
    std::vector<double> sweep_r = {0.1, 0.2, 0.3, 0.4};
    double rho_min = 0.05;
    double rho_max = 1.0;
    int rho_steps = 20;

    // passive-sweep mode
    std::vector<double> passive_r = {0.2};
    std::vector<double> passive_rho = {0.2, 0.5, 0.8};
    int networks = 100;
    std::uint32_t network_nodes = 10000;

    // validate mode
    int validate_graphs = 12;
    std::vector<std::uint64_t> top_degree_thresholds = {5, 10, 20, 50};
};

// Reads a JSON config document and overlays it on defaults.
ExperimentConfig config_from_json_file(const std::string& path);

// Replicate fan-out: the RNG stream for replicate `rep` of strategy slot
// `slot` under master seed `seed`, reproducible in isolation.
Rng replicate_stream(std::uint64_t seed, std::size_t slot, std::size_t rep);

struct RunOutcome {
    int exit_code = 0;
    std::vector<std::string> outputs;  // files written, relative to out_dir
};

RunOutcome run_generate(const ExperimentConfig& config);
RunOutcome run_ingest(const ExperimentConfig& config);
RunOutcome run_table(const ExperimentConfig& config);
RunOutcome run_sweep(const ExperimentConfig& config);
RunOutcome run_passive_sweep(const ExperimentConfig& config);
RunOutcome run_theory_grid(const ExperimentConfig& config);
RunOutcome run_validate(const ExperimentConfig& config);

}  // namespace refnet
