// refnet command-line harness: generates or ingests networks, runs the
// referral-strategy table experiments, the threshold sweeps and the model
// validation checks, and writes CSV reports plus a run manifest.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "refnet/experiment.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::uint64_t seed = 0;
    int replicates = 0;
    std::string out_dir;
    int threads = -1;
    std::vector<std::string> strategies;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "JSON config file (flags override it)");
    cmd->add_option("--seed", flags.seed, "master seed");
    cmd->add_option("--replicates", flags.replicates, "replicates per strategy");
    cmd->add_option("--out", flags.out_dir, "output directory");
    cmd->add_option("--threads", flags.threads, "worker threads (0 = all cores)");
    cmd->add_option("--strategies", flags.strategies,
                    "subset of random,popularity,acceptance,linear");
}

refnet::ExperimentConfig build_config(const CommonFlags& flags, const CLI::App* cmd) {
    refnet::ExperimentConfig config;
    if (!flags.config_path.empty()) config = refnet::config_from_json_file(flags.config_path);
    if (cmd->count("--seed")) config.seed = flags.seed;
    if (cmd->count("--replicates")) config.replicates = flags.replicates;
    if (cmd->count("--out")) config.out_dir = flags.out_dir;
    if (cmd->count("--threads")) config.threads = flags.threads;
    if (cmd->count("--strategies")) {
        config.strategies.clear();
        for (const auto& name : flags.strategies)
            config.strategies.push_back(refnet::parse_strategy(name));
    }
    return config;
}

struct BpaFlags {
    double r = 0;
    double rho = 0;
    std::uint64_t n = 0;
    std::uint64_t graph_seed = 0;
};

void add_bpa(CLI::App* cmd, BpaFlags& flags) {
    cmd->add_option("--r", flags.r, "minority arrival probability, (0, 0.5)");
    cmd->add_option("--rho", flags.rho, "cross-color acceptance probability, (0, 1]");
    cmd->add_option("--n", flags.n, "node count");
    cmd->add_option("--graph-seed", flags.graph_seed, "seed of the generated network");
}

void apply_bpa(refnet::ExperimentConfig& config, const BpaFlags& flags, const CLI::App* cmd) {
    const bool any = cmd->count("--r") || cmd->count("--rho") || cmd->count("--n") ||
                     cmd->count("--graph-seed");
    if (!any) return;
    config.network.kind = refnet::NetworkSource::Kind::Bpa;
    if (cmd->count("--r")) config.network.bpa.r = flags.r;
    if (cmd->count("--rho")) config.network.bpa.rho = flags.rho;
    if (cmd->count("--n")) config.network.bpa.n = static_cast<std::uint32_t>(flags.n);
    if (cmd->count("--graph-seed")) config.network.bpa.seed = flags.graph_seed;
}

struct FileFlags {
    std::string edges;
    std::string labels;
    std::string minority;
};

void add_files(CLI::App* cmd, FileFlags& flags, bool required) {
    auto* e = cmd->add_option("--edges", flags.edges, "edge list file");
    auto* l = cmd->add_option("--labels", flags.labels, "label CSV file (id,group)");
    cmd->add_option("--minority-label", flags.minority, "group token treated as minority/red");
    if (required) {
        e->required();
        l->required();
    }
}

void apply_files(refnet::ExperimentConfig& config, const FileFlags& flags, const CLI::App* cmd) {
    if (cmd->count("--edges")) {
        config.network.kind = refnet::NetworkSource::Kind::Files;
        config.network.edge_path = flags.edges;
        config.network.label_path = flags.labels;
        if (cmd->count("--minority-label")) config.network.minority_token = flags.minority;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"biased-attachment referral-program experiments"};
    app.require_subcommand(1);

    CommonFlags common;
    BpaFlags bpa;
    FileFlags files;

    auto* generate = app.add_subcommand("generate", "grow a BPA network and write it out");
    add_common(generate, common);
    add_bpa(generate, bpa);

    auto* ingest = app.add_subcommand("ingest", "load an edge list and report group stats");
    add_common(ingest, common);
    add_files(ingest, files, /*required=*/true);

    auto* table = app.add_subcommand("table", "replicated strategy runs on one network");
    add_common(table, common);
    add_bpa(table, bpa);
    add_files(table, files, /*required=*/false);
    bool ledgers = false;
    table->add_flag("--ledgers", ledgers, "also write per-replicate ledgers.csv");

    auto* sweep = app.add_subcommand("sweep", "threshold curves over (r, rho)");
    add_common(sweep, common);

    auto* passive = app.add_subcommand("passive-sweep", "replicated passive-gain curves");
    add_common(passive, common);

    auto* grid = app.add_subcommand("theory-grid", "full fixed-point grid as CSV");
    add_common(grid, common);

    auto* validate = app.add_subcommand("validate", "friendship-paradox and top-degree checks");
    add_common(validate, common);
    add_bpa(validate, bpa);

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* cmd = app.get_subcommands().front();
        refnet::ExperimentConfig config = build_config(common, cmd);
        refnet::RunOutcome outcome;
        if (cmd == generate) {
            apply_bpa(config, bpa, cmd);
            outcome = refnet::run_generate(config);
        } else if (cmd == ingest) {
            apply_files(config, files, cmd);
            outcome = refnet::run_ingest(config);
        } else if (cmd == table) {
            apply_bpa(config, bpa, cmd);
            apply_files(config, files, cmd);
            config.write_ledgers = config.write_ledgers || ledgers;
            outcome = refnet::run_table(config);
        } else if (cmd == sweep) {
            outcome = refnet::run_sweep(config);
        } else if (cmd == passive) {
            outcome = refnet::run_passive_sweep(config);
        } else if (cmd == grid) {
            outcome = refnet::run_theory_grid(config);
        } else if (cmd == validate) {
            apply_bpa(config, bpa, cmd);
            outcome = refnet::run_validate(config);
        }
        for (const auto& f : outcome.outputs) std::cerr << "wrote " << config.out_dir << '/' << f << '\n';
        return outcome.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
