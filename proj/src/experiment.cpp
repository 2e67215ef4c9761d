#include "refnet/experiment.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "refnet/graph_io.hpp"
#include "refnet/parallel.hpp"
#include "refnet/stats.hpp"
#include "refnet/theory.hpp"

namespace refnet {

namespace {

constexpr const char* kBuildId = "refnet 0.1.0";

std::string format_double(double v, const char* fmt = "%.6f") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

std::string format_share(const std::optional<double>& v) {
    return v ? format_double(*v) : "undefined";
}

class CsvFile {
public:
    CsvFile(const std::filesystem::path& dir, const std::string& name) : name_(name) {
        std::filesystem::create_directories(dir);
        os_.open(dir / name);
        if (!os_) throw std::runtime_error("cannot open output file: " + (dir / name).string());
    }
    std::ofstream& stream() { return os_; }
    const std::string& name() const { return name_; }

private:
    std::ofstream os_;
    std::string name_;
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

nlohmann::json config_echo(const ExperimentConfig& c) {
    nlohmann::json j;
    j["seed"] = c.seed;
    j["replicates"] = c.replicates;
    j["threads"] = c.threads;
    j["out"] = c.out_dir;
    std::vector<std::string> names;
    for (auto s : c.strategies) names.emplace_back(to_string(s));
    j["strategies"] = names;
    nlohmann::json net;
    if (c.network.kind == NetworkSource::Kind::Bpa) {
        net["source"] = "bpa";
        net["r"] = c.network.bpa.r;
        net["rho"] = c.network.bpa.rho;
        net["n"] = c.network.bpa.n;
        net["seed"] = c.network.bpa.seed;
    } else {
        net["source"] = "files";
        net["edges"] = c.network.edge_path;
        net["labels"] = c.network.label_path;
        net["minority_label"] = c.network.minority_token;
    }
    j["network"] = net;
    j["sweep"] = {{"r_values", c.sweep_r},
                  {"rho_min", c.rho_min},
                  {"rho_max", c.rho_max},
                  {"rho_steps", c.rho_steps}};
    j["passive"] = {{"r_values", c.passive_r},
                    {"rho_values", c.passive_rho},
                    {"networks", c.networks},
                    {"nodes", c.network_nodes}};
    j["validate"] = {{"graphs", c.validate_graphs},
                     {"top_degree_thresholds", c.top_degree_thresholds}};
    return j;
}

void write_manifest(const ExperimentConfig& c, const std::string& mode,
                    const std::vector<std::string>& outputs, double wall_seconds) {
    nlohmann::json j;
    j["mode"] = mode;
    j["build"] = kBuildId;
    j["wall_time_seconds"] = wall_seconds;
    j["outputs"] = outputs;
    j["config"] = config_echo(c);
    std::ofstream os(std::filesystem::path(c.out_dir) / "manifest.json");
    os << j.dump(2) << '\n';
}

LoadedGraph acquire_network(const ExperimentConfig& c) {
    if (c.network.kind == NetworkSource::Kind::Bpa) {
        auto result = generate_bpa(c.network.bpa);
        LoadedGraph out;
        out.graph = std::move(result.graph);
        out.report.nodes = out.graph.node_count();
        out.report.edges = out.graph.edge_count();
        return out;
    }
    auto loaded = load_edge_list(c.network.edge_path, c.network.label_path,
                                 c.network.minority_token);
    std::cerr << "loaded " << c.network.edge_path << ": nodes=" << loaded.report.nodes
              << " edges=" << loaded.report.edges
              << " duplicates_dropped=" << loaded.report.duplicates_dropped
              << " self_loops_dropped=" << loaded.report.self_loops_dropped
              << " skipped_unlabeled=" << loaded.report.skipped_unlabeled << '\n';
    return loaded;
}

struct MeanSe {
    double mean = 0;
    double se = 0;
    std::size_t count = 0;
};

MeanSe mean_se(const std::vector<double>& values) {
    MeanSe out;
    out.count = values.size();
    if (values.empty()) return out;
    double sum = 0;
    for (double v : values) sum += v;
    out.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0;
        for (double v : values) ss += (v - out.mean) * (v - out.mean);
        out.se = std::sqrt(ss / static_cast<double>(values.size() - 1)) /
                 std::sqrt(static_cast<double>(values.size()));
    }
    return out;
}

const char* annotate(double hop1_mean, double hop2_mean, double baseline) {
    const double d = std::abs(hop2_mean - baseline) - std::abs(hop1_mean - baseline);
    if (d < 0) return "alleviates";
    if (d > 0) return "amplifies";
    return "unchanged";
}

std::vector<double> rho_grid(const ExperimentConfig& c) {
    std::vector<double> rhos;
    rhos.reserve(static_cast<std::size_t>(c.rho_steps));
    if (c.rho_steps == 1) {
        rhos.push_back(c.rho_max);
        return rhos;
    }
    for (int i = 0; i < c.rho_steps; ++i)
        rhos.push_back(c.rho_min +
                       (c.rho_max - c.rho_min) * static_cast<double>(i) /
                           static_cast<double>(c.rho_steps - 1));
    return rhos;
}

}  // namespace

std::string NetworkSource::id() const {
    if (kind == Kind::Bpa) {
        std::ostringstream os;
        os << "bpa_r" << bpa.r << "_rho" << bpa.rho << "_n" << bpa.n << "_seed" << bpa.seed;
        return os.str();
    }
    return std::filesystem::path(edge_path).stem().string();
}

Rng replicate_stream(std::uint64_t seed, std::size_t slot, std::size_t rep) {
    return Rng::stream(seed, (static_cast<std::uint64_t>(slot) << 40) + rep);
}

ExperimentConfig config_from_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("config parse error in " + path + ": " + e.what());
    }

    ExperimentConfig c;
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("replicates")) c.replicates = j.at("replicates").get<int>();
    if (j.contains("threads")) c.threads = j.at("threads").get<int>();
    if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();
    if (j.contains("write_ledgers")) c.write_ledgers = j.at("write_ledgers").get<bool>();
    if (j.contains("strategies")) {
        c.strategies.clear();
        for (const auto& name : j.at("strategies"))
            c.strategies.push_back(parse_strategy(name.get<std::string>()));
    }
    if (j.contains("network")) {
        const auto& net = j.at("network");
        const std::string source = net.value("source", "bpa");
        if (source == "bpa") {
            c.network.kind = NetworkSource::Kind::Bpa;
            if (net.contains("r")) c.network.bpa.r = net.at("r").get<double>();
            if (net.contains("rho")) c.network.bpa.rho = net.at("rho").get<double>();
            if (net.contains("n")) c.network.bpa.n = net.at("n").get<std::uint32_t>();
            if (net.contains("seed")) c.network.bpa.seed = net.at("seed").get<std::uint64_t>();
        } else if (source == "files") {
            c.network.kind = NetworkSource::Kind::Files;
            c.network.edge_path = net.at("edges").get<std::string>();
            c.network.label_path = net.at("labels").get<std::string>();
            if (net.contains("minority_label"))
                c.network.minority_token = net.at("minority_label").get<std::string>();
        } else {
            throw std::runtime_error("config: unknown network source '" + source + "'");
        }
    }
    if (j.contains("sweep")) {
        const auto& s = j.at("sweep");
        if (s.contains("r_values")) c.sweep_r = s.at("r_values").get<std::vector<double>>();
        if (s.contains("rho_min")) c.rho_min = s.at("rho_min").get<double>();
        if (s.contains("rho_max")) c.rho_max = s.at("rho_max").get<double>();
        if (s.contains("rho_steps")) c.rho_steps = s.at("rho_steps").get<int>();
    }
    if (j.contains("passive")) {
        const auto& p = j.at("passive");
        if (p.contains("r_values")) c.passive_r = p.at("r_values").get<std::vector<double>>();
        if (p.contains("rho_values"))
            c.passive_rho = p.at("rho_values").get<std::vector<double>>();
        if (p.contains("networks")) c.networks = p.at("networks").get<int>();
        if (p.contains("nodes")) c.network_nodes = p.at("nodes").get<std::uint32_t>();
    }
    if (j.contains("validate")) {
        const auto& v = j.at("validate");
        if (v.contains("graphs")) c.validate_graphs = v.at("graphs").get<int>();
        if (v.contains("top_degree_thresholds"))
            c.top_degree_thresholds =
                v.at("top_degree_thresholds").get<std::vector<std::uint64_t>>();
    }
    return c;
}

RunOutcome run_generate(const ExperimentConfig& config) {
    Timer timer;
    auto result = generate_bpa(config.network.bpa);
    const std::filesystem::path dir(config.out_dir);
    std::filesystem::create_directories(dir);

    write_edge_list_file((dir / "edges.txt").string(), result.graph);
    write_labels_file((dir / "labels.csv").string(), result.graph);
    {
        CsvFile alpha(dir, "alpha.csv");
        alpha.stream() << "t,alpha\n";
        for (std::size_t i = 0; i < result.alpha.size(); ++i)
            alpha.stream() << (i + 1) << ',' << format_double(result.alpha[i], "%.9f") << '\n';
    }
    RunOutcome out;
    out.outputs = {"edges.txt", "labels.csv", "alpha.csv"};
    write_manifest(config, "generate", out.outputs, timer.seconds());
    return out;
}

RunOutcome run_ingest(const ExperimentConfig& config) {
    Timer timer;
    if (config.network.kind != NetworkSource::Kind::Files)
        throw std::runtime_error("ingest requires a files network source");
    auto loaded = acquire_network(config);
    const auto stats = group_stats(loaded.graph);

    CsvFile csv(config.out_dir, "network_stats.csv");
    csv.stream() << "dataset,nodes,edges,duplicates_dropped,self_loops_dropped,"
                    "skipped_unlabeled,minority_ratio,cross_edge_fraction,rarefaction_index\n";
    csv.stream() << config.network.id() << ',' << loaded.report.nodes << ','
                 << loaded.report.edges << ',' << loaded.report.duplicates_dropped << ','
                 << loaded.report.self_loops_dropped << ',' << loaded.report.skipped_unlabeled
                 << ',' << format_double(stats.minority_ratio) << ','
                 << format_double(stats.cross_edge_fraction) << ','
                 << format_double(stats.rarefaction_index) << '\n';

    RunOutcome out;
    out.outputs = {csv.name()};
    write_manifest(config, "ingest", out.outputs, timer.seconds());
    return out;
}

RunOutcome run_table(const ExperimentConfig& config) {
    Timer timer;
    if (config.replicates < 1) throw std::runtime_error("table: replicates must be >= 1");
    if (config.strategies.empty()) throw std::runtime_error("table: no strategies configured");

    auto loaded = acquire_network(config);
    const LabeledGraph& g = loaded.graph;
    const auto stats = group_stats(g);
    const auto reps = static_cast<std::size_t>(config.replicates);

    struct ReplicateShares {
        std::array<HopShares, kMaxHop> shares;
        GainLedger ledger;
    };

    CsvFile csv(config.out_dir, "table.csv");
    csv.stream() << "# dataset=" << config.network.id() << '\n'
                 << "# minority_ratio=" << format_double(stats.minority_ratio)
                 << " cross_edge_fraction=" << format_double(stats.cross_edge_fraction)
                 << " rarefaction_index=" << format_double(stats.rarefaction_index) << '\n';
    csv.stream() << "dataset,strategy,hop,kind,share_mean,share_se,pooled_share,"
                    "divergence_flag,annotation,replicates\n";

    std::optional<CsvFile> ledgers;
    if (config.write_ledgers) {
        ledgers.emplace(config.out_dir, "ledgers.csv");
        ledgers->stream() << "strategy,hop,color,active,passive,replicate,seed\n";
    }

    for (std::size_t slot = 0; slot < config.strategies.size(); ++slot) {
        const StrategyKind kind = config.strategies[slot];
        std::vector<ReplicateShares> results(reps);
        parallel_for(reps, config.threads, [&](std::size_t rep) {
            Rng rng = replicate_stream(config.seed, slot, rep);
            const auto attrs = sample_attributes(g, rng);
            const auto ledger = simulate(kind, g, attrs, rng);
            results[rep] = {gain_ratios(ledger), ledger};
        });

        if (ledgers) {
            for (std::size_t rep = 0; rep < reps; ++rep)
                for (int hop = 0; hop < kMaxHop; ++hop)
                    for (int color = 0; color < 2; ++color)
                        ledgers->stream()
                            << to_string(kind) << ',' << (hop + 1) << ','
                            << to_string(static_cast<Color>(color)) << ','
                            << results[rep].ledger.active[hop][color] << ','
                            << results[rep].ledger.passive[hop][color] << ',' << rep << ','
                            << ((static_cast<std::uint64_t>(slot) << 40) + rep) << '\n';
        }

        for (int kind_idx = 0; kind_idx < 2; ++kind_idx) {  // 0 = active, 1 = passive
            std::array<std::vector<double>, kMaxHop> shares;
            std::array<std::uint64_t, kMaxHop> red_total{};
            std::array<std::uint64_t, kMaxHop> all_total{};
            for (const auto& res : results) {
                for (int hop = 0; hop < kMaxHop; ++hop) {
                    const auto& hs = res.shares[hop];
                    const auto share =
                        kind_idx == 0 ? hs.active_red_share : hs.passive_red_share;
                    if (share) shares[hop].push_back(*share);
                    const auto& mat = kind_idx == 0 ? res.ledger.active : res.ledger.passive;
                    red_total[hop] += mat[hop][0];
                    all_total[hop] += mat[hop][0] + mat[hop][1];
                }
            }
            std::array<MeanSe, kMaxHop> agg;
            for (int hop = 0; hop < kMaxHop; ++hop) agg[hop] = mean_se(shares[hop]);
            for (int hop = 0; hop < kMaxHop; ++hop) {
                const bool defined = agg[hop].count > 0;
                const double pooled =
                    all_total[hop] ? static_cast<double>(red_total[hop]) /
                                         static_cast<double>(all_total[hop])
                                   : 0.0;
                const bool diverged =
                    defined && all_total[hop] && std::abs(agg[hop].mean - pooled) > 0.005;
                std::string note = "-";
                if (hop == 1 && defined && agg[0].count > 0)
                    note = annotate(agg[0].mean, agg[1].mean, stats.minority_ratio);
                csv.stream() << config.network.id() << ',' << to_string(kind) << ','
                             << (hop + 1) << ',' << (kind_idx == 0 ? "active" : "passive")
                             << ','
                             << (defined ? format_double(agg[hop].mean) : std::string("undefined"))
                             << ',' << format_double(agg[hop].se, "%.8f") << ','
                             << (all_total[hop] ? format_double(pooled) : std::string("undefined"))
                             << ',' << (diverged ? 1 : 0) << ',' << note << ','
                             << agg[hop].count << '\n';
            }
        }
    }

    RunOutcome out;
    out.outputs = {"table.csv"};
    if (ledgers) out.outputs.push_back("ledgers.csv");
    write_manifest(config, "table", out.outputs, timer.seconds());
    return out;
}

RunOutcome run_sweep(const ExperimentConfig& config) {
    Timer timer;
    CsvFile csv(config.out_dir, "sweep.csv");
    csv.stream() << "r,rho,one_hop_share,two_hop_share,threshold,margin\n";
    for (double r : config.sweep_r) {
        for (double rho : rho_grid(config)) {
            const auto tp = theory_point(r, rho);
            csv.stream() << format_double(r, "%.4f") << ',' << format_double(rho, "%.4f") << ','
                         << format_double(tp.one_hop_share, "%.9f") << ','
                         << format_double(tp.two_hop_share, "%.9f") << ','
                         << (tp.threshold ? 1 : 0) << ',' << format_double(tp.margin, "%.9f")
                         << '\n';
        }
    }
    RunOutcome out;
    out.outputs = {"sweep.csv"};
    write_manifest(config, "sweep", out.outputs, timer.seconds());
    return out;
}

RunOutcome run_theory_grid(const ExperimentConfig& config) {
    Timer timer;
    CsvFile csv(config.out_dir, "theory_grid.csv");
    csv.stream() << "r,rho,alpha_star,beta1,beta2,beta3,beta4,two_hop_share,one_hop_share,"
                    "threshold,margin\n";
    for (double r : config.sweep_r) {
        for (double rho : rho_grid(config)) {
            const auto tp = theory_point(r, rho);
            csv.stream() << format_double(r, "%.4f") << ',' << format_double(rho, "%.4f") << ','
                         << format_double(tp.alpha_star, "%.12f") << ','
                         << format_double(tp.coeffs.b1, "%.12f") << ','
                         << format_double(tp.coeffs.b2, "%.12f") << ','
                         << format_double(tp.coeffs.b3, "%.12f") << ','
                         << format_double(tp.coeffs.b4, "%.12f") << ','
                         << format_double(tp.two_hop_share, "%.12f") << ','
                         << format_double(tp.one_hop_share, "%.12f") << ','
                         << (tp.threshold ? 1 : 0) << ',' << format_double(tp.margin, "%.12f")
                         << '\n';
        }
    }
    RunOutcome out;
    out.outputs = {"theory_grid.csv"};
    write_manifest(config, "theory-grid", out.outputs, timer.seconds());
    return out;
}

RunOutcome run_passive_sweep(const ExperimentConfig& config) {
    Timer timer;
    std::vector<StrategyKind> strategies;
    for (auto s : config.strategies)
        if (s != StrategyKind::Linear) strategies.push_back(s);
    if (strategies.empty()) throw std::runtime_error("passive-sweep: no constrained strategies");

    CsvFile csv(config.out_dir, "passive_sweep.csv");
    csv.stream() << "r,rho,strategy,hop,passive_share_mean,passive_share_se,networks\n";

    const auto nets = static_cast<std::size_t>(config.networks);
    std::size_t grid_slot = 0;
    for (double r : config.passive_r) {
        for (double rho : config.passive_rho) {
            // per (network, strategy, hop) passive share
            const auto cell = [&](std::size_t net, std::size_t s, int hop) {
                return (net * strategies.size() + s) * kMaxHop + static_cast<std::size_t>(hop);
            };
            std::vector<double> all(nets * strategies.size() * kMaxHop);
            parallel_for(nets, config.threads, [&](std::size_t net) {
                Rng rng = replicate_stream(config.seed, 1000 + grid_slot, net);
                BpaParams params;
                params.r = r;
                params.rho = rho;
                params.n = config.network_nodes;
                params.seed = rng.next_u64();
                const auto bpa = generate_bpa(params);
                const auto attrs = sample_attributes(bpa.graph, rng);
                for (std::size_t s = 0; s < strategies.size(); ++s) {
                    const auto ledger = simulate(strategies[s], bpa.graph, attrs, rng);
                    const auto ratios = gain_ratios(ledger);
                    for (int hop = 0; hop < kMaxHop; ++hop)
                        all[cell(net, s, hop)] = ratios[hop].passive_red_share.value_or(
                            std::numeric_limits<double>::quiet_NaN());
                }
            });
            for (std::size_t s = 0; s < strategies.size(); ++s) {
                for (int hop = 0; hop < kMaxHop; ++hop) {
                    std::vector<double> shares;
                    shares.reserve(nets);
                    for (std::size_t net = 0; net < nets; ++net)
                        if (!std::isnan(all[cell(net, s, hop)]))
                            shares.push_back(all[cell(net, s, hop)]);
                    const auto agg = mean_se(shares);
                    csv.stream() << format_double(r, "%.4f") << ',' << format_double(rho, "%.4f")
                                 << ',' << to_string(strategies[s]) << ',' << (hop + 1) << ','
                                 << format_double(agg.mean) << ','
                                 << format_double(agg.se, "%.8f") << ',' << agg.count << '\n';
                }
            }
            ++grid_slot;
        }
    }
    RunOutcome out;
    out.outputs = {"passive_sweep.csv"};
    write_manifest(config, "passive-sweep", out.outputs, timer.seconds());
    return out;
}

RunOutcome run_validate(const ExperimentConfig& config) {
    Timer timer;
    const auto graphs = static_cast<std::size_t>(std::max(config.validate_graphs, 2));

    // Per-graph differences edge_end_mean - node_mean for each ordered pair.
    std::vector<std::array<std::array<double, 2>, 2>> diffs(graphs);
    std::vector<LabeledGraph> first_graph(1);
    parallel_for(graphs, config.threads, [&](std::size_t i) {
        BpaParams params = config.network.bpa;
        params.seed = Rng::stream(config.seed, 2000 + i).next_u64();
        auto bpa = generate_bpa(params);
        const auto st = friendship_paradox_stats(bpa.graph);
        for (int c1 = 0; c1 < 2; ++c1)
            for (int c2 = 0; c2 < 2; ++c2)
                diffs[i][c1][c2] = st.edge_end_mean[c1][c2] - st.node_mean[c2];
        if (i == 0) first_graph[0] = std::move(bpa.graph);
    });

    CsvFile csv(config.out_dir, "validate.csv");
    csv.stream() << "check,c1,c2,diff_mean,diff_se,z,pass\n";
    bool all_pass = true;
    for (int c1 = 0; c1 < 2; ++c1) {
        for (int c2 = 0; c2 < 2; ++c2) {
            std::vector<double> values;
            values.reserve(graphs);
            for (std::size_t i = 0; i < graphs; ++i) values.push_back(diffs[i][c1][c2]);
            const auto agg = mean_se(values);
            const double z = agg.se > 0 ? agg.mean / agg.se : 0.0;
            // One-sided at 3 sigma: edge-endpoint mean degree exceeds the
            // node mean with clear margin.
            const bool pass = agg.se > 0 ? z >= 3.0 : agg.mean >= 0.0;
            all_pass = all_pass && pass;
            csv.stream() << "friendship_paradox," << to_string(static_cast<Color>(c1)) << ','
                         << to_string(static_cast<Color>(c2)) << ','
                         << format_double(agg.mean, "%.4f") << ','
                         << format_double(agg.se, "%.6f") << ',' << format_double(z, "%.2f")
                         << ',' << (pass ? 1 : 0) << '\n';
        }
    }

    CsvFile topk(config.out_dir, "top_degree.csv");
    topk.stream() << "min_degree,red,blue,red_over_blue\n";
    for (const auto& row : top_degree_counts(first_graph[0], config.top_degree_thresholds)) {
        topk.stream() << row.min_degree << ',' << row.red << ',' << row.blue << ','
                      << (row.blue ? format_double(static_cast<double>(row.red) /
                                                       static_cast<double>(row.blue),
                                                   "%.4f")
                                   : std::string("undefined"))
                      << '\n';
    }

    RunOutcome out;
    out.exit_code = all_pass ? 0 : 2;
    out.outputs = {"validate.csv", "top_degree.csv"};
    write_manifest(config, "validate", out.outputs, timer.seconds());
    return out;
}

}  // namespace refnet
