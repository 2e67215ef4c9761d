#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "refnet/experiment.hpp"

using namespace refnet;

namespace {

std::filesystem::path temp_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("refnet_exp_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream is(path);
    REQUIRE(is);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string field;
    while (std::getline(is, field, ',')) out.push_back(field);
    return out;
}

}  // namespace

TEST_CASE("json config round trip with nested sections") {
    const auto dir = temp_dir("config");
    const auto path = dir / "config.json";
    {
        std::ofstream os(path);
        os << R"({
          "seed": 99,
          "replicates": 7,
          "threads": 2,
          "out": "somewhere",
          "strategies": ["linear", "random"],
          "network": {"source": "bpa", "r": 0.31, "rho": 0.62, "n": 123, "seed": 5},
          "sweep": {"r_values": [0.15], "rho_min": 0.1, "rho_max": 0.9, "rho_steps": 5},
          "passive": {"r_values": [0.25], "rho_values": [0.4], "networks": 3, "nodes": 50},
          "validate": {"graphs": 4, "top_degree_thresholds": [3, 9]}
        })";
    }
    const auto c = config_from_json_file(path.string());
    CHECK(c.seed == 99);
    CHECK(c.replicates == 7);
    CHECK(c.threads == 2);
    CHECK(c.out_dir == "somewhere");
    REQUIRE(c.strategies.size() == 2);
    CHECK(c.strategies[0] == StrategyKind::Linear);
    CHECK(c.network.bpa.r == doctest::Approx(0.31));
    CHECK(c.network.bpa.n == 123);
    CHECK(c.sweep_r == std::vector<double>{0.15});
    CHECK(c.rho_steps == 5);
    CHECK(c.passive_rho == std::vector<double>{0.4});
    CHECK(c.networks == 3);
    CHECK(c.validate_graphs == 4);

    CHECK_THROWS(config_from_json_file((dir / "missing.json").string()));
    {
        std::ofstream os(dir / "broken.json");
        os << "{ not json";
    }
    CHECK_THROWS(config_from_json_file((dir / "broken.json").string()));
}

TEST_CASE("replicate streams are reproducible in isolation") {
    Rng a = replicate_stream(12345, 3, 17);
    Rng b = replicate_stream(12345, 3, 17);
    Rng c = replicate_stream(12345, 3, 18);
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
}

TEST_CASE("table mode is byte-identical across runs and annotates hop two") {
    ExperimentConfig config;
    config.network.kind = NetworkSource::Kind::Bpa;
    config.network.bpa.n = 6;
    config.network.bpa.r = 0.3;
    config.network.bpa.rho = 0.8;
    config.network.bpa.seed = 12;
    config.replicates = 25;
    config.seed = 777;
    config.threads = 2;
    config.write_ledgers = true;

    const auto dir1 = temp_dir("table1");
    const auto dir2 = temp_dir("table2");
    config.out_dir = dir1.string();
    const auto out1 = run_table(config);
    CHECK(out1.exit_code == 0);
    config.out_dir = dir2.string();
    run_table(config);

    const auto table1 = slurp(dir1 / "table.csv");
    CHECK(table1 == slurp(dir2 / "table.csv"));
    CHECK(slurp(dir1 / "ledgers.csv") == slurp(dir2 / "ledgers.csv"));

    const auto rows = lines_of(table1);
    REQUIRE(rows.size() > 3);
    CHECK(rows[0].substr(0, 10) == "# dataset=");
    CHECK(rows[1].find("rarefaction_index=") != std::string::npos);
    // hop-2 rows carry an annotation
    int annotated = 0;
    for (const auto& row : rows) {
        const auto fields = split_csv(row);
        if (fields.size() > 8 && fields[2] == "2") {
            CHECK((fields[8] == "alleviates" || fields[8] == "amplifies" ||
                   fields[8] == "unchanged" || fields[8] == "-"));
            if (fields[8] != "-") ++annotated;
        }
    }
    CHECK(annotated > 0);
}

TEST_CASE("sweep csv matches the corollary bound and the rho = 1 column") {
    ExperimentConfig config;
    config.sweep_r = {0.1, 0.3};
    config.rho_min = 0.2;
    config.rho_max = 1.0;
    config.rho_steps = 5;
    const auto dir = temp_dir("sweep");
    config.out_dir = dir.string();
    run_sweep(config);

    const auto rows = lines_of(slurp(dir / "sweep.csv"));
    REQUIRE(rows.size() == 1 + 2 * 5);
    CHECK(rows[0] == "r,rho,one_hop_share,two_hop_share,threshold,margin");
    bool any_threshold_for_small_r = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = split_csv(rows[i]);
        const double r = std::stod(f[0]);
        const double rho = std::stod(f[1]);
        const double one_hop = std::stod(f[2]);
        const double two_hop = std::stod(f[3]);
        CHECK(two_hop <= r + 1e-9);
        if (rho == doctest::Approx(1.0)) {
            CHECK(one_hop == doctest::Approx(r).epsilon(1e-9));
            CHECK(two_hop == doctest::Approx(r).epsilon(1e-9));
        }
        if (r == doctest::Approx(0.1) && f[4] == "1") any_threshold_for_small_r = true;
    }
    CHECK(any_threshold_for_small_r);
}

TEST_CASE("theory grid emits the full coefficient columns") {
    ExperimentConfig config;
    config.sweep_r = {0.2};
    config.rho_min = 0.5;
    config.rho_max = 1.0;
    config.rho_steps = 2;
    const auto dir = temp_dir("grid");
    config.out_dir = dir.string();
    run_theory_grid(config);
    const auto rows = lines_of(slurp(dir / "theory_grid.csv"));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] ==
          "r,rho,alpha_star,beta1,beta2,beta3,beta4,two_hop_share,one_hop_share,threshold,"
          "margin");
    const auto f = split_csv(rows[1]);  // (0.2, 0.5)
    CHECK(std::stod(f[2]) == doctest::Approx(0.163851).epsilon(1e-5));
    CHECK(std::stod(f[4]) == doctest::Approx(0.085922).epsilon(1e-4));
}

TEST_CASE("passive sweep emits per strategy and hop rows") {
    ExperimentConfig config;
    config.passive_r = {0.25};
    config.passive_rho = {0.5};
    config.networks = 6;
    config.network_nodes = 300;
    config.threads = 2;
    const auto dir = temp_dir("passive");
    config.out_dir = dir.string();
    run_passive_sweep(config);
    const auto rows = lines_of(slurp(dir / "passive_sweep.csv"));
    REQUIRE(rows.size() == 1 + 3 * 2);  // three constrained strategies, two hops
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = split_csv(rows[i]);
        REQUIRE(f.size() == 7);
        const double share = std::stod(f[4]);
        CHECK(share >= 0.0);
        CHECK(share <= 1.0);
        CHECK(f[6] == "6");
    }
}

TEST_CASE("validate mode passes on a BPA network and writes the diagnostic") {
    ExperimentConfig config;
    config.network.bpa.r = 0.2;
    config.network.bpa.rho = 0.3;
    config.network.bpa.n = 4000;
    config.validate_graphs = 6;
    config.threads = 2;
    config.top_degree_thresholds = {5, 10};
    const auto dir = temp_dir("validate");
    config.out_dir = dir.string();
    const auto outcome = run_validate(config);
    CHECK(outcome.exit_code == 0);
    const auto rows = lines_of(slurp(dir / "validate.csv"));
    REQUIRE(rows.size() == 5);  // header + four color pairs
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto f = split_csv(rows[i]);
        CHECK(f[0] == "friendship_paradox");
        CHECK(f[6] == "1");
    }
    CHECK(lines_of(slurp(dir / "top_degree.csv")).size() == 3);
    CHECK(std::filesystem::exists(dir / "manifest.json"));
}

TEST_CASE("generate mode writes loadable network files") {
    ExperimentConfig config;
    config.network.bpa.n = 50;
    config.network.bpa.seed = 4;
    const auto dir = temp_dir("generate");
    config.out_dir = dir.string();
    run_generate(config);
    CHECK(std::filesystem::exists(dir / "edges.txt"));
    CHECK(std::filesystem::exists(dir / "labels.csv"));
    const auto alpha = lines_of(slurp(dir / "alpha.csv"));
    CHECK(alpha.size() == 1 + 49);
    CHECK(alpha[0] == "t,alpha");
    CHECK(alpha[1] == "1,0.500000000");

    // Round trip through the loader.
    ExperimentConfig ingest;
    ingest.network.kind = NetworkSource::Kind::Files;
    ingest.network.edge_path = (dir / "edges.txt").string();
    ingest.network.label_path = (dir / "labels.csv").string();
    ingest.network.minority_token = "red";
    const auto dir2 = temp_dir("ingest");
    ingest.out_dir = dir2.string();
    const auto outcome = run_ingest(ingest);
    CHECK(outcome.exit_code == 0);
    const auto rows = lines_of(slurp(dir2 / "network_stats.csv"));
    REQUIRE(rows.size() == 2);
    const auto f = split_csv(rows[1]);
    CHECK(f[1] == "50");  // nodes
    CHECK(f[2] == "49");  // edges
}
