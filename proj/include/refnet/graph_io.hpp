#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "refnet/graph.hpp"

namespace refnet {

// Loader diagnostics, reported to the caller and echoed on the diagnostics
// stream by the CLI.
struct LoadReport {
    std::uint64_t nodes = 0;
    std::uint64_t edges = 0;
    std::uint64_t duplicates_dropped = 0;
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t skipped_unlabeled = 0;  // edges with at least one unlabeled endpoint
    std::uint64_t duplicate_labels = 0;   // repeated ids in the label file (first wins)
};

struct LoadedGraph {
    LabeledGraph graph;
    LoadReport report;
};

// Edge file: one edge per line, two integer ids separated by whitespace or a
// comma; lines starting with '#' or '%' are comments. Label file: CSV lines
// "id,group"; nodes whose group equals minority_token become red, all other
// labeled nodes blue. Only labeled nodes enter the graph, in label-file
// order; edges with an unlabeled endpoint are skipped and counted.
// Throws std::runtime_error on unreadable/empty files or malformed ids.
LoadedGraph load_edge_list(const std::string& edge_path, const std::string& label_path,
                           const std::string& minority_token);

void write_edge_list(std::ostream& os, const LabeledGraph& g);
void write_labels(std::ostream& os, const LabeledGraph& g,
                  const std::string& minority_token = "red",
                  const std::string& majority_token = "blue");
void write_edge_list_file(const std::string& path, const LabeledGraph& g);
void write_labels_file(const std::string& path, const LabeledGraph& g,
                       const std::string& minority_token = "red",
                       const std::string& majority_token = "blue");

}  // namespace refnet
