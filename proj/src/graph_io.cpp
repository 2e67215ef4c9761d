#include "refnet/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace refnet {

namespace {

bool is_comment_or_blank(std::string_view line) {
    for (char ch : line) {
        if (ch == ' ' || ch == '\t' || ch == '\r') continue;
        return ch == '#' || ch == '%';
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_id(std::string_view token, const std::string& path, std::size_t lineno) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": node id overflows 64 bits");
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed node id '" +
                                 std::string(token) + "'");
    return value;
}

// Splits on the first run of separators (whitespace or comma).
bool split_pair(std::string_view line, std::string_view& a, std::string_view& b) {
    const auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ','; };
    std::size_t i = 0;
    while (i < line.size() && is_sep(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_sep(line[j])) ++j;
    if (i == j) return false;
    a = line.substr(i, j - i);
    std::size_t k = j;
    while (k < line.size() && is_sep(line[k])) ++k;
    std::size_t l = k;
    while (l < line.size() && !is_sep(line[l])) ++l;
    if (k == l) return false;
    b = trim(line.substr(k, l - k));
    return !b.empty();
}

}  // namespace

LoadedGraph load_edge_list(const std::string& edge_path, const std::string& label_path,
                           const std::string& minority_token) {
    std::ifstream labels(label_path);
    if (!labels) throw std::runtime_error("cannot open label file: " + label_path);

    LoadedGraph out;
    std::unordered_map<std::uint64_t, NodeId> id_map;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(labels, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error(label_path + ":" + std::to_string(lineno) +
                                     ": expected 'id,group'");
        const std::uint64_t id = parse_id(trim(std::string_view(line).substr(0, comma)),
                                          label_path, lineno);
        const std::string_view token = trim(std::string_view(line).substr(comma + 1));
        if (id_map.contains(id)) {
            ++out.report.duplicate_labels;
            continue;
        }
        if (id_map.size() >= static_cast<std::size_t>(~NodeId{0}))
            throw std::runtime_error(label_path + ": node id space overflow");
        const Color c = token == minority_token ? Color::Red : Color::Blue;
        id_map.emplace(id, out.graph.add_node(c));
    }
    if (id_map.empty()) throw std::runtime_error("label file is empty: " + label_path);

    std::ifstream edges(edge_path);
    if (!edges) throw std::runtime_error("cannot open edge file: " + edge_path);

    std::unordered_set<std::uint64_t> seen;
    std::uint64_t parsed_edges = 0;
    lineno = 0;
    while (std::getline(edges, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::string_view a, b;
        if (!split_pair(line, a, b))
            throw std::runtime_error(edge_path + ":" + std::to_string(lineno) +
                                     ": expected two node ids");
        const std::uint64_t ida = parse_id(a, edge_path, lineno);
        const std::uint64_t idb = parse_id(b, edge_path, lineno);
        ++parsed_edges;
        const auto ita = id_map.find(ida);
        const auto itb = id_map.find(idb);
        if (ita == id_map.end() || itb == id_map.end()) {
            ++out.report.skipped_unlabeled;
            continue;
        }
        const NodeId u = ita->second;
        const NodeId v = itb->second;
        if (u == v) {
            ++out.report.self_loops_dropped;
            continue;
        }
        const std::uint64_t key = u < v ? (static_cast<std::uint64_t>(u) << 32) | v
                                        : (static_cast<std::uint64_t>(v) << 32) | u;
        if (!seen.insert(key).second) {
            ++out.report.duplicates_dropped;
            continue;
        }
        out.graph.add_edge(u, v);
    }
    if (parsed_edges == 0) throw std::runtime_error("edge file is empty: " + edge_path);

    out.report.nodes = out.graph.node_count();
    out.report.edges = out.graph.edge_count();
    return out;
}

void write_edge_list(std::ostream& os, const LabeledGraph& g) {
    g.for_each_edge([&](NodeId u, NodeId v) { os << u << ' ' << v << '\n'; });
}

void write_labels(std::ostream& os, const LabeledGraph& g, const std::string& minority_token,
                  const std::string& majority_token) {
    for (NodeId u = 0; u < g.node_count(); ++u)
        os << u << ',' << (g.color(u) == Color::Red ? minority_token : majority_token) << '\n';
}

namespace {
std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    return os;
}
}  // namespace

void write_edge_list_file(const std::string& path, const LabeledGraph& g) {
    auto os = open_out(path);
    write_edge_list(os, g);
}

void write_labels_file(const std::string& path, const LabeledGraph& g,
                       const std::string& minority_token, const std::string& majority_token) {
    auto os = open_out(path);
    write_labels(os, g, minority_token, majority_token);
}

}  // namespace refnet
