#include "wsc/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wsc {

namespace {

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int pinned_n = -1;
    std::vector<Edge> edges;
    int max_id = -1;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            // "#n <count>" pins the vertex count
            std::istringstream comment(line.substr(hash + 1));
            std::string tag;
            if (comment >> tag && tag == "n") {
                int n;
                if (comment >> n) pinned_n = n;
            }
            line = line.substr(0, hash);
        }
        std::istringstream fields(line);
        int u, v;
        if (!(fields >> u)) continue;  // blank or comment-only line
        if (!(fields >> v))
            throw ParseError("edge list line " + std::to_string(lineno) + ": expected two vertex ids");
        std::string rest;
        if (fields >> rest)
            throw ParseError("edge list line " + std::to_string(lineno) + ": trailing token '" + rest + "'");
        if (u < 0 || v < 0)
            throw ParseError("edge list line " + std::to_string(lineno) + ": negative vertex id");
        edges.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
    }
    int n = pinned_n >= 0 ? pinned_n : max_id + 1;
    if (n <= 0) throw ParseError("edge list: no vertices (empty input needs a '#n' line)");
    try {
        return Graph(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

Graph parse_json_graph(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json graph: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw ParseError("json graph: expected an object with 'n' and 'edges'");
    if (!doc["n"].is_number_integer()) throw ParseError("json graph: 'n' must be an integer");
    int n = doc["n"].get<int>();
    std::vector<Edge> edges;
    for (const auto& item : doc["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() || !item[1].is_number_integer())
            throw ParseError("json graph: edge entries must be [u, v] integer pairs");
        edges.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    try {
        return Graph(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("json graph: ") + e.what());
    }
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_json_graph(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    if (format == GraphFormat::edge_list) {
        std::ostringstream out;
        out << "#n " << g.vertex_count() << "\n";
        for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
        return out.str();
    }
    nlohmann::json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
    return doc.dump();
}

Graph load_graph(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), format);
}

void save_graph(const Graph& g, const std::string& path, GraphFormat format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_graph(g, format);
    if (format == GraphFormat::json) out << "\n";
}

std::string witness_dot(const Graph& g, const std::vector<int>& witness) {
    VertexSet marked(g.vertex_count());
    for (int v : witness)
        if (v >= 0 && v < g.vertex_count()) marked.set(v);
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (marked.test(v)) out << " [color=red, style=filled, fillcolor=salmon]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (marked.test(u) && marked.test(v)) out << " [color=red, penwidth=2]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string classification_report(const Graph& g, const RecognitionReport& rep, double elapsed_ms) {
    nlohmann::json doc;
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    doc["classification"] = to_string(rep.classification);
    doc["verdicts"] = nlohmann::json::object();
    doc["witnesses"] = nlohmann::json::object();
    for (const auto& [cond, res] : rep.verdicts) {
        doc["verdicts"][to_string(cond)] = res.holds;
        if (!res.holds) doc["witnesses"][to_string(cond)] = res.witness;
    }
    if (!rep.long_isometric_cycle.empty()) doc["isometric_cycle"] = rep.long_isometric_cycle;
    doc["elapsed_ms"] = elapsed_ms;
    return doc.dump(2);
}

}  // namespace wsc
