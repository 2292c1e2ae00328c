#pragma once

#include <string>
#include <vector>

#include "wsc/graph.hpp"
#include "wsc/recognition.hpp"

namespace wsc {

enum class GraphFormat { edge_list, json };

/// Raised on malformed input, with line/position detail in the message.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// edge_list: one "u v" pair per line, 0-based ids, '#' comments. An
/// optional "#n <count>" comment pins the vertex count (needed only for
/// graphs whose highest vertex is isolated-from-below, e.g. a single
/// vertex). json: {"n": int, "edges": [[u,v], ...]}.
Graph parse_graph(const std::string& text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

Graph load_graph(const std::string& path, GraphFormat format);
void save_graph(const Graph& g, const std::string& path, GraphFormat format);

/// GraphViz document with the witness vertices (and the edges among them)
/// highlighted.
std::string witness_dot(const Graph& g, const std::vector<int>& witness);

/// Machine-readable classification record (JSON text): classification,
/// per-condition verdicts, witnesses, timing.
std::string classification_report(const Graph& g, const RecognitionReport& rep, double elapsed_ms);

}  // namespace wsc
