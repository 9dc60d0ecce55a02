#ifndef CLIQUEDYN_IO_H_
#define CLIQUEDYN_IO_H_

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "cliquedyn/graph.h"

namespace cliquedyn {

// A graph plus optional per-vertex metadata, keyed by decimal vertex id.
struct GraphFile {
  Graph graph;
  nlohmann::json labels = nlohmann::json::object();
};

nlohmann::json to_json(const GraphFile& file);
GraphFile from_json(const nlohmann::json& doc);

// Canonical text form: two-space indented JSON with a trailing newline.
std::string serialize_json(const GraphFile& file);
GraphFile parse_json(const std::string& text);

// One "u v" pair per line; a lone id declares an isolated vertex; '#' starts
// a comment.
GraphFile parse_edge_list(const std::string& text);
// Every vertex id on its own line, then one line per edge.
std::string serialize_edge_list(const Graph& g);

std::string serialize_dot(const GraphFile& file);

// Picks the parser from the extension (.json, .txt/.edges) or content.
GraphFile read_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cliquedyn

#endif  // CLIQUEDYN_IO_H_
