#include "cliquedyn/io.h"

#include <fstream>
#include <sstream>

#include "cliquedyn/errors.h"

namespace cliquedyn {

using nlohmann::json;

json to_json(const GraphFile& file) {
  const Graph& g = file.graph;
  json doc;
  doc["name"] = g.name();
  doc["vertices"] = g.ids();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.id(u), g.id(v)});
  doc["edges"] = std::move(edges);
  if (!file.labels.empty()) doc["labels"] = file.labels;
  return doc;
}

GraphFile from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw InputError("graph document must be an object");
    std::vector<VertexId> ids = doc.at("vertices").get<std::vector<VertexId>>();
    std::unordered_map<VertexId, Vertex> index;
    for (Vertex i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw InputError("each edge must be a pair of ids");
      }
      auto u = index.find(e[0].get<VertexId>());
      auto v = index.find(e[1].get<VertexId>());
      if (u == index.end() || v == index.end()) {
        throw InputError("edge references an unknown vertex id");
      }
      edges.emplace_back(u->second, v->second);
    }
    GraphFile file{Graph(std::move(ids), edges,
                         doc.value("name", std::string()))};
    if (doc.contains("labels")) file.labels = doc["labels"];
    return file;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
}

std::string serialize_json(const GraphFile& file) {
  return to_json(file).dump(2) + "\n";
}

GraphFile parse_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return from_json(doc);
}

GraphFile parse_edge_list(const std::string& text) {
  std::vector<VertexId> ids;
  std::unordered_map<VertexId, Vertex> index;
  auto intern = [&](VertexId id) {
    auto [it, fresh] = index.emplace(id, static_cast<Vertex>(ids.size()));
    if (fresh) ids.push_back(id);
    return it->second;
  };
  std::vector<Edge> edges;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::vector<VertexId> row;
    VertexId x;
    while (fields >> x) row.push_back(x);
    if (!fields.eof()) {
      throw InputError("bad token on line " + std::to_string(lineno));
    }
    if (row.size() == 1) {
      intern(row[0]);
    } else if (row.size() == 2) {
      Vertex u = intern(row[0]);
      Vertex v = intern(row[1]);
      edges.emplace_back(u, v);
    } else if (!row.empty()) {
      throw InputError("expected 'u v' on line " + std::to_string(lineno));
    }
  }
  return GraphFile{Graph(std::move(ids), edges)};
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  if (!g.name().empty()) out << "# " << g.name() << "\n";
  for (Vertex v = 0; v < g.order(); ++v) out << g.id(v) << "\n";
  for (const auto& [u, v] : g.edges()) {
    out << g.id(u) << " " << g.id(v) << "\n";
  }
  return out.str();
}

std::string serialize_dot(const GraphFile& file) {
  const Graph& g = file.graph;
  std::ostringstream out;
  out << "graph " << json(g.name().empty() ? "G" : g.name()).dump()
      << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << g.id(v);
    std::string key = std::to_string(g.id(v));
    if (file.labels.contains(key)) {
      out << " [label=" << json(file.labels[key].dump()).dump() << "]";
    }
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  " << g.id(u) << " -- " << g.id(v) << ";\n";
  }
  out << "}\n";
  return out.str();
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  bool looks_json = path.ends_with(".json");
  if (!path.ends_with(".json") && !path.ends_with(".txt") &&
      !path.ends_with(".edges")) {
    auto first = text.find_first_not_of(" \t\r\n");
    looks_json = first != std::string::npos && text[first] == '{';
  }
  return looks_json ? parse_json(text) : parse_edge_list(text);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace cliquedyn
