#include "orient/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace orient {

namespace {

nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed " + what + " JSON: " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << text;
}

}  // namespace

OrientedGraph graph_from_json(const std::string& text) {
  nlohmann::json j = parse_json(text, "graph");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw InputError("graph JSON: missing integer field \"n\"");
  if (!j.contains("edges") || !j["edges"].is_array())
    throw InputError("graph JSON: missing array field \"edges\"");
  OrientedGraph g(j["n"].get<int>());
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InputError("graph JSON: each edge must be a pair [u,v] of integers");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

OrientedGraph load_graph(const std::string& path) { return graph_from_json(read_file(path)); }

std::string graph_to_json(const OrientedGraph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump();
}

void save_graph(const OrientedGraph& g, const std::string& path) {
  write_file(path, graph_to_json(g) + "\n");
}

std::string graph_to_dot(const OrientedGraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (int v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

QuadPartition partition_from_json(int n, const std::string& text) {
  nlohmann::json j = parse_json(text, "partition");
  std::array<std::vector<int>, 4> sets;
  const char* names[4] = {"W", "X", "Y", "Z"};
  for (int i = 0; i < 4; ++i) {
    if (!j.contains(names[i]) || !j[names[i]].is_array())
      throw InputError(std::string("partition JSON: missing array field \"") + names[i] + "\"");
    for (const auto& v : j[names[i]]) {
      if (!v.is_number_integer())
        throw InputError(std::string("partition JSON: non-integer vertex in \"") + names[i] + "\"");
      sets[i].push_back(v.get<int>());
    }
  }
  return QuadPartition(n, sets[0], sets[1], sets[2], sets[3]);
}

QuadPartition load_partition(int n, const std::string& path) {
  return partition_from_json(n, read_file(path));
}

std::string partition_to_json(const QuadPartition& p) {
  nlohmann::json j;
  j["W"] = p.set(SetId::W);
  j["X"] = p.set(SetId::X);
  j["Y"] = p.set(SetId::Y);
  j["Z"] = p.set(SetId::Z);
  return j.dump();
}

void save_partition(const QuadPartition& p, const std::string& path) {
  write_file(path, partition_to_json(p) + "\n");
}

}  // namespace orient
