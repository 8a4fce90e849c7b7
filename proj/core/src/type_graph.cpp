#include "lowdup/linearize.hpp"

#include <algorithm>

#include "lowdup/error.hpp"

namespace lowdup {

std::vector<std::string> TypeGraph::direct_subtypes(const std::string& node) const {
  std::vector<std::string> out;
  for (const auto& name : nodes) {
    if (edges.contains({name, node})) out.push_back(name);
  }
  return out;
}

TypeGraph build_type_graph(const ProgramModel& program) {
  TypeGraph graph;
  for (const RawClass& cls : program.classes()) {
    graph.nodes.push_back(cls.name);
    graph.in_degree.emplace(cls.name, 0);
  }
  for (const RawClass& cls : program.classes()) {
    auto link = [&](const std::string& super) {
      if (!program.find_class(super)) return;
      if (graph.edges.emplace(cls.name, super).second) ++graph.in_degree[super];
    };
    if (cls.super_name) link(*cls.super_name);
    for (const auto& iface : cls.interface_names) link(iface);
  }
  return graph;
}

namespace {

std::string cycle_witness(const TypeGraph& graph, const std::map<std::string, std::size_t>& remaining) {
  // Every unprocessed node still has an unprocessed predecessor; walking
  // predecessors must revisit a node.
  std::string current;
  for (const auto& name : graph.nodes) {
    if (remaining.at(name) > 0) {
      current = name;
      break;
    }
  }
  std::vector<std::string> path;
  std::map<std::string, std::size_t> seen;
  while (!seen.contains(current)) {
    seen.emplace(current, path.size());
    path.push_back(current);
    for (const auto& [from, to] : graph.edges) {
      if (to == current && remaining.at(from) > 0) {
        current = from;
        break;
      }
    }
  }
  std::vector<std::string> cycle(path.begin() + static_cast<std::ptrdiff_t>(seen[current]),
                                 path.end());
  std::reverse(cycle.begin(), cycle.end());  // follow edge direction
  std::string out;
  for (const auto& name : cycle) out += name + " -> ";
  return out + cycle.front();
}

}  // namespace

std::vector<std::string> linearization_order(const TypeGraph& graph) {
  std::map<std::string, std::size_t> decl;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) decl.emplace(graph.nodes[i], i);

  std::map<std::string, std::size_t> remaining = graph.in_degree;
  std::set<std::pair<std::size_t, std::size_t>> ready;  // (in-degree, declaration)
  for (const auto& name : graph.nodes) {
    if (remaining.at(name) == 0) ready.emplace(graph.in_degree.at(name), decl.at(name));
  }

  std::map<std::string, std::vector<std::string>> successors;
  for (const auto& [from, to] : graph.edges) successors[from].push_back(to);

  std::vector<std::string> order;
  order.reserve(graph.nodes.size());
  while (!ready.empty()) {
    const auto [degree, index] = *ready.begin();
    ready.erase(ready.begin());
    const std::string& name = graph.nodes[index];
    order.push_back(name);
    for (const auto& next : successors[name]) {
      if (--remaining.at(next) == 0) {
        ready.emplace(graph.in_degree.at(next), decl.at(next));
      }
    }
  }
  if (order.size() != graph.nodes.size()) {
    throw Error(ErrorKind::CyclicHierarchy, cycle_witness(graph, remaining));
  }
  return order;
}

}  // namespace lowdup
