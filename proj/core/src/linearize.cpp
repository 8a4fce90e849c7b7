#include "lowdup/linearize.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>

namespace lowdup {

std::vector<TokenSequence> implementer_methods(const std::string& node,
                                               const MethodKey& abstract_method,
                                               const ProgramModel& program,
                                               const TypeGraph& graph,
                                               const std::vector<std::string>& order,
                                               const MethodTable& table,
                                               const LinearizeOptions& options) {
  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position.emplace(order[i], i);

  std::vector<std::string> implementers = graph.direct_subtypes(node);
  std::stable_sort(implementers.begin(), implementers.end(),
                   [&](const std::string& a, const std::string& b) {
                     return position.at(a) < position.at(b);
                   });

  std::vector<TokenSequence> out;
  for (const auto& name : implementers) {
    const RawClass* cls = program.find_class(name);
    if (!cls) continue;
    std::optional<MethodKey> best;
    double best_score = -1.0;
    for (const RawMethod& m : cls->methods) {
      MethodKey key{name, m.name, m.descriptor};
      const double score = signature_similarity(abstract_method.name,
                                                abstract_method.descriptor, m.name,
                                                m.descriptor);
      if (score < options.implementer_threshold) continue;
      if (score > best_score || (score == best_score && key < *best)) {
        best_score = score;
        best = std::move(key);
      }
    }
    if (!best) continue;
    if (table.abstract_set.contains(*best) && !table.linearized_set.contains(*best)) {
      throw std::logic_error("implementer " + best->str() +
                             " consulted before it was linearized");
    }
    out.push_back(TokenSequence{*best, table.sequences.at(*best)});
  }
  return out;
}

MethodTable linearize_abstract(const ProgramModel& program, MethodTable table,
                               const LinearizeOptions& options) {
  const TypeGraph graph = build_type_graph(program);
  const std::vector<std::string> order = linearization_order(graph);
  for (const auto& node : order) {
    const RawClass* cls = program.find_class(node);
    for (const RawMethod& m : cls->methods) {
      if (!m.is_abstract) continue;
      MethodKey key{node, m.name, m.descriptor};
      std::vector<Token> content;
      for (auto& seq : implementer_methods(node, key, program, graph, order, table, options)) {
        content.insert(content.end(), std::make_move_iterator(seq.tokens.begin()),
                       std::make_move_iterator(seq.tokens.end()));
      }
      table.sequences[key] = std::move(content);
      table.linearized_set.insert(key);
    }
  }
  return table;
}

std::optional<MethodKey> resolve_invocation(const MethodKey& target,
                                            const ProgramModel& program) {
  // Superclasses first, then superinterfaces breadth-first.
  std::set<std::string> visited;
  std::vector<std::string> interfaces;
  auto probe = [&](const std::string& owner) -> std::optional<MethodKey> {
    MethodKey key{owner, target.name, target.descriptor};
    if (program.methods_view().contains(key)) return key;
    return std::nullopt;
  };
  for (const RawClass* cls = program.find_class(target.owner); cls;) {
    if (!visited.insert(cls->name).second) break;
    if (auto hit = probe(cls->name)) return hit;
    interfaces.insert(interfaces.end(), cls->interface_names.begin(),
                      cls->interface_names.end());
    cls = cls->super_name ? program.find_class(*cls->super_name) : nullptr;
  }
  std::deque<std::string> queue(interfaces.begin(), interfaces.end());
  while (!queue.empty()) {
    const std::string name = queue.front();
    queue.pop_front();
    const RawClass* cls = program.find_class(name);
    if (!cls || !visited.insert(name).second) continue;
    if (auto hit = probe(name)) return hit;
    if (cls->super_name) queue.push_back(*cls->super_name);
    queue.insert(queue.end(), cls->interface_names.begin(), cls->interface_names.end());
  }
  return std::nullopt;
}

namespace {

class Inliner {
 public:
  Inliner(const MethodTable& table, const ProgramModel& program,
          const LinearizeOptions& options)
      : table_(table), program_(program), options_(options) {}

  std::vector<Token> run(const MethodKey& key) {
    std::vector<Token> out;
    stack_.push_back(key);
    expand(key, out);
    stack_.pop_back();
    return out;
  }

 private:
  void expand(const MethodKey& key, std::vector<Token>& out) {
    const auto it = table_.sequences.find(key);
    if (it == table_.sequences.end()) return;
    for (const Token& token : it->second) {
      std::optional<MethodKey> target;
      if (token.family == Family::Invoke && token.annotation) {
        if (auto parsed = parse_method_key(*token.annotation)) {
          target = resolve(*parsed);
        }
      }
      const bool recursive =
          target && std::find(stack_.begin(), stack_.end(), *target) != stack_.end();
      if (!target || recursive || stack_.size() >= options_.depth_cap) {
        out.push_back(token);
        continue;
      }
      stack_.push_back(*target);
      expand(*target, out);
      stack_.pop_back();
    }
  }

  std::optional<MethodKey> resolve(const MethodKey& target) {
    auto [it, inserted] = resolved_.try_emplace(target);
    if (inserted) it->second = resolve_invocation(target, program_);
    return it->second;
  }

  const MethodTable& table_;
  const ProgramModel& program_;
  const LinearizeOptions& options_;
  std::vector<MethodKey> stack_;
  std::map<MethodKey, std::optional<MethodKey>> resolved_;
};

}  // namespace

std::vector<Token> inline_invocations(const MethodKey& key, const MethodTable& table,
                                      const ProgramModel& program,
                                      const LinearizeOptions& options) {
  return Inliner(table, program, options).run(key);
}

MethodTable inline_all(const MethodTable& table, const ProgramModel& program,
                       const LinearizeOptions& options) {
  MethodTable out = table;
  Inliner inliner(table, program, options);
  for (auto& [key, tokens] : out.sequences) tokens = inliner.run(key);
  return out;
}

}  // namespace lowdup
