#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lowdup/program.hpp"
#include "lowdup/token.hpp"

namespace lowdup {

/// Implements/inherits relations among the types of one program. An edge
/// (A, B) means A implements or inherits B. External supertypes are not
/// nodes and contribute no edges.
struct TypeGraph {
  std::vector<std::string> nodes;  // declaration order
  std::set<std::pair<std::string, std::string>> edges;
  std::map<std::string, std::size_t> in_degree;

  /// Sources of edges into `node` (its direct subtypes and implementers),
  /// in declaration order.
  std::vector<std::string> direct_subtypes(const std::string& node) const;
};

TypeGraph build_type_graph(const ProgramModel& program);

/// Topological order in which every type follows all of its direct
/// subtypes/implementers. Among ready nodes, lower original in-degree goes
/// first, then earlier declaration. Throws CyclicHierarchy naming one cycle.
std::vector<std::string> linearization_order(const TypeGraph& graph);

/// 2 * LCS(a, b) / (|a| + |b|) over characters; 1 for equal strings.
double name_similarity(const std::string& a, const std::string& b);

/// Similarity of two method signatures in [0, 1]:
/// 0.5 * name similarity (2*LCS / total length) + 0.5 * Dice coefficient
/// over the multisets of parameter types plus the (tagged) return type.
double signature_similarity(const std::string& name_a, const std::string& descriptor_a,
                            const std::string& name_b, const std::string& descriptor_b);

struct LinearizeOptions {
  /// Minimum signature similarity for an implementer method to count.
  double implementer_threshold = 0.75;
  /// Maximum inlining stack depth (the method being rewritten counts as 1).
  std::size_t depth_cap = 16;
};

/// For each direct implementer/subtype of `node` (in linearization order),
/// the method whose signature best matches `abstract_method`, provided the
/// score reaches the threshold. Sequences are read from `table`; an
/// abstract implementer method must already be linearized (checked).
std::vector<TokenSequence> implementer_methods(const std::string& node,
                                               const MethodKey& abstract_method,
                                               const ProgramModel& program,
                                               const TypeGraph& graph,
                                               const std::vector<std::string>& order,
                                               const MethodTable& table,
                                               const LinearizeOptions& options = {});

/// Abstract method linearization: walks the types in linearization order
/// and fills every abstract method with the concatenation of its
/// implementers' sequences. Abstract methods without implementers stay
/// empty.
MethodTable linearize_abstract(const ProgramModel& program, MethodTable table,
                               const LinearizeOptions& options = {});

/// Invocation linearization for one method against a frozen table: each
/// INVOKE resolving to an in-program method is replaced by that method's
/// recursively inlined sequence. Targets already on the inlining stack,
/// calls beyond the depth cap and external calls stay as INVOKE tokens.
std::vector<Token> inline_invocations(const MethodKey& key, const MethodTable& table,
                                      const ProgramModel& program,
                                      const LinearizeOptions& options = {});

/// inline_invocations applied to every method of `table`; each method is
/// rewritten against the same input table.
MethodTable inline_all(const MethodTable& table, const ProgramModel& program,
                       const LinearizeOptions& options = {});

/// Resolves an INVOKE target by its static owner, walking superclasses
/// then superinterfaces when the owner does not declare the method.
std::optional<MethodKey> resolve_invocation(const MethodKey& target,
                                            const ProgramModel& program);

}  // namespace lowdup
