#include "parity30/metrics.hpp"

#include "parity30/collatz.hpp"
#include "parity30/errors.hpp"

#include <unordered_set>

namespace parity30::metrics {

Cyclomatic cyclomatic(const FlowGraph& g) {
  if (g.node_count < 1) throw DomainError("cyclomatic: graph needs at least one node");
  if (g.predicate_count > g.node_count) {
    throw DomainError("cyclomatic: more predicates than nodes");
  }
  Cyclomatic out;
  out.value = static_cast<std::int64_t>(g.edge_count) -
              static_cast<std::int64_t>(g.node_count) + 2;
  out.malformed = out.value < 1;
  return out;
}

std::uint64_t cyclomatic_from_predicates(std::uint64_t predicates) {
  return predicates + 1;
}

Natural path_count_bound(std::uint64_t iterations, std::uint64_t input_bits) {
  const std::uint64_t exponent = iterations < input_bits ? iterations : input_bits;
  return Natural(1) << exponent;
}

std::uint64_t empirical_path_count(std::uint64_t input_bits, std::uint64_t steps) {
  if (input_bits < 1 || input_bits > kMaxEmpiricalInputBits) {
    throw ConfigError("empirical_path_count: input_bits must be in [1, " +
                      std::to_string(kMaxEmpiricalInputBits) + "]");
  }
  if (steps > kMaxEmpiricalSteps) {
    throw ConfigError("empirical_path_count: steps capped at " +
                      std::to_string(kMaxEmpiricalSteps));
  }
  const Natural lo = input_bits == 1 ? 1 : Natural(1) << (input_bits - 1);
  const Natural hi = Natural(1) << input_bits;
  std::unordered_set<std::uint64_t> prefixes;
  for (Natural n = lo; n < hi; ++n) {
    const BitString bits = collatz::parity_fixed(n, steps);
    // steps <= 24, so the whole prefix fits the first packed word
    const std::uint64_t key = bits.words().empty() ? 0 : bits.words()[0];
    prefixes.insert(key);
  }
  return prefixes.size();
}

FlowGraph straight_line(std::uint64_t nodes) {
  if (nodes < 1) throw DomainError("straight_line: needs at least one node");
  return {nodes, nodes - 1, 0};
}

FlowGraph with_diamond(FlowGraph g) {
  // predicate + two arms + join: 4 nodes, 5 edges
  g.node_count += 4;
  g.edge_count += 5;
  g.predicate_count += 1;
  return g;
}

FlowGraph with_loop(FlowGraph g) {
  // condition + body + exit: 3 nodes; entry, into-body, back, and out: 4 edges
  g.node_count += 3;
  g.edge_count += 4;
  g.predicate_count += 1;
  return g;
}

FlowGraph collatz_unrolled_tree(std::uint32_t steps) {
  if (steps > 32) throw ConfigError("collatz_unrolled_tree: steps capped at 32");
  const std::uint64_t leaves = 1ull << steps;
  FlowGraph g;
  g.predicate_count = leaves - 1;          // full binary tree of decisions
  g.node_count = 2 * leaves;               // predicates + leaves + merged exit
  g.edge_count = 3 * leaves - 2;           // tree edges + leaf-to-exit edges
  return g;
}

}  // namespace parity30::metrics
