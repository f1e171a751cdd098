#pragma once

#include "parity30/natural.hpp"

#include <cstdint>

namespace parity30::metrics {

// Counted control-flow-graph abstraction; the formulas only need totals.
struct FlowGraph {
  std::uint64_t node_count = 1;
  std::uint64_t edge_count = 0;
  std::uint64_t predicate_count = 0;  // binary decision nodes
};

struct Cyclomatic {
  std::int64_t value = 0;
  bool malformed = false;  // value < 1: not a single-entry/exit flow graph
};

// e - n + 2.
Cyclomatic cyclomatic(const FlowGraph& g);

// p + 1.
std::uint64_t cyclomatic_from_predicates(std::uint64_t predicates);

// 2^min(iterations, input_bits), exact.
Natural path_count_bound(std::uint64_t iterations, std::uint64_t input_bits);

inline constexpr std::uint64_t kMaxEmpiricalInputBits = 20;
inline constexpr std::uint64_t kMaxEmpiricalSteps = 24;

// Number of distinct fixed-length parity prefixes over all naturals of
// exactly input_bits bits (cycle-continue, optimized map). Guarded to
// input_bits <= 20 and steps <= 24.
std::uint64_t empirical_path_count(std::uint64_t input_bits, std::uint64_t steps);

// Flow-graph builders for the metrics self-checks. Appending a diamond or a
// loop adds one predicate and one edge-minus-node unit, so both cyclomatic
// routes stay in lockstep on anything composed from these.
FlowGraph straight_line(std::uint64_t nodes);
FlowGraph with_diamond(FlowGraph g);  // if/else, reconverging
FlowGraph with_loop(FlowGraph g);     // while, condition + body + exit

// The unrolled k-step branch tree of the halve-or-triple algorithm with all
// leaves merged into one exit: 2^k - 1 predicates, cyclomatic 2^k. This
// models each unrolled step as one fresh predicate level; k <= 32.
FlowGraph collatz_unrolled_tree(std::uint32_t steps);

}  // namespace parity30::metrics
