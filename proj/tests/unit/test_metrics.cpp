#include "parity30/errors.hpp"
#include "parity30/metrics.hpp"

#include <doctest.h>

#include <cstdint>
#include <random>
#include <unordered_set>

using namespace parity30;
using namespace parity30::metrics;

namespace {

// Self-contained enumeration oracle on uint64: distinct fixed-length parity
// prefixes over the naturals of exactly `bits` bits.
std::uint64_t oracle_path_count(std::uint64_t bits, std::uint64_t steps) {
  const std::uint64_t lo = bits == 1 ? 1 : 1ull << (bits - 1);
  const std::uint64_t hi = 1ull << bits;
  std::unordered_set<std::uint64_t> prefixes;
  for (std::uint64_t n = lo; n < hi; ++n) {
    std::uint64_t v = n;
    std::uint64_t key = 0;
    for (std::uint64_t s = 0; s < steps; ++s) {
      key <<= 1;
      if (v % 2 == 1) {
        key |= 1;
        v = (3 * v + 1) / 2;
      } else {
        v /= 2;
      }
    }
    prefixes.insert(key);
  }
  return prefixes.size();
}

}  // namespace

TEST_CASE("cyclomatic number from edges and nodes") {
  CHECK(cyclomatic({10, 12, 0}).value == 4);
  CHECK_FALSE(cyclomatic({10, 12, 0}).malformed);

  const FlowGraph line = straight_line(7);
  CHECK(cyclomatic(line).value == 1);

  const auto broken = cyclomatic({5, 0, 0});
  CHECK(broken.value == -3);
  CHECK(broken.malformed);

  CHECK_THROWS_AS(cyclomatic({0, 0, 0}), DomainError);
}

TEST_CASE("cyclomatic number from predicates") {
  CHECK(cyclomatic_from_predicates(3) == 4);
  CHECK(cyclomatic_from_predicates(0) == 1);
  CHECK(cyclomatic_from_predicates(20) == 21);
}

TEST_CASE("the two-step unrolled tree has three predicates and four paths") {
  const FlowGraph g = collatz_unrolled_tree(2);
  CHECK(g.predicate_count == 3);
  CHECK(cyclomatic(g).value == 4);
  CHECK(cyclomatic_from_predicates(g.predicate_count) == 4);
}

TEST_CASE("both cyclomatic routes agree on composed structured graphs") {
  std::mt19937_64 gen(17);
  for (int iter = 0; iter < 500; ++iter) {
    FlowGraph g = straight_line(gen() % 8 + 1);
    const int pieces = static_cast<int>(gen() % 12);
    for (int p = 0; p < pieces; ++p) {
      switch (gen() % 3) {
        case 0: g = with_diamond(g); break;
        case 1: g = with_loop(g); break;
        default: g.node_count += 1; g.edge_count += 1; break;  // sequential
      }
    }
    const auto by_graph = cyclomatic(g);
    REQUIRE_FALSE(by_graph.malformed);
    REQUIRE(static_cast<std::uint64_t>(by_graph.value) ==
            cyclomatic_from_predicates(g.predicate_count));
  }
  for (std::uint32_t k = 0; k <= 10; ++k) {
    const FlowGraph g = collatz_unrolled_tree(k);
    REQUIRE(static_cast<std::uint64_t>(cyclomatic(g).value) ==
            cyclomatic_from_predicates(g.predicate_count));
    REQUIRE(cyclomatic_from_predicates(g.predicate_count) == (1ull << k));
  }
}

TEST_CASE("path count bound is exact and monotone") {
  CHECK(path_count_bound(21, 43) == Natural(1) << 21);
  CHECK(path_count_bound(0, 17) == 1);
  CHECK(path_count_bound(12, 8) == 256);
  CHECK(path_count_bound(200, 300) == Natural(1) << 200);
  for (std::uint64_t a = 0; a < 8; ++a) {
    for (std::uint64_t b = 0; b < 8; ++b) {
      REQUIRE(path_count_bound(a, b) <= path_count_bound(a + 1, b));
      REQUIRE(path_count_bound(a, b) <= path_count_bound(a, b + 1));
    }
  }
}

TEST_CASE("empirical path counts") {
  CHECK(empirical_path_count(4, 2) == 4);
  CHECK(empirical_path_count(1, 5) == 1);

  const std::uint64_t counted = empirical_path_count(10, 20);
  CHECK(counted == oracle_path_count(10, 20));
  CHECK(counted <= 1024);
  MESSAGE("distinct 20-step prefixes over 10-bit inputs: " << counted);

  CHECK(empirical_path_count(12, 8) == oracle_path_count(12, 8));
  CHECK(empirical_path_count(12, 8) <= 256);

  CHECK_THROWS_AS(empirical_path_count(21, 4), ConfigError);
  CHECK_THROWS_AS(empirical_path_count(4, 25), ConfigError);
  CHECK_THROWS_AS(empirical_path_count(0, 4), ConfigError);
}
