#include "parity30/collatz.hpp"
#include "parity30/errors.hpp"

#include <doctest.h>

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

using namespace parity30;
using namespace parity30::collatz;

namespace {

// Independent oracle: plain uint64 iteration, no shared code with the
// library path. Values stay tiny in every test that uses it.
std::vector<std::uint64_t> oracle_trajectory(std::uint64_t n, bool optimized) {
  std::vector<std::uint64_t> vals{n};
  while (n != 1) {
    if (n % 2 == 0) {
      n /= 2;
    } else {
      n = 3 * n + 1;
      if (optimized) n /= 2;
    }
    vals.push_back(n);
  }
  return vals;
}

std::string oracle_parity(std::uint64_t n, bool optimized) {
  std::string bits;
  while (n != 1) {
    if (n % 2 == 0) {
      bits += '0';
      n /= 2;
    } else {
      bits += '1';
      n = 3 * n + 1;
      if (optimized) n /= 2;
    }
  }
  return bits;
}

}  // namespace

TEST_CASE("step follows the selected branch") {
  CHECK(step(Natural(13), StepMap::Optimized) == 20);
  CHECK(step(Natural(13), StepMap::Unoptimized) == 40);
  CHECK(step(Natural(1), StepMap::Optimized) == 2);
  CHECK(step(Natural(1) << 200, StepMap::Optimized) == Natural(1) << 199);
  CHECK_THROWS_AS(step(Natural(0), StepMap::Optimized), DomainError);
}

TEST_CASE("trajectory runs to 1 or to the cap") {
  const auto t8 = trajectory(Natural(8));
  REQUIRE(t8.values.size() == 4);
  CHECK(t8.values[0] == 8);
  CHECK(t8.values[3] == 1);
  CHECK(t8.stop == StopReason::ReachedOne);

  const auto t1 = trajectory(Natural(1));
  CHECK(t1.values == std::vector<Natural>{1});
  CHECK(t1.stop == StopReason::ReachedOne);

  const auto expected = oracle_trajectory(7, true);
  const auto t7 = trajectory(Natural(7));
  REQUIRE(t7.values.size() == expected.size());
  REQUIRE(t7.values.size() == 12);
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(t7.values[i] == expected[i]);

  const auto capped = trajectory(Natural(27), StepMap::Optimized, 3);
  CHECK(capped.values.size() == 4);
  CHECK(capped.stop == StopReason::MaxSteps);
}

TEST_CASE("until-one parity sequences") {
  CHECK(parity_until_one(Natural(13)).to_string() == "1001000");
  CHECK(parity_until_one(Natural(8)).to_string() == "000");
  CHECK(parity_until_one(Natural(1)).to_string().empty());
  CHECK(parity_until_one(Natural(7)).to_string() == "11101001000");
  CHECK(parity_until_one(Natural(7)).to_string() == oracle_parity(7, true));
  CHECK(parity_until_one(Natural(9)).to_string() == "1011101001000");
}

TEST_CASE("fixed-length parity continues through the 1 -> 2 -> 1 cycle") {
  CHECK(parity_fixed(Natural(1), 6).to_string() == "101010");
  CHECK(parity_fixed(Natural(13), 7).to_string() == "1001000");
  CHECK(parity_fixed(Natural(13), 10).to_string() == "1001000101");
  CHECK(parity_fixed(Natural(5), 0).to_string().empty());
}

TEST_CASE("parity_sequence carries its mode") {
  const auto seq = parity_sequence(Natural(8), StepMap::Optimized, ParityMode::fixed(5));
  CHECK(seq.mode.kind == ParityMode::Kind::FixedLength);
  CHECK(seq.bits.to_string() == "00010");
}

TEST_CASE("step ceiling raises a distinguishable error") {
  CHECK_THROWS_AS(parity_until_one(Natural(27), StepMap::Optimized, 5), BudgetExceededError);
  try {
    parity_until_one(Natural(27), StepMap::Optimized, 5);
  } catch (const BudgetExceededError& e) {
    CHECK(e.steps == 5);
  }
}

TEST_CASE("parity length equals trajectory length minus one") {
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    const auto t = trajectory(Natural(n));
    REQUIRE(t.stop == StopReason::ReachedOne);
    REQUIRE(parity_until_one(Natural(n)).size() == t.values.size() - 1);
  }
}

TEST_CASE("optimized parity = unoptimized parity with forced halvings removed") {
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    const std::string raw = parity_until_one(Natural(n), StepMap::Unoptimized).to_string();
    std::string folded;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      folded += raw[i];
      if (raw[i] == '1') {
        REQUIRE(i + 1 < raw.size());
        REQUIRE(raw[i + 1] == '0');  // 3n+1 is always even
        ++i;
      }
    }
    REQUIRE(folded == parity_until_one(Natural(n)).to_string());
  }
}

TEST_CASE("until-one parity sequences are distinct up to 2^16") {
  std::unordered_set<std::string> seen;
  for (std::uint64_t n = 1; n <= (1u << 16); ++n) {
    seen.insert(parity_until_one(Natural(n)).to_string());
  }
  CHECK(seen.size() == (1u << 16));
}

TEST_CASE("the discrepancy note pins both readings") {
  const std::string note = parity_table_discrepancy_note();
  CHECK(note.find("111010001000") != std::string::npos);
  CHECK(note.find("11101001000") != std::string::npos);
}
