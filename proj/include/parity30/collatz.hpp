#pragma once

#include "parity30/bitstring.hpp"
#include "parity30/natural.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace parity30::collatz {

enum class StepMap {
  Optimized,    // odd branch (3n+1)/2
  Unoptimized,  // odd branch 3n+1
};

// The conjecture is open, so nothing here loops unboundedly: every
// run-until-one operation stops with BudgetExceededError at this many steps
// unless the caller overrides the ceiling.
inline constexpr std::uint64_t kDefaultStepCeiling = 10'000'000;

// One application of the map: n/2 when even, the odd branch otherwise.
// Requires n >= 1.
Natural step(const Natural& n, StepMap map = StepMap::Optimized);

enum class StopReason { ReachedOne, MaxSteps };

struct Trajectory {
  std::vector<Natural> values;  // starts at n, ends at 1 or at the cap
  StopReason stop = StopReason::ReachedOne;
};

// Successive values starting at n, stopping at the first 1 or after
// max_steps applications, whichever comes first.
Trajectory trajectory(const Natural& n, StepMap map = StepMap::Optimized,
                      std::uint64_t max_steps = kDefaultStepCeiling);

struct ParityMode {
  enum class Kind { UntilOne, FixedLength };
  Kind kind = Kind::UntilOne;
  std::uint64_t bits = 0;  // FixedLength only

  static ParityMode until_one() { return {Kind::UntilOne, 0}; }
  static ParityMode fixed(std::uint64_t k) { return {Kind::FixedLength, k}; }
};

struct ParitySequence {
  BitString bits;  // bit i = 1 iff step i took the odd branch
  ParityMode mode;
};

// Branch record of the trajectory, in application order (first step =
// leftmost bit). UntilOne stops when the value reaches 1 (empty for n = 1)
// and throws BudgetExceededError past step_ceiling. FixedLength emits
// exactly mode.bits bits, running straight through the 1 -> 2 -> 1 cycle
// when 1 is reached early; it never needs a ceiling.
ParitySequence parity_sequence(const Natural& n, StepMap map, ParityMode mode,
                               std::uint64_t step_ceiling = kDefaultStepCeiling);

// Shorthands for the two modes.
BitString parity_until_one(const Natural& n, StepMap map = StepMap::Optimized,
                           std::uint64_t step_ceiling = kDefaultStepCeiling);
BitString parity_fixed(const Natural& n, std::uint64_t bits,
                       StepMap map = StepMap::Optimized);

// Known data note, also asserted by the test suite: some circulated parity
// tables list 7 -> 111010001000 and 9 -> 10111010001000. Direct iteration of
// the optimized map gives 7 -> 11101001000 and 9 -> 1011101001000 (the n = 9
// entry inherits the n = 7 tail). This library treats direct computation as
// ground truth.
std::string parity_table_discrepancy_note();

}  // namespace parity30::collatz
