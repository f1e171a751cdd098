#include "parity30/collatz.hpp"

#include "parity30/errors.hpp"

namespace parity30::collatz {

namespace {

// Advances v by one step and returns the branch taken. The odd test uses
// bit_test to avoid a temporary.
inline bool step_in_place(Natural& v, StepMap map) {
  if (boost::multiprecision::bit_test(v, 0)) {
    v = 3 * v + 1;
    if (map == StepMap::Optimized) v >>= 1;
    return true;
  }
  v >>= 1;
  return false;
}

void require_positive(const Natural& n, const char* op) {
  if (n < 1) {
    throw DomainError(std::string(op) + ": requires n >= 1, got " + n.str());
  }
}

}  // namespace

Natural step(const Natural& n, StepMap map) {
  require_positive(n, "step");
  Natural v = n;
  step_in_place(v, map);
  return v;
}

Trajectory trajectory(const Natural& n, StepMap map, std::uint64_t max_steps) {
  require_positive(n, "trajectory");
  Trajectory out;
  Natural v = n;
  out.values.push_back(v);
  std::uint64_t steps = 0;
  while (v != 1 && steps < max_steps) {
    step_in_place(v, map);
    out.values.push_back(v);
    ++steps;
  }
  out.stop = (v == 1) ? StopReason::ReachedOne : StopReason::MaxSteps;
  return out;
}

ParitySequence parity_sequence(const Natural& n, StepMap map, ParityMode mode,
                               std::uint64_t step_ceiling) {
  require_positive(n, "parity_sequence");
  BitString bits;
  Natural v = n;
  if (mode.kind == ParityMode::Kind::FixedLength) {
    // The map is total on n >= 1, so a fixed bit count needs no ceiling;
    // reaching 1 early just rides the 1 -> 2 -> 1 cycle.
    for (std::uint64_t i = 0; i < mode.bits; ++i) {
      bits.push_back(step_in_place(v, map));
    }
  } else {
    std::uint64_t steps = 0;
    while (v != 1) {
      if (steps >= step_ceiling) {
        throw BudgetExceededError("parity_sequence: step ceiling of " +
                                      std::to_string(step_ceiling) +
                                      " exceeded before reaching 1 (start " + n.str() + ")",
                                  steps);
      }
      bits.push_back(step_in_place(v, map));
      ++steps;
    }
  }
  return {std::move(bits), mode};
}

BitString parity_until_one(const Natural& n, StepMap map, std::uint64_t step_ceiling) {
  return parity_sequence(n, map, ParityMode::until_one(), step_ceiling).bits;
}

BitString parity_fixed(const Natural& n, std::uint64_t bits, StepMap map) {
  return parity_sequence(n, map, ParityMode::fixed(bits)).bits;
}

std::string parity_table_discrepancy_note() {
  return "Known data note: circulated parity tables list 7 -> 111010001000 and "
         "9 -> 10111010001000, but direct iteration of the optimized map gives "
         "7 -> 11101001000 and 9 -> 1011101001000 (the n = 9 entry inherits the "
         "n = 7 tail). Direct computation is treated as ground truth here.";
}

}  // namespace parity30::collatz
