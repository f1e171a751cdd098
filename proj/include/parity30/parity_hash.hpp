#pragma once

#include "parity30/bitstring.hpp"
#include "parity30/collatz.hpp"
#include "parity30/natural.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

namespace parity30::parity_hash {

inline constexpr std::uint64_t kDefaultDigestBits = 128;

enum class Padding {
  CycleContinue,  // keep stepping through the 1 -> 2 -> 1 cycle; total
  TruncateAtOne,  // stop at 1; digests may come back short
};

struct Digest {
  BitString bits;
  bool short_output = false;  // TruncateAtOne only: trajectory ended early
};

// First digest_bits parity bits of n under the optimized map. strict
// additionally rejects inputs below 256 bits.
Digest digest(const Natural& n, std::uint64_t digest_bits = kDefaultDigestBits,
              Padding padding = Padding::CycleContinue, bool strict = false,
              std::uint64_t step_ceiling = collatz::kDefaultStepCeiling);

enum class Strategy { Exhaustive, RandomSample };

// Desk-scale guards for exhaustive runs.
inline constexpr std::uint64_t kMaxExhaustivePrefixBits = 24;
inline constexpr std::uint64_t kMaxExhaustiveInputBits = 32;

// Preimage target: a natural of exactly input_bits bits whose cycle-continue
// digest starts with prefix. Exhaustive scans [2^(input_bits-1), 2^input_bits)
// in ascending order; RandomSample draws budget seeded candidates from the
// same class.
struct SearchSpec {
  BitString prefix;
  std::uint64_t input_bits = 0;
  Strategy strategy = Strategy::Exhaustive;
  std::uint64_t budget = 0;  // RandomSample: number of candidates to draw
  std::uint64_t seed = 0;    // RandomSample

  // Applies the default input length of twice the prefix length.
  static SearchSpec for_prefix(BitString prefix);
};

// Progress is reported (and cancellation polled) once per stride candidates.
inline constexpr std::uint64_t kProgressStride = 1u << 20;

struct SearchControl {
  const std::atomic<bool>* cancel = nullptr;
  std::function<void(std::uint64_t tried)> progress;
};

struct PreimageResult {
  std::optional<Natural> x;
  std::uint64_t tried = 0;
  bool exhausted = false;    // the whole candidate class was enumerated
  bool verified = false;     // hit re-checked by a fresh digest recomputation
  bool interrupted = false;
};

// A hit is always re-verified before being returned; absence of a hit proves
// nonexistence only when exhausted is set.
PreimageResult preimage_search(const SearchSpec& spec,
                               const SearchControl& control = {});

struct CollisionResult {
  std::optional<std::pair<Natural, Natural>> pair;  // first < second
  std::uint64_t tried = 0;
  bool exhausted = false;
  bool verified = false;
  bool interrupted = false;
};

// Two distinct naturals of exactly input_bits bits with equal digest_bits-bit
// cycle-continue digests. Work is capped at budget candidates (budget 0 means
// no cap for Exhaustive; RandomSample requires budget >= 1).
CollisionResult collision_search(std::uint64_t digest_bits, std::uint64_t input_bits,
                                 Strategy strategy = Strategy::Exhaustive,
                                 std::uint64_t budget = 0, std::uint64_t seed = 0,
                                 const SearchControl& control = {});

}  // namespace parity30::parity_hash
