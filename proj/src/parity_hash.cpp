#include "parity30/parity_hash.hpp"

#include "parity30/errors.hpp"

#include <random>
#include <unordered_map>

namespace parity30::parity_hash {

namespace {

void require_positive(const Natural& n) {
  if (n < 1) throw DomainError("digest: requires n >= 1, got " + n.str());
}

Natural class_low(std::uint64_t input_bits) {
  return input_bits == 1 ? Natural(1) : Natural(1) << (input_bits - 1);
}

Natural class_high(std::uint64_t input_bits) {  // exclusive
  return Natural(1) << input_bits;
}

// Uniform draw from [2^(b-1), 2^b) built from raw engine words, so results
// are identical across platforms.
Natural draw_candidate(std::mt19937_64& gen, std::uint64_t input_bits) {
  if (input_bits == 1) return Natural(1);
  const std::uint64_t free_bits = input_bits - 1;
  Natural r = 0;
  for (std::uint64_t got = 0; got < free_bits; got += 64) {
    r <<= 64;
    r |= Natural(gen());
  }
  r &= class_high(input_bits - 1) - 1;  // keep free_bits low bits
  r |= class_low(input_bits);           // force the leading 1
  return r;
}

struct LoopState {
  std::uint64_t tried = 0;
  bool interrupted = false;
};

// Returns false when the loop should stop.
bool account(LoopState& s, const SearchControl& control) {
  ++s.tried;
  if (s.tried % kProgressStride == 0) {
    if (control.progress) control.progress(s.tried);
    if (control.cancel && control.cancel->load(std::memory_order_relaxed)) {
      s.interrupted = true;
      return false;
    }
  }
  return true;
}

void check_exhaustive_guards(std::uint64_t target_bits, std::uint64_t input_bits) {
  if (target_bits > kMaxExhaustivePrefixBits) {
    throw ConfigError("exhaustive search: prefix/digest length capped at " +
                      std::to_string(kMaxExhaustivePrefixBits) + " bits, got " +
                      std::to_string(target_bits));
  }
  if (input_bits > kMaxExhaustiveInputBits) {
    throw ConfigError("exhaustive search: input length capped at " +
                      std::to_string(kMaxExhaustiveInputBits) + " bits, got " +
                      std::to_string(input_bits));
  }
}

}  // namespace

Digest digest(const Natural& n, std::uint64_t digest_bits, Padding padding,
              bool strict, std::uint64_t step_ceiling) {
  require_positive(n);
  if (digest_bits < 1) throw DomainError("digest: requires digest_bits >= 1");
  if (strict && bit_length(n) < 256) {
    throw DomainError("digest: strict mode requires inputs of at least 256 bits");
  }
  if (padding == Padding::CycleContinue) {
    return {collatz::parity_fixed(n, digest_bits), false};
  }
  BitString bits = collatz::parity_until_one(n, collatz::StepMap::Optimized, step_ceiling);
  const bool short_output = bits.size() < digest_bits;
  return {bits.prefix(digest_bits), short_output};
}

SearchSpec SearchSpec::for_prefix(BitString prefix) {
  SearchSpec spec;
  spec.input_bits = 2 * prefix.size();
  spec.prefix = std::move(prefix);
  return spec;
}

PreimageResult preimage_search(const SearchSpec& spec, const SearchControl& control) {
  if (spec.input_bits < 1) {
    throw ConfigError("preimage search: input_bits must be >= 1");
  }
  PreimageResult result;
  LoopState loop;
  const auto try_candidate = [&](const Natural& candidate) {
    return collatz::parity_fixed(candidate, spec.prefix.size()) == spec.prefix;
  };
  if (spec.strategy == Strategy::Exhaustive) {
    check_exhaustive_guards(spec.prefix.size(), spec.input_bits);
    const Natural hi = class_high(spec.input_bits);
    Natural candidate = class_low(spec.input_bits);
    bool running = true;
    for (; candidate < hi; ++candidate) {
      if (spec.budget > 0 && loop.tried >= spec.budget) {
        running = false;
        break;
      }
      if (!account(loop, control)) {
        running = false;
        break;
      }
      if (try_candidate(candidate)) {
        result.x = candidate;
        break;
      }
    }
    result.exhausted = running && !result.x.has_value();
  } else {
    if (spec.budget < 1) {
      throw ConfigError("random search: budget must be >= 1");
    }
    std::mt19937_64 gen(spec.seed);
    for (std::uint64_t i = 0; i < spec.budget; ++i) {
      if (!account(loop, control)) break;
      const Natural candidate = draw_candidate(gen, spec.input_bits);
      if (try_candidate(candidate)) {
        result.x = candidate;
        break;
      }
    }
  }
  result.tried = loop.tried;
  result.interrupted = loop.interrupted;
  if (result.x) {
    // fresh recomputation, full digest path
    const Digest check = digest(*result.x, spec.prefix.empty() ? 1 : spec.prefix.size());
    result.verified = (spec.prefix.empty() || check.bits == spec.prefix) &&
                      bit_length(*result.x) == spec.input_bits;
    if (!result.verified) {
      throw Error("preimage search: returned hit failed re-verification");
    }
  }
  return result;
}

CollisionResult collision_search(std::uint64_t digest_bits, std::uint64_t input_bits,
                                 Strategy strategy, std::uint64_t budget,
                                 std::uint64_t seed, const SearchControl& control) {
  if (digest_bits < 1) throw ConfigError("collision search: digest_bits must be >= 1");
  if (input_bits < 1) throw ConfigError("collision search: input_bits must be >= 1");
  CollisionResult result;
  LoopState loop;
  std::unordered_map<BitString, Natural, BitString::Hasher> seen;
  const auto try_candidate = [&](const Natural& candidate) {
    BitString d = collatz::parity_fixed(candidate, digest_bits);
    const auto [it, inserted] = seen.try_emplace(std::move(d), candidate);
    if (!inserted && it->second != candidate) {
      result.pair = it->second <= candidate ? std::make_pair(it->second, candidate)
                                            : std::make_pair(candidate, it->second);
      return true;
    }
    return false;
  };
  if (strategy == Strategy::Exhaustive) {
    check_exhaustive_guards(digest_bits, input_bits);
    const Natural hi = class_high(input_bits);
    Natural candidate = class_low(input_bits);
    bool running = true;
    for (; candidate < hi; ++candidate) {
      if (budget > 0 && loop.tried >= budget) {
        running = false;
        break;
      }
      if (!account(loop, control)) {
        running = false;
        break;
      }
      if (try_candidate(candidate)) break;
    }
    result.exhausted = running && !result.pair.has_value();
  } else {
    if (budget < 1) throw ConfigError("random search: budget must be >= 1");
    std::mt19937_64 gen(seed);
    for (std::uint64_t i = 0; i < budget; ++i) {
      if (!account(loop, control)) break;
      if (try_candidate(draw_candidate(gen, input_bits))) break;
    }
  }
  result.tried = loop.tried;
  result.interrupted = loop.interrupted;
  if (result.pair) {
    const auto& [a, b] = *result.pair;
    result.verified = a != b && bit_length(a) == input_bits && bit_length(b) == input_bits &&
                      digest(a, digest_bits).bits == digest(b, digest_bits).bits;
    if (!result.verified) {
      throw Error("collision search: returned pair failed re-verification");
    }
  }
  return result;
}

}  // namespace parity30::parity_hash
