#pragma once

#include "parity30/bitstring.hpp"
#include "parity30/eca.hpp"

#include <cstdint>
#include <vector>

namespace parity30::rule30_hash {

inline constexpr std::uint64_t kPiTableBits = 4096;

// First `bits` bits of the fractional binary expansion of pi, read from an
// embedded table checked against the published expansion. Throws DomainError
// for bits = 0 or bits > kPiTableBits.
BitString pi_bits(std::uint64_t bits);

struct Params {
  BitString constant;                           // digest is |constant| bits
  eca::Boundary boundary = eca::Boundary::Cyclic;
  std::uint64_t steps_factor = 2;               // steps = factor * (|c| + |msg|)
  unsigned rule = 30;                           // other codes only as controls

  static Params zeros(std::uint64_t digest_bits);
  static Params pi(std::uint64_t digest_bits);
};

inline std::uint64_t steps_for(const Params& params, std::size_t message_bits) {
  return params.steps_factor * (params.constant.size() + message_bits);
}

// Seeds a row with constant ++ message, evolves it steps_for(...) times and
// returns the first |constant| bits of the final row. Empty message or
// constant is rejected.
BitString digest(const BitString& message, const Params& params);

// Per-cell reference implementation; oracle for the word-parallel path.
BitString digest_naive(const BitString& message, const Params& params);

struct AvalancheReport {
  std::uint64_t trials = 0;
  std::vector<double> samples;  // per-trial flipped-bit fraction
  double mean = 0.0;
  double stddev = 0.0;
};

// Hamming response to single-bit message flips: each trial hashes a seeded
// random message and a copy with one bit flipped, and records the fraction
// of digest bits that changed.
AvalancheReport avalanche_report(const Params& params, std::uint64_t trials,
                                 std::uint64_t message_bits, std::uint64_t seed);

}  // namespace parity30::rule30_hash
