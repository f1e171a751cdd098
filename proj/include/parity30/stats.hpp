#pragma once

#include "parity30/bitstring.hpp"
#include "parity30/natural.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace parity30::stats {

struct TestOutcome {
  double statistic = 0.0;
  double p_value = 1.0;
  bool pass = false;  // p_value >= alpha
};

struct StreamReport {
  std::uint64_t n_bits = 0;
  double ones_fraction = 0.0;
  double alpha = 0.01;
  TestOutcome monobit;                          // z-score statistic
  TestOutcome runs;                             // total-runs statistic
  std::map<unsigned, TestOutcome> chi_square;   // k-gram tests, k = 1..4
  double serial_correlation = 0.0;              // lag-1 coefficient
  TestOutcome serial;

  bool all_pass() const;
};

inline constexpr std::uint64_t kMinStreamBits = 100;

// Monobit, runs, disjoint k-gram chi-square (k = 1..4) and lag-1 serial
// correlation, each flagged at significance alpha. Streams shorter than
// kMinStreamBits are rejected.
StreamReport analyze(const BitString& bits, double alpha = 0.01);

enum class TableKind { BinaryEncoding, ParityMapping };

struct TableRow {
  Natural n;
  std::string encoding;
};

// Rows (n, encoding) for n in [lo, hi]: binary representation or until-one
// parity. Guarded to 10^6 rows.
std::vector<TableRow> emit_table(TableKind kind, const Natural& lo, const Natural& hi);

// Byte-level compressor hook: returns the compressed size of the input.
using Compressor = std::function<std::size_t(const std::vector<unsigned char>&)>;

// zlib deflate at the default level; the stock hook for the probe below.
std::size_t deflate_size(const std::vector<unsigned char>& bytes);

struct CompressionProbe {
  std::size_t raw_size = 0;
  std::size_t compressed_size = 0;
  double ratio = 0.0;  // compressed / raw
};

// Compressed/raw ratio of the newline-joined encoding column. Purely
// empirical; asserts nothing about the underlying claim.
CompressionProbe compressibility_probe(const std::vector<TableRow>& rows,
                                       const Compressor& compress = deflate_size);

}  // namespace parity30::stats
