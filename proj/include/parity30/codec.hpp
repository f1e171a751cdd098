#pragma once

#include "parity30/bitstring.hpp"
#include "parity30/collatz.hpp"
#include "parity30/natural.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace parity30::codec {

// Word over {f, g} in application order: f marks an odd-branch step
// ((3n+1)/2), g an even-branch step (n/2). Leftmost symbol = first step.
class FgWord {
 public:
  FgWord() = default;
  explicit FgWord(std::string symbols);  // throws ParseError on other chars

  static FgWord from_parity(const BitString& bits);  // 1 -> f, 0 -> g

  const std::string& str() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  BitString to_parity() const;

  friend bool operator==(const FgWord& a, const FgWord& b) = default;

 private:
  std::string symbols_;
};

// The until-one parity of n spelled over {f, g}. encode(1) is the empty word.
FgWord encode(const Natural& n,
              std::uint64_t step_ceiling = collatz::kDefaultStepCeiling);

// Reads w right to left starting from 1: g doubles, f applies (2n-1)/3.
// Words produced by encode always decode; for arbitrary words each reverse
// f step is validated (2n-1 divisible by 3, odd quotient) and failure throws
// InvalidCodewordError carrying the offending symbol position.
Natural decode(const FgWord& w);

struct LanguageStats {
  Natural n;
  std::uint64_t binary_len = 0;  // bit length of n
  std::uint64_t fg_len = 0;      // until-one parity length of n
};

LanguageStats language_stats(const Natural& n,
                             std::uint64_t step_ceiling = collatz::kDefaultStepCeiling);

struct LanguageRow {
  Natural n;
  std::string binary;
  std::string fg;
};

// Rows (n, binary encoding, fg encoding) for n in [lo, hi].
// Guarded to 10^6 rows.
std::vector<LanguageRow> language_table(const Natural& lo, const Natural& hi);

}  // namespace parity30::codec
