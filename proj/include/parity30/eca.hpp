#pragma once

#include "parity30/bitstring.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace parity30::eca {

// Wolfram-coded elementary CA rule. A neighborhood (left, center, right)
// indexes the truth table as left*4 + center*2 + right.
class Rule {
 public:
  explicit Rule(unsigned code);  // throws DomainError for code > 255
  unsigned code() const { return code_; }
  bool output(bool left, bool center, bool right) const {
    return (code_ >> ((left << 2) | (center << 1) | right)) & 1u;
  }

 private:
  unsigned code_ = 0;
};

enum class Boundary {
  Cyclic,      // row edges wrap around
  ZeroPadded,  // cells beyond the edge read as 0, width stays fixed
  Growing,     // row gains one cell per side per step, white background
};

struct CaState {
  BitString cells;
  Boundary boundary = Boundary::Growing;
  std::uint64_t generation = 0;

  std::size_t width() const { return cells.size(); }
};

// Row of the given width with a single black cell at width/2.
CaState single_seed(std::size_t width, Boundary boundary);

// One synchronous update. Word-parallel: rule 30 uses the dedicated
// left XOR (center OR right) form, every other code the expanded truth
// table, both operating on whole 64-bit words. Requires width >= 1.
CaState step_row(const CaState& state, const Rule& rule);

// Reference per-cell implementation. Kept deliberately independent of the
// word-parallel path; the tests pin one against the other.
CaState step_row_naive(const CaState& state, const Rule& rule);

// steps+1 states including the initial one.
std::vector<CaState> evolve(const CaState& initial, const Rule& rule,
                            std::uint64_t steps);

// Center cell value after each of nbits steps, starting from a single
// center cell on a cyclic row. width must be odd and >= 3.
BitString center_column(std::size_t width, const Rule& rule, std::uint64_t nbits);

enum class PbmFormat {
  P1,  // ASCII
  P4,  // packed binary, rows byte-aligned
};

// Portable bitmap of an evolution, one row per generation, black = 1.
// Narrower rows (Growing histories) are centered against the widest row.
std::string render_pbm(const std::vector<CaState>& states,
                       PbmFormat format = PbmFormat::P1);

}  // namespace parity30::eca
