#include "parity30/eca.hpp"

#include "parity30/errors.hpp"

#include <algorithm>
#include <utility>

namespace parity30::eca {

namespace {

// Neighbor views over the packed words: up[i] = cells[i-1], down[i] = cells[i+1].
// Bits at or past the row width are left unmasked; callers mask the result row.

std::vector<std::uint64_t> shift_up(const BitString& b, bool cyclic) {
  const auto w = b.words();
  std::vector<std::uint64_t> out(w.size(), 0);
  std::uint64_t carry = (cyclic && !b.empty() && b.get(b.size() - 1)) ? 1u : 0u;
  for (std::size_t k = 0; k < w.size(); ++k) {
    out[k] = (w[k] << 1) | carry;
    carry = w[k] >> 63;
  }
  return out;
}

std::vector<std::uint64_t> shift_down(const BitString& b, bool cyclic) {
  const auto w = b.words();
  std::vector<std::uint64_t> out(w.size(), 0);
  for (std::size_t k = 0; k < w.size(); ++k) {
    const std::uint64_t hi = (k + 1 < w.size()) ? w[k + 1] : 0;
    out[k] = (w[k] >> 1) | (hi << 63);
  }
  if (cyclic && !b.empty() && b.get(0)) {
    const std::size_t top = b.size() - 1;
    out[top / 64] |= 1ull << (top % 64);
  }
  return out;
}

// cells shifted one position right within a row two cells wider; the new
// outer cells are white.
BitString pad_one_each_side(const BitString& b) {
  const auto w = b.words();
  std::vector<std::uint64_t> out((b.size() + 2 + 63) / 64, 0);
  std::uint64_t carry = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    out[k] = (w[k] << 1) | carry;
    carry = w[k] >> 63;
  }
  if (w.size() < out.size()) out[w.size()] = carry;
  return BitString::from_words(std::move(out), b.size() + 2);
}

BitString apply_rule_words(const BitString& cells, const Rule& rule, bool cyclic) {
  const auto center = cells.words();
  const auto up = shift_up(cells, cyclic);
  const auto down = shift_down(cells, cyclic);
  std::vector<std::uint64_t> next(center.size(), 0);
  if (rule.code() == 30) {
    for (std::size_t k = 0; k < next.size(); ++k) {
      next[k] = up[k] ^ (center[k] | down[k]);
    }
  } else {
    for (unsigned idx = 0; idx < 8; ++idx) {
      if (((rule.code() >> idx) & 1u) == 0) continue;
      for (std::size_t k = 0; k < next.size(); ++k) {
        const std::uint64_t l = (idx & 4u) ? up[k] : ~up[k];
        const std::uint64_t c = (idx & 2u) ? center[k] : ~center[k];
        const std::uint64_t r = (idx & 1u) ? down[k] : ~down[k];
        next[k] |= l & c & r;
      }
    }
  }
  return BitString::from_words(std::move(next), cells.size());
}

}  // namespace

Rule::Rule(unsigned code) : code_(code) {
  if (code > 255) {
    throw DomainError("rule: Wolfram code must be in [0, 255], got " + std::to_string(code));
  }
}

CaState single_seed(std::size_t width, Boundary boundary) {
  if (width < 1) throw DomainError("single_seed: width must be >= 1");
  CaState s{BitString(width), boundary, 0};
  s.cells.set(width / 2, true);
  return s;
}

CaState step_row(const CaState& state, const Rule& rule) {
  if (state.width() < 1) throw DomainError("step_row: width must be >= 1");
  if (state.boundary == Boundary::Growing) {
    // One zero-padded update of the widened row covers exactly the cells the
    // white background can turn on.
    return {apply_rule_words(pad_one_each_side(state.cells), rule, false),
            state.boundary, state.generation + 1};
  }
  return {apply_rule_words(state.cells, rule, state.boundary == Boundary::Cyclic),
          state.boundary, state.generation + 1};
}

CaState step_row_naive(const CaState& state, const Rule& rule) {
  const std::size_t w = state.width();
  if (w < 1) throw DomainError("step_row_naive: width must be >= 1");
  const auto cell = [&](std::ptrdiff_t i) -> bool {
    if (state.boundary == Boundary::Cyclic) {
      const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(w);
      return state.cells.get(static_cast<std::size_t>(((i % m) + m) % m));
    }
    if (i < 0 || i >= static_cast<std::ptrdiff_t>(w)) return false;
    return state.cells.get(static_cast<std::size_t>(i));
  };
  if (state.boundary == Boundary::Growing) {
    BitString next(w + 2);
    for (std::ptrdiff_t i = -1; i <= static_cast<std::ptrdiff_t>(w); ++i) {
      if (rule.output(cell(i - 1), cell(i), cell(i + 1))) {
        next.set(static_cast<std::size_t>(i + 1), true);
      }
    }
    return {std::move(next), state.boundary, state.generation + 1};
  }
  BitString next(w);
  for (std::size_t i = 0; i < w; ++i) {
    const auto si = static_cast<std::ptrdiff_t>(i);
    if (rule.output(cell(si - 1), cell(si), cell(si + 1))) {
      next.set(i, true);
    }
  }
  return {std::move(next), state.boundary, state.generation + 1};
}

std::vector<CaState> evolve(const CaState& initial, const Rule& rule, std::uint64_t steps) {
  std::vector<CaState> history;
  history.reserve(steps + 1);
  history.push_back(initial);
  for (std::uint64_t t = 0; t < steps; ++t) {
    history.push_back(step_row(history.back(), rule));
  }
  return history;
}

BitString center_column(std::size_t width, const Rule& rule, std::uint64_t nbits) {
  if (width < 3 || width % 2 == 0) {
    throw DomainError("center_column: width must be odd and >= 3");
  }
  CaState state = single_seed(width, Boundary::Cyclic);
  BitString out;
  for (std::uint64_t t = 0; t < nbits; ++t) {
    state = step_row(state, rule);
    out.push_back(state.cells.get(width / 2));
  }
  return out;
}

std::string render_pbm(const std::vector<CaState>& states, PbmFormat format) {
  if (states.empty()) throw DomainError("render_pbm: no rows");
  std::size_t max_width = 0;
  for (const auto& s : states) max_width = std::max(max_width, s.width());
  std::string out = (format == PbmFormat::P1 ? "P1\n" : "P4\n");
  out += std::to_string(max_width) + " " + std::to_string(states.size()) + "\n";
  const std::size_t row_bytes = (max_width + 7) / 8;
  for (const auto& s : states) {
    const std::size_t offset = (max_width - s.width()) / 2;
    if (format == PbmFormat::P1) {
      std::string line(max_width, '0');
      for (std::size_t i = 0; i < s.width(); ++i) {
        if (s.cells.get(i)) line[offset + i] = '1';
      }
      out += line;
      out += '\n';
    } else {
      std::string packed(row_bytes, '\0');
      for (std::size_t i = 0; i < s.width(); ++i) {
        if (s.cells.get(i)) {
          const std::size_t pos = offset + i;
          packed[pos / 8] |= static_cast<char>(0x80u >> (pos % 8));
        }
      }
      out += packed;
    }
  }
  return out;
}

}  // namespace parity30::eca
