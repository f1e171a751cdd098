#include "parity30/codec.hpp"

#include "parity30/errors.hpp"

namespace parity30::codec {

FgWord::FgWord(std::string symbols) : symbols_(std::move(symbols)) {
  for (const char c : symbols_) {
    if (c != 'f' && c != 'g') {
      throw ParseError("fg word: expected f/g, got '" + std::string(1, c) + "'");
    }
  }
}

FgWord FgWord::from_parity(const BitString& bits) {
  FgWord out;
  out.symbols_.resize(bits.size(), 'g');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits.get(i)) out.symbols_[i] = 'f';
  }
  return out;
}

BitString FgWord::to_parity() const {
  BitString out(symbols_.size());
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == 'f') out.set(i, true);
  }
  return out;
}

FgWord encode(const Natural& n, std::uint64_t step_ceiling) {
  return FgWord::from_parity(collatz::parity_until_one(n, collatz::StepMap::Optimized, step_ceiling));
}

Natural decode(const FgWord& w) {
  Natural n = 1;
  const std::string& s = w.str();
  for (std::size_t i = s.size(); i-- > 0;) {
    if (s[i] == 'g') {
      n <<= 1;
      continue;
    }
    // reverse f: n -> (2n-1)/3, which must land on an odd value
    Natural m = (n << 1) - 1;
    if (m % 3 != 0) {
      throw InvalidCodewordError("decode: reverse f at position " + std::to_string(i) +
                                     " hits " + m.str() + ", not divisible by 3",
                                 i);
    }
    m /= 3;
    if (!boost::multiprecision::bit_test(m, 0)) {
      throw InvalidCodewordError("decode: reverse f at position " + std::to_string(i) +
                                     " yields even " + m.str(),
                                 i);
    }
    n = std::move(m);
  }
  return n;
}

LanguageStats language_stats(const Natural& n, std::uint64_t step_ceiling) {
  if (n < 1) throw DomainError("language_stats: requires n >= 1, got " + n.str());
  LanguageStats out;
  out.n = n;
  out.binary_len = bit_length(n);
  out.fg_len = collatz::parity_until_one(n, collatz::StepMap::Optimized, step_ceiling).size();
  return out;
}

std::vector<LanguageRow> language_table(const Natural& lo, const Natural& hi) {
  if (lo < 1 || hi < lo) {
    throw DomainError("language_table: requires 1 <= lo <= hi");
  }
  if (hi - lo > 1'000'000) {
    throw ConfigError("language_table: range capped at 10^6 rows");
  }
  std::vector<LanguageRow> rows;
  for (Natural n = lo; n <= hi; ++n) {
    rows.push_back({n, to_binary(n), encode(n).str()});
  }
  return rows;
}

}  // namespace parity30::codec
