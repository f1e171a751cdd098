#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace parity30 {

// Dynamically sized bit sequence. Index 0 is the leftmost bit: the first
// parity step, the leftmost CA cell, the first digest bit. Bits are packed
// into 64-bit words (bit i lives in word i/64 at position i%64) so the CA
// kernels can work word-parallel. Bits past size() in the last word are
// always zero.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t size, bool fill = false);

  // Takes ownership of pre-built words; trailing bits are masked off.
  static BitString from_words(std::vector<std::uint64_t> words, std::size_t size);

  // Parses a string of '0'/'1'. Throws ParseError on other characters.
  static BitString from_string(std::string_view zeros_and_ones);

  // Parses hex (optionally 0x-prefixed), 4 bits per digit, MSB first.
  static BitString from_hex(std::string_view hex);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);
  void push_back(bool value);
  void append(const BitString& tail);

  // First min(n, size()) bits.
  BitString prefix(std::size_t n) const;
  bool starts_with(const BitString& p) const;

  std::size_t count_ones() const;

  std::string to_string() const;

  // MSB-first hex; size() must be a multiple of 4.
  std::string to_hex() const;

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const BitString& a, const BitString& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

  struct Hasher {
    std::size_t operator()(const BitString& b) const;
  };

 private:
  void mask_tail();

  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

// Number of differing bits; sizes must match.
std::size_t hamming_distance(const BitString& a, const BitString& b);

}  // namespace parity30
