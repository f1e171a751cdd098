#include "parity30/bitstring.hpp"

#include "parity30/errors.hpp"

#include <bit>
#include <stdexcept>

namespace parity30 {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitString::BitString(std::size_t size, bool fill)
    : words_(words_for(size), fill ? ~0ull : 0ull), size_(size) {
  mask_tail();
}

void BitString::mask_tail() {
  if (const std::size_t rem = size_ % kWordBits; rem != 0 && !words_.empty()) {
    words_.back() &= ~0ull >> (kWordBits - rem);
  }
}

BitString BitString::from_words(std::vector<std::uint64_t> words, std::size_t size) {
  BitString out;
  words.resize(words_for(size), 0);
  out.words_ = std::move(words);
  out.size_ = size;
  out.mask_tail();
  return out;
}

BitString BitString::from_string(std::string_view zeros_and_ones) {
  BitString out(zeros_and_ones.size());
  for (std::size_t i = 0; i < zeros_and_ones.size(); ++i) {
    const char c = zeros_and_ones[i];
    if (c != '0' && c != '1') {
      throw ParseError("bit string: expected 0/1, got '" + std::string(1, c) + "'");
    }
    if (c == '1') out.set(i, true);
  }
  return out;
}

BitString BitString::from_hex(std::string_view hex) {
  if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
    hex.remove_prefix(2);
  }
  if (hex.empty()) throw ParseError("hex bit string: empty input");
  BitString out(hex.size() * 4);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const int d = hex_digit(hex[i]);
    if (d < 0) throw ParseError("hex bit string: invalid digit '" + std::string(1, hex[i]) + "'");
    for (int b = 0; b < 4; ++b) {
      if ((d >> (3 - b)) & 1) out.set(i * 4 + b, true);
    }
  }
  return out;
}

bool BitString::get(std::size_t i) const {
  if (i >= size_) throw std::out_of_range("BitString::get past end");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitString::set(std::size_t i, bool value) {
  if (i >= size_) throw std::out_of_range("BitString::set past end");
  const std::uint64_t mask = 1ull << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void BitString::push_back(bool value) {
  if (size_ % kWordBits == 0) words_.push_back(0);
  ++size_;
  if (value) set(size_ - 1, true);
}

void BitString::append(const BitString& tail) {
  for (std::size_t i = 0; i < tail.size(); ++i) push_back(tail.get(i));
}

BitString BitString::prefix(std::size_t n) const {
  const std::size_t take = n < size_ ? n : size_;
  BitString out;
  out.words_.assign(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>(words_for(take)));
  out.size_ = take;
  out.mask_tail();
  return out;
}

bool BitString::starts_with(const BitString& p) const {
  if (p.size_ > size_) return false;
  const std::size_t full = p.size_ / kWordBits;
  for (std::size_t k = 0; k < full; ++k) {
    if (words_[k] != p.words_[k]) return false;
  }
  if (const std::size_t rem = p.size_ % kWordBits; rem != 0) {
    const std::uint64_t mask = ~0ull >> (kWordBits - rem);
    if ((words_[full] & mask) != p.words_[full]) return false;
  }
  return true;
}

std::size_t BitString::count_ones() const {
  std::size_t total = 0;
  for (const auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::string BitString::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

std::string BitString::to_hex() const {
  if (size_ % 4 != 0) {
    throw DomainError("to_hex: size must be a multiple of 4");
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(size_ / 4, '0');
  for (std::size_t i = 0; i < out.size(); ++i) {
    int v = 0;
    for (int b = 0; b < 4; ++b) v = (v << 1) | static_cast<int>(get(i * 4 + static_cast<std::size_t>(b)));
    out[i] = kDigits[v];
  }
  return out;
}

std::size_t BitString::Hasher::operator()(const BitString& b) const {
  // FNV-1a over the packed words; the masked tail keeps this canonical.
  std::uint64_t h = 1469598103934665603ull;
  const auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (i * 8)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(b.size_);
  for (const auto w : b.words_) mix(w);
  return static_cast<std::size_t>(h);
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) {
    throw DomainError("hamming_distance: size mismatch");
  }
  std::size_t total = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t k = 0; k < wa.size(); ++k) {
    total += static_cast<std::size_t>(std::popcount(wa[k] ^ wb[k]));
  }
  return total;
}

}  // namespace parity30
