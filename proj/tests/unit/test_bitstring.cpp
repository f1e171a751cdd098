#include "parity30/bitstring.hpp"
#include "parity30/errors.hpp"
#include "parity30/natural.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using parity30::BitString;

TEST_CASE("string round trip and indexing") {
  const BitString b = BitString::from_string("1001000");
  CHECK(b.size() == 7);
  CHECK(b.get(0));
  CHECK_FALSE(b.get(1));
  CHECK(b.get(3));
  CHECK(b.to_string() == "1001000");
  CHECK(b.count_ones() == 2);
  CHECK_THROWS_AS(BitString::from_string("10x"), parity30::ParseError);
}

TEST_CASE("push_back, append and equality match a reference model") {
  std::mt19937_64 gen(7);
  BitString b;
  std::vector<bool> model;
  for (int i = 0; i < 1000; ++i) {
    const bool bit = gen() & 1;
    b.push_back(bit);
    model.push_back(bit);
  }
  REQUIRE(b.size() == model.size());
  for (std::size_t i = 0; i < model.size(); ++i) CHECK(b.get(i) == model[i]);

  BitString tail = BitString::from_string("110");
  BitString joined = b;
  joined.append(tail);
  CHECK(joined.size() == b.size() + 3);
  CHECK(joined.to_string() == b.to_string() + "110");
  CHECK(joined.starts_with(b));
  CHECK(joined.prefix(b.size()) == b);
  CHECK_FALSE(joined == b);
}

TEST_CASE("prefix and starts_with across word boundaries") {
  BitString b(200);
  b.set(0, true);
  b.set(63, true);
  b.set(64, true);
  b.set(199, true);
  CHECK(b.prefix(65).to_string() ==
        BitString::from_string(std::string("1") + std::string(62, '0') + "11").to_string());
  CHECK(b.starts_with(b.prefix(64)));
  CHECK(b.starts_with(b.prefix(127)));
  CHECK(b.starts_with(BitString{}));
  BitString other = b.prefix(65);
  other.set(1, true);
  CHECK_FALSE(b.starts_with(other));
}

TEST_CASE("hex round trip") {
  const BitString b = BitString::from_hex("0x243f");
  CHECK(b.size() == 16);
  CHECK(b.to_string() == "0010010000111111");
  CHECK(b.to_hex() == "243f");
  CHECK(BitString::from_hex(b.to_hex()) == b);
  CHECK_THROWS_AS(BitString::from_string("101").to_hex(), parity30::DomainError);
  CHECK_THROWS_AS(BitString::from_hex("zz"), parity30::ParseError);
}

TEST_CASE("hasher treats equal strings equally and respects size") {
  const BitString a = BitString::from_string("0001");
  const BitString b = BitString::from_string("00010");
  BitString::Hasher h;
  CHECK(a == BitString::from_string("0001"));
  CHECK(h(a) == h(BitString::from_string("0001")));
  CHECK_FALSE(a == b);  // same words, different size
  CHECK(h(a) != h(b));
}

TEST_CASE("hamming distance") {
  const BitString a = BitString::from_string("10110");
  const BitString b = BitString::from_string("00111");
  CHECK(parity30::hamming_distance(a, b) == 2);
  CHECK(parity30::hamming_distance(a, a) == 0);
  CHECK_THROWS_AS(parity30::hamming_distance(a, BitString::from_string("1")),
                  parity30::DomainError);
}

TEST_CASE("natural parsing") {
  using parity30::parse_natural;
  CHECK(parse_natural("13") == 13);
  CHECK(parse_natural("0x10") == 16);
  CHECK(parse_natural("0X10") == 16);
  CHECK(parse_natural("013") == 13);  // decimal, never octal
  CHECK(parse_natural("0") == 0);
  CHECK(parity30::to_decimal(parse_natural("340282366920938463463374607431768211456")) ==
        "340282366920938463463374607431768211456");
  CHECK(parity30::to_binary(parity30::Natural(13)) == "1101");
  CHECK(parity30::bit_length(parity30::Natural(1)) == 1);
  CHECK(parity30::bit_length(parity30::Natural(8)) == 4);
  CHECK(parity30::bit_length(parity30::Natural(0)) == 0);
  CHECK_THROWS_AS(parse_natural(""), parity30::ParseError);
  CHECK_THROWS_AS(parse_natural("12a"), parity30::ParseError);
  CHECK_THROWS_AS(parse_natural("0x"), parity30::ParseError);
  CHECK_THROWS_AS(parse_natural("-4"), parity30::ParseError);
}
