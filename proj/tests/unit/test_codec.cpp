#include "parity30/codec.hpp"
#include "parity30/errors.hpp"

#include <doctest.h>

#include <cstdint>
#include <string>
#include <unordered_set>

using namespace parity30;
using namespace parity30::codec;

TEST_CASE("encode spells the parity over f and g") {
  CHECK(encode(Natural(13)).str() == "fggfggg");
  CHECK(encode(Natural(1)).str().empty());
  CHECK(encode(Natural(8)).str() == "ggg");
}

TEST_CASE("decode walks the word backwards from 1") {
  CHECK(decode(FgWord("fggfggg")) == 13);
  CHECK(decode(FgWord()) == 1);
  CHECK(decode(FgWord("ggg")) == 8);
}

TEST_CASE("decode validates reverse f steps") {
  // gg gives 1 -> 2 -> 4; then f needs (2*4-1)/3 = 7/3
  try {
    decode(FgWord("fgg"));
    FAIL("expected InvalidCodewordError");
  } catch (const InvalidCodewordError& e) {
    CHECK(e.position == 0);
  }
  // f from 1 directly: (2-1)/3 fails at the last symbol
  try {
    decode(FgWord("ggf"));
    FAIL("expected InvalidCodewordError");
  } catch (const InvalidCodewordError& e) {
    CHECK(e.position == 2);
  }
  // fg rides the cycle: 1 -f-> 2 -g-> 1, a valid word outside encode's image
  CHECK(decode(FgWord("fg")) == 1);
  // ffg: g -> 2, f -> (4-1)/3 = 1 (odd, fine), then f on 1 fails again
  try {
    decode(FgWord("ffg"));
    FAIL("expected InvalidCodewordError");
  } catch (const InvalidCodewordError& e) {
    CHECK(e.position == 0);
  }
  CHECK_THROWS_AS(FgWord("abc"), ParseError);
}

TEST_CASE("language stats count both encodings") {
  const auto s13 = language_stats(Natural(13));
  CHECK(s13.binary_len == 4);
  CHECK(s13.fg_len == 7);
  const auto s1 = language_stats(Natural(1));
  CHECK(s1.binary_len == 1);
  CHECK(s1.fg_len == 0);
  const auto s8 = language_stats(Natural(8));
  CHECK(s8.binary_len == 4);
  CHECK(s8.fg_len == 3);
}

TEST_CASE("round trips and injectivity") {
  std::unordered_set<std::string> words;
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    const FgWord w = encode(Natural(n));
    REQUIRE(decode(w) == n);
    REQUIRE(encode(decode(w)) == w);
    if (n <= (1u << 16)) words.insert(w.str());
  }
  CHECK(words.size() == (1u << 16));
}

TEST_CASE("fg words never beat the binary encoding on average") {
  double binary_total = 0;
  double fg_total = 0;
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    const auto s = language_stats(Natural(n));
    binary_total += static_cast<double>(s.binary_len);
    fg_total += static_cast<double>(s.fg_len);
  }
  CHECK(fg_total >= binary_total);
  MESSAGE("fg/binary mean length ratio over [1, 10^4]: " << fg_total / binary_total);
}

TEST_CASE("language table lists n, binary, fg") {
  const auto rows = language_table(Natural(13), Natural(14));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 13);
  CHECK(rows[0].binary == "1101");
  CHECK(rows[0].fg == "fggfggg");
  CHECK_THROWS_AS(language_table(Natural(0), Natural(4)), DomainError);
  CHECK_THROWS_AS(language_table(Natural(1), Natural(2'000'000)), ConfigError);
}

TEST_CASE("parity conversion round trips") {
  const FgWord w("fggfggg");
  CHECK(w.to_parity().to_string() == "1001000");
  CHECK(FgWord::from_parity(w.to_parity()) == w);
}
