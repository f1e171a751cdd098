#include "parity30/errors.hpp"
#include "parity30/rule30_hash.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace parity30;
using namespace parity30::rule30_hash;

TEST_CASE("pi bits come from the embedded expansion") {
  CHECK(pi_bits(4).to_string() == "0010");
  CHECK(pi_bits(8).to_string() == "00100100");
  CHECK(pi_bits(32).to_hex() == "243f6a88");
  // independently published first 576 bits (18 32-bit words)
  CHECK(pi_bits(576).to_hex() ==
        "243f6a8885a308d313198a2e03707344a4093822299f31d0082efa98ec4e6c89"
        "452821e638d01377be5466cf34e90c6cc0ac29b7c97c50dd3f84d5b5b5470917"
        "9216d5d98979fb1b");
  CHECK(pi_bits(kPiTableBits).size() == 4096);
  CHECK_THROWS_AS(pi_bits(0), DomainError);
  CHECK_THROWS_AS(pi_bits(kPiTableBits + 1), DomainError);
}

TEST_CASE("step budget follows the row length") {
  CHECK(steps_for(Params::zeros(128), 128) == 512);
  CHECK(steps_for(Params::zeros(1), 1) == 4);
  CHECK(steps_for(Params::pi(64), 32) == 192);
}

TEST_CASE("all-zero row stays a fixed point") {
  const BitString d = digest(BitString::from_string("0"), Params::zeros(1));
  CHECK(d.to_string() == "0");
  const BitString d8 = digest(BitString(8), Params::zeros(8));
  CHECK(d8.to_string() == "00000000");
}

TEST_CASE("paper-scale shape: 128-bit constant and message") {
  const Params p = Params::zeros(128);
  BitString msg(128);
  msg.set(0, true);
  msg.set(127, true);
  const BitString d = digest(msg, p);
  CHECK(d.size() == 128);
  CHECK(d == digest(msg, p));  // deterministic
}

TEST_CASE("empty inputs are rejected") {
  CHECK_THROWS_AS(digest(BitString{}, Params::zeros(8)), DomainError);
  CHECK_THROWS_AS(digest(BitString(8), Params{BitString{}, eca::Boundary::Cyclic, 2, 30}),
                  DomainError);
}

TEST_CASE("fast path equals the per-cell reference") {
  std::mt19937_64 gen(11);
  for (int iter = 0; iter < 200; ++iter) {
    const std::uint64_t c_bits = gen() % 64 + 1;
    const std::uint64_t m_bits = gen() % (256 - c_bits) + 1;
    Params p = Params::zeros(c_bits);
    for (std::size_t i = 0; i < c_bits; ++i) p.constant.set(i, gen() & 1);
    BitString msg(m_bits);
    for (std::size_t i = 0; i < m_bits; ++i) msg.set(i, gen() & 1);
    REQUIRE(digest(msg, p) == digest_naive(msg, p));
  }
}

TEST_CASE("frozen reference digest for a small message") {
  // computed once with the per-cell reference; pins both implementations
  const BitString msg = BitString::from_string("10110010");
  CHECK(digest_naive(msg, Params::zeros(8)).to_string() == "00110000");
  CHECK(digest(msg, Params::zeros(8)).to_string() == "00110000");
  CHECK(digest(msg, Params::pi(8)).to_string() == "00010001");
}

TEST_CASE("avalanche harness") {
  Params control = Params::zeros(16);
  control.rule = 0;
  const auto calm = avalanche_report(control, 10, 16, 3);
  CHECK(calm.mean == 0.0);

  const auto single = avalanche_report(Params::zeros(16), 1, 16, 3);
  CHECK(single.samples.size() == 1);
  CHECK(single.trials == 1);

  const auto r30 = avalanche_report(Params::pi(32), 20, 32, 3);
  CHECK(r30.samples.size() == 20);
  CHECK(r30.mean > 0.0);
  const auto again = avalanche_report(Params::pi(32), 20, 32, 3);
  CHECK(r30.mean == again.mean);  // seeded, deterministic

  CHECK_THROWS_AS(avalanche_report(Params::zeros(8), 0, 8, 1), DomainError);
}

TEST_CASE("all-zero constant with all-zero message is the documented degenerate case") {
  const BitString d = digest(BitString(128), Params::zeros(128));
  CHECK(d.count_ones() == 0);
  // the pi constant does not collapse on the same message
  const BitString d_pi = digest(BitString(128), Params::pi(128));
  CHECK(d_pi.count_ones() > 0);
}
