#include "parity30/collatz.hpp"
#include "parity30/errors.hpp"
#include "parity30/stats.hpp"

#include <doctest.h>

#include <cstdint>
#include <string>

using namespace parity30;
using namespace parity30::stats;

namespace {

BitString alternating(std::size_t n) {
  BitString b(n);
  for (std::size_t i = 0; i < n; i += 2) b.set(i, true);
  return b;
}

}  // namespace

TEST_CASE("alternating stream: perfect balance, hopeless runs") {
  const auto report = analyze(alternating(10'000), 0.01);
  CHECK(report.n_bits == 10'000);
  CHECK(report.ones_fraction == 0.5);
  CHECK(report.monobit.statistic == 0.0);
  CHECK(report.monobit.pass);
  CHECK_FALSE(report.runs.pass);
  CHECK(report.runs.p_value < 1e-9);
  CHECK_FALSE(report.all_pass());
}

TEST_CASE("all-zero stream fails monobit") {
  const auto report = analyze(BitString(10'000), 0.01);
  CHECK(report.ones_fraction == 0.0);
  CHECK_FALSE(report.monobit.pass);
  CHECK_FALSE(report.runs.pass);
  CHECK_FALSE(report.serial.pass);
}

TEST_CASE("an exactly balanced stream passes monobit at any alpha") {
  const auto strict = analyze(alternating(10'000), 0.999);
  CHECK(strict.monobit.statistic == 0.0);
  CHECK(strict.monobit.p_value == 1.0);
  CHECK(strict.monobit.pass);
}

TEST_CASE("analyze is deterministic") {
  const auto a = analyze(alternating(5'000), 0.05);
  const auto b = analyze(alternating(5'000), 0.05);
  CHECK(a.monobit.p_value == b.monobit.p_value);
  CHECK(a.runs.p_value == b.runs.p_value);
  CHECK(a.serial.p_value == b.serial.p_value);
  CHECK(a.chi_square.at(3).p_value == b.chi_square.at(3).p_value);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(analyze(BitString(99), 0.01), DomainError);
  CHECK_THROWS_AS(analyze(BitString(200), 0.0), DomainError);
  CHECK_THROWS_AS(analyze(BitString(200), 1.0), DomainError);
}

TEST_CASE("emit_table kinds") {
  const auto binary = emit_table(TableKind::BinaryEncoding, Natural(1), Natural(4));
  REQUIRE(binary.size() == 4);
  CHECK(binary[0].encoding == "1");
  CHECK(binary[1].encoding == "10");
  CHECK(binary[2].encoding == "11");
  CHECK(binary[3].encoding == "100");

  const auto parity8 = emit_table(TableKind::ParityMapping, Natural(8), Natural(8));
  REQUIRE(parity8.size() == 1);
  CHECK(parity8[0].encoding == "000");

  const auto parity1 = emit_table(TableKind::ParityMapping, Natural(1), Natural(1));
  CHECK(parity1[0].encoding.empty());

  CHECK_THROWS_AS(emit_table(TableKind::BinaryEncoding, Natural(4), Natural(1)), DomainError);
  CHECK_THROWS_AS(emit_table(TableKind::BinaryEncoding, Natural(1), Natural(2'000'000)),
                  ConfigError);
}

TEST_CASE("parity table agrees with the collatz module") {
  const auto rows = emit_table(TableKind::ParityMapping, Natural(1), Natural(10'000));
  for (const auto& row : rows) {
    REQUIRE(row.encoding == collatz::parity_until_one(row.n).to_string());
  }
}

TEST_CASE("compressibility probe") {
  std::vector<TableRow> constant;
  for (int i = 0; i < 2000; ++i) constant.push_back({Natural(i + 1), "000"});
  const auto trivially = compressibility_probe(constant);
  CHECK(trivially.ratio < 0.1);  // control: repeated column collapses

  const auto binary = compressibility_probe(
      emit_table(TableKind::BinaryEncoding, Natural(1), Natural(10'000)));
  const auto parity = compressibility_probe(
      emit_table(TableKind::ParityMapping, Natural(1), Natural(10'000)));
  CHECK(binary.ratio > 0.0);
  CHECK(parity.ratio > 0.0);
  CHECK(binary.raw_size > 0);
  MESSAGE("deflate ratio, binary column [1,10^4]: " << binary.ratio);
  MESSAGE("deflate ratio, parity column [1,10^4]: " << parity.ratio);

  CHECK_THROWS_AS(compressibility_probe({}), DomainError);

  // hook is honoured
  const auto fixed = compressibility_probe(constant, [](const std::vector<unsigned char>&) {
    return std::size_t{7};
  });
  CHECK(fixed.compressed_size == 7);
}
