#include "parity30/stats.hpp"

#include "parity30/collatz.hpp"
#include "parity30/errors.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <zlib.h>

#include <cmath>

namespace parity30::stats {

namespace {

double erfc_p(double z) { return std::erfc(std::abs(z) / std::sqrt(2.0)); }

TestOutcome monobit_test(const BitString& bits, double alpha) {
  const double n = static_cast<double>(bits.size());
  const double s = 2.0 * static_cast<double>(bits.count_ones()) - n;
  TestOutcome out;
  out.statistic = s / std::sqrt(n);
  out.p_value = erfc_p(out.statistic);
  out.pass = out.p_value >= alpha;
  return out;
}

TestOutcome runs_test(const BitString& bits, double alpha) {
  const double n = static_cast<double>(bits.size());
  const double pi = static_cast<double>(bits.count_ones()) / n;
  TestOutcome out;
  // frequency prerequisite: a heavily biased stream fails outright
  if (std::abs(pi - 0.5) >= 2.0 / std::sqrt(n)) {
    out.statistic = 0.0;
    out.p_value = 0.0;
    out.pass = false;
    return out;
  }
  std::uint64_t runs = 1;
  for (std::size_t i = 0; i + 1 < bits.size(); ++i) {
    if (bits.get(i) != bits.get(i + 1)) ++runs;
  }
  out.statistic = static_cast<double>(runs);
  out.p_value = std::erfc(std::abs(static_cast<double>(runs) - 2.0 * n * pi * (1.0 - pi)) /
                          (2.0 * std::sqrt(2.0 * n) * pi * (1.0 - pi)));
  out.pass = out.p_value >= alpha;
  return out;
}

TestOutcome kgram_chi_square(const BitString& bits, unsigned k, double alpha) {
  const std::size_t blocks = bits.size() / k;
  const std::size_t cells = 1u << k;
  std::vector<std::uint64_t> counts(cells, 0);
  for (std::size_t b = 0; b < blocks; ++b) {
    std::size_t v = 0;
    for (unsigned j = 0; j < k; ++j) v = (v << 1) | static_cast<std::size_t>(bits.get(b * k + j));
    ++counts[v];
  }
  const double expected = static_cast<double>(blocks) / static_cast<double>(cells);
  double chi2 = 0.0;
  for (const auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    chi2 += d * d / expected;
  }
  TestOutcome out;
  out.statistic = chi2;
  out.p_value = boost::math::gamma_q(static_cast<double>(cells - 1) / 2.0, chi2 / 2.0);
  out.pass = out.p_value >= alpha;
  return out;
}

}  // namespace

bool StreamReport::all_pass() const {
  if (!monobit.pass || !runs.pass || !serial.pass) return false;
  for (const auto& [k, outcome] : chi_square) {
    if (!outcome.pass) return false;
  }
  return true;
}

StreamReport analyze(const BitString& bits, double alpha) {
  if (bits.size() < kMinStreamBits) {
    throw DomainError("analyze: stream must hold at least " +
                      std::to_string(kMinStreamBits) + " bits, got " +
                      std::to_string(bits.size()));
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("analyze: alpha must lie in (0, 1)");
  }
  StreamReport report;
  report.n_bits = bits.size();
  report.alpha = alpha;
  report.ones_fraction =
      static_cast<double>(bits.count_ones()) / static_cast<double>(bits.size());
  report.monobit = monobit_test(bits, alpha);
  report.runs = runs_test(bits, alpha);
  for (unsigned k = 1; k <= 4; ++k) {
    report.chi_square[k] = kgram_chi_square(bits, k, alpha);
  }
  // lag-1 serial correlation over consecutive pairs
  const std::size_t pairs = bits.size() - 1;
  std::uint64_t s1 = 0, s2 = 0, s12 = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto a = static_cast<std::uint64_t>(bits.get(i));
    const auto b = static_cast<std::uint64_t>(bits.get(i + 1));
    s1 += a;
    s2 += b;
    s12 += a & b;
  }
  const double m = static_cast<double>(pairs);
  const double num = m * static_cast<double>(s12) -
                     static_cast<double>(s1) * static_cast<double>(s2);
  const double den1 = m * static_cast<double>(s1) - static_cast<double>(s1) * static_cast<double>(s1);
  const double den2 = m * static_cast<double>(s2) - static_cast<double>(s2) * static_cast<double>(s2);
  if (den1 <= 0.0 || den2 <= 0.0) {
    report.serial_correlation = 1.0;  // constant stream: degenerate, fails
    report.serial = {1.0, 0.0, false};
  } else {
    report.serial_correlation = num / std::sqrt(den1 * den2);
    report.serial.statistic = report.serial_correlation;
    report.serial.p_value = erfc_p(report.serial_correlation * std::sqrt(m));
    report.serial.pass = report.serial.p_value >= alpha;
  }
  return report;
}

std::vector<TableRow> emit_table(TableKind kind, const Natural& lo, const Natural& hi) {
  if (lo < 1 || hi < lo) throw DomainError("emit_table: requires 1 <= lo <= hi");
  if (hi - lo > 1'000'000) throw ConfigError("emit_table: range capped at 10^6 rows");
  std::vector<TableRow> rows;
  for (Natural n = lo; n <= hi; ++n) {
    if (kind == TableKind::BinaryEncoding) {
      rows.push_back({n, to_binary(n)});
    } else {
      rows.push_back({n, collatz::parity_until_one(n).to_string()});
    }
  }
  return rows;
}

std::size_t deflate_size(const std::vector<unsigned char>& bytes) {
  uLongf dest_len = compressBound(static_cast<uLong>(bytes.size()));
  std::vector<unsigned char> dest(dest_len);
  const int rc = compress2(dest.data(), &dest_len, bytes.data(),
                           static_cast<uLong>(bytes.size()), Z_DEFAULT_COMPRESSION);
  if (rc != Z_OK) throw Error("deflate_size: zlib failure " + std::to_string(rc));
  return static_cast<std::size_t>(dest_len);
}

CompressionProbe compressibility_probe(const std::vector<TableRow>& rows,
                                       const Compressor& compress) {
  if (rows.empty()) throw DomainError("compressibility_probe: empty table");
  std::vector<unsigned char> bytes;
  for (const auto& row : rows) {
    bytes.insert(bytes.end(), row.encoding.begin(), row.encoding.end());
    bytes.push_back('\n');
  }
  CompressionProbe probe;
  probe.raw_size = bytes.size();
  probe.compressed_size = compress(bytes);
  probe.ratio = static_cast<double>(probe.compressed_size) /
                static_cast<double>(probe.raw_size);
  return probe;
}

}  // namespace parity30::stats
