#include "parity30/rule30_hash.hpp"

#include "parity30/errors.hpp"

#include <cmath>
#include <random>

namespace parity30::rule30_hash {

namespace {

BitString run(const BitString& message, const Params& params, bool naive) {
  if (params.constant.empty()) throw DomainError("rule30 digest: empty constant");
  if (message.empty()) throw DomainError("rule30 digest: empty message");
  BitString row = params.constant;
  row.append(message);
  const std::uint64_t steps = steps_for(params, message.size());
  const eca::Rule rule(params.rule);
  eca::CaState state{std::move(row), params.boundary, 0};
  for (std::uint64_t t = 0; t < steps; ++t) {
    state = naive ? eca::step_row_naive(state, rule) : eca::step_row(state, rule);
  }
  return state.cells.prefix(params.constant.size());
}

BitString random_bits(std::mt19937_64& gen, std::uint64_t nbits) {
  std::vector<std::uint64_t> words((nbits + 63) / 64);
  for (auto& w : words) w = gen();
  return BitString::from_words(std::move(words), nbits);
}

}  // namespace

Params Params::zeros(std::uint64_t digest_bits) {
  return Params{BitString(digest_bits), eca::Boundary::Cyclic, 2, 30};
}

Params Params::pi(std::uint64_t digest_bits) {
  return Params{pi_bits(digest_bits), eca::Boundary::Cyclic, 2, 30};
}

BitString digest(const BitString& message, const Params& params) {
  return run(message, params, false);
}

BitString digest_naive(const BitString& message, const Params& params) {
  return run(message, params, true);
}

AvalancheReport avalanche_report(const Params& params, std::uint64_t trials,
                                 std::uint64_t message_bits, std::uint64_t seed) {
  if (trials < 1) throw DomainError("avalanche: requires trials >= 1");
  if (message_bits < 1) throw DomainError("avalanche: requires message_bits >= 1");
  AvalancheReport report;
  report.trials = trials;
  report.samples.reserve(trials);
  std::mt19937_64 gen(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    BitString message = random_bits(gen, message_bits);
    BitString flipped = message;
    const std::size_t pos = static_cast<std::size_t>(gen() % message_bits);
    flipped.set(pos, !flipped.get(pos));
    const BitString a = digest(message, params);
    const BitString b = digest(flipped, params);
    report.samples.push_back(static_cast<double>(hamming_distance(a, b)) /
                             static_cast<double>(a.size()));
  }
  double sum = 0.0;
  for (const double s : report.samples) sum += s;
  report.mean = sum / static_cast<double>(trials);
  double var = 0.0;
  for (const double s : report.samples) var += (s - report.mean) * (s - report.mean);
  report.stddev = std::sqrt(var / static_cast<double>(trials));
  return report;
}

}  // namespace parity30::rule30_hash
