// parity30 command line tool: trajectories, parity sequences, fg codec,
// parity/rule-30 hashing, preimage/collision search games, CA evolution,
// complexity metrics, stream statistics and table emission.

#include "parity30/codec.hpp"
#include "parity30/collatz.hpp"
#include "parity30/eca.hpp"
#include "parity30/errors.hpp"
#include "parity30/metrics.hpp"
#include "parity30/parity_hash.hpp"
#include "parity30/rule30_hash.hpp"
#include "parity30/stats.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace parity30;
using json = nlohmann::ordered_json;

std::atomic<bool> g_interrupted{false};

void on_sigint(int) { g_interrupted.store(true); }

// exit codes: 0 ok, 2 usage, 3 domain/parse, 4 budget, 5 codeword, 6 guard, 130 interrupted
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitBudget = 4;
constexpr int kExitCodeword = 5;
constexpr int kExitConfig = 6;
constexpr int kExitInterrupted = 130;

const std::map<std::string, collatz::StepMap> kMapNames{
    {"optimized", collatz::StepMap::Optimized},
    {"unoptimized", collatz::StepMap::Unoptimized},
};

const std::map<std::string, eca::Boundary> kBoundaryNames{
    {"cyclic", eca::Boundary::Cyclic},
    {"zero", eca::Boundary::ZeroPadded},
    {"growing", eca::Boundary::Growing},
};

parity_hash::SearchControl search_control() {
  parity_hash::SearchControl control;
  control.cancel = &g_interrupted;
  control.progress = [](std::uint64_t tried) {
    std::cerr << "progress: tried=" << tried << std::endl;
  };
  return control;
}

// Message bits arrive either as a 0/1 string or as 0x-prefixed hex (MSB first).
BitString parse_bits(const std::string& text) {
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
    return BitString::from_hex(text);
  }
  return BitString::from_string(text);
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

BitString bits_from_bytes(const std::string& raw, bool ascii) {
  if (ascii) {
    std::string cleaned;
    for (const char c : raw) {
      if (c == '0' || c == '1') {
        cleaned += c;
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        throw ParseError(std::string("stream: unexpected byte '") + c + "'");
      }
    }
    return BitString::from_string(cleaned);
  }
  BitString bits(raw.size() * 8);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto byte = static_cast<unsigned char>(raw[i]);
    for (int b = 0; b < 8; ++b) {
      if ((byte >> (7 - b)) & 1u) bits.set(i * 8 + static_cast<std::size_t>(b), true);
    }
  }
  return bits;
}

void print_search_common(std::uint64_t tried, bool verified, bool exhausted, bool interrupted) {
  std::cout << "tried=" << tried << "\n";
  std::cout << "verified=" << (verified ? 1 : 0) << "\n";
  std::cout << "exhausted=" << (exhausted ? 1 : 0) << "\n";
  std::cout << "interrupted=" << (interrupted ? 1 : 0) << "\n";
}

void print_outcome(const stats::TestOutcome& o, const std::string& name) {
  std::cout << name << "_stat=" << o.statistic << "\n";
  std::cout << name << "_p=" << o.p_value << "\n";
  std::cout << name << "_pass=" << (o.pass ? 1 : 0) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Collatz parity sequences, fg encodings, parity and rule 30 hashes, "
               "search games, CA evolution, complexity metrics and stream statistics"};
  app.require_subcommand(1);
  argv = app.ensure_utf8(argv);

  // trajectory <n>
  auto* traj_cmd = app.add_subcommand("trajectory", "Iterate the map until 1 or a step cap");
  std::string traj_n;
  std::string traj_map = "optimized";
  std::uint64_t traj_max = collatz::kDefaultStepCeiling;
  traj_cmd->add_option("n", traj_n, "Start value (decimal or 0x hex)")->required();
  traj_cmd->add_option("--map", traj_map)->check(CLI::IsMember({"optimized", "unoptimized"}));
  traj_cmd->add_option("--max-steps", traj_max, "Stop after this many steps");
  traj_cmd->callback([&] {
    const auto t = collatz::trajectory(parse_natural(traj_n), kMapNames.at(traj_map), traj_max);
    for (const auto& v : t.values) std::cout << v.str() << "\n";
    if (t.stop == collatz::StopReason::MaxSteps) {
      std::cerr << "note: stopped at max-steps before reaching 1" << std::endl;
    }
  });

  // parity <n>
  auto* parity_cmd = app.add_subcommand("parity", "Parity sequence of the trajectory");
  std::string parity_n;
  std::string parity_map = "optimized";
  std::string parity_mode = "until-one";
  std::uint64_t parity_bits = 128;
  std::uint64_t parity_ceiling = collatz::kDefaultStepCeiling;
  parity_cmd->add_option("n", parity_n, "Input (decimal or 0x hex)")->required();
  parity_cmd->add_option("--map", parity_map)->check(CLI::IsMember({"optimized", "unoptimized"}));
  parity_cmd->add_option("--mode", parity_mode)->check(CLI::IsMember({"until-one", "fixed"}));
  parity_cmd->add_option("--bits", parity_bits, "Bit count for --mode fixed");
  parity_cmd->add_option("--ceiling", parity_ceiling, "Step ceiling for --mode until-one");
  parity_cmd->callback([&] {
    const auto mode = parity_mode == "fixed" ? collatz::ParityMode::fixed(parity_bits)
                                             : collatz::ParityMode::until_one();
    const auto seq = collatz::parity_sequence(parse_natural(parity_n), kMapNames.at(parity_map),
                                              mode, parity_ceiling);
    std::cout << seq.bits.to_string() << "\n";
  });

  // codec encode|decode
  auto* codec_cmd = app.add_subcommand("codec", "Bijective fg-word codec");
  codec_cmd->require_subcommand(1);
  auto* enc_cmd = codec_cmd->add_subcommand("encode", "Natural to fg word");
  std::string enc_n;
  enc_cmd->add_option("n", enc_n)->required();
  enc_cmd->callback([&] { std::cout << codec::encode(parse_natural(enc_n)).str() << "\n"; });
  auto* dec_cmd = codec_cmd->add_subcommand("decode", "fg word to natural");
  std::string dec_word;
  dec_cmd->add_option("word", dec_word, "Word over {f,g}; empty decodes to 1");
  dec_cmd->callback([&] { std::cout << codec::decode(codec::FgWord(dec_word)).str() << "\n"; });

  // hash parity|rule30
  auto* hash_cmd = app.add_subcommand("hash", "Parity and rule 30 hashes");
  hash_cmd->require_subcommand(1);

  auto* hp_cmd = hash_cmd->add_subcommand("parity", "Parity-sequence digest");
  std::string hp_in;
  std::uint64_t hp_bits = parity_hash::kDefaultDigestBits;
  std::string hp_padding = "cycle";
  bool hp_strict = false;
  hp_cmd->add_option("--in", hp_in, "Input natural (decimal or 0x hex)")->required();
  hp_cmd->add_option("--bits", hp_bits, "Digest length");
  hp_cmd->add_option("--padding", hp_padding)->check(CLI::IsMember({"cycle", "truncate"}));
  hp_cmd->add_flag("--strict", hp_strict, "Reject inputs below 256 bits");
  hp_cmd->callback([&] {
    const auto padding = hp_padding == "truncate" ? parity_hash::Padding::TruncateAtOne
                                                  : parity_hash::Padding::CycleContinue;
    const auto d = parity_hash::digest(parse_natural(hp_in), hp_bits, padding, hp_strict);
    std::cout << d.bits.to_string() << "\n";
    if (d.short_output) {
      std::cerr << "note: trajectory reached 1 early, digest is " << d.bits.size() << " of "
                << hp_bits << " bits" << std::endl;
    }
  });

  auto* hr_cmd = hash_cmd->add_subcommand("rule30", "Rule 30 hash");
  std::string hr_msg;
  std::string hr_const = "zeros";
  std::uint64_t hr_bits = 128;
  hr_cmd->add_option("--msg", hr_msg, "Message bits (0/1 string or 0x hex)")->required();
  hr_cmd->add_option("--const", hr_const, "Constant: zeros or pi")
      ->check(CLI::IsMember({"zeros", "pi"}));
  hr_cmd->add_option("--bits", hr_bits, "Digest length = constant length");
  hr_cmd->callback([&] {
    const auto params = hr_const == "pi" ? rule30_hash::Params::pi(hr_bits)
                                         : rule30_hash::Params::zeros(hr_bits);
    const BitString d = rule30_hash::digest(parse_bits(hr_msg), params);
    if (d.size() % 4 == 0) std::cout << "hex=" << d.to_hex() << "\n";
    std::cout << "bin=" << d.to_string() << "\n";
  });

  // search preimage|collision
  auto* search_cmd = app.add_subcommand("search", "Preimage and collision games");
  search_cmd->require_subcommand(1);

  auto* sp_cmd = search_cmd->add_subcommand("preimage", "Find x whose digest starts with a prefix");
  std::string sp_prefix;
  std::uint64_t sp_input_bits = 0;
  std::string sp_strategy = "exhaustive";
  std::uint64_t sp_budget = 0;
  std::optional<std::uint64_t> sp_seed;
  sp_cmd->add_option("--prefix", sp_prefix, "Target parity prefix (0/1; may be empty)");
  sp_cmd->add_option("--input-bits", sp_input_bits,
                     "Exact bit length of candidates (default 2x prefix)");
  sp_cmd->add_option("--strategy", sp_strategy)->check(CLI::IsMember({"exhaustive", "random"}));
  sp_cmd->add_option("--budget", sp_budget, "Candidate cap (required for random)");
  sp_cmd->add_option("--seed", sp_seed, "RNG seed (required for random)");
  sp_cmd->callback([&] {
    parity_hash::SearchSpec spec =
        parity_hash::SearchSpec::for_prefix(sp_prefix.empty() ? BitString{}
                                                              : BitString::from_string(sp_prefix));
    if (sp_input_bits > 0) spec.input_bits = sp_input_bits;
    if (sp_strategy == "random") {
      if (!sp_seed) throw ConfigError("random strategy requires --seed");
      spec.strategy = parity_hash::Strategy::RandomSample;
      spec.seed = *sp_seed;
    }
    spec.budget = sp_budget;
    const auto r = parity_hash::preimage_search(spec, search_control());
    std::cout << "strategy=" << sp_strategy << "\n";
    if (spec.strategy == parity_hash::Strategy::RandomSample) {
      std::cout << "seed=" << spec.seed << "\n" << "budget=" << spec.budget << "\n";
    }
    std::cout << "found=" << (r.x ? 1 : 0) << "\n";
    if (r.x) std::cout << "x=" << r.x->str() << "\n";
    print_search_common(r.tried, r.verified, r.exhausted, r.interrupted);
    if (r.interrupted) std::exit(kExitInterrupted);
  });

  auto* sc_cmd = search_cmd->add_subcommand("collision", "Find two inputs with equal digests");
  std::uint64_t sc_digest_bits = 0;
  std::uint64_t sc_input_bits = 0;
  std::string sc_strategy = "exhaustive";
  std::uint64_t sc_budget = 0;
  std::optional<std::uint64_t> sc_seed;
  sc_cmd->add_option("--digest-bits", sc_digest_bits)->required();
  sc_cmd->add_option("--input-bits", sc_input_bits)->required();
  sc_cmd->add_option("--strategy", sc_strategy)->check(CLI::IsMember({"exhaustive", "random"}));
  sc_cmd->add_option("--budget", sc_budget, "Candidate cap (required for random)");
  sc_cmd->add_option("--seed", sc_seed, "RNG seed (required for random)");
  sc_cmd->callback([&] {
    auto strategy = parity_hash::Strategy::Exhaustive;
    std::uint64_t seed = 0;
    if (sc_strategy == "random") {
      if (!sc_seed) throw ConfigError("random strategy requires --seed");
      strategy = parity_hash::Strategy::RandomSample;
      seed = *sc_seed;
    }
    const auto r = parity_hash::collision_search(sc_digest_bits, sc_input_bits, strategy,
                                                 sc_budget, seed, search_control());
    std::cout << "strategy=" << sc_strategy << "\n";
    if (strategy == parity_hash::Strategy::RandomSample) {
      std::cout << "seed=" << seed << "\n" << "budget=" << sc_budget << "\n";
    }
    std::cout << "found=" << (r.pair ? 1 : 0) << "\n";
    if (r.pair) {
      std::cout << "x=" << r.pair->first.str() << "\n";
      std::cout << "y=" << r.pair->second.str() << "\n";
    }
    print_search_common(r.tried, r.verified, r.exhausted, r.interrupted);
    if (r.interrupted) std::exit(kExitInterrupted);
  });

  // ca evolve|stream
  auto* ca_cmd = app.add_subcommand("ca", "Elementary cellular automata");
  ca_cmd->require_subcommand(1);

  auto* ce_cmd = ca_cmd->add_subcommand("evolve", "Evolve a row and print or render it");
  unsigned ce_rule = 30;
  std::uint64_t ce_width = 43;
  std::uint64_t ce_steps = 21;
  std::string ce_boundary = "growing";
  std::string ce_out = "txt";
  std::string ce_init;
  bool ce_raw = false;
  ce_cmd->add_option("--rule", ce_rule, "Wolfram code 0-255");
  ce_cmd->add_option("--width", ce_width, "Row width (single center cell by default)");
  ce_cmd->add_option("--steps", ce_steps);
  ce_cmd->add_option("--boundary", ce_boundary)
      ->check(CLI::IsMember({"cyclic", "zero", "growing"}));
  ce_cmd->add_option("--out", ce_out)->check(CLI::IsMember({"txt", "pbm"}));
  ce_cmd->add_option("--init", ce_init, "Initial row as 0/1 (overrides --width)");
  ce_cmd->add_flag("--raw", ce_raw, "Binary P4 instead of ASCII P1 (pbm only)");
  ce_cmd->callback([&] {
    const auto boundary = kBoundaryNames.at(ce_boundary);
    eca::CaState start = ce_init.empty()
                             ? eca::single_seed(ce_width, boundary)
                             : eca::CaState{BitString::from_string(ce_init), boundary, 0};
    const auto history = eca::evolve(start, eca::Rule(ce_rule), ce_steps);
    if (ce_out == "pbm") {
      std::cout << eca::render_pbm(history,
                                   ce_raw ? eca::PbmFormat::P4 : eca::PbmFormat::P1);
    } else {
      for (const auto& s : history) std::cout << s.cells.to_string() << "\n";
    }
  });

  auto* cs_cmd = ca_cmd->add_subcommand("stream", "Center-column bit stream");
  unsigned cs_rule = 30;
  std::uint64_t cs_width = 257;
  std::uint64_t cs_nbits = 0;
  cs_cmd->add_option("--rule", cs_rule, "Wolfram code 0-255");
  cs_cmd->add_option("--width", cs_width, "Odd cyclic row width");
  cs_cmd->add_option("--nbits", cs_nbits, "Bits to emit")->required();
  cs_cmd->callback([&] {
    std::cout << eca::center_column(cs_width, eca::Rule(cs_rule), cs_nbits).to_string() << "\n";
  });

  // metrics cc|paths
  auto* metrics_cmd = app.add_subcommand("metrics", "Cyclomatic metrics and path counts");
  metrics_cmd->require_subcommand(1);

  auto* cc_cmd = metrics_cmd->add_subcommand("cc", "Cyclomatic number");
  std::optional<std::uint64_t> cc_edges, cc_nodes, cc_predicates;
  cc_cmd->add_option("--edges", cc_edges);
  cc_cmd->add_option("--nodes", cc_nodes);
  cc_cmd->add_option("--predicates", cc_predicates);
  cc_cmd->callback([&] {
    if (cc_predicates) {
      if (cc_edges || cc_nodes) {
        throw ConfigError("metrics cc: use either --predicates or --edges/--nodes");
      }
      std::cout << metrics::cyclomatic_from_predicates(*cc_predicates) << "\n";
      return;
    }
    if (!cc_edges || !cc_nodes) {
      throw ConfigError("metrics cc: requires --edges and --nodes, or --predicates");
    }
    const auto cc = metrics::cyclomatic({*cc_nodes, *cc_edges, 0});
    std::cout << cc.value << "\n";
    if (cc.malformed) {
      std::cerr << "warning: cyclomatic number below 1; not a single-entry/exit flow graph"
                << std::endl;
    }
  });

  auto* paths_cmd = metrics_cmd->add_subcommand("paths", "Execution-path bound per cell");
  std::uint64_t pc_input_bits = 0;
  std::uint64_t pc_steps = 0;
  bool pc_empirical = false;
  paths_cmd->add_option("--input-bits", pc_input_bits)->required();
  paths_cmd->add_option("--steps", pc_steps)->required();
  paths_cmd->add_flag("--empirical", pc_empirical,
                      "Also count distinct parity prefixes by enumeration");
  paths_cmd->callback([&] {
    const Natural bound = metrics::path_count_bound(pc_steps, pc_input_bits);
    if (pc_empirical) {
      std::cout << "bound=" << bound.str() << "\n";
      std::cout << "empirical=" << metrics::empirical_path_count(pc_input_bits, pc_steps) << "\n";
    } else {
      std::cout << bound.str() << "\n";
    }
  });

  // stats analyze
  auto* stats_cmd = app.add_subcommand("stats", "Randomness test battery");
  auto* an_cmd = stats_cmd->add_subcommand("analyze", "Monobit, runs, chi-square, serial");
  std::string an_in;
  double an_alpha = 0.01;
  std::string an_encoding = "ascii";
  an_cmd->add_option("--in", an_in, "Input file or - for stdin")->required();
  an_cmd->add_option("--alpha", an_alpha, "Significance level");
  an_cmd->add_option("--encoding", an_encoding, "ascii 0/1 or raw bytes (MSB first)")
      ->check(CLI::IsMember({"ascii", "raw"}));
  an_cmd->callback([&] {
    const auto bits = bits_from_bytes(read_source(an_in), an_encoding == "ascii");
    const auto report = stats::analyze(bits, an_alpha);
    std::cout << "n_bits=" << report.n_bits << "\n";
    std::cout << "ones_fraction=" << report.ones_fraction << "\n";
    std::cout << "alpha=" << report.alpha << "\n";
    print_outcome(report.monobit, "monobit");
    print_outcome(report.runs, "runs");
    for (const auto& [k, outcome] : report.chi_square) {
      print_outcome(outcome, "chi2_k" + std::to_string(k));
    }
    std::cout << "serial_correlation=" << report.serial_correlation << "\n";
    print_outcome(report.serial, "serial");
    std::cout << "all_pass=" << (report.all_pass() ? 1 : 0) << "\n";
  });

  // tables emit
  auto* tables_cmd = app.add_subcommand("tables", "Encoding tables");
  auto* te_cmd = tables_cmd->add_subcommand("emit", "Emit a table over a range");
  std::string te_kind = "parity";
  std::string te_from, te_to;
  std::string te_format = "csv";
  te_cmd->add_option("--kind", te_kind)->check(CLI::IsMember({"binary", "parity", "fg"}));
  te_cmd->add_option("--from", te_from)->required();
  te_cmd->add_option("--to", te_to)->required();
  te_cmd->add_option("--format", te_format)->check(CLI::IsMember({"csv", "json-lines"}));
  te_cmd->callback([&] {
    const Natural lo = parse_natural(te_from);
    const Natural hi = parse_natural(te_to);
    const bool csv = te_format == "csv";
    if (te_kind == "fg") {
      if (csv) std::cout << "n,binary,fg\n";
      for (const auto& row : codec::language_table(lo, hi)) {
        if (csv) {
          std::cout << row.n.str() << "," << row.binary << "," << row.fg << "\n";
        } else {
          std::cout << json{{"n", row.n.str()}, {"binary", row.binary}, {"fg", row.fg}}.dump()
                    << "\n";
        }
      }
      return;
    }
    const auto kind = te_kind == "binary" ? stats::TableKind::BinaryEncoding
                                          : stats::TableKind::ParityMapping;
    if (csv) std::cout << "n,encoding\n";
    for (const auto& row : stats::emit_table(kind, lo, hi)) {
      if (csv) {
        std::cout << row.n.str() << "," << row.encoding << "\n";
      } else {
        std::cout << json{{"n", row.n.str()}, {"encoding", row.encoding}}.dump() << "\n";
      }
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << std::endl;
    return kExitUsage;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_sigint);
  try {
    return run(argc, argv);
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: budget-exceeded: " << e.what() << std::endl;
    return kExitBudget;
  } catch (const InvalidCodewordError& e) {
    std::cerr << "error: invalid-codeword: " << e.what() << std::endl;
    return kExitCodeword;
  } catch (const ConfigError& e) {
    std::cerr << "error: config: " << e.what() << std::endl;
    return kExitConfig;
  } catch (const ParseError& e) {
    std::cerr << "error: parse: " << e.what() << std::endl;
    return kExitDomain;
  } catch (const DomainError& e) {
    std::cerr << "error: domain: " << e.what() << std::endl;
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << std::endl;
    return 1;
  }
}
