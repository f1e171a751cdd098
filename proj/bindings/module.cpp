// Python bindings for the parity30 core. Naturals cross the boundary as
// arbitrary-precision Python ints (via decimal strings), bit streams and fg
// words as plain str.

#include "parity30/codec.hpp"
#include "parity30/collatz.hpp"
#include "parity30/eca.hpp"
#include "parity30/errors.hpp"
#include "parity30/metrics.hpp"
#include "parity30/parity_hash.hpp"
#include "parity30/rule30_hash.hpp"
#include "parity30/stats.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace parity30;

namespace {

Natural to_natural(const py::object& value) {
  if (py::isinstance<py::int_>(value)) {
    return parse_natural(py::str(value).cast<std::string>());
  }
  if (py::isinstance<py::str>(value)) {
    return parse_natural(value.cast<std::string>());
  }
  throw py::type_error("expected int or str for a natural");
}

py::int_ to_py_int(const Natural& n) {
  PyObject* p = PyLong_FromString(n.str().c_str(), nullptr, 10);
  if (p == nullptr) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(p);
}

collatz::StepMap map_of(bool optimized) {
  return optimized ? collatz::StepMap::Optimized : collatz::StepMap::Unoptimized;
}

eca::Boundary boundary_of(const std::string& name) {
  if (name == "cyclic") return eca::Boundary::Cyclic;
  if (name == "zero") return eca::Boundary::ZeroPadded;
  if (name == "growing") return eca::Boundary::Growing;
  throw DomainError("boundary must be cyclic, zero or growing, got '" + name + "'");
}

parity_hash::Strategy strategy_of(const std::string& name) {
  if (name == "exhaustive") return parity_hash::Strategy::Exhaustive;
  if (name == "random") return parity_hash::Strategy::RandomSample;
  throw DomainError("strategy must be exhaustive or random, got '" + name + "'");
}

rule30_hash::Params params_of(const std::string& constant, std::uint64_t bits,
                              unsigned rule) {
  rule30_hash::Params p = constant == "pi"      ? rule30_hash::Params::pi(bits)
                          : constant == "zeros" ? rule30_hash::Params::zeros(bits)
                                                : rule30_hash::Params{
                                                      BitString::from_string(constant),
                                                      eca::Boundary::Cyclic, 2, 30};
  p.rule = rule;
  return p;
}

py::dict outcome_dict(const stats::TestOutcome& o) {
  py::dict d;
  d["statistic"] = o.statistic;
  d["p_value"] = o.p_value;
  d["pass"] = o.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Collatz parity sequences, fg encodings, parity and rule 30 hashes, "
            "search games, CA evolution, complexity metrics and stream statistics";

  py::register_exception<BudgetExceededError>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<InvalidCodewordError>(m, "InvalidCodeword", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigGuardError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParityParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "ParityDomainError", PyExc_ValueError);

  m.def(
      "step",
      [](const py::object& n, bool optimized) {
        return to_py_int(collatz::step(to_natural(n), map_of(optimized)));
      },
      py::arg("n"), py::arg("optimized") = true,
      "One application of the map: n/2 when even, the odd branch otherwise.");

  m.def(
      "trajectory",
      [](const py::object& n, bool optimized, std::uint64_t max_steps) {
        const auto t = collatz::trajectory(to_natural(n), map_of(optimized), max_steps);
        py::list values;
        for (const auto& v : t.values) values.append(to_py_int(v));
        py::dict d;
        d["values"] = values;
        d["reached_one"] = t.stop == collatz::StopReason::ReachedOne;
        return d;
      },
      py::arg("n"), py::arg("optimized") = true,
      py::arg("max_steps") = collatz::kDefaultStepCeiling);

  m.def(
      "parity",
      [](const py::object& n, bool optimized, std::uint64_t ceiling) {
        return collatz::parity_until_one(to_natural(n), map_of(optimized), ceiling).to_string();
      },
      py::arg("n"), py::arg("optimized") = true,
      py::arg("ceiling") = collatz::kDefaultStepCeiling,
      "Until-one parity sequence as a 0/1 string (empty for n = 1).");

  m.def(
      "parity_fixed",
      [](const py::object& n, std::uint64_t bits, bool optimized) {
        return collatz::parity_fixed(to_natural(n), bits, map_of(optimized)).to_string();
      },
      py::arg("n"), py::arg("bits"), py::arg("optimized") = true,
      "Exactly `bits` parity bits, riding the 1 -> 2 -> 1 cycle when needed.");

  m.def("parity_table_note", &collatz::parity_table_discrepancy_note);

  m.def(
      "encode",
      [](const py::object& n) { return codec::encode(to_natural(n)).str(); },
      py::arg("n"), "fg word of n (f = odd branch, g = even branch).");

  m.def(
      "decode",
      [](const std::string& word) { return to_py_int(codec::decode(codec::FgWord(word))); },
      py::arg("word"), "Natural encoded by an fg word; raises InvalidCodeword.");

  m.def(
      "language_stats",
      [](const py::object& n) {
        const auto s = codec::language_stats(to_natural(n));
        return py::make_tuple(s.binary_len, s.fg_len);
      },
      py::arg("n"), "(binary length, fg length) of n.");

  m.def(
      "parity_digest",
      [](const py::object& n, std::uint64_t bits, const std::string& padding, bool strict) {
        const auto pad = padding == "truncate" ? parity_hash::Padding::TruncateAtOne
                         : padding == "cycle"
                             ? parity_hash::Padding::CycleContinue
                             : throw DomainError("padding must be cycle or truncate");
        const auto d = parity_hash::digest(to_natural(n), bits, pad, strict);
        py::dict out;
        out["bits"] = d.bits.to_string();
        out["short"] = d.short_output;
        return out;
      },
      py::arg("n"), py::arg("bits") = parity_hash::kDefaultDigestBits,
      py::arg("padding") = "cycle", py::arg("strict") = false);

  m.def(
      "preimage_search",
      [](const std::string& prefix, std::uint64_t input_bits, const std::string& strategy,
         std::uint64_t budget, std::uint64_t seed) {
        parity_hash::SearchSpec spec =
            parity_hash::SearchSpec::for_prefix(BitString::from_string(prefix));
        if (input_bits > 0) spec.input_bits = input_bits;
        spec.strategy = strategy_of(strategy);
        spec.budget = budget;
        spec.seed = seed;
        const auto r = parity_hash::preimage_search(spec);
        py::dict out;
        out["found"] = r.x.has_value();
        out["x"] = r.x ? py::object(to_py_int(*r.x)) : py::none();
        out["tried"] = r.tried;
        out["verified"] = r.verified;
        out["exhausted"] = r.exhausted;
        return out;
      },
      py::arg("prefix"), py::arg("input_bits") = 0, py::arg("strategy") = "exhaustive",
      py::arg("budget") = 0, py::arg("seed") = 0);

  m.def(
      "collision_search",
      [](std::uint64_t digest_bits, std::uint64_t input_bits, const std::string& strategy,
         std::uint64_t budget, std::uint64_t seed) {
        const auto r = parity_hash::collision_search(digest_bits, input_bits,
                                                     strategy_of(strategy), budget, seed);
        py::dict out;
        out["found"] = r.pair.has_value();
        out["pair"] = r.pair ? py::object(py::make_tuple(to_py_int(r.pair->first),
                                                         to_py_int(r.pair->second)))
                             : py::none();
        out["tried"] = r.tried;
        out["verified"] = r.verified;
        out["exhausted"] = r.exhausted;
        return out;
      },
      py::arg("digest_bits"), py::arg("input_bits"), py::arg("strategy") = "exhaustive",
      py::arg("budget") = 0, py::arg("seed") = 0);

  m.def(
      "ca_evolve",
      [](const std::string& init, unsigned rule, std::uint64_t steps,
         const std::string& boundary) {
        const eca::CaState start{BitString::from_string(init), boundary_of(boundary), 0};
        std::vector<std::string> rows;
        for (const auto& s : eca::evolve(start, eca::Rule(rule), steps)) {
          rows.push_back(s.cells.to_string());
        }
        return rows;
      },
      py::arg("init"), py::arg("rule") = 30, py::arg("steps") = 1,
      py::arg("boundary") = "growing",
      "Row strings for steps+1 generations, initial row included.");

  m.def(
      "single_seed",
      [](std::size_t width) { return eca::single_seed(width, eca::Boundary::Growing).cells.to_string(); },
      py::arg("width"), "Row of `width` cells with one black center cell.");

  m.def(
      "center_column",
      [](std::size_t width, unsigned rule, std::uint64_t nbits) {
        return eca::center_column(width, eca::Rule(rule), nbits).to_string();
      },
      py::arg("width"), py::arg("rule") = 30, py::arg("nbits") = 128,
      "Center-cell stream from a single seed on a cyclic row.");

  m.def(
      "render_pbm",
      [](const std::vector<std::string>& rows, const std::string& format) {
        std::vector<eca::CaState> states;
        for (const auto& r : rows) {
          states.push_back({BitString::from_string(r), eca::Boundary::ZeroPadded, 0});
        }
        const auto fmt = format == "p4" ? eca::PbmFormat::P4 : eca::PbmFormat::P1;
        return py::bytes(eca::render_pbm(states, fmt));
      },
      py::arg("rows"), py::arg("format") = "p1");

  m.def(
      "rule30_digest",
      [](const std::string& message, const std::string& constant, std::uint64_t bits,
         unsigned rule) {
        return rule30_hash::digest(BitString::from_string(message),
                                   params_of(constant, bits, rule))
            .to_string();
      },
      py::arg("message"), py::arg("constant") = "zeros", py::arg("bits") = 128,
      py::arg("rule") = 30,
      "constant: 'zeros', 'pi', or an explicit 0/1 string (its length wins).");

  m.def(
      "rule30_digest_naive",
      [](const std::string& message, const std::string& constant, std::uint64_t bits,
         unsigned rule) {
        return rule30_hash::digest_naive(BitString::from_string(message),
                                         params_of(constant, bits, rule))
            .to_string();
      },
      py::arg("message"), py::arg("constant") = "zeros", py::arg("bits") = 128,
      py::arg("rule") = 30);

  m.def(
      "pi_bits",
      [](std::uint64_t bits) { return rule30_hash::pi_bits(bits).to_string(); },
      py::arg("bits"));

  m.def(
      "avalanche",
      [](std::uint64_t trials, std::uint64_t message_bits, std::uint64_t seed,
         const std::string& constant, std::uint64_t bits, unsigned rule) {
        const auto r = rule30_hash::avalanche_report(params_of(constant, bits, rule), trials,
                                                     message_bits, seed);
        py::dict out;
        out["mean"] = r.mean;
        out["stddev"] = r.stddev;
        out["samples"] = r.samples;
        return out;
      },
      py::arg("trials"), py::arg("message_bits"), py::arg("seed"),
      py::arg("constant") = "pi", py::arg("bits") = 128, py::arg("rule") = 30);

  m.def(
      "cyclomatic",
      [](std::uint64_t edges, std::uint64_t nodes) {
        const auto c = metrics::cyclomatic({nodes, edges, 0});
        return py::make_tuple(c.value, c.malformed);
      },
      py::arg("edges"), py::arg("nodes"), "(value, malformed) for e - n + 2.");

  m.def("cyclomatic_from_predicates", &metrics::cyclomatic_from_predicates,
        py::arg("predicates"));

  m.def(
      "path_count_bound",
      [](std::uint64_t iterations, std::uint64_t input_bits) {
        return to_py_int(metrics::path_count_bound(iterations, input_bits));
      },
      py::arg("iterations"), py::arg("input_bits"), "2^min(iterations, input_bits), exact.");

  m.def("empirical_path_count", &metrics::empirical_path_count, py::arg("input_bits"),
        py::arg("steps"));

  m.def(
      "analyze",
      [](const std::string& bits, double alpha) {
        const auto r = stats::analyze(BitString::from_string(bits), alpha);
        py::dict out;
        out["n_bits"] = r.n_bits;
        out["ones_fraction"] = r.ones_fraction;
        out["alpha"] = r.alpha;
        out["monobit"] = outcome_dict(r.monobit);
        out["runs"] = outcome_dict(r.runs);
        py::dict chi;
        for (const auto& [k, o] : r.chi_square) chi[py::int_(k)] = outcome_dict(o);
        out["chi_square"] = chi;
        out["serial_correlation"] = r.serial_correlation;
        out["serial"] = outcome_dict(r.serial);
        out["all_pass"] = r.all_pass();
        return out;
      },
      py::arg("bits"), py::arg("alpha") = 0.01);

  m.def(
      "emit_table",
      [](const std::string& kind, const py::object& lo, const py::object& hi) {
        const auto table_kind = kind == "binary" ? stats::TableKind::BinaryEncoding
                                : kind == "parity"
                                    ? stats::TableKind::ParityMapping
                                    : throw DomainError("kind must be binary or parity");
        py::list rows;
        for (const auto& row : stats::emit_table(table_kind, to_natural(lo), to_natural(hi))) {
          rows.append(py::make_tuple(to_py_int(row.n), row.encoding));
        }
        return rows;
      },
      py::arg("kind"), py::arg("lo"), py::arg("hi"));

  m.attr("__version__") = "0.1.0";
}
