// Python module `gfmatch`: instances, solvers, witness checking, instance
// generation from clique graphs and the complexity-table coverage check.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gfm/classifier.hpp"
#include "gfm/core.hpp"
#include "gfm/dp.hpp"
#include "gfm/error.hpp"
#include "gfm/reductions.hpp"
#include "gfm/solvers.hpp"

namespace py = pybind11;
using namespace gfm;

namespace {

std::vector<std::string> names(const Alphabet& alphabet, const Word& w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (Symbol s : w) out.push_back(alphabet.name(s));
  return out;
}

Word word(const Alphabet& alphabet, const std::vector<std::string>& tokens) {
  Word w;
  for (const auto& t : tokens) {
    const auto s = alphabet.find(t);
    if (!s) throw py::value_error("'" + t + "' is not a text letter");
    w.push_back(*s);
  }
  return w;
}

Algorithm algorithm_from(const std::string& name) {
  const auto a = parse_algorithm(name);
  if (!a) throw py::value_error("unknown algorithm '" + name + "' (auto|enum|anchored|brute|search)");
  return *a;
}

Problem problem_from(const std::string& name) {
  if (name == "gfm") return Problem::gfm;
  if (name == "gpm") return Problem::gpm;
  throw py::value_error("unknown problem '" + name + "' (gfm|gpm)");
}

py::dict witness_dict(const Instance& inst, const MatchWitness& w) {
  py::dict mapping, wildcards;
  for (const auto& [letter, image] : w.substitution) mapping[py::str(inst.sigma_p.name(letter))] = names(inst.sigma_t, image);
  for (const auto& [pos, image] : w.wildcards) wildcards[py::int_(pos)] = names(inst.sigma_t, image);
  py::dict out;
  out["mapping"] = mapping;
  out["wildcards"] = wildcards;
  return out;
}

py::dict solve_py(const Instance& inst, const std::string& algorithm, bool minimize, std::uint64_t node_budget,
                  unsigned jobs) {
  SolveOptions options;
  options.node_budget = node_budget;
  options.jobs = jobs;
  const Algorithm a = algorithm_from(algorithm);
  SolveResult r;
  {
    py::gil_scoped_release release;
    r = minimize ? min_wildcards(inst, a, options) : solve(inst, a, options);
  }
  py::dict out;
  out["matched"] = r.matched;
  out["algorithm"] = std::string(to_string(r.algorithm));
  out["min_wildcards"] = r.min_wildcards ? py::object(py::int_(*r.min_wildcards)) : py::object(py::none());
  out["witness"] = r.witness ? py::object(witness_dict(inst, *r.witness)) : py::object(py::none());
  out["witness_text"] = serialize_witness(inst, r.matched ? r.witness : std::nullopt);
  out["nodes"] = r.stats.nodes;
  out["substitutions"] = r.stats.substitutions;
  return out;
}

}  // namespace

PYBIND11_MODULE(gfmatch, m) {
  m.doc() = "Generalized function / parameterized matching with wildcards";

  // Library errors map onto dedicated Python exceptions; parse errors are ValueErrors.
  py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
  py::register_exception<NotApplicable>(m, "NotApplicable", PyExc_RuntimeError);
  py::register_exception<DecodeFailure>(m, "DecodeFailure", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MissingImage>(m, "MissingImage", PyExc_ValueError);

  py::class_<Instance>(m, "Instance", "A text, a pattern, the variant and the bounds")
      .def(py::init([](const std::string& source) { return parse_instance(source); }), py::arg("source"),
           "Parses the line-based instance format")
      .def_property_readonly("text", [](const Instance& i) { return names(i.sigma_t, i.text); })
      .def_property_readonly("pattern", [](const Instance& i) { return names(i.sigma_p, i.pattern); })
      .def_property_readonly("problem", [](const Instance& i) { return std::string(to_string(i.variant.problem)); })
      .def_property_readonly("empty_wildcards", [](const Instance& i) { return i.variant.empty_wildcards; })
      .def_property("wildcard_budget", [](const Instance& i) { return i.bounds.wildcard_budget; },
                    [](Instance& i, std::size_t q) { i.bounds.wildcard_budget = q; })
      .def_property_readonly("max_letter_len", [](const Instance& i) { return i.bounds.max_letter_len; })
      .def_property_readonly("max_wildcard_len", [](const Instance& i) { return i.bounds.max_wildcard_len; })
      .def("serialize", &serialize_instance)
      .def("__repr__", [](const Instance& i) {
        return "<gfmatch.Instance |t|=" + std::to_string(i.text.size()) + " |p|=" +
               std::to_string(i.pattern.size()) + " q=" + std::to_string(i.bounds.wildcard_budget) + ">";
      });

  m.def("parse_instance", [](const std::string& source) { return parse_instance(source); }, py::arg("source"));

  m.def("solve", &solve_py, py::arg("instance"), py::arg("algorithm") = "auto", py::arg("min_wildcards") = false,
        py::arg("node_budget") = SolveOptions{}.node_budget, py::arg("jobs") = 1u,
        "Solves the instance; returns matched, min_wildcards, witness and statistics");

  m.def(
      "verify",
      [](const Instance& inst, const std::string& witness, bool strict) -> py::tuple {
        const auto w = parse_witness(witness, inst);
        if (!w) return py::make_tuple(false, "no_match", "witness records no match");
        const auto report = verify_witness(inst, *w, VerifyOptions{strict});
        return py::make_tuple(report.passed(), std::string(to_string(report.violation)), report.message);
      },
      py::arg("instance"), py::arg("witness"), py::arg("strict_injective") = false,
      "Checks a witness in the witness file format; returns (passed, violation, message)");

  m.def(
      "parameters",
      [](const Instance& inst) {
        const auto p = measure_parameters(inst);
        py::dict out;
        out["occt"] = p.occ_text;
        out["sigt"] = p.text_alphabet;
        out["occp"] = p.occ_pattern;
        out["sigp"] = p.pattern_alphabet;
        out["maxfp"] = p.max_letter_len;
        out["numq"] = p.wildcard_budget;
        out["maxfq"] = p.max_wildcard_len;
        return out;
      },
      py::arg("instance"), "The seven instance parameters (None for unbounded lengths)");

  m.def(
      "min_wildcards_with",
      [](const Instance& inst, const std::map<std::string, std::vector<std::string>>& f) -> std::optional<std::size_t> {
        Substitution sub;
        for (const auto& [letter, image] : f) {
          const auto s = inst.sigma_p.find(letter);
          if (!s) throw py::value_error("'" + letter + "' is not a pattern letter");
          sub[*s] = word(inst.sigma_t, image);
        }
        const auto table = dp::similarity(inst, sub);
        const auto g = table.at(inst.pattern.size(), inst.text.size());
        if (!g) return std::nullopt;
        return inst.pattern.size() - *g;
      },
      py::arg("instance"), py::arg("substitution"),
      "Fewest wildcards needed with the letter images fixed, or None");

  m.def(
      "generate",
      [](const std::string& reduction, const std::string& graph, const std::string& problem) {
        const auto kind = parse_reduction(reduction);
        if (!kind) throw py::value_error("unknown reduction '" + reduction + "'");
        const auto g = normalize_graph(parse_graph(graph));
        const auto out = reduce(*kind, g, problem_from(problem));
        const auto clique = find_clique_bruteforce(g);
        py::dict d;
        d["instance"] = out.instance;
        d["budget"] = out.budget;
        d["k"] = out.k;
        d["n"] = out.n;
        d["m"] = out.m;
        d["clique"] = clique ? py::object(py::cast(*clique)) : py::object(py::none());
        std::optional<MatchWitness> expected;
        if (clique) expected = forward_witness(out, *clique);
        d["expected_witness"] = serialize_witness(out.instance, expected);
        return d;
      },
      py::arg("reduction"), py::arg("graph"), py::arg("problem") = "gfm",
      "Encodes a multicolored clique question (graph file text) as an instance");

  m.def(
      "find_clique",
      [](const std::string& graph) { return find_clique_bruteforce(parse_graph(graph)); }, py::arg("graph"));

  m.def(
      "is_square_free", [](const std::vector<std::string>& tokens) {
        Alphabet a;
        Word w;
        for (const auto& t : tokens) w.push_back(a.intern(t));
        return is_square_free(w);
      },
      py::arg("tokens"));

  m.def(
      "classify",
      [](const std::string& problem, const std::optional<std::string>& rows_source) {
        const auto rows = rows_source ? parse_rows(*rows_source) : builtin_rows();
        const auto report = check_completeness(problem_from(problem), rows);
        std::vector<std::string> uncovered, conflicts;
        for (const auto& c : report.uncovered) uncovered.push_back(c.to_string());
        for (const auto& c : report.conflicts) conflicts.push_back(c.to_string());
        py::dict d;
        d["summary"] = summary_line(report);
        d["covered"] = report.covered();
        d["complete"] = report.complete();
        d["uncovered"] = uncovered;
        d["conflicts"] = conflicts;
        return d;
      },
      py::arg("problem") = "gfm", py::arg("rows") = py::none(),
      "Coverage of the 128 parameter subsets by the complexity table");

  m.attr("__version__") = "0.1.0";
}
