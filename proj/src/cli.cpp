#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gfm/classifier.hpp"
#include "gfm/cli.hpp"
#include "gfm/core.hpp"
#include "gfm/error.hpp"
#include "gfm/reductions.hpp"
#include "gfm/solvers.hpp"

namespace gfm::cli {

namespace {

/// I/O failure; reported with exit code 2 like a parse error.
class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw IoError("cannot write '" + path + "'");
}

// Prefixes parse errors with the file they came from.
template <typename F>
auto with_path(const std::string& path, F&& parse) {
  try {
    return parse(read_file(path));
  } catch (const ParseError& e) {
    throw IoError(path + ": " + e.what());
  }
}

Instance load_instance(const std::string& path) {
  return with_path(path, [](const std::string& s) { return parse_instance(s); });
}

std::string bound_text(const std::optional<std::size_t>& b) { return b ? std::to_string(*b) : "unbounded"; }

struct SolveArgs {
  std::string input;
  std::string algorithm = "auto";
  bool min_wildcards = false;
  std::string witness_out;
  unsigned jobs = 1;
  std::uint64_t node_budget = SolveOptions{}.node_budget;
};

int do_solve(const SolveArgs& a, std::ostream& out) {
  const Instance inst = load_instance(a.input);
  const auto algorithm = parse_algorithm(a.algorithm);
  if (!algorithm) throw CLI::ValidationError("--algo", "unknown algorithm '" + a.algorithm + "'");
  SolveOptions options;
  options.jobs = a.jobs;
  options.node_budget = a.node_budget;
  const SolveResult r =
      a.min_wildcards ? min_wildcards(inst, *algorithm, options) : solve(inst, *algorithm, options);

  out << (r.matched ? "MATCH" : "NOMATCH") << '\n';
  if (r.matched) out << "wildcards " << r.witness->wildcard_count() << '\n';
  if (a.min_wildcards) {
    out << "min_wildcards " << (r.min_wildcards ? std::to_string(*r.min_wildcards) : "none") << '\n';
    out << "budget " << inst.bounds.wildcard_budget << '\n';
  }
  out << "algorithm " << to_string(r.algorithm) << '\n';
  if (!a.witness_out.empty())
    write_file(a.witness_out, serialize_witness(inst, r.matched ? r.witness : std::nullopt));
  return r.matched ? kOk : kNegative;
}

int do_verify(const std::string& input, const std::string& witness_path, bool strict, std::ostream& out) {
  const Instance inst = load_instance(input);
  const auto witness =
      with_path(witness_path, [&](const std::string& s) { return parse_witness(s, inst); });
  if (!witness) {
    out << "FAIL: witness file records no match\n";
    return kNegative;
  }
  const auto report = verify_witness(inst, *witness, VerifyOptions{strict});
  if (report.passed()) {
    out << "PASS\n";
    return kOk;
  }
  out << "FAIL " << to_string(report.violation) << ": " << report.message << '\n';
  return kNegative;
}

int do_params(const std::string& input, std::ostream& out) {
  const Instance inst = load_instance(input);
  const InstanceParameters p = measure_parameters(inst);
  out << "occt " << p.occ_text << '\n'
      << "sigt " << p.text_alphabet << '\n'
      << "occp " << p.occ_pattern << '\n'
      << "sigp " << p.pattern_alphabet << '\n'
      << "maxfp " << bound_text(p.max_letter_len) << '\n'
      << "numq " << p.wildcard_budget << '\n'
      << "maxfq " << bound_text(p.max_wildcard_len) << '\n';
  return kOk;
}

struct GenerateArgs {
  std::string reduction;
  std::string graph;
  std::string output;
  std::string problem = "gfm";
  bool emit_expected = false;
};

int do_generate(const GenerateArgs& a, std::ostream& out) {
  const auto kind = parse_reduction(a.reduction);
  if (!kind) throw CLI::ValidationError("--reduction", "unknown reduction '" + a.reduction + "'");
  const Problem problem = a.problem == "gpm" ? Problem::gpm : Problem::gfm;
  const MulticoloredGraph g =
      normalize_graph(with_path(a.graph, [](const std::string& s) { return parse_graph(s); }));
  const ReductionOutput r = reduce(*kind, g, problem);
  write_file(a.output, serialize_instance(r.instance));
  out << "reduction " << to_string(*kind) << '\n'
      << "problem " << to_string(problem) << '\n'
      << "k " << r.k << " n " << r.n << " m " << r.m << '\n'
      << "budget " << r.budget << '\n'
      << "text_length " << r.instance.text.size() << '\n'
      << "pattern_length " << r.instance.pattern.size() << '\n';
  if (a.emit_expected) {
    const auto clique = find_clique_bruteforce(g);
    std::optional<MatchWitness> witness;
    if (clique) witness = forward_witness(r, *clique);
    write_file(a.output + ".witness", serialize_witness(r.instance, witness));
    out << "clique ";
    if (clique)
      for (std::size_t i = 0; i < clique->size(); ++i) out << (i ? " " : "") << (*clique)[i];
    else
      out << "none";
    out << '\n';
  }
  return kOk;
}

int do_classify(const std::string& problem, const std::string& rows_path, bool verbose, std::ostream& out) {
  const std::vector<ComplexityRow> rows =
      rows_path.empty() ? builtin_rows()
                        : with_path(rows_path, [](const std::string& s) { return parse_rows(s); });
  std::vector<Problem> problems;
  if (problem != "gpm") problems.push_back(Problem::gfm);
  if (problem != "gfm") problems.push_back(Problem::gpm);

  bool complete = true;
  std::vector<ClassificationReport> reports;
  for (Problem p : problems) reports.push_back(check_completeness(p, rows));
  for (std::size_t i = 0; i < reports.size(); ++i) out << (i ? "; " : "") << summary_line(reports[i]);
  out << '\n';
  for (const auto& report : reports) {
    complete = complete && report.complete();
    for (const auto& c : report.uncovered) out << to_string(report.problem) << " uncovered " << c.to_string() << '\n';
    for (const auto& c : report.conflicts) {
      const auto cls = classify(c, report.problem, rows);
      out << to_string(report.problem) << " conflict " << c.to_string() << " (fpt row "
          << *cls.fpt_row + 1 << ", hardness row " << *cls.hardness_row + 1 << ")\n";
    }
    if (verbose)
      for (std::size_t mask = 0; mask < kSubsetCount; ++mask)
        out << to_string(report.problem) << ' ' << ParameterSet::from_mask(mask).to_string() << ' '
            << to_string(report.verdicts[mask]) << '\n';
  }
  return complete ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized function / parameterized matching with wildcards", "gfm"};
  app.require_subcommand(1, 1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Decide whether the pattern matches the text");
  solve_cmd->add_option("-i,--input", solve_args.input, "Instance file")->required();
  solve_cmd->add_option("--algo", solve_args.algorithm, "auto|enum|anchored|brute|search")
      ->check(CLI::IsMember({"auto", "enum", "anchored", "brute", "search"}));
  solve_cmd->add_flag("--min-wildcards", solve_args.min_wildcards,
                      "Report the optimum wildcard count, even beyond the budget");
  solve_cmd->add_option("-w,--witness", solve_args.witness_out, "Write the witness here");
  solve_cmd->add_option("--jobs", solve_args.jobs, "Worker threads for enum/anchored")
      ->check(CLI::Range(1u, 256u));
  solve_cmd->add_option("--node-budget", solve_args.node_budget, "Search nodes before giving up");

  std::string verify_input, verify_witness_path;
  bool strict = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check a witness against an instance");
  verify_cmd->add_option("-i,--input", verify_input, "Instance file")->required();
  verify_cmd->add_option("-w,--witness", verify_witness_path, "Witness file")->required();
  verify_cmd->add_flag("--strict-injective", strict, "Also require distinct wildcard images (GPM)");

  std::string params_input;
  auto* params_cmd = app.add_subcommand("params", "Print the seven instance parameters");
  params_cmd->add_option("-i,--input", params_input, "Instance file")->required();

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Encode a multicolored clique question as an instance");
  gen_cmd->add_option("--reduction", gen.reduction, "qmark|mobile2|occtmax|qmarksize|mobile1")
      ->required()
      ->check(CLI::IsMember({"qmark", "mobile2", "occtmax", "qmarksize", "mobile1"}));
  gen_cmd->add_option("-g,--graph", gen.graph, "Graph file")->required();
  gen_cmd->add_option("-o,--output", gen.output, "Instance file to write")->required();
  gen_cmd->add_option("--problem", gen.problem, "gfm|gpm")->check(CLI::IsMember({"gfm", "gpm"}));
  gen_cmd->add_flag("--emit-expected", gen.emit_expected,
                    "Also write <output>.witness from a clique (or NOMATCH)");

  std::string cls_problem = "both", cls_rows;
  bool cls_verbose = false;
  auto* cls_cmd = app.add_subcommand("classify", "Check coverage of the complexity table");
  cls_cmd->add_option("--problem", cls_problem, "gfm|gpm|both")->check(CLI::IsMember({"gfm", "gpm", "both"}));
  cls_cmd->add_option("--rows", cls_rows, "Row file replacing the built-in table");
  cls_cmd->add_flag("-v,--verbose", cls_verbose, "Print the verdict of every subset");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return do_solve(solve_args, out);
    if (*verify_cmd) return do_verify(verify_input, verify_witness_path, strict, out);
    if (*params_cmd) return do_params(params_input, out);
    if (*gen_cmd) return do_generate(gen, out);
    if (*cls_cmd) return do_classify(cls_problem, cls_rows, cls_verbose, out);
  } catch (const ResourceLimit& e) {
    err << "gfm: resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const NotApplicable& e) {
    err << "gfm: not applicable: " << e.what() << '\n';
    return kNotApplicable;
  } catch (const CLI::ValidationError& e) {
    err << "gfm: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    // Parse errors, I/O failures and invalid graphs.
    err << "gfm: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace gfm::cli
