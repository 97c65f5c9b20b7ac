#include <cmath>
#include <sstream>

#include "gfm/error.hpp"
#include "gfm/solvers.hpp"

namespace gfm {

namespace {

// Beyond this many substitutions an enumerating solver is not attempted.
constexpr double kProductLimit = 2e5;
// Largest text handed to the backtracking fallback.
constexpr std::size_t kBruteTextLimit = 12;

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::automatic: return "auto";
    case Algorithm::enumerate: return "enum";
    case Algorithm::anchored: return "anchored";
    case Algorithm::brute_force: return "brute";
    case Algorithm::search: return "search";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::automatic, Algorithm::enumerate, Algorithm::anchored,
                      Algorithm::brute_force, Algorithm::search})
    if (to_string(a) == name) return a;
  return std::nullopt;
}

DispatchPlan plan_dispatch(const Instance& inst) {
  DispatchPlan plan;
  const InstanceParameters params = measure_parameters(inst);
  const double s = static_cast<double>(params.pattern_alphabet);
  const bool gpm = inst.variant.problem == Problem::gpm;

  if (!params.max_letter_len) {
    plan.reasons.emplace_back("enum: max_letter_len is unbounded");
  } else {
    double per_letter = gpm ? 1 : 0;
    for (std::size_t l = 1; l <= *params.max_letter_len; ++l)
      per_letter += std::pow(static_cast<double>(params.text_alphabet), static_cast<double>(l));
    const double total = std::pow(per_letter, s);
    if (total <= kProductLimit) {
      plan.chosen = Algorithm::enumerate;
      plan.reasons.emplace_back("enum: " + fmt(total) + " substitutions");
      return plan;
    }
    plan.reasons.emplace_back("enum: " + fmt(total) + " substitutions exceed " + fmt(kProductLimit) +
                              " (|sigma_t|=" + std::to_string(params.text_alphabet) +
                              ", L=" + std::to_string(*params.max_letter_len) +
                              ", |sigma_p|=" + std::to_string(params.pattern_alphabet) + ")");
  }

  if (!params.max_letter_len || !params.max_wildcard_len) {
    plan.reasons.emplace_back(std::string("anchored: ") +
                              (!params.max_letter_len ? "max_letter_len" : "max_wildcard_len") +
                              " is unbounded");
  } else {
    double total = 1;
    for (Symbol c : letters_in_order(inst.pattern)) {
      const CandidateSet cs = candidate_substrings(inst, c);
      total *= static_cast<double>(cs.candidates.size() + (cs.droppable ? 1 : 0));
      if (total > kProductLimit) break;
    }
    if (total <= kProductLimit) {
      plan.chosen = Algorithm::anchored;
      plan.reasons.emplace_back("anchored: " + fmt(total) + " candidate combinations");
      return plan;
    }
    plan.reasons.emplace_back("anchored: candidate combinations exceed " + fmt(kProductLimit) +
                              " (q=" + std::to_string(params.wildcard_budget) + ")");
  }

  if (inst.text.size() <= kBruteTextLimit) {
    plan.chosen = Algorithm::brute_force;
    plan.reasons.emplace_back("brute: |t|=" + std::to_string(inst.text.size()));
    return plan;
  }
  plan.reasons.emplace_back("brute: |t|=" + std::to_string(inst.text.size()) + " exceeds " +
                            std::to_string(kBruteTextLimit));
  return plan;
}

SolveResult solve_auto(const Instance& inst, const SolveOptions& opts) {
  inst.validate();
  const DispatchPlan plan = plan_dispatch(inst);
  std::string note;
  for (const auto& r : plan.reasons) note += (note.empty() ? "" : "; ") + r;
  if (plan.chosen == Algorithm::automatic) throw NotApplicable("no admissible algorithm: " + note);
  SolveResult out = solve(inst, plan.chosen, opts);
  out.note = note;
  return out;
}

SolveResult solve(const Instance& inst, Algorithm algorithm, const SolveOptions& opts) {
  switch (algorithm) {
    case Algorithm::automatic: return solve_auto(inst, opts);
    case Algorithm::enumerate: return solve_enum(inst, opts);
    case Algorithm::anchored: return solve_anchored(inst, opts);
    case Algorithm::brute_force: return solve_bruteforce(inst, opts);
    case Algorithm::search: return solve_search(inst, opts);
  }
  throw NotApplicable("unknown algorithm");
}

SolveResult min_wildcards(const Instance& inst, Algorithm algorithm, const SolveOptions& opts) {
  // With the budget lifted to m every per-substitution optimum fits, and the
  // solvers' minimum over them is the overall optimum.
  Instance open = inst;
  open.bounds.wildcard_budget = std::max(inst.bounds.wildcard_budget, inst.pattern.size());
  SolveResult out = solve(open, algorithm, opts);
  out.matched = out.min_wildcards && *out.min_wildcards <= inst.bounds.wildcard_budget;
  return out;
}

}  // namespace gfm
