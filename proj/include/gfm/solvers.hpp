#pragma once

// Complete solvers for Max-GFM / Max-GPM.
//
//   brute_force  exhaustive backtracking over pattern positions (oracle)
//   enumerate    every substitution into strings of length <= L over the
//                text alphabet, each checked by the similarity DP
//   anchored     candidate images derived from where a letter's first
//                surviving occurrence can start, each checked by the DP
//   search       branch and bound on partial substitutions with a relaxed
//                DP lower bound; used for the larger reduction instances
//
// Every solver reports the smallest wildcard count it finds that fits the
// instance budget. `min_wildcards` lifts the budget to find the optimum.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gfm/core.hpp"

namespace gfm {

enum class Algorithm { automatic, enumerate, anchored, brute_force, search };

std::string_view to_string(Algorithm a);
/// Accepts auto|enum|anchored|brute|search.
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct SolveOptions {
  /// Nodes (backtracking / branch-and-bound) or substitutions (enum,
  /// anchored) before ResourceLimit is thrown.
  std::uint64_t node_budget = 50'000'000;
  /// Worker threads for the enumerating solvers. Results do not depend on it.
  unsigned jobs = 1;
  /// Letters fixed before the search starts (search only).
  Substitution pinned;
};

struct SolveStats {
  std::uint64_t substitutions = 0;
  std::uint64_t dp_calls = 0;
  std::uint64_t nodes = 0;
};

struct SolveResult {
  Algorithm algorithm = Algorithm::automatic;
  bool matched = false;
  std::optional<MatchWitness> witness;
  /// Smallest wildcard count found within the budget.
  std::optional<std::size_t> min_wildcards;
  SolveStats stats;
  /// Dispatch explanation from solve_auto.
  std::string note;
};

/// Candidate images for one letter, as (0-based start, length) pairs.
struct CandidateSet {
  Symbol letter = 0;
  std::set<std::pair<std::size_t, std::size_t>> candidates;
  /// Every occurrence of the letter may be wildcarded, so it may stay unmapped.
  bool droppable = false;
};

SolveResult solve_bruteforce(const Instance& instance, const SolveOptions& options = {});
SolveResult solve_enum(const Instance& instance, const SolveOptions& options = {});
CandidateSet candidate_substrings(const Instance& instance, Symbol letter);
SolveResult solve_anchored(const Instance& instance, const SolveOptions& options = {});
SolveResult solve_search(const Instance& instance, const SolveOptions& options = {});

/// Upper bound on |candidate_substrings| for any letter:
/// (q+1) L^s (q+1)^s (qW+1) L with s = |Σ_p|.
double candidate_ceiling(const Instance& instance);

struct DispatchPlan {
  Algorithm chosen = Algorithm::automatic;  // automatic: nothing applies
  std::vector<std::string> reasons;
};

/// Chooses an algorithm from the measured parameters.
DispatchPlan plan_dispatch(const Instance& instance);

/// Dispatches per plan_dispatch; throws NotApplicable listing the reasons
/// when no algorithm is admissible.
SolveResult solve_auto(const Instance& instance, const SolveOptions& options = {});

SolveResult solve(const Instance& instance, Algorithm algorithm, const SolveOptions& options = {});

/// Ignores the declared budget and returns the optimum wildcard count over
/// everything the chosen solver explores. `matched` still refers to the
/// declared budget.
SolveResult min_wildcards(const Instance& instance, Algorithm algorithm,
                          const SolveOptions& options = {});

}  // namespace gfm
