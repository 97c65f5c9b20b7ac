#pragma once

// Hamming similarity for a fixed substitution: the maximum number of
// pattern positions that can keep their letter while the remaining
// positions become wildcards, computed by a cubic dynamic program.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gfm/core.hpp"

namespace gfm::dp {

/// g(i, j) for 0 <= i <= m, 0 <= j <= n. Cells that no mapping of
/// p_1..p_i onto t_1..t_j reaches hold no value.
class SimilarityTable {
 public:
  SimilarityTable(std::size_t m, std::size_t n);

  std::size_t pattern_length() const noexcept { return m_; }
  std::size_t text_length() const noexcept { return n_; }

  std::optional<std::size_t> at(std::size_t i, std::size_t j) const;
  bool feasible(std::size_t i, std::size_t j) const { return cell(i, j) >= 0; }

  /// Elementary steps spent filling the table: one per wildcard length tried
  /// and one per letter compared in the substring test.
  std::uint64_t operations() const noexcept { return operations_; }

 private:
  friend SimilarityTable similarity(const Instance&, const Substitution&);

  int& cell(std::size_t i, std::size_t j) { return cells_[i * (n_ + 1) + j]; }
  int cell(std::size_t i, std::size_t j) const { return cells_[i * (n_ + 1) + j]; }

  std::size_t m_;
  std::size_t n_;
  std::vector<int> cells_;
  std::uint64_t operations_ = 0;
};

/// Fills the table for `f`. Letters without an image, or whose image is
/// longer than the letter bound, can only be covered by a wildcard.
SimilarityTable similarity(const Instance& instance, const Substitution& f);

/// True when f is injective on the letters that occur in the pattern.
bool injective_on_pattern(const Instance& instance, const Substitution& f);

struct FunctionDecision {
  /// m - g(m, n), or nothing when the text cannot be covered at all.
  std::optional<std::size_t> min_wildcards;
  /// min_wildcards <= budget.
  bool accepted = false;
  /// Set for GPM queries whose f is not injective; such queries are rejected.
  bool rejected_non_injective = false;
  /// Traceback witness whenever min_wildcards is set.
  std::optional<MatchWitness> witness;
  std::uint64_t operations = 0;
};

/// Decides whether the pattern matches the text using f with at most the
/// instance's wildcard budget, and reconstructs a witness. The traceback
/// prefers keeping the letter, then the shortest wildcard image.
FunctionDecision decide_with_function(const Instance& instance, const Substitution& f);

}  // namespace gfm::dp
