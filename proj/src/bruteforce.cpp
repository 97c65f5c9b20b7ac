#include <algorithm>
#include <string>
#include <unordered_map>

#include "gfm/error.hpp"
#include "gfm/solvers.hpp"

namespace gfm {

namespace {

// Depth-first search over pattern positions. At each position the letter
// either reuses its image, picks a fresh image of every admissible length,
// or (budget permitting) becomes a wildcard of every admissible length.
// States that already failed with at least as much remaining budget are
// memoized; the key includes the partial substitution, so the memo is exact.
class Backtracker {
 public:
  Backtracker(const Instance& inst, const SolveOptions& opts)
      : inst_(inst),
        opts_(opts),
        m_(inst.pattern.size()),
        n_(inst.text.size()),
        kmin_(inst.min_wildcard_len()),
        lcap_(inst.letter_len_cap()),
        wcap_(inst.wildcard_len_cap()),
        image_(inst.sigma_p.size()),
        assigned_(inst.sigma_p.size(), false) {}

  // Finds a witness using at most `budget` wildcards.
  bool run(std::size_t budget) { return dfs(0, 0, budget); }

  MatchWitness witness() const {
    MatchWitness w;
    for (Symbol s = 0; s < image_.size(); ++s)
      if (assigned_[s]) w.substitution.emplace(s, image_[s]);
    w.wildcards = wild_;
    return w;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::string key(std::size_t i, std::size_t j) const {
    std::string k = std::to_string(i) + ':' + std::to_string(j);
    for (Symbol s = 0; s < image_.size(); ++s) {
      if (!assigned_[s]) continue;
      k += '|' + std::to_string(s) + '=';
      for (Symbol x : image_[s]) k += std::to_string(x) + ',';
    }
    return k;
  }

  bool text_has(std::size_t j, const Word& w) const {
    return j + w.size() <= n_ && std::equal(w.begin(), w.end(), inst_.text.begin() + j);
  }

  bool image_taken(const Word& w) const {
    for (Symbol s = 0; s < image_.size(); ++s)
      if (assigned_[s] && image_[s] == w) return true;
    return false;
  }

  bool dfs(std::size_t i, std::size_t j, std::size_t rem) {
    if (++nodes_ > opts_.node_budget)
      throw ResourceLimit("brute force exceeded node budget " + std::to_string(opts_.node_budget));
    if (i == m_) return j == n_;

    // Remaining text must fit the remaining positions.
    const std::size_t left = n_ - j;
    const std::size_t positions = m_ - i;
    const std::size_t wild = std::min(rem, positions);
    if (left < (positions - wild) + wild * kmin_) return false;
    if (left > positions * std::max(lcap_, wcap_)) return false;

    const std::string k = key(i, j);
    if (auto it = failed_.find(k); it != failed_.end() && it->second >= rem) return false;

    const Symbol letter = inst_.pattern[i];
    if (assigned_[letter]) {
      if (text_has(j, image_[letter]) && dfs(i + 1, j + image_[letter].size(), rem)) return true;
    } else {
      for (std::size_t len = 1; len <= std::min(lcap_, left); ++len) {
        Word candidate(inst_.text.begin() + j, inst_.text.begin() + j + len);
        if (inst_.variant.problem == Problem::gpm && image_taken(candidate)) continue;
        image_[letter] = std::move(candidate);
        assigned_[letter] = true;
        if (dfs(i + 1, j + len, rem)) return true;
        assigned_[letter] = false;
        image_[letter].clear();
      }
    }

    if (rem > 0) {
      for (std::size_t len = kmin_; len <= std::min(wcap_, left); ++len) {
        wild_[i + 1] = Word(inst_.text.begin() + j, inst_.text.begin() + j + len);
        if (dfs(i + 1, j + len, rem - 1)) return true;
        wild_.erase(i + 1);
      }
    }

    auto& slot = failed_[k];
    slot = std::max(slot, rem);
    return false;
  }

  const Instance& inst_;
  const SolveOptions& opts_;
  std::size_t m_, n_, kmin_, lcap_, wcap_;
  std::vector<Word> image_;
  std::vector<bool> assigned_;
  std::map<std::size_t, Word> wild_;
  std::unordered_map<std::string, std::size_t> failed_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult solve_bruteforce(const Instance& inst, const SolveOptions& opts) {
  inst.validate();
  SolveResult out;
  out.algorithm = Algorithm::brute_force;
  Backtracker bt(inst, opts);
  // Raising the budget one wildcard at a time makes the first hit optimal.
  for (std::size_t budget = 0; budget <= inst.bounds.wildcard_budget; ++budget) {
    if (budget > inst.pattern.size()) break;
    if (bt.run(budget)) {
      out.matched = true;
      out.min_wildcards = budget;
      out.witness = bt.witness();
      break;
    }
  }
  out.stats.nodes = bt.nodes();
  return out;
}

}  // namespace gfm
