#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "gfm/dp.hpp"
#include "gfm/error.hpp"
#include "gfm/solvers.hpp"

namespace gfm {

namespace {

// Cartesian product of per-letter options. An empty optional means the
// letter stays unmapped, so all of its occurrences must be wildcards.
struct ProductSpace {
  std::vector<Symbol> letters;
  std::vector<std::vector<std::optional<Word>>> options;

  double size() const {
    double total = 1;
    for (const auto& o : options) total *= static_cast<double>(o.size());
    return total;
  }
};

bool length_lex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct Best {
  std::optional<std::size_t> wildcards;
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
  std::optional<MatchWitness> witness;

  bool improves(std::size_t w, std::uint64_t idx) const {
    if (!wildcards || w < *wildcards) return true;
    return w == *wildcards && idx < index;
  }
};

// Walks the product in mixed-radix order (last letter fastest). Worker `w`
// of `jobs` takes the indices congruent to w; merging keeps the smallest
// wildcard count and, among equals, the smallest index, so the outcome does
// not depend on the number of workers.
SolveResult run_product(const Instance& inst, const ProductSpace& space, const SolveOptions& opts,
                        Algorithm algorithm) {
  SolveResult out;
  out.algorithm = algorithm;
  const double total_d = space.size();
  if (total_d > static_cast<double>(opts.node_budget))
    throw ResourceLimit(std::string(to_string(algorithm)) + ": " +
                        std::to_string(static_cast<long double>(total_d)) +
                        " substitutions exceed budget " + std::to_string(opts.node_budget));
  const auto total = static_cast<std::uint64_t>(total_d);
  const bool gpm = inst.variant.problem == Problem::gpm;
  const std::size_t q = inst.bounds.wildcard_budget;

  Best best;
  std::mutex merge;
  std::atomic<std::uint64_t> zero_at{std::numeric_limits<std::uint64_t>::max()};
  std::atomic<std::uint64_t> tried{0}, dp_calls{0};

  auto worker = [&](unsigned id, unsigned jobs) {
    Best local;
    std::uint64_t local_tried = 0, local_dp = 0;
    std::vector<std::size_t> digit(space.options.size());
    for (std::uint64_t idx = id; idx < total; idx += jobs) {
      if (idx > zero_at.load(std::memory_order_relaxed)) break;
      std::uint64_t rest = idx;
      for (std::size_t d = space.options.size(); d-- > 0;) {
        digit[d] = rest % space.options[d].size();
        rest /= space.options[d].size();
      }
      ++local_tried;
      Substitution f;
      bool injective = true;
      for (std::size_t d = 0; d < space.options.size(); ++d) {
        const auto& opt = space.options[d][digit[d]];
        if (!opt) continue;
        if (gpm) {
          for (const auto& [other, image] : f)
            if (image == *opt) injective = false;
        }
        f.emplace(space.letters[d], *opt);
      }
      if (!injective) continue;
      ++local_dp;
      auto decision = dp::decide_with_function(inst, f);
      if (!decision.min_wildcards || *decision.min_wildcards > q) continue;
      if (local.improves(*decision.min_wildcards, idx)) {
        local.wildcards = decision.min_wildcards;
        local.index = idx;
        local.witness = std::move(decision.witness);
        if (*local.wildcards == 0) {
          std::uint64_t cur = zero_at.load();
          while (idx < cur && !zero_at.compare_exchange_weak(cur, idx)) {
          }
          break;
        }
      }
    }
    tried += local_tried;
    dp_calls += local_dp;
    std::lock_guard lock(merge);
    if (local.wildcards && best.improves(*local.wildcards, local.index)) best = std::move(local);
  };

  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id, jobs);
    for (auto& t : pool) t.join();
  }

  out.stats.substitutions = tried;
  out.stats.dp_calls = dp_calls;
  if (best.wildcards) {
    out.matched = true;
    out.min_wildcards = best.wildcards;
    out.witness = std::move(best.witness);
  }
  return out;
}

std::vector<Word> all_words(std::size_t alphabet, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Symbol s = 0; s < alphabet; ++s) {
        Word x = w;
        x.push_back(s);
        next.push_back(std::move(x));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::size_t count_of(const Word& w, Symbol s) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), s));
}

}  // namespace

SolveResult solve_enum(const Instance& inst, const SolveOptions& opts) {
  inst.validate();
  if (!inst.bounds.max_letter_len)
    throw NotApplicable("enum: max_letter_len is unbounded");
  const std::size_t L = *inst.bounds.max_letter_len;
  const double per_letter = [&] {
    double s = 0;
    for (std::size_t l = 1; l <= L; ++l) s += std::pow(static_cast<double>(inst.sigma_t.size()), l);
    return s;
  }();
  ProductSpace space;
  space.letters = letters_in_order(inst.pattern);
  if (std::pow(per_letter, static_cast<double>(space.letters.size())) >
      static_cast<double>(opts.node_budget))
    throw ResourceLimit("enum: substitution space exceeds budget");

  const auto words = all_words(inst.sigma_t.size(), L);
  for (std::size_t d = 0; d < space.letters.size(); ++d) {
    std::vector<std::optional<Word>> options(words.begin(), words.end());
    // Under injectivity an unmapped letter can succeed where every image collides.
    if (inst.variant.problem == Problem::gpm) options.emplace_back(std::nullopt);
    space.options.push_back(std::move(options));
  }
  return run_product(inst, space, opts, Algorithm::enumerate);
}

CandidateSet candidate_substrings(const Instance& inst, Symbol c) {
  inst.validate();
  if (!inst.bounds.max_letter_len || !inst.bounds.max_wildcard_len)
    throw NotApplicable("anchored: needs bounded max_letter_len and max_wildcard_len");
  const std::size_t L = *inst.bounds.max_letter_len;
  const std::size_t W = *inst.bounds.max_wildcard_len;
  const std::size_t q = inst.bounds.wildcard_budget;
  const std::size_t kmin = inst.min_wildcard_len();
  const std::size_t n = inst.text.size();

  CandidateSet out;
  out.letter = c;
  std::vector<std::size_t> occurrences;
  for (std::size_t i = 0; i < inst.pattern.size(); ++i)
    if (inst.pattern[i] == c) occurrences.push_back(i);
  out.droppable = !occurrences.empty() && occurrences.size() <= q;

  std::set<std::size_t> starts;
  // The first occurrence of c that keeps its letter is among the first q+1;
  // every earlier occurrence of c is a wildcard.
  for (std::size_t idx = 0; idx < occurrences.size() && idx <= q; ++idx) {
    const Word prefix(inst.pattern.begin(), inst.pattern.begin() + occurrences[idx]);
    // Reachable (letter length total, wildcards used) pairs over the prefix.
    std::set<std::pair<std::size_t, std::size_t>> reach{{0, idx}};
    for (Symbol b : letters_in_order(prefix)) {
      if (b == c) continue;
      const std::size_t cb = count_of(prefix, b);
      std::set<std::pair<std::size_t, std::size_t>> next;
      for (const auto& [sum, dels] : reach)
        for (std::size_t lb = 1; lb <= L; ++lb)
          for (std::size_t db = 0; db <= std::min(cb, q - dels); ++db)
            if (sum + (cb - db) * lb <= n) next.emplace(sum + (cb - db) * lb, dels + db);
      reach = std::move(next);
    }
    for (const auto& [sum, dels] : reach)
      for (std::size_t s = dels * kmin; s <= dels * W; ++s)
        if (sum + s < n) starts.insert(sum + s);
  }
  for (std::size_t start : starts)
    for (std::size_t len = 1; len <= L && start + len <= n; ++len)
      out.candidates.emplace(start, len);
  return out;
}

double candidate_ceiling(const Instance& inst) {
  const double q = static_cast<double>(inst.bounds.wildcard_budget);
  const double L = static_cast<double>(inst.letter_len_cap());
  const double W = static_cast<double>(inst.wildcard_len_cap());
  const double s = static_cast<double>(distinct_letters(inst.pattern));
  return (q + 1) * std::pow(L, s) * std::pow(q + 1, s) * (q * W + 1) * L;
}

SolveResult solve_anchored(const Instance& inst, const SolveOptions& opts) {
  inst.validate();
  ProductSpace space;
  for (Symbol c : letters_in_order(inst.pattern)) {
    const CandidateSet cs = candidate_substrings(inst, c);
    std::vector<Word> images;
    for (const auto& [start, len] : cs.candidates)
      images.emplace_back(inst.text.begin() + start, inst.text.begin() + start + len);
    std::sort(images.begin(), images.end(), length_lex_less);
    images.erase(std::unique(images.begin(), images.end()), images.end());
    std::vector<std::optional<Word>> options(images.begin(), images.end());
    if (cs.droppable) options.emplace_back(std::nullopt);
    if (options.empty()) {
      // No admissible start and not droppable: nothing can match.
      SolveResult none;
      none.algorithm = Algorithm::anchored;
      return none;
    }
    space.letters.push_back(c);
    space.options.push_back(std::move(options));
  }
  return run_product(inst, space, opts, Algorithm::anchored);
}

}  // namespace gfm
