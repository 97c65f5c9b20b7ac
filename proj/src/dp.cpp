#include "gfm/dp.hpp"

#include <algorithm>
#include <set>

namespace gfm::dp {

namespace {

constexpr int kUnreachable = -1;

// Image used for the match branch at pattern letter `letter`, or nullptr
// when the letter has to be wildcarded.
const Word* usable_image(const Instance& inst, const Substitution& f, Symbol letter) {
  auto it = f.find(letter);
  if (it == f.end() || it->second.empty()) return nullptr;
  if (inst.bounds.max_letter_len && it->second.size() > *inst.bounds.max_letter_len)
    return nullptr;
  return &it->second;
}

}  // namespace

SimilarityTable::SimilarityTable(std::size_t m, std::size_t n)
    : m_(m), n_(n), cells_((m + 1) * (n + 1), kUnreachable) {}

std::optional<std::size_t> SimilarityTable::at(std::size_t i, std::size_t j) const {
  const int v = cell(i, j);
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

SimilarityTable similarity(const Instance& inst, const Substitution& f) {
  const std::size_t m = inst.pattern.size();
  const std::size_t n = inst.text.size();
  const std::size_t kmin = inst.min_wildcard_len();
  const std::size_t wcap = inst.wildcard_len_cap();
  SimilarityTable g(m, n);

  // An empty pattern covers only the empty text.
  g.cell(0, 0) = 0;

  for (std::size_t i = 1; i <= m; ++i) {
    const Word* image = usable_image(inst, f, inst.pattern[i - 1]);
    for (std::size_t j = 0; j <= n; ++j) {
      int best = kUnreachable;
      if (image && image->size() <= j) {
        const std::size_t len = image->size();
        const int prev = g.cell(i - 1, j - len);
        if (prev >= 0) {
          bool equal = true;
          for (std::size_t x = 0; x < len; ++x) {
            ++g.operations_;
            if (inst.text[j - len + x] != (*image)[x]) {
              equal = false;
              break;
            }
          }
          if (equal) best = prev + 1;
        }
      }
      const std::size_t kmax = std::min(j, wcap);
      for (std::size_t k = kmin; k <= kmax; ++k) {
        ++g.operations_;
        best = std::max(best, g.cell(i - 1, j - k));
      }
      g.cell(i, j) = best;
    }
  }
  return g;
}

bool injective_on_pattern(const Instance& inst, const Substitution& f) {
  std::set<Word> images;
  for (Symbol letter : letters_in_order(inst.pattern)) {
    auto it = f.find(letter);
    if (it != f.end() && !images.insert(it->second).second) return false;
  }
  return true;
}

FunctionDecision decide_with_function(const Instance& inst, const Substitution& f) {
  FunctionDecision out;
  if (inst.variant.problem == Problem::gpm && !injective_on_pattern(inst, f)) {
    out.rejected_non_injective = true;
    return out;
  }

  const SimilarityTable g = similarity(inst, f);
  out.operations = g.operations();
  const std::size_t m = inst.pattern.size();
  const std::size_t n = inst.text.size();
  const auto best = g.at(m, n);
  if (!best) return out;
  out.min_wildcards = m - *best;
  out.accepted = *out.min_wildcards <= inst.bounds.wildcard_budget;

  MatchWitness w;
  for (Symbol letter : letters_in_order(inst.pattern))
    if (const Word* image = usable_image(inst, f, letter)) w.substitution.emplace(letter, *image);

  const std::size_t kmin = inst.min_wildcard_len();
  const std::size_t wcap = inst.wildcard_len_cap();
  std::size_t j = n;
  for (std::size_t i = m; i >= 1; --i) {
    const std::size_t here = *g.at(i, j);
    const Word* image = usable_image(inst, f, inst.pattern[i - 1]);
    if (image && image->size() <= j && here >= 1) {
      const std::size_t len = image->size();
      const auto prev = g.at(i - 1, j - len);
      if (prev && *prev + 1 == here &&
          std::equal(image->begin(), image->end(), inst.text.begin() + (j - len))) {
        j -= len;
        continue;
      }
    }
    bool moved = false;
    for (std::size_t k = kmin; k <= std::min(j, wcap); ++k) {
      const auto prev = g.at(i - 1, j - k);
      if (prev && *prev == here) {
        w.wildcards.emplace(i, Word(inst.text.begin() + (j - k), inst.text.begin() + j));
        j -= k;
        moved = true;
        break;
      }
    }
    if (!moved) return out;  // unreachable for a consistent table
  }
  out.witness = std::move(w);
  return out;
}

}  // namespace gfm::dp
