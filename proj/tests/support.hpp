#pragma once

// Shared helpers for the test suites: small instance builders, random
// generators, and exhaustive oracles that enumerate every segmentation of
// the text directly (independent of the solver code paths).

#include <algorithm>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gfm/core.hpp"

namespace gfm::test {

inline Instance make(const std::string& text, const std::string& pattern, std::size_t q = 0,
                     const std::string& extra = "") {
  return parse_instance("text " + text + "\npattern " + pattern + "\nwildcards " +
                        std::to_string(q) + "\n" + extra);
}

/// Word over the instance's text alphabet from space-separated tokens.
inline Word text_word(const Instance& inst, const std::string& tokens) {
  Word w;
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    const auto end = tokens.find(' ', pos);
    const std::string tok = tokens.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (!tok.empty()) w.push_back(*inst.sigma_t.find(tok));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return w;
}

inline Symbol pattern_letter(const Instance& inst, const std::string& name) {
  return *inst.sigma_p.find(name);
}

/// Exhaustive search over segmentations. Each pattern position becomes a
/// letter occurrence or a wildcard; letter images must agree across
/// occurrences (and be distinct under GPM). When `fixed` is given the letter
/// images are taken from it instead of being chosen.
class SegmentationOracle {
 public:
  explicit SegmentationOracle(const Instance& inst, const Substitution* fixed = nullptr)
      : inst_(inst), fixed_(fixed), image_(inst.sigma_p.size()), set_(inst.sigma_p.size(), false) {
    lcap_ = inst.letter_len_cap();
    wcap_ = inst.wildcard_len_cap();
    kmin_ = inst.min_wildcard_len();
  }

  /// Minimum wildcard count over all witnesses, ignoring the budget.
  std::optional<std::size_t> minimum() {
    best_ = kNone;
    go(0, 0, 0);
    if (best_ == kNone) return std::nullopt;
    return best_;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  bool taken(const Word& w, Symbol except) const {
    for (Symbol s = 0; s < image_.size(); ++s)
      if (s != except && set_[s] && image_[s] == w) return true;
    return false;
  }

  void go(std::size_t i, std::size_t j, std::size_t used) {
    if (used >= best_) return;
    const std::size_t n = inst_.text.size();
    if (i == inst_.pattern.size()) {
      if (j == n) best_ = used;
      return;
    }
    const Symbol c = inst_.pattern[i];
    const std::size_t left = n - j;
    if (fixed_) {
      auto it = fixed_->find(c);
      if (it != fixed_->end() && !it->second.empty() && it->second.size() <= lcap_ &&
          it->second.size() <= left &&
          std::equal(it->second.begin(), it->second.end(), inst_.text.begin() + j))
        go(i + 1, j + it->second.size(), used);
    } else if (set_[c]) {
      const Word& w = image_[c];
      if (w.size() <= left && std::equal(w.begin(), w.end(), inst_.text.begin() + j))
        go(i + 1, j + w.size(), used);
    } else {
      for (std::size_t len = 1; len <= std::min(lcap_, left); ++len) {
        Word w(inst_.text.begin() + j, inst_.text.begin() + j + len);
        if (inst_.variant.problem == Problem::gpm && taken(w, c)) continue;
        image_[c] = std::move(w);
        set_[c] = true;
        go(i + 1, j + len, used);
        set_[c] = false;
      }
    }
    for (std::size_t k = kmin_; k <= std::min(wcap_, left); ++k) go(i + 1, j + k, used + 1);
  }

  const Instance& inst_;
  const Substitution* fixed_;
  std::vector<Word> image_;
  std::vector<bool> set_;
  std::size_t lcap_ = 0, wcap_ = 0, kmin_ = 0;
  std::size_t best_ = kNone;
};

inline std::optional<std::size_t> oracle_min(const Instance& inst) {
  return SegmentationOracle(inst).minimum();
}

inline std::optional<std::size_t> oracle_min_with(const Instance& inst, const Substitution& f) {
  return SegmentationOracle(inst, &f).minimum();
}

/// Builds an instance directly from symbol sequences over alphabets of the
/// given sizes (letters named x0.. and a0..).
inline Instance build(const Word& text, std::size_t sigma_t, const Word& pattern,
                      std::size_t sigma_p, Problem problem, bool empty_wildcards,
                      std::optional<std::size_t> L, std::optional<std::size_t> W, std::size_t q) {
  Instance inst;
  for (std::size_t s = 0; s < sigma_t; ++s) inst.sigma_t.intern("x" + std::to_string(s));
  for (std::size_t s = 0; s < sigma_p; ++s) inst.sigma_p.intern("a" + std::to_string(s));
  inst.text = text;
  inst.pattern = pattern;
  inst.variant = {problem, empty_wildcards};
  inst.bounds = {L, W, q};
  return inst;
}

inline Word random_word(std::mt19937_64& rng, std::size_t len, std::size_t alphabet) {
  std::uniform_int_distribution<Symbol> pick(0, static_cast<Symbol>(alphabet - 1));
  Word w(len);
  for (auto& s : w) s = pick(rng);
  return w;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random instance with |t| <= max_text, |p| <= max_pattern over small alphabets.
inline Instance random_instance(std::mt19937_64& rng, std::size_t max_text = 8,
                                std::size_t max_pattern = 6, std::size_t max_sigma = 3,
                                std::size_t max_bound = 2, std::size_t max_q = 2) {
  const std::size_t st = uniform(rng, 1, max_sigma);
  const std::size_t sp = uniform(rng, 1, max_sigma);
  Word t = random_word(rng, uniform(rng, 1, max_text), st);
  Word p = random_word(rng, uniform(rng, 1, max_pattern), sp);
  const Problem problem = uniform(rng, 0, 1) ? Problem::gpm : Problem::gfm;
  const bool empty = uniform(rng, 0, 1) == 1;
  const std::size_t L = uniform(rng, 1, max_bound);
  const std::size_t W = uniform(rng, 1, max_bound);
  return build(t, st, p, sp, problem, empty, L, W, uniform(rng, 0, max_q));
}

/// Random substitution on the pattern letters with images of length 1..max_len.
inline Substitution random_substitution(std::mt19937_64& rng, const Instance& inst,
                                        std::size_t max_len = 2) {
  Substitution f;
  for (Symbol c : letters_in_order(inst.pattern)) {
    // Bias images toward substrings of the text so that matches are common.
    if (uniform(rng, 0, 3) > 0 && !inst.text.empty()) {
      const std::size_t len = uniform(rng, 1, std::min(max_len, inst.text.size()));
      const std::size_t start = uniform(rng, 0, inst.text.size() - len);
      f[c] = Word(inst.text.begin() + start, inst.text.begin() + start + len);
    } else {
      f[c] = random_word(rng, uniform(rng, 1, max_len), inst.sigma_t.size());
    }
  }
  return f;
}

}  // namespace gfm::test
