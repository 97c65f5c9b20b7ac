#include "gfm/core.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "gfm/error.hpp"

namespace gfm {

namespace {

bool has_whitespace(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

std::vector<bool> occurs_in(const Word& w, std::size_t alphabet_size) {
  std::vector<bool> seen(alphabet_size, false);
  for (Symbol s : w) seen.at(s) = true;
  return seen;
}

}  // namespace

Alphabet::Alphabet(const std::vector<std::string>& names) {
  for (const auto& n : names) {
    if (contains(n)) throw std::invalid_argument("duplicate letter '" + n + "'");
    intern(n);
  }
}

Symbol Alphabet::intern(std::string_view name) {
  if (auto s = find(name)) return *s;
  if (name.empty() || has_whitespace(name))
    throw std::invalid_argument("letter must be a non-empty whitespace-free token");
  const auto id = static_cast<Symbol>(names_.size());
  names_.emplace_back(name);
  index_.emplace(names_.back(), id);
  return id;
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string_view to_string(Problem p) { return p == Problem::gfm ? "gfm" : "gpm"; }

std::size_t Instance::letter_len_cap() const noexcept {
  return bounds.max_letter_len.value_or(text.size());
}

std::size_t Instance::wildcard_len_cap() const noexcept {
  return bounds.max_wildcard_len.value_or(text.size());
}

void Instance::validate() const {
  if (text.empty()) throw std::invalid_argument("text is empty");
  if (pattern.empty()) throw std::invalid_argument("pattern is empty");
  for (Symbol s : text)
    if (s >= sigma_t.size()) throw std::invalid_argument("text letter outside the text alphabet");
  for (Symbol s : pattern)
    if (s >= sigma_p.size())
      throw std::invalid_argument("pattern letter outside the pattern alphabet");
  if (bounds.max_letter_len && *bounds.max_letter_len == 0)
    throw std::invalid_argument("max_letter_len must be positive");
  if (bounds.max_wildcard_len && *bounds.max_wildcard_len == 0)
    throw std::invalid_argument("max_wildcard_len must be positive");
}

std::string render(const Alphabet& alphabet, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.name(w[i]);
  }
  return out;
}

Word apply_witness(const Instance& instance, const MatchWitness& witness) {
  Word out;
  out.reserve(instance.text.size());
  for (std::size_t i = 0; i < instance.pattern.size(); ++i) {
    if (auto w = witness.wildcards.find(i + 1); w != witness.wildcards.end()) {
      out.insert(out.end(), w->second.begin(), w->second.end());
      continue;
    }
    const Symbol letter = instance.pattern[i];
    auto f = witness.substitution.find(letter);
    if (f == witness.substitution.end())
      throw MissingImage("no image for pattern letter '" + instance.sigma_p.name(letter) +
                         "' at position " + std::to_string(i + 1));
    out.insert(out.end(), f->second.begin(), f->second.end());
  }
  return out;
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::none: return "none";
    case Violation::bad_position: return "bad-position";
    case Violation::missing_image: return "missing-image";
    case Violation::concatenation: return "concatenation";
    case Violation::budget: return "budget";
    case Violation::letter_length: return "letter-length";
    case Violation::wildcard_length: return "wildcard-length";
    case Violation::injectivity: return "injectivity";
    case Violation::empty_image: return "empty-image";
  }
  return "unknown";
}

VerificationReport verify_witness(const Instance& instance, const MatchWitness& witness,
                                  const VerifyOptions& options) {
  auto fail = [](Violation v, std::string msg, std::size_t offset = 0) {
    return VerificationReport{v, std::move(msg), offset};
  };
  const std::size_t m = instance.pattern.size();

  for (const auto& [pos, image] : witness.wildcards)
    if (pos == 0 || pos > m)
      return fail(Violation::bad_position, "wildcard position " + std::to_string(pos) +
                                               " outside pattern of length " + std::to_string(m));
  for (const auto& [letter, image] : witness.substitution)
    if (letter >= instance.sigma_p.size())
      return fail(Violation::missing_image, "substitution names an unknown pattern letter");

  Word produced;
  try {
    produced = apply_witness(instance, witness);
  } catch (const MissingImage& e) {
    return fail(Violation::missing_image, e.what());
  }
  if (produced != instance.text) {
    const auto [a, b] = std::mismatch(produced.begin(), produced.end(), instance.text.begin(),
                                      instance.text.end());
    const auto offset = static_cast<std::size_t>(a - produced.begin());
    return fail(Violation::concatenation,
                "concatenation mismatch at text offset " + std::to_string(offset), offset);
  }

  if (witness.wildcard_count() > instance.bounds.wildcard_budget)
    return fail(Violation::budget, std::to_string(witness.wildcard_count()) +
                                       " wildcards exceed budget " +
                                       std::to_string(instance.bounds.wildcard_budget));

  const auto used = occurs_in(instance.pattern, instance.sigma_p.size());
  if (auto cap = instance.bounds.max_letter_len) {
    for (const auto& [letter, image] : witness.substitution)
      if (used[letter] && image.size() > *cap)
        return fail(Violation::letter_length, "image of '" + instance.sigma_p.name(letter) +
                                                  "' longer than " + std::to_string(*cap));
  }
  if (auto cap = instance.bounds.max_wildcard_len) {
    for (const auto& [pos, image] : witness.wildcards)
      if (image.size() > *cap)
        return fail(Violation::wildcard_length, "wildcard at position " + std::to_string(pos) +
                                                    " longer than " + std::to_string(*cap));
  }

  if (instance.variant.problem == Problem::gpm) {
    std::map<Word, Symbol> owner;
    for (const auto& [letter, image] : witness.substitution) {
      if (!used[letter]) continue;
      auto [it, inserted] = owner.emplace(image, letter);
      if (!inserted)
        return fail(Violation::injectivity, "letters '" + instance.sigma_p.name(it->second) +
                                                "' and '" + instance.sigma_p.name(letter) +
                                                "' share an image");
    }
    if (options.strict_injectivity) {
      std::set<Word> wild_images;
      for (const auto& [pos, image] : witness.wildcards) {
        if (owner.count(image) || !wild_images.insert(image).second)
          return fail(Violation::injectivity, "wildcard at position " + std::to_string(pos) +
                                                  " repeats an image");
      }
    }
  }

  for (const auto& [letter, image] : witness.substitution)
    if (used[letter] && image.empty())
      return fail(Violation::empty_image,
                  "letter '" + instance.sigma_p.name(letter) + "' has an empty image");
  if (!instance.variant.empty_wildcards) {
    for (const auto& [pos, image] : witness.wildcards)
      if (image.empty())
        return fail(Violation::empty_image,
                    "wildcard at position " + std::to_string(pos) + " has an empty image");
  }
  return {};
}

std::size_t max_occurrence(const Word& w) {
  std::unordered_map<Symbol, std::size_t> count;
  std::size_t best = 0;
  for (Symbol s : w) best = std::max(best, ++count[s]);
  return best;
}

std::size_t distinct_letters(const Word& w) { return std::set<Symbol>(w.begin(), w.end()).size(); }

std::vector<Symbol> letters_in_order(const Word& w) {
  std::vector<Symbol> out;
  std::set<Symbol> seen;
  for (Symbol s : w)
    if (seen.insert(s).second) out.push_back(s);
  return out;
}

InstanceParameters measure_parameters(const Instance& instance) {
  InstanceParameters p;
  p.occ_text = max_occurrence(instance.text);
  p.text_alphabet = distinct_letters(instance.text);
  p.occ_pattern = max_occurrence(instance.pattern);
  p.pattern_alphabet = distinct_letters(instance.pattern);
  p.max_letter_len = instance.bounds.max_letter_len;
  p.wildcard_budget = instance.bounds.wildcard_budget;
  p.max_wildcard_len = instance.bounds.max_wildcard_len;
  return p;
}

}  // namespace gfm
