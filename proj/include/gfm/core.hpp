#pragma once

// Domain types for generalized function / parameterized matching with
// wildcards, plus witness checking and parameter measurement.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gfm {

/// Index of a letter inside one alphabet.
using Symbol = std::uint32_t;

/// A string over some alphabet, stored as letter indices.
using Word = std::vector<Symbol>;

/// Ordered set of letters. Letters are whitespace-free tokens such as `x`,
/// `#^1_2` or `E_1,3`; the position of a token is its Symbol.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(const std::vector<std::string>& names);

  /// Returns the symbol of `name`, adding it when absent.
  Symbol intern(std::string_view name);
  std::optional<Symbol> find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }
  const std::string& name(Symbol s) const { return names_.at(s); }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Symbol> index_;
};

enum class Problem { gfm, gpm };

std::string_view to_string(Problem p);

struct Variant {
  Problem problem = Problem::gfm;
  /// Wildcards may be mapped to the empty string.
  bool empty_wildcards = false;

  friend bool operator==(const Variant&, const Variant&) = default;
};

/// Length bounds and wildcard budget. `std::nullopt` means unbounded.
struct Bounds {
  std::optional<std::size_t> max_letter_len;
  std::optional<std::size_t> max_wildcard_len;
  std::size_t wildcard_budget = 0;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

struct Instance {
  Alphabet sigma_t;
  Alphabet sigma_p;
  Word text;
  Word pattern;
  Variant variant;
  Bounds bounds;

  std::size_t min_wildcard_len() const noexcept { return variant.empty_wildcards ? 0 : 1; }
  /// Effective letter image cap: the declared bound, or |text| when unbounded.
  std::size_t letter_len_cap() const noexcept;
  /// Effective wildcard image cap: the declared bound, or |text| when unbounded.
  std::size_t wildcard_len_cap() const noexcept;

  /// Checks the structural invariants; throws std::invalid_argument.
  void validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Partial map from pattern letters to text strings.
using Substitution = std::map<Symbol, Word>;

struct MatchWitness {
  Substitution substitution;
  /// 1-based pattern position -> wildcard image.
  std::map<std::size_t, Word> wildcards;

  std::size_t wildcard_count() const noexcept { return wildcards.size(); }

  friend bool operator==(const MatchWitness&, const MatchWitness&) = default;
};

/// Concatenates, in pattern order, the wildcard image or f(p_i).
/// Throws MissingImage when a non-wildcarded letter has no image.
Word apply_witness(const Instance& instance, const MatchWitness& witness);

enum class Violation {
  none,
  bad_position,
  missing_image,
  concatenation,
  budget,
  letter_length,
  wildcard_length,
  injectivity,
  empty_image,
};

std::string_view to_string(Violation v);

struct VerificationReport {
  Violation violation = Violation::none;
  std::string message;
  /// For concatenation mismatches: first differing text offset (0-based).
  std::size_t text_offset = 0;

  bool passed() const noexcept { return violation == Violation::none; }
  explicit operator bool() const noexcept { return passed(); }
};

struct VerifyOptions {
  /// Also require wildcard images to be distinct from each other and from
  /// every letter image (GPM only).
  bool strict_injectivity = false;
};

VerificationReport verify_witness(const Instance& instance, const MatchWitness& witness,
                                  const VerifyOptions& options = {});

/// The seven parameters of an instance. Occurrence and size values are
/// counted on the text and pattern; the rest are copied from the bounds.
struct InstanceParameters {
  std::size_t occ_text = 0;        // max occurrences of a text letter
  std::size_t text_alphabet = 0;   // distinct letters in the text
  std::size_t occ_pattern = 0;     // max occurrences of a pattern letter
  std::size_t pattern_alphabet = 0;
  std::optional<std::size_t> max_letter_len;
  std::size_t wildcard_budget = 0;
  std::optional<std::size_t> max_wildcard_len;

  friend bool operator==(const InstanceParameters&, const InstanceParameters&) = default;
};

InstanceParameters measure_parameters(const Instance& instance);

/// Maximum number of occurrences of a single letter in `w` (0 for empty).
std::size_t max_occurrence(const Word& w);
/// Number of distinct letters in `w`.
std::size_t distinct_letters(const Word& w);
/// Pattern letters in order of first occurrence.
std::vector<Symbol> letters_in_order(const Word& w);

// Instance / witness files -------------------------------------------------

Instance parse_instance(std::istream& in);
Instance parse_instance(std::string_view source);
std::string serialize_instance(const Instance& instance);

/// Parses a witness file; returns std::nullopt for `NOMATCH`.
std::optional<MatchWitness> parse_witness(std::istream& in, const Instance& instance);
std::optional<MatchWitness> parse_witness(std::string_view source, const Instance& instance);
/// Canonical form: map lines by letter id, wild lines by position.
std::string serialize_witness(const Instance& instance, const std::optional<MatchWitness>& witness);

/// Space-separated display of a word over `alphabet`.
std::string render(const Alphabet& alphabet, const Word& w);

}  // namespace gfm
