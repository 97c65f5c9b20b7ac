#pragma once

// Coverage check of the parameterized-complexity table: every subset of the
// seven instance parameters is classified as FPT (it contains some FPT row)
// or hard (it is contained in some hardness row).

#include <array>
#include <bitset>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gfm/core.hpp"

namespace gfm {

/// The seven parameters in lattice order.
enum class Parameter : std::size_t {
  occ_text,          // occt   max occurrences of a text letter
  text_alphabet,     // sigt   |Σ_t|
  occ_pattern,       // occp   max occurrences of a pattern letter
  pattern_alphabet,  // sigp   |Σ_p|
  max_letter_len,    // maxfp  L
  wildcard_budget,   // numq   number of wildcards
  max_wildcard_len,  // maxfq  W
};

inline constexpr std::size_t kParameterCount = 7;
inline constexpr std::size_t kSubsetCount = std::size_t{1} << kParameterCount;

/// File names: occt, sigt, occp, sigp, maxfp, numq, maxfq.
std::string_view to_string(Parameter p);
std::optional<Parameter> parse_parameter(std::string_view name);

class ParameterSet {
 public:
  ParameterSet() = default;
  ParameterSet(std::initializer_list<Parameter> params);
  static ParameterSet from_mask(std::size_t mask);

  bool contains(Parameter p) const { return bits_.test(static_cast<std::size_t>(p)); }
  void insert(Parameter p) { bits_.set(static_cast<std::size_t>(p)); }
  void erase(Parameter p) { bits_.reset(static_cast<std::size_t>(p)); }
  std::size_t size() const { return bits_.count(); }
  std::size_t mask() const { return bits_.to_ulong(); }
  bool subset_of(const ParameterSet& other) const { return (bits_ & ~other.bits_).none(); }

  /// Comma-separated names in lattice order, or "{}" when empty.
  std::string to_string() const;

  friend bool operator==(const ParameterSet&, const ParameterSet&) = default;

 private:
  std::bitset<kParameterCount> bits_;
};

/// Comma-separated parameter names; throws std::invalid_argument.
ParameterSet parse_parameter_set(std::string_view list);

enum class Status { fpt, w1_hard, paranp_hard };

/// fpt | w1 | paranp
std::string_view to_string(Status s);
std::optional<Status> parse_status(std::string_view name);

enum class Scope { both, gfm_only, gpm_only };

/// both | gfm | gpm
std::string_view to_string(Scope s);
std::optional<Scope> parse_scope(std::string_view name);

struct ComplexityRow {
  ParameterSet params;
  Status status = Status::fpt;
  Scope scope = Scope::both;
  std::string source;

  bool applies_to(Problem problem) const;

  friend bool operator==(const ComplexityRow&, const ComplexityRow&) = default;
};

/// The fourteen rows of the complexity table.
const std::vector<ComplexityRow>& builtin_rows();

/// Row file: `row <fpt|w1|paranp> <gfm|gpm|both> <p1,p2,...> <citation...>`,
/// blank lines and `#` comments ignored. Throws ParseError.
std::vector<ComplexityRow> parse_rows(std::istream& in);
std::vector<ComplexityRow> parse_rows(std::string_view source);
std::string serialize_rows(const std::vector<ComplexityRow>& rows);

enum class Verdict { fpt, w1_hard, paranp_hard, uncovered, conflict };

std::string_view to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::uncovered;
  /// Index of the row that decided the verdict (the strongest hardness row,
  /// or the first FPT row), if any.
  std::optional<std::size_t> fpt_row;
  std::optional<std::size_t> hardness_row;
};

/// FPT when an applicable FPT row is a subset of `c`; hard (para-NP before
/// W[1]) when an applicable hardness row is a superset; conflict when both.
Classification classify(const ParameterSet& c, Problem problem,
                        const std::vector<ComplexityRow>& rows = builtin_rows());

struct ClassificationReport {
  Problem problem = Problem::gfm;
  std::array<Verdict, kSubsetCount> verdicts{};
  std::vector<ParameterSet> uncovered;
  std::vector<ParameterSet> conflicts;

  std::size_t covered() const { return kSubsetCount - uncovered.size() - conflicts.size(); }
  bool complete() const { return uncovered.empty() && conflicts.empty(); }
};

ClassificationReport check_completeness(Problem problem,
                                        const std::vector<ComplexityRow>& rows = builtin_rows());

/// "gfm: 128/128 covered" plus ", N conflicts" when there are any.
std::string summary_line(const ClassificationReport& report);

}  // namespace gfm
