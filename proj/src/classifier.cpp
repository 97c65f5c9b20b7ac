#include <istream>
#include <sstream>
#include <stdexcept>

#include "gfm/classifier.hpp"
#include "gfm/error.hpp"

namespace gfm {

namespace {

constexpr std::array<std::string_view, kParameterCount> kParameterNames = {
    "occt", "sigt", "occp", "sigp", "maxfp", "numq", "maxfq"};

int hardness_rank(Status s) {
  switch (s) {
    case Status::fpt: return 0;
    case Status::w1_hard: return 1;
    case Status::paranp_hard: return 2;
  }
  return 0;
}

}  // namespace

std::string_view to_string(Parameter p) { return kParameterNames[static_cast<std::size_t>(p)]; }

std::optional<Parameter> parse_parameter(std::string_view name) {
  for (std::size_t i = 0; i < kParameterCount; ++i)
    if (kParameterNames[i] == name) return static_cast<Parameter>(i);
  return std::nullopt;
}

ParameterSet::ParameterSet(std::initializer_list<Parameter> params) {
  for (Parameter p : params) insert(p);
}

ParameterSet ParameterSet::from_mask(std::size_t mask) {
  if (mask >= kSubsetCount) throw std::out_of_range("parameter mask out of range");
  ParameterSet s;
  s.bits_ = std::bitset<kParameterCount>(mask);
  return s;
}

std::string ParameterSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < kParameterCount; ++i) {
    if (!bits_.test(i)) continue;
    if (!out.empty()) out += ',';
    out += kParameterNames[i];
  }
  return out.empty() ? "{}" : out;
}

ParameterSet parse_parameter_set(std::string_view list) {
  ParameterSet s;
  if (list == "{}") return s;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t end = std::min(list.find(',', pos), list.size());
    const std::string_view name = list.substr(pos, end - pos);
    const auto p = parse_parameter(name);
    if (!p) throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
    if (s.contains(*p)) throw std::invalid_argument("parameter '" + std::string(name) + "' listed twice");
    s.insert(*p);
    pos = end + 1;
  }
  return s;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::fpt: return "fpt";
    case Status::w1_hard: return "w1";
    case Status::paranp_hard: return "paranp";
  }
  return "?";
}

std::optional<Status> parse_status(std::string_view name) {
  for (Status s : {Status::fpt, Status::w1_hard, Status::paranp_hard})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::string_view to_string(Scope s) {
  switch (s) {
    case Scope::both: return "both";
    case Scope::gfm_only: return "gfm";
    case Scope::gpm_only: return "gpm";
  }
  return "?";
}

std::optional<Scope> parse_scope(std::string_view name) {
  for (Scope s : {Scope::both, Scope::gfm_only, Scope::gpm_only})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

bool ComplexityRow::applies_to(Problem problem) const {
  switch (scope) {
    case Scope::both: return true;
    case Scope::gfm_only: return problem == Problem::gfm;
    case Scope::gpm_only: return problem == Problem::gpm;
  }
  return false;
}

const std::vector<ComplexityRow>& builtin_rows() {
  using P = Parameter;
  static const std::vector<ComplexityRow> rows = {
      {{P::occ_text, P::text_alphabet}, Status::fpt, Scope::both, "bounded text length"},
      {{P::text_alphabet, P::pattern_alphabet, P::max_letter_len}, Status::fpt, Scope::both,
       "solver:enum"},
      {{P::text_alphabet, P::max_letter_len}, Status::fpt, Scope::gpm_only, "solver:enum (injective)"},
      {{P::occ_pattern, P::pattern_alphabet, P::max_letter_len, P::max_wildcard_len}, Status::fpt,
       Scope::both, "solver:anchored (bounded pattern)"},
      {{P::pattern_alphabet, P::max_letter_len, P::wildcard_budget, P::max_wildcard_len}, Status::fpt,
       Scope::both, "solver:anchored"},
      {{P::occ_text, P::occ_pattern, P::pattern_alphabet, P::max_letter_len, P::wildcard_budget},
       Status::w1_hard, Scope::both, "generate:mobile2"},
      {{P::occ_text, P::occ_pattern, P::pattern_alphabet, P::wildcard_budget, P::max_wildcard_len},
       Status::w1_hard, Scope::both, "generate:mobile1"},
      {{P::occ_text, P::occ_pattern, P::max_letter_len, P::wildcard_budget, P::max_wildcard_len},
       Status::w1_hard, Scope::both, "generate:occtmax"},
      {{P::text_alphabet, P::occ_pattern, P::pattern_alphabet, P::wildcard_budget, P::max_wildcard_len},
       Status::w1_hard, Scope::both, "external"},
      {{P::occ_pattern, P::pattern_alphabet, P::max_letter_len, P::wildcard_budget}, Status::w1_hard,
       Scope::both, "generate:qmarksize"},
      {{P::pattern_alphabet, P::max_letter_len, P::max_wildcard_len}, Status::w1_hard, Scope::both,
       "generate:qmark"},
      {{P::text_alphabet, P::occ_pattern, P::max_letter_len, P::wildcard_budget, P::max_wildcard_len},
       Status::paranp_hard, Scope::both, "external"},
      {{P::text_alphabet, P::occ_pattern, P::max_letter_len}, Status::paranp_hard, Scope::gfm_only,
       "external"},
      {{P::occ_pattern, P::max_letter_len}, Status::paranp_hard, Scope::gpm_only, "external"},
  };
  return rows;
}

std::vector<ComplexityRow> parse_rows(std::istream& in) {
  std::vector<ComplexityRow> rows;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ss(raw);
    std::string key;
    if (!(ss >> key) || key.front() == '#') continue;
    if (key != "row") throw ParseError(number, "unknown key '" + key + "'");
    std::string status, scope, params;
    if (!(ss >> status >> scope >> params))
      throw ParseError(number, "row expects status, scope and parameter list");
    ComplexityRow row;
    const auto st = parse_status(status);
    if (!st) throw ParseError(number, "unknown status '" + status + "' (fpt|w1|paranp)");
    const auto sc = parse_scope(scope);
    if (!sc) throw ParseError(number, "unknown scope '" + scope + "' (gfm|gpm|both)");
    try {
      row.params = parse_parameter_set(params);
    } catch (const std::invalid_argument& e) {
      throw ParseError(number, e.what());
    }
    row.status = *st;
    row.scope = *sc;
    std::getline(ss >> std::ws, row.source);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ComplexityRow> parse_rows(std::string_view source) {
  std::istringstream in{std::string(source)};
  return parse_rows(in);
}

std::string serialize_rows(const std::vector<ComplexityRow>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    out << "row " << to_string(row.status) << ' ' << to_string(row.scope) << ' '
        << row.params.to_string();
    if (!row.source.empty()) out << ' ' << row.source;
    out << '\n';
  }
  return out.str();
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::fpt: return "fpt";
    case Verdict::w1_hard: return "w1-hard";
    case Verdict::paranp_hard: return "paranp-hard";
    case Verdict::uncovered: return "uncovered";
    case Verdict::conflict: return "conflict";
  }
  return "?";
}

Classification classify(const ParameterSet& c, Problem problem, const std::vector<ComplexityRow>& rows) {
  Classification out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.applies_to(problem)) continue;
    if (row.status == Status::fpt) {
      if (!out.fpt_row && row.params.subset_of(c)) out.fpt_row = i;
    } else if (c.subset_of(row.params)) {
      if (!out.hardness_row || hardness_rank(row.status) > hardness_rank(rows[*out.hardness_row].status))
        out.hardness_row = i;
    }
  }
  if (out.fpt_row && out.hardness_row)
    out.verdict = Verdict::conflict;
  else if (out.fpt_row)
    out.verdict = Verdict::fpt;
  else if (out.hardness_row)
    out.verdict = rows[*out.hardness_row].status == Status::paranp_hard ? Verdict::paranp_hard
                                                                       : Verdict::w1_hard;
  return out;
}

ClassificationReport check_completeness(Problem problem, const std::vector<ComplexityRow>& rows) {
  ClassificationReport report;
  report.problem = problem;
  for (std::size_t mask = 0; mask < kSubsetCount; ++mask) {
    const auto c = ParameterSet::from_mask(mask);
    const Verdict v = classify(c, problem, rows).verdict;
    report.verdicts[mask] = v;
    if (v == Verdict::uncovered) report.uncovered.push_back(c);
    if (v == Verdict::conflict) report.conflicts.push_back(c);
  }
  return report;
}

std::string summary_line(const ClassificationReport& report) {
  std::string line = std::string(to_string(report.problem)) + ": " + std::to_string(report.covered()) +
                     "/" + std::to_string(kSubsetCount) + " covered";
  if (!report.conflicts.empty()) line += ", " + std::to_string(report.conflicts.size()) + " conflicts";
  return line;
}

}  // namespace gfm
