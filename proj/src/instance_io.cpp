#include <charconv>
#include <istream>
#include <set>
#include <sstream>

#include "gfm/core.hpp"
#include "gfm/error.hpp"

namespace gfm {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

// Splits the stream into non-blank, non-comment token lines. A comment line
// starts with '#'; '#' inside a token list is an ordinary letter.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::size_t parse_count(const Line& line, const std::string& what) {
  if (line.tokens.size() != 2) throw ParseError(line.number, what + " expects one value");
  const std::string& v = line.tokens[1];
  if (!v.empty() && v.front() == '-') throw ParseError(line.number, what + " must not be negative");
  std::size_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ParseError(line.number, what + ": '" + v + "' is not a non-negative integer");
  return out;
}

std::optional<std::size_t> parse_bound(const Line& line, const std::string& what) {
  if (line.tokens.size() == 2 && line.tokens[1] == "inf") return std::nullopt;
  const std::size_t v = parse_count(line, what);
  if (v == 0) throw ParseError(line.number, what + " must be positive or inf");
  return v;
}

Word intern_all(Alphabet& alphabet, const Line& line, bool declared, const Alphabet* other,
                const char* role) {
  Word w;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    const auto& tok = line.tokens[i];
    if (auto s = alphabet.find(tok)) {
      w.push_back(*s);
      continue;
    }
    if (declared) {
      std::string msg = "token '" + tok + "' in " + role + " is not in its declared alphabet";
      if (other && other->contains(tok)) msg += " (it is declared only in the other alphabet)";
      throw ParseError(line.number, msg);
    }
    w.push_back(alphabet.intern(tok));
  }
  return w;
}

std::string bound_text(const std::optional<std::size_t>& b) {
  return b ? std::to_string(*b) : std::string("inf");
}

}  // namespace

Instance parse_instance(std::istream& in) {
  const auto lines = tokenize(in);
  std::map<std::string, const Line*> seen;
  static const std::set<std::string> known = {
      "variant",        "allow_empty_wildcard", "wildcards", "max_letter_len", "max_wildcard_len",
      "text",           "pattern",              "sigma_t",   "sigma_p"};
  std::size_t last_line = 0;
  for (const auto& line : lines) {
    last_line = line.number;
    const auto& key = line.tokens.front();
    if (!known.count(key)) throw ParseError(line.number, "unknown key '" + key + "'");
    if (!seen.emplace(key, &line).second)
      throw ParseError(line.number, "duplicate key '" + key + "'");
  }

  Instance inst;
  if (auto it = seen.find("variant"); it != seen.end()) {
    const Line& l = *it->second;
    if (l.tokens.size() != 2 || (l.tokens[1] != "gfm" && l.tokens[1] != "gpm"))
      throw ParseError(l.number, "variant must be gfm or gpm");
    inst.variant.problem = l.tokens[1] == "gpm" ? Problem::gpm : Problem::gfm;
  }
  if (auto it = seen.find("allow_empty_wildcard"); it != seen.end()) {
    const Line& l = *it->second;
    if (l.tokens.size() != 2 || (l.tokens[1] != "0" && l.tokens[1] != "1"))
      throw ParseError(l.number, "allow_empty_wildcard must be 0 or 1");
    inst.variant.empty_wildcards = l.tokens[1] == "1";
  }
  if (auto it = seen.find("wildcards"); it != seen.end())
    inst.bounds.wildcard_budget = parse_count(*it->second, "wildcards");
  if (auto it = seen.find("max_letter_len"); it != seen.end())
    inst.bounds.max_letter_len = parse_bound(*it->second, "max_letter_len");
  if (auto it = seen.find("max_wildcard_len"); it != seen.end())
    inst.bounds.max_wildcard_len = parse_bound(*it->second, "max_wildcard_len");

  auto declare = [&](const char* key, Alphabet& alphabet) {
    auto it = seen.find(key);
    if (it == seen.end()) return false;
    const Line& l = *it->second;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      if (alphabet.contains(l.tokens[i]))
        throw ParseError(l.number, std::string("duplicate letter in ") + key);
      alphabet.intern(l.tokens[i]);
    }
    return true;
  };
  const bool declared_t = declare("sigma_t", inst.sigma_t);
  const bool declared_p = declare("sigma_p", inst.sigma_p);

  auto require = [&](const char* key) -> const Line& {
    auto it = seen.find(key);
    if (it == seen.end())
      throw ParseError(last_line + 1, std::string("missing '") + key + "' line");
    if (it->second->tokens.size() < 2)
      throw ParseError(it->second->number, std::string(key) + " must not be empty");
    return *it->second;
  };
  const Line& text_line = require("text");
  const Line& pattern_line = require("pattern");
  inst.text = intern_all(inst.sigma_t, text_line, declared_t, &inst.sigma_p, "text");
  inst.pattern = intern_all(inst.sigma_p, pattern_line, declared_p, &inst.sigma_t, "pattern");
  return inst;
}

Instance parse_instance(std::string_view source) {
  std::istringstream in{std::string(source)};
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "variant " << to_string(inst.variant.problem) << '\n'
      << "allow_empty_wildcard " << (inst.variant.empty_wildcards ? 1 : 0) << '\n'
      << "wildcards " << inst.bounds.wildcard_budget << '\n'
      << "max_letter_len " << bound_text(inst.bounds.max_letter_len) << '\n'
      << "max_wildcard_len " << bound_text(inst.bounds.max_wildcard_len) << '\n';
  out << "sigma_t";
  for (const auto& n : inst.sigma_t.names()) out << ' ' << n;
  out << "\nsigma_p";
  for (const auto& n : inst.sigma_p.names()) out << ' ' << n;
  out << "\ntext " << render(inst.sigma_t, inst.text) << '\n'
      << "pattern " << render(inst.sigma_p, inst.pattern) << '\n';
  return out.str();
}

std::optional<MatchWitness> parse_witness(std::istream& in, const Instance& inst) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError(1, "empty witness");
  const Line& head = lines.front();
  if (head.tokens.size() == 1 && head.tokens[0] == "NOMATCH") {
    if (lines.size() > 1) throw ParseError(lines[1].number, "content after NOMATCH");
    return std::nullopt;
  }
  if (head.tokens.size() != 1 || head.tokens[0] != "MATCH")
    throw ParseError(head.number, "witness must start with MATCH or NOMATCH");

  auto text_word = [&](const Line& l, std::size_t from) {
    Word w;
    for (std::size_t i = from; i < l.tokens.size(); ++i) {
      auto s = inst.sigma_t.find(l.tokens[i]);
      if (!s) throw ParseError(l.number, "unknown text letter '" + l.tokens[i] + "'");
      w.push_back(*s);
    }
    return w;
  };

  MatchWitness w;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto& key = l.tokens[0];
    if (key == "map") {
      if (l.tokens.size() < 2) throw ParseError(l.number, "map needs a pattern letter");
      auto letter = inst.sigma_p.find(l.tokens[1]);
      if (!letter) throw ParseError(l.number, "unknown pattern letter '" + l.tokens[1] + "'");
      if (!w.substitution.emplace(*letter, text_word(l, 2)).second)
        throw ParseError(l.number, "letter mapped twice");
    } else if (key == "wild") {
      if (l.tokens.size() < 2) throw ParseError(l.number, "wild needs a position");
      std::size_t pos = 0;
      const auto& v = l.tokens[1];
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), pos);
      if (ec != std::errc() || ptr != v.data() + v.size() || pos == 0)
        throw ParseError(l.number, "wild position must be a positive integer");
      Word image = text_word(l, 2);
      if (image.empty() && !inst.variant.empty_wildcards)
        throw ParseError(l.number, "empty wildcard image not allowed by this instance");
      if (!w.wildcards.emplace(pos, std::move(image)).second)
        throw ParseError(l.number, "position wildcarded twice");
    } else {
      throw ParseError(l.number, "unknown witness line '" + key + "'");
    }
  }
  return w;
}

std::optional<MatchWitness> parse_witness(std::string_view source, const Instance& inst) {
  std::istringstream in{std::string(source)};
  return parse_witness(in, inst);
}

std::string serialize_witness(const Instance& inst, const std::optional<MatchWitness>& witness) {
  if (!witness) return "NOMATCH\n";
  std::ostringstream out;
  out << "MATCH\n";
  for (const auto& [letter, image] : witness->substitution) {
    out << "map " << inst.sigma_p.name(letter);
    if (!image.empty()) out << ' ' << render(inst.sigma_t, image);
    out << '\n';
  }
  for (const auto& [pos, image] : witness->wildcards) {
    out << "wild " << pos;
    if (!image.empty()) out << ' ' << render(inst.sigma_t, image);
    out << '\n';
  }
  return out.str();
}

}  // namespace gfm
