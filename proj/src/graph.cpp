#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gfm/error.hpp"
#include "gfm/reductions.hpp"

namespace gfm {

namespace {

bool valid_vertex_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
  });
}

std::pair<std::string, std::string> ordered(const std::string& a, const std::string& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

std::size_t MulticoloredGraph::part_of(std::string_view vertex) const {
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (std::find(parts[i].begin(), parts[i].end(), vertex) != parts[i].end()) return i;
  throw std::out_of_range("unknown vertex '" + std::string(vertex) + "'");
}

bool MulticoloredGraph::has_edge(std::string_view u, std::string_view v) const {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
}

std::vector<std::pair<std::string, std::string>> MulticoloredGraph::edges_between(
    std::size_t i, std::size_t j) const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : edges) {
    const std::size_t pa = part_of(a), pb = part_of(b);
    if (pa == i && pb == j) out.emplace_back(a, b);
    if (pa == j && pb == i) out.emplace_back(b, a);
  }
  return out;
}

void MulticoloredGraph::validate() const {
  if (parts.size() < 2) throw std::invalid_argument("a multicolored graph needs k >= 2 parts");
  std::set<std::string> names;
  for (const auto& part : parts)
    for (const auto& v : part) {
      if (!valid_vertex_name(v)) throw std::invalid_argument("invalid vertex name '" + v + "'");
      if (!names.insert(v).second) throw std::invalid_argument("duplicate vertex '" + v + "'");
    }
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [a, b] : edges) {
    if (!names.count(a) || !names.count(b))
      throw std::invalid_argument("edge " + a + " " + b + " uses an unknown vertex");
    if (part_of(a) == part_of(b))
      throw std::invalid_argument("edge " + a + " " + b + " lies inside one part");
    if (!seen.insert(ordered(a, b)).second)
      throw std::invalid_argument("duplicate edge " + a + " " + b);
  }
}

MulticoloredGraph parse_graph(std::istream& in) {
  MulticoloredGraph g;
  std::optional<std::size_t> k;
  std::vector<bool> declared;
  std::string raw;
  std::size_t number = 0;
  auto to_index = [&](const std::string& s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw ParseError(number, "'" + s + "' is not a non-negative integer");
    return v;
  };
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ss(raw);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty() || tok.front().front() == '#') continue;
    if (tok[0] == "k") {
      if (k) throw ParseError(number, "duplicate 'k' line");
      if (tok.size() != 2) throw ParseError(number, "k expects one value");
      k = to_index(tok[1]);
      if (*k < 2) throw ParseError(number, "k must be at least 2");
      g.parts.assign(*k, {});
      declared.assign(*k, false);
    } else if (tok[0] == "part") {
      if (!k) throw ParseError(number, "'part' before 'k'");
      if (tok.size() < 2) throw ParseError(number, "part expects an index");
      const std::size_t i = to_index(tok[1]);
      if (i < 1 || i > *k) throw ParseError(number, "part index out of range");
      if (declared[i - 1]) throw ParseError(number, "part " + tok[1] + " listed twice");
      declared[i - 1] = true;
      g.parts[i - 1].assign(tok.begin() + 2, tok.end());
    } else if (tok[0] == "edge") {
      if (tok.size() != 3) throw ParseError(number, "edge expects two vertices");
      g.edges.emplace_back(tok[1], tok[2]);
    } else {
      throw ParseError(number, "unknown key '" + tok[0] + "'");
    }
  }
  if (!k) throw ParseError(number + 1, "missing 'k' line");
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(number, e.what());
  }
  return g;
}

MulticoloredGraph parse_graph(std::string_view source) {
  std::istringstream in{std::string(source)};
  return parse_graph(in);
}

std::string serialize_graph(const MulticoloredGraph& g) {
  std::ostringstream out;
  out << "k " << g.k() << '\n';
  for (std::size_t i = 0; i < g.k(); ++i) {
    out << "part " << i + 1;
    for (const auto& v : g.parts[i]) out << ' ' << v;
    out << '\n';
  }
  for (const auto& [a, b] : g.edges) out << "edge " << a << ' ' << b << '\n';
  return out.str();
}

MulticoloredGraph normalize_graph(const MulticoloredGraph& g, std::size_t min_n, std::size_t min_m) {
  g.validate();
  MulticoloredGraph out = g;
  std::set<std::string> names;
  for (const auto& part : g.parts) names.insert(part.begin(), part.end());
  std::size_t counter = 0;
  auto fresh = [&] {
    std::string name;
    do name = "pad" + std::to_string(++counter);
    while (names.count(name));
    names.insert(name);
    return name;
  };

  const std::size_t k = g.k();
  std::size_t m = min_m;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) m = std::max(m, g.edges_between(i, j).size());
  // A padding edge has two fresh endpoints of degree one, so it cannot join
  // a clique on three or more parts.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t c = g.edges_between(i, j).size(); c < m; ++c) {
        std::string u = fresh(), w = fresh();
        out.parts[i].push_back(u);
        out.parts[j].push_back(w);
        out.edges.emplace_back(u, w);
      }

  std::size_t n = min_n;
  for (const auto& part : out.parts) n = std::max(n, part.size());
  for (auto& part : out.parts)
    while (part.size() < n) part.push_back(fresh());
  return out;
}

bool is_normalized(const MulticoloredGraph& g) {
  if (g.k() < 2) return false;
  for (const auto& part : g.parts)
    if (part.size() != g.parts.front().size()) return false;
  const std::size_t m = g.edges_between(0, 1).size();
  for (std::size_t i = 0; i < g.k(); ++i)
    for (std::size_t j = i + 1; j < g.k(); ++j)
      if (g.edges_between(i, j).size() != m) return false;
  return true;
}

bool is_clique(const MulticoloredGraph& g, const Clique& c) {
  if (c.size() != g.k()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& part = g.parts[i];
    if (std::find(part.begin(), part.end(), c[i]) == part.end()) return false;
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!g.has_edge(c[i], c[j])) return false;
  }
  return true;
}

std::optional<Clique> find_clique_bruteforce(const MulticoloredGraph& g, std::size_t limit) {
  g.validate();
  double space = 1;
  for (const auto& part : g.parts) space *= static_cast<double>(part.size());
  if (space > static_cast<double>(limit))
    throw ResourceLimit("clique search over " + std::to_string(static_cast<long double>(space)) +
                        " selections exceeds " + std::to_string(limit));
  std::set<std::pair<std::string, std::string>> adjacent;
  for (const auto& [a, b] : g.edges) adjacent.insert(ordered(a, b));

  Clique chosen(g.k());
  // Depth-first over parts; a branch stops at the first non-adjacent pair.
  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == g.k()) return true;
    for (const auto& v : g.parts[i]) {
      bool fits = true;
      for (std::size_t j = 0; j < i && fits; ++j) fits = adjacent.count(ordered(chosen[j], v)) > 0;
      if (!fits) continue;
      chosen[i] = v;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  if (extend(extend, 0)) return chosen;
  return std::nullopt;
}

bool is_square_free(const Word& s) {
  const std::size_t n = s.size();
  for (std::size_t len = 1; 2 * len <= n; ++len)
    for (std::size_t start = 0; start + 2 * len <= n; ++start)
      if (std::equal(s.begin() + start, s.begin() + start + len, s.begin() + start + len))
        return false;
  return true;
}

}  // namespace gfm
