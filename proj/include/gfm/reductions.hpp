#pragma once

// Multicolored Clique graphs and the five instance generators that encode a
// k-clique question as a (Max-)GFM / GPM instance.
//
//   qmark      wildcard positions forced by a long □ prefix; the pattern
//              alphabet has k+4 letters, letters map to single text letters
//              and wildcards to at most two (possibly empty) text letters
//   mobile2    few occurrences everywhere; wildcards land on the filler
//              letter D, letters map to single text letters
//   occtmax    exact matching with letter images of length at most two
//   qmarksize  like mobile2 but vertex-based, with unbounded wildcards
//   mobile1    exact matching with unbounded letter images
//
// Vertex names are tokens over [A-Za-z0-9_.']. Generated letters are
// named after the graph: `v:<vertex>`, `a:<u>-<w>` (edge, u in the lower
// part), `#^i_j` (per-part separators) and so on.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gfm/core.hpp"

namespace gfm {

/// k-partite graph. Parts are listed in index order; vertex and edge order
/// follow the input and fix the layout of generated instances.
struct MulticoloredGraph {
  std::vector<std::vector<std::string>> parts;
  std::vector<std::pair<std::string, std::string>> edges;

  std::size_t k() const noexcept { return parts.size(); }
  /// Part index (0-based) of a vertex; throws std::out_of_range.
  std::size_t part_of(std::string_view vertex) const;
  bool has_edge(std::string_view u, std::string_view v) const;
  /// Edges between parts i < j (0-based) in input order, oriented (V_i, V_j).
  std::vector<std::pair<std::string, std::string>> edges_between(std::size_t i, std::size_t j) const;
  /// Checks names, part membership, duplicates and k >= 2; throws std::invalid_argument.
  void validate() const;

  friend bool operator==(const MulticoloredGraph&, const MulticoloredGraph&) = default;
};

/// One vertex per part, in part order.
using Clique = std::vector<std::string>;

MulticoloredGraph parse_graph(std::istream& in);
MulticoloredGraph parse_graph(std::string_view source);
std::string serialize_graph(const MulticoloredGraph& g);

/// Pads under-full part pairs with edges between fresh vertices, then
/// under-full parts with isolated fresh vertices, until every part has n and
/// every pair has m edges (n, m at least the given minimums).
MulticoloredGraph normalize_graph(const MulticoloredGraph& g, std::size_t min_n = 0,
                                  std::size_t min_m = 0);
bool is_normalized(const MulticoloredGraph& g);

/// First clique in lexicographic order of (part 1 vertex, part 2 vertex, ...).
/// Throws ResourceLimit when more than `limit` selections would be tried.
std::optional<Clique> find_clique_bruteforce(const MulticoloredGraph& g,
                                             std::size_t limit = 10'000'000);
bool is_clique(const MulticoloredGraph& g, const Clique& c);

enum class Reduction { questionmark, mobile2, occt_max, questionmark_size, mobile1 };

/// CLI names: qmark | mobile2 | occtmax | qmarksize | mobile1.
std::string_view to_string(Reduction r);
std::optional<Reduction> parse_reduction(std::string_view name);
const std::vector<Reduction>& all_reductions();

struct ReductionOutput {
  Reduction kind = Reduction::questionmark;
  Instance instance;
  /// The construction's wildcard budget (equal to instance.bounds.wildcard_budget).
  std::size_t budget = 0;
  /// Bounds under which clique existence and matching coincide.
  Bounds expected_bounds;
  std::size_t k = 0, n = 0, m = 0;
  /// Normalized source graph.
  MulticoloredGraph graph;
  /// Text segment the construction keeps square-free (empty when no claim).
  Word square_free_segment;
  /// Decoding hints: selector pattern letters (V_i or E_i,j) and the text
  /// letters that name vertices / edges.
  std::map<Symbol, std::size_t> selector_part;          // V_i -> i (0-based)
  std::map<Symbol, std::pair<std::size_t, std::size_t>> selector_pair;  // E_i,j -> (i, j)
  std::map<Symbol, std::string> vertex_letter;          // v:<x> -> x
  std::map<Symbol, std::size_t> edge_letter;            // a:<u>-<w> -> index in graph.edges
};

/// Builds the instance for `g`, which must be normalized with n, m >= 1.
/// Throws std::invalid_argument otherwise (including k < 2).
ReductionOutput reduce(Reduction kind, const MulticoloredGraph& g, Problem problem = Problem::gfm);

/// Witness built from a clique: the separator, filler and selector letters
/// get their intended images and the remaining letters and wildcards are
/// completed by the exact search solver. Throws std::invalid_argument when
/// `clique` is not a clique of the output's graph; returns std::nullopt if
/// no completion exists.
std::optional<MatchWitness> forward_witness(const ReductionOutput& out, const Clique& clique);

/// Reads the clique off a witness: f(V_i) for qmark / qmarksize, the edges
/// assigned to E_i,j otherwise. Throws DecodeFailure when the images are not
/// single vertex / edge letters or do not pick one vertex per part.
Clique extract_clique(const ReductionOutput& out, const MatchWitness& witness);

/// True when no non-empty w has ww as a factor. Cubic scan.
bool is_square_free(const Word& s);

}  // namespace gfm
