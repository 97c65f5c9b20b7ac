#include <algorithm>
#include <stdexcept>

#include "gfm/error.hpp"
#include "gfm/reductions.hpp"
#include "gfm/solvers.hpp"

namespace gfm {

namespace {

std::string pair_label(std::size_t i, std::size_t j) {
  return std::to_string(i + 1) + "," + std::to_string(j + 1);
}

std::size_t choose2(std::size_t k) { return k * (k - 1) / 2; }

// Shared state for the generators: the normalized graph, indexed edges and
// the instance under construction.
class Builder {
 public:
  Builder(Reduction kind, const MulticoloredGraph& g, Problem problem) {
    g.validate();
    if (!is_normalized(g)) throw std::invalid_argument("graph is not normalized");
    out_.kind = kind;
    out_.graph = g;
    out_.k = g.k();
    out_.n = g.parts.front().size();
    out_.m = g.edges_between(0, 1).size();
    if (out_.n == 0 || out_.m == 0)
      throw std::invalid_argument("reductions need at least one vertex per part and one edge per pair");
    out_.instance.variant.problem = problem;
    for (std::size_t i = 0; i < out_.k; ++i)
      for (std::size_t j = i + 1; j < out_.k; ++j) pairs_.emplace_back(i, j);
  }

  std::size_t k() const { return out_.k; }
  std::size_t n() const { return out_.n; }
  std::size_t m() const { return out_.m; }
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }
  const std::vector<std::string>& part(std::size_t i) const { return out_.graph.parts[i]; }

  Symbol t(const std::string& name) {
    const Symbol s = out_.instance.sigma_t.intern(name);
    out_.instance.text.push_back(s);
    return s;
  }
  Symbol p(const std::string& name) {
    const Symbol s = out_.instance.sigma_p.intern(name);
    out_.instance.pattern.push_back(s);
    return s;
  }
  void t_rep(const std::string& name, std::size_t count) {
    for (std::size_t c = 0; c < count; ++c) t(name);
  }
  void p_rep(const std::string& name, std::size_t count) {
    for (std::size_t c = 0; c < count; ++c) p(name);
  }
  // enu(l, count): l_1 ... l_count, where `stem` already carries the superscript.
  void t_enu(const std::string& stem, std::size_t count) {
    for (std::size_t c = 1; c <= count; ++c) t(stem + "_" + std::to_string(c));
  }
  void p_enu(const std::string& stem, std::size_t count) {
    for (std::size_t c = 1; c <= count; ++c) p(stem + "_" + std::to_string(c));
  }

  std::size_t edge_index(const std::string& u, const std::string& w) const {
    const auto& edges = out_.graph.edges;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if ((edges[e].first == u && edges[e].second == w) || (edges[e].first == w && edges[e].second == u))
        return e;
    throw std::out_of_range("no edge " + u + " " + w);
  }

  // Edge letter a:<u>-<w> with u in the lower part.
  static std::string edge_name(const std::string& lower, const std::string& upper) {
    return "a:" + lower + "-" + upper;
  }

  void t_vertex(const std::string& v) { out_.vertex_letter[t("v:" + v)] = v; }

  Symbol t_edge(const std::string& lower, const std::string& upper) {
    const Symbol s = t(edge_name(lower, upper));
    out_.edge_letter[s] = edge_index(lower, upper);
    return s;
  }

  // Edges of v whose other endpoint lies in part j, in input order, each as
  // (lower endpoint, upper endpoint).
  std::vector<std::pair<std::string, std::string>> incident(const std::string& v, std::size_t j) const {
    std::vector<std::pair<std::string, std::string>> out;
    const std::size_t i = out_.graph.part_of(v);
    for (const auto& [a, b] : i < j ? out_.graph.edges_between(i, j) : out_.graph.edges_between(j, i))
      if (a == v || b == v) out.emplace_back(a, b);
    return out;
  }

  Symbol p_vertex_selector(std::size_t i) {
    const Symbol s = p("V_" + std::to_string(i + 1));
    out_.selector_part[s] = i;
    return s;
  }

  // I(i, j): the edge selector for the unordered pair {i, j}.
  Symbol p_edge_selector(std::size_t i, std::size_t j) {
    const auto [a, b] = std::minmax(i, j);
    const Symbol s = p("E_" + pair_label(a, b));
    out_.selector_pair[s] = {a, b};
    return s;
  }

  ReductionOutput finish(std::size_t budget, Bounds bounds, bool empty_wildcards) {
    bounds.wildcard_budget = budget;
    out_.budget = budget;
    out_.instance.bounds = bounds;
    out_.expected_bounds = bounds;
    out_.instance.variant.empty_wildcards = empty_wildcards;
    out_.instance.validate();
    return std::move(out_);
  }

  ReductionOutput& output() { return out_; }

 private:
  ReductionOutput out_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

// e(v) = el(v, E_1(v)) ... el(v, E_k(v)) d^v with el listing d^v_e a_e.
void vertex_edge_list(Builder& b, const std::string& v) {
  for (std::size_t j = 0; j < b.k(); ++j)
    for (const auto& [lo, hi] : b.incident(v, j)) {
      b.t("d:" + v + "/" + lo + "-" + hi);
      b.t_edge(lo, hi);
    }
  b.t("d:" + v);
}

// The edge-list text shared by mobile2 and mobile1:
//   t1 = per pair  # l_i,j a_e1 ... a_em r_i,j
//   t2 = per part  # l_i #^i_1 e(v_1) #^i_1 ... #^i_n e(v_n) #^i_n r_i   then #
// Separators #^i_h carry the part so that the selectors A_i stay distinct.
void edge_list_text(Builder& b) {
  for (const auto& [i, j] : b.pairs()) {
    b.t("#");
    b.t("l_" + pair_label(i, j));
    for (const auto& [lo, hi] : b.output().graph.edges_between(i, j)) b.t_edge(lo, hi);
    b.t("r_" + pair_label(i, j));
  }
  for (std::size_t i = 0; i < b.k(); ++i) {
    b.t("#");
    b.t("l_" + std::to_string(i + 1));
    for (std::size_t h = 0; h < b.n(); ++h) {
      const std::string sep = "#^" + std::to_string(i + 1) + "_" + std::to_string(h + 1);
      b.t(sep);
      vertex_edge_list(b, b.part(i)[h]);
      b.t(sep);
    }
    b.t("r_" + std::to_string(i + 1));
  }
  b.t("#");
}

ReductionOutput build_questionmark(Builder& b) {
  const std::size_t m = b.m();
  const std::size_t r = choose2(b.k()) * 8 * (m - 1);
  const std::size_t run = 2 * r + 1;
  for (const char* c : {"□", ";", "-", "#"}) {
    b.t_rep(c, run);
    b.p_rep(c, run);
  }
  for (const auto& [i, j] : b.pairs()) {
    b.t("#");
    b.t(";");
    for (const auto& [lo, hi] : b.output().graph.edges_between(i, j)) {
      b.t_vertex(lo);
      b.t("-");
      b.t_vertex(hi);
      b.t(";");
    }
    b.p("#");
    b.p_rep("□", 4 * (m - 1));
    b.p(";");
    b.p_vertex_selector(i);
    b.p("-");
    b.p_vertex_selector(j);
    b.p(";");
    b.p_rep("□", 4 * (m - 1));
  }
  b.t("#");
  b.p("#");
  return b.finish(r, Bounds{1, 2, 0}, true);
}

ReductionOutput build_mobile2(Builder& b) {
  const std::size_t k = b.k();
  const std::size_t kp = 2 * choose2(k) + k * (k + 2);
  const std::size_t r = 2 * (kp + 1);
  b.t("#");
  b.t_rep("+", r);
  const std::size_t core_start = b.output().instance.text.size();
  edge_list_text(b);
  b.output().square_free_segment.assign(b.output().instance.text.begin() + core_start,
                                        b.output().instance.text.end());

  b.p("#");
  b.p_rep("D", r);
  for (const auto& [i, j] : b.pairs()) {
    b.p("#");
    b.p("D");
    b.p_edge_selector(i, j);
    b.p("D");
  }
  // The outer D of each part block stands in for the part's left/right filler.
  for (std::size_t i = 0; i < k; ++i) {
    const std::string a = "A_" + std::to_string(i + 1);
    b.p("#");
    b.p("D");
    b.p(a);
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      b.p("D");
      b.p_edge_selector(i, j);
    }
    b.p("D");
    b.p(a);
    b.p("D");
  }
  b.p("#");
  return b.finish(kp, Bounds{1, std::nullopt, 0}, false);
}

ReductionOutput build_occt_max(Builder& b) {
  const std::size_t k = b.k(), n = b.n(), m = b.m();
  const std::size_t r = 2 * k * n * (n - 1) + 2 * n + (k - 1) * m - 1;
  b.t("#");
  b.t("#");
  b.p("#");
  b.p("#");
  for (const auto& [i, j] : b.pairs()) {
    const std::string label = pair_label(i, j);
    b.t("#");
    b.t_enu("l^" + label, m - 1);
    for (const auto& [lo, hi] : b.output().graph.edges_between(i, j)) b.t_edge(lo, hi);
    b.t_enu("r^" + label, m - 1);
    b.p("#");
    b.p_enu("L^" + label, m - 1);
    b.p_edge_selector(i, j);
    b.p_enu("R^" + label, m - 1);
  }
  b.t("#");
  b.p("#");
  for (std::size_t i = 0; i < k; ++i) {
    const std::string part = std::to_string(i + 1);
    if (i > 0) {
      b.t("#");
      b.p("#");
    }
    b.t_enu("l^" + part, r);
    for (std::size_t h = 0; h < n; ++h) {
      const std::string& v = b.part(i)[h];
      const std::string sep = "#^" + part + "_" + std::to_string(h + 1);
      b.t(sep);
      for (std::size_t j = 0; j < k; ++j) {
        if (j == i) continue;
        const std::string stem = "^v:" + v + "," + std::to_string(j + 1);
        b.t_enu("l" + stem, n - 1);
        for (const auto& [lo, hi] : b.incident(v, j)) b.t_edge(lo, hi);
        b.t_enu("r" + stem, n - 1);
      }
      b.t(sep);
    }
    b.t_enu("r^" + part, r);

    const std::string a = "A_" + part;
    b.p_enu("L^" + part, r);
    b.p(a);
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      const std::string label = std::to_string(i + 1) + "," + std::to_string(j + 1);
      b.p_enu("LL^" + label, n - 1);
      b.p_edge_selector(i, j);
      b.p_enu("RR^" + label, n - 1);
    }
    b.p(a);
    b.p_enu("R^" + part, r);
  }
  return b.finish(0, Bounds{2, std::nullopt, 0}, false);
}

ReductionOutput build_questionmark_size(Builder& b) {
  const std::size_t kp = 2 * choose2(b.k());
  const std::size_t r = 2 * (kp + 1);
  for (const char* c : {"#", ";", "-"}) {
    b.t(c);
    b.p(c);
  }
  b.t_rep("+", r);
  b.p_rep("D", r);
  const std::size_t core_start = b.output().instance.text.size();
  for (const auto& [i, j] : b.pairs()) {
    b.t("#");
    b.t("l_" + pair_label(i, j));
    b.t(";");
    for (const auto& [lo, hi] : b.output().graph.edges_between(i, j)) {
      b.t_vertex(lo);
      b.t("-");
      b.t_vertex(hi);
      b.t(";");
    }
    b.t("r_" + pair_label(i, j));
    b.p("#");
    b.p("D");
    b.p(";");
    b.p_vertex_selector(i);
    b.p("-");
    b.p_vertex_selector(j);
    b.p(";");
    b.p("D");
  }
  b.t("#");
  b.p("#");
  b.output().square_free_segment.assign(b.output().instance.text.begin() + core_start,
                                        b.output().instance.text.end());
  return b.finish(kp, Bounds{1, std::nullopt, 0}, false);
}

ReductionOutput build_mobile1(Builder& b) {
  const std::size_t k = b.k();
  b.t("#");
  b.t("#");
  edge_list_text(b);
  b.p("#");
  b.p("#");
  for (const auto& [i, j] : b.pairs()) {
    b.p("#");
    b.p("L_" + pair_label(i, j));
    b.p_edge_selector(i, j);
    b.p("R_" + pair_label(i, j));
  }
  for (std::size_t i = 0; i < k; ++i) {
    const std::string part = std::to_string(i + 1);
    const std::string a = "A_" + part;
    b.p("#");
    b.p("L_" + part);
    b.p(a);
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      b.p("D_" + pair_label(i, j));
      b.p_edge_selector(i, j);
    }
    b.p("D_" + part + "," + std::to_string(k + 1));
    b.p(a);
    b.p("R_" + part);
  }
  b.p("#");
  return b.finish(0, Bounds{std::nullopt, std::nullopt, 0}, false);
}

Word text_of(const Instance& inst, const std::string& name) {
  auto s = inst.sigma_t.find(name);
  if (!s) throw std::logic_error("generated text lacks letter '" + name + "'");
  return Word{*s};
}

}  // namespace

std::string_view to_string(Reduction r) {
  switch (r) {
    case Reduction::questionmark: return "qmark";
    case Reduction::mobile2: return "mobile2";
    case Reduction::occt_max: return "occtmax";
    case Reduction::questionmark_size: return "qmarksize";
    case Reduction::mobile1: return "mobile1";
  }
  return "?";
}

const std::vector<Reduction>& all_reductions() {
  static const std::vector<Reduction> all = {Reduction::questionmark, Reduction::mobile2,
                                             Reduction::occt_max, Reduction::questionmark_size,
                                             Reduction::mobile1};
  return all;
}

std::optional<Reduction> parse_reduction(std::string_view name) {
  for (Reduction r : all_reductions())
    if (to_string(r) == name) return r;
  return std::nullopt;
}

ReductionOutput reduce(Reduction kind, const MulticoloredGraph& g, Problem problem) {
  Builder b(kind, g, problem);
  switch (kind) {
    case Reduction::questionmark: return build_questionmark(b);
    case Reduction::mobile2: return build_mobile2(b);
    case Reduction::occt_max: return build_occt_max(b);
    case Reduction::questionmark_size: return build_questionmark_size(b);
    case Reduction::mobile1: return build_mobile1(b);
  }
  throw std::invalid_argument("unknown reduction");
}

std::optional<MatchWitness> forward_witness(const ReductionOutput& out, const Clique& clique) {
  if (!is_clique(out.graph, clique)) throw std::invalid_argument("not a clique of the graph");
  const Instance& inst = out.instance;
  SolveOptions options;
  auto pin = [&](const char* letter, const std::string& image) {
    if (auto s = inst.sigma_p.find(letter)) options.pinned[*s] = text_of(inst, image);
  };

  for (const auto& [letter, part] : out.selector_part)
    options.pinned[letter] = text_of(inst, "v:" + clique[part]);
  for (const auto& [letter, ij] : out.selector_pair) {
    const auto& [i, j] = ij;
    options.pinned[letter] = text_of(inst, "a:" + clique[i] + "-" + clique[j]);
  }
  pin("#", "#");
  switch (out.kind) {
    case Reduction::questionmark:
      pin("□", "□");
      pin(";", ";");
      pin("-", "-");
      break;
    case Reduction::questionmark_size:
      pin(";", ";");
      pin("-", "-");
      pin("D", "+");
      break;
    case Reduction::mobile2:
      pin("D", "+");
      [[fallthrough]];
    case Reduction::occt_max:
    case Reduction::mobile1:
      for (std::size_t i = 0; i < out.k; ++i) {
        const auto& part = out.graph.parts[i];
        const auto h = std::find(part.begin(), part.end(), clique[i]) - part.begin();
        const std::string a = "A_" + std::to_string(i + 1);
        if (auto s = inst.sigma_p.find(a))
          options.pinned[*s] = text_of(inst, "#^" + std::to_string(i + 1) + "_" + std::to_string(h + 1));
      }
      break;
  }
  const SolveResult r = solve_search(inst, options);
  if (!r.matched) return std::nullopt;
  return r.witness;
}

Clique extract_clique(const ReductionOutput& out, const MatchWitness& witness) {
  const Instance& inst = out.instance;
  auto single = [&](Symbol letter) -> Symbol {
    auto it = witness.substitution.find(letter);
    if (it == witness.substitution.end())
      throw DecodeFailure("selector '" + inst.sigma_p.name(letter) + "' has no image");
    if (it->second.size() != 1)
      throw DecodeFailure("selector '" + inst.sigma_p.name(letter) + "' maps to " +
                          std::to_string(it->second.size()) + " letters");
    return it->second.front();
  };

  Clique clique(out.k);
  std::vector<bool> set(out.k, false);
  auto assign = [&](std::size_t part, const std::string& v) {
    if (out.graph.part_of(v) != part)
      throw DecodeFailure("vertex " + v + " is not in part " + std::to_string(part + 1));
    if (set[part] && clique[part] != v)
      throw DecodeFailure("selectors disagree on the vertex of part " + std::to_string(part + 1));
    clique[part] = v;
    set[part] = true;
  };

  for (const auto& [letter, part] : out.selector_part) {
    const Symbol image = single(letter);
    auto v = out.vertex_letter.find(image);
    if (v == out.vertex_letter.end())
      throw DecodeFailure("'" + inst.sigma_t.name(image) + "' is not a vertex letter");
    assign(part, v->second);
  }
  for (const auto& [letter, ij] : out.selector_pair) {
    const Symbol image = single(letter);
    auto e = out.edge_letter.find(image);
    if (e == out.edge_letter.end())
      throw DecodeFailure("'" + inst.sigma_t.name(image) + "' is not an edge letter");
    const auto& [a, b] = out.graph.edges[e->second];
    const std::size_t pa = out.graph.part_of(a);
    const auto [lo, hi] = pa == ij.first ? std::pair{a, b} : std::pair{b, a};
    assign(ij.first, lo);
    assign(ij.second, hi);
  }
  for (std::size_t i = 0; i < out.k; ++i)
    if (!set[i]) throw DecodeFailure("no selector names part " + std::to_string(i + 1));
  return clique;
}

}  // namespace gfm
