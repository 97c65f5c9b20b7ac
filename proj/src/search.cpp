#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "gfm/error.hpp"
#include "gfm/solvers.hpp"

namespace gfm {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

enum class Slot { free, fixed, dropped };

struct Assignment {
  std::vector<Slot> slot;
  std::vector<Word> image;
};

// Branch and bound over partial substitutions.
//
// Relaxation: a free letter may take any admissible image independently at
// each occurrence (cost 0), a fixed letter must reproduce its image, a
// dropped letter can only be wildcarded, and a wildcard costs 1. The relaxed
// optimum is a lower bound for every completion. When the relaxed traceback
// happens to be consistent (and injective for GPM) it is an optimal witness
// for the node; otherwise an offending free letter is branched on, with
// images restricted to the substrings the relaxation can place it on.
class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, const SolveOptions& opts)
      : inst_(inst),
        opts_(opts),
        m_(inst.pattern.size()),
        n_(inst.text.size()),
        kmin_(inst.min_wildcard_len()),
        lcap_(std::min(inst.letter_len_cap(), inst.text.size())),
        wcap_(std::min(inst.wildcard_len_cap(), inst.text.size())),
        gpm_(inst.variant.problem == Problem::gpm),
        occurrences_(inst.sigma_p.size()),
        first_(inst.sigma_p.size(), m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      occurrences_[inst.pattern[i]].push_back(i);
      first_[inst.pattern[i]] = std::min(first_[inst.pattern[i]], i);
    }
  }

  void run() {
    Assignment root{std::vector<Slot>(inst_.sigma_p.size(), Slot::free),
                    std::vector<Word>(inst_.sigma_p.size())};
    for (const auto& [letter, image] : opts_.pinned) {
      if (letter >= root.slot.size()) continue;
      root.slot[letter] = Slot::fixed;
      root.image[letter] = image;
    }
    visit(root);
  }

  bool found() const { return best_cost_ != kInf; }
  std::size_t best_cost() const { return static_cast<std::size_t>(best_cost_); }
  const MatchWitness& best_witness() const { return best_witness_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  using Table = std::vector<int>;

  int& at(Table& t, std::size_t i, std::size_t j) const { return t[i * (n_ + 1) + j]; }
  int at(const Table& t, std::size_t i, std::size_t j) const { return t[i * (n_ + 1) + j]; }

  bool text_has(std::size_t j, const Word& w) const {
    return j + w.size() <= n_ && std::equal(w.begin(), w.end(), inst_.text.begin() + j);
  }

  // Upper bound on the cost worth exploring.
  int bound() const {
    const int q = static_cast<int>(inst_.bounds.wildcard_budget);
    return best_cost_ == kInf ? q : std::min(q, best_cost_ - 1);
  }

  Table forward(const Assignment& a) const {
    Table f((m_ + 1) * (n_ + 1), kInf);
    at(f, 0, 0) = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const Symbol c = inst_.pattern[i];
      for (std::size_t j = 0; j <= n_; ++j) {
        const int here = at(f, i, j);
        if (here >= kInf) continue;
        const std::size_t left = n_ - j;
        if (a.slot[c] == Slot::fixed) {
          const Word& w = a.image[c];
          if (!w.empty() && w.size() <= lcap_ && text_has(j, w)) {
            int& dst = at(f, i + 1, j + w.size());
            dst = std::min(dst, here);
          }
        } else if (a.slot[c] == Slot::free) {
          for (std::size_t len = 1; len <= std::min(lcap_, left); ++len) {
            int& dst = at(f, i + 1, j + len);
            dst = std::min(dst, here);
          }
        }
        for (std::size_t k = kmin_; k <= std::min(wcap_, left); ++k) {
          int& dst = at(f, i + 1, j + k);
          dst = std::min(dst, here + 1);
        }
      }
    }
    return f;
  }

  Table backward(const Assignment& a) const {
    Table b((m_ + 1) * (n_ + 1), kInf);
    at(b, m_, n_) = 0;
    for (std::size_t i = m_; i-- > 0;) {
      const Symbol c = inst_.pattern[i];
      for (std::size_t j = 0; j <= n_; ++j) {
        int best = kInf;
        const std::size_t left = n_ - j;
        if (a.slot[c] == Slot::fixed) {
          const Word& w = a.image[c];
          if (!w.empty() && w.size() <= lcap_ && text_has(j, w))
            best = std::min(best, at(b, i + 1, j + w.size()));
        } else if (a.slot[c] == Slot::free) {
          for (std::size_t len = 1; len <= std::min(lcap_, left); ++len)
            best = std::min(best, at(b, i + 1, j + len));
        }
        for (std::size_t k = kmin_; k <= std::min(wcap_, left); ++k)
          best = std::min(best, at(b, i + 1, j + k) + 1);
        at(b, i, j) = std::min(best, kInf);
      }
    }
    return b;
  }

  // Walks the forward table back from (m, n). Free letters reuse the image
  // already chosen for a later occurrence when the table allows it.
  struct Trace {
    std::map<std::size_t, Word> wildcards;
    std::vector<std::vector<Word>> images;  // per letter, one per kept occurrence
  };

  Trace trace(const Table& f, const Assignment& a) const {
    Trace t;
    t.images.resize(inst_.sigma_p.size());
    std::size_t j = n_;
    for (std::size_t i = m_; i >= 1; --i) {
      const Symbol c = inst_.pattern[i - 1];
      const int here = at(f, i, j);
      auto keep = [&](std::size_t len) {
        if (len == 0 || len > j) return false;
        if (at(f, i - 1, j - len) != here) return false;
        t.images[c].emplace_back(inst_.text.begin() + (j - len), inst_.text.begin() + j);
        j -= len;
        return true;
      };
      bool moved = false;
      if (a.slot[c] == Slot::fixed) {
        const Word& w = a.image[c];
        moved = w.size() <= lcap_ && w.size() <= j &&
                std::equal(w.begin(), w.end(), inst_.text.begin() + (j - w.size())) &&
                keep(w.size());
      } else if (a.slot[c] == Slot::free) {
        if (!t.images[c].empty()) {
          const Word& w = t.images[c].back();
          if (w.size() <= j && std::equal(w.begin(), w.end(), inst_.text.begin() + (j - w.size())))
            moved = keep(w.size());
        }
        for (std::size_t len = 1; !moved && len <= std::min(lcap_, j); ++len) moved = keep(len);
      }
      for (std::size_t k = kmin_; !moved && k <= std::min(wcap_, j); ++k) {
        if (at(f, i - 1, j - k) + 1 == here) {
          t.wildcards.emplace(i, Word(inst_.text.begin() + (j - k), inst_.text.begin() + j));
          j -= k;
          moved = true;
        }
      }
      if (!moved) throw std::logic_error("search: inconsistent relaxed table");
    }
    return t;
  }

  void visit(const Assignment& a) {
    if (++nodes_ > opts_.node_budget)
      throw ResourceLimit("search exceeded node budget " + std::to_string(opts_.node_budget));
    const Table f = forward(a);
    const int lb = at(f, m_, n_);
    if (nodes_ == 1) root_floor_ = lb;
    if (lb > bound()) return;

    const Trace t = trace(f, a);

    // Letters whose kept occurrences disagree, or collide under injectivity.
    std::set<Symbol> offending;
    std::map<Word, Symbol> owner;
    for (Symbol c = 0; c < t.images.size(); ++c) {
      const auto& imgs = t.images[c];
      if (imgs.empty()) continue;
      if (a.slot[c] == Slot::free &&
          std::any_of(imgs.begin(), imgs.end(), [&](const Word& w) { return w != imgs.front(); })) {
        offending.insert(c);
        continue;
      }
      if (gpm_) {
        auto [it, inserted] = owner.emplace(imgs.front(), c);
        if (!inserted) {
          // Two fixed letters sharing an image: only possible through pinning.
          if (a.slot[c] != Slot::free && a.slot[it->second] != Slot::free) return;
          if (a.slot[c] == Slot::free) offending.insert(c);
          if (a.slot[it->second] == Slot::free) offending.insert(it->second);
        }
      }
    }

    if (offending.empty()) {
      best_cost_ = lb;
      best_witness_ = MatchWitness{};
      for (Symbol c = 0; c < t.images.size(); ++c)
        if (!t.images[c].empty()) best_witness_.substitution.emplace(c, t.images[c].front());
      best_witness_.wildcards = t.wildcards;
      return;
    }

    const Symbol pick = *std::min_element(offending.begin(), offending.end(), [&](Symbol x, Symbol y) {
      if (occurrences_[x].size() != occurrences_[y].size())
        return occurrences_[x].size() > occurrences_[y].size();
      return first_[x] < first_[y];
    });
    branch(a, pick, f);
  }

  void branch(const Assignment& a, Symbol c, const Table& f) {
    const Table b = backward(a);
    const int limit = bound();
    const auto& occ = occurrences_[c];

    // For every image: relaxed cost through each occurrence it fits.
    struct Option {
      Word image;
      std::vector<int> through;  // per occurrence, kInf when it cannot sit there
      std::size_t start = 0;
    };
    std::map<Word, std::size_t> index;
    std::vector<Option> options;
    for (std::size_t o = 0; o < occ.size(); ++o) {
      const std::size_t i = occ[o];
      for (std::size_t s = 0; s < n_; ++s) {
        const int before = at(f, i, s);
        if (before > limit) continue;
        for (std::size_t len = 1; len <= std::min(lcap_, n_ - s); ++len) {
          const int total = before + at(b, i + 1, s + len);
          if (total > limit) continue;
          Word w(inst_.text.begin() + s, inst_.text.begin() + s + len);
          auto [it, inserted] = index.emplace(w, options.size());
          if (inserted) options.push_back(Option{std::move(w), std::vector<int>(occ.size(), kInf), s});
          int& slot = options[it->second].through[o];
          slot = std::min(slot, total);
        }
      }
    }

    std::set<Word> taken;
    if (gpm_)
      for (Symbol x = 0; x < a.slot.size(); ++x)
        if (x != c && a.slot[x] == Slot::fixed) taken.insert(a.image[x]);

    struct Ranked {
      int cost;
      std::size_t start;
      std::size_t len;
      const Word* image;
    };
    std::vector<Ranked> ranked;
    for (const auto& opt : options) {
      if (taken.count(opt.image)) continue;
      // Occurrences the image cannot sit on must all be wildcards.
      int missing = 0, cheapest = kInf;
      for (int v : opt.through) {
        if (v >= kInf) ++missing;
        cheapest = std::min(cheapest, v);
      }
      if (missing > limit) continue;
      ranked.push_back({cheapest, opt.start, opt.image.size(), &opt.image});
    }
    std::sort(ranked.begin(), ranked.end(), [](const Ranked& x, const Ranked& y) {
      if (x.cost != y.cost) return x.cost < y.cost;
      if (x.start != y.start) return x.start < y.start;
      return x.len < y.len;
    });

    Assignment child = a;
    for (const auto& r : ranked) {
      if (best_cost_ != kInf && best_cost_ <= root_floor_) return;
      child.slot[c] = Slot::fixed;
      child.image[c] = *r.image;
      visit(child);
    }
    // An unmapped letter only matters when no image fits or under injectivity.
    if (gpm_ || ranked.empty()) {
      if (best_cost_ != kInf && best_cost_ <= root_floor_) return;
      child.slot[c] = Slot::dropped;
      child.image[c].clear();
      visit(child);
    }
  }

  const Instance& inst_;
  const SolveOptions& opts_;
  std::size_t m_, n_, kmin_, lcap_, wcap_;
  bool gpm_;
  std::vector<std::vector<std::size_t>> occurrences_;
  std::vector<std::size_t> first_;
  int best_cost_ = kInf;
  int root_floor_ = 0;
  MatchWitness best_witness_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult solve_search(const Instance& inst, const SolveOptions& opts) {
  inst.validate();
  SolveResult out;
  out.algorithm = Algorithm::search;
  BranchAndBound bb(inst, opts);
  bb.run();
  out.stats.nodes = bb.nodes();
  out.stats.dp_calls = bb.nodes();
  if (bb.found()) {
    out.matched = true;
    out.min_wildcards = bb.best_cost();
    out.witness = bb.best_witness();
  }
  return out;
}

}  // namespace gfm
