#include "jsjd/subgroups.hpp"

#include <deque>
#include <numeric>

namespace jsjd {

namespace {

int slot_of(Letter l) { return letter_order(l); }
int inverse_slot(int s) { return s ^ 1; }
Letter letter_of_slot(int s) {
  const int g = s / 2 + 1;
  return static_cast<Letter>(s % 2 == 0 ? g : -g);
}

class Folder {
 public:
  explicit Folder(int slots) : slots_(slots) { add_vertex(); }

  int add_vertex() {
    adj_.emplace_back(slots_, SubgroupGraph::kNone);
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void add_edge(int u, Letter l, int v) {
    u = find(u);
    v = find(v);
    const int s = slot_of(l);
    if (adj_[u][s] != SubgroupGraph::kNone) {
      merge(adj_[u][s], v);
    } else if (adj_[v][inverse_slot(s)] != SubgroupGraph::kNone) {
      merge(adj_[v][inverse_slot(s)], u);
    } else {
      adj_[u][s] = v;
      adj_[v][inverse_slot(s)] = u;
    }
  }

  void add_petal(const FreeWord& w) {
    const auto s = w.letters();
    int current = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const int next = i + 1 == s.size() ? 0 : add_vertex();
      add_edge(current, s[i], next);
      current = next;
    }
  }

  // Resolved adjacency of the representatives, with stale indices chased.
  std::vector<std::vector<int>> resolved(std::vector<int>& reps) {
    reps.clear();
    for (int v = 0; v < static_cast<int>(parent_.size()); ++v) {
      if (find(v) == v) reps.push_back(v);
    }
    std::vector<std::vector<int>> out(parent_.size());
    for (int v : reps) {
      out[v] = adj_[v];
      for (int& t : out[v]) {
        if (t != SubgroupGraph::kNone) t = find(t);
      }
    }
    return out;
  }

 private:
  void merge(int x, int y) {
    std::vector<std::pair<int, int>> stack{{x, y}};
    while (!stack.empty()) {
      auto [p, q] = stack.back();
      stack.pop_back();
      p = find(p);
      q = find(q);
      if (p == q) continue;
      parent_[q] = p;
      for (int s = 0; s < slots_; ++s) {
        const int t = adj_[q][s];
        if (t == SubgroupGraph::kNone) continue;
        if (adj_[p][s] == SubgroupGraph::kNone) {
          adj_[p][s] = t;
        } else {
          stack.emplace_back(adj_[p][s], t);
        }
      }
      adj_[q].assign(slots_, SubgroupGraph::kNone);
    }
  }

  int slots_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> parent_;
};

}  // namespace

SubgroupGraph build(std::span<const FreeWord> generators, Alphabet alphabet) {
  const int slots = 2 * alphabet.rank;
  Folder folder(slots);
  for (const auto& g : generators) {
    if (g.alphabet() != alphabet) throw AlphabetMismatch("generator over a different alphabet");
    folder.add_petal(g);
  }

  std::vector<int> reps;
  auto adj = folder.resolved(reps);

  // Trim hanging trees so only the core remains.
  const int base = folder.find(0);
  std::vector<int> degree(adj.size(), 0);
  std::vector<char> alive(adj.size(), 0);
  std::deque<int> queue;
  for (int v : reps) {
    alive[v] = 1;
    for (int t : adj[v]) degree[v] += t != SubgroupGraph::kNone;
    if (v != base && degree[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (int s = 0; s < slots; ++s) {
      const int t = adj[v][s];
      if (t == SubgroupGraph::kNone) continue;
      adj[v][s] = SubgroupGraph::kNone;
      adj[t][inverse_slot(s)] = SubgroupGraph::kNone;
      if (--degree[t] <= 1 && t != base && alive[t]) queue.push_back(t);
    }
  }

  // Breadth-first relabelling; also records the spanning tree.
  std::vector<int> label(adj.size(), SubgroupGraph::kNone);
  std::vector<int> order{base};
  std::vector<int> tree_slot{SubgroupGraph::kNone};  // slot used to reach each new vertex
  std::vector<int> tree_parent{SubgroupGraph::kNone};
  label[base] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    for (int s = 0; s < slots; ++s) {
      const int t = adj[v][s];
      if (t == SubgroupGraph::kNone || label[t] != SubgroupGraph::kNone) continue;
      label[t] = static_cast<int>(order.size());
      order.push_back(t);
      tree_slot.push_back(s);
      tree_parent.push_back(static_cast<int>(i));
    }
  }

  SubgroupGraph g;
  g.alphabet_ = alphabet;
  g.generators_.assign(generators.begin(), generators.end());
  g.adjacency_.assign(order.size(), std::vector<int>(slots, SubgroupGraph::kNone));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int s = 0; s < slots; ++s) {
      const int t = adj[order[i]][s];
      if (t != SubgroupGraph::kNone) g.adjacency_[i][s] = label[t];
    }
  }

  std::vector<FreeWord> path(order.size(), FreeWord(alphabet));
  for (std::size_t i = 1; i < order.size(); ++i) {
    WordBuilder b(alphabet);
    b.append(path[tree_parent[i]]);
    b.push(letter_of_slot(tree_slot[i]));
    path[i] = std::move(b).finish();
  }
  auto is_tree_edge = [&](int u, int s, int v) {
    return (tree_parent[v] == u && tree_slot[v] == s) ||
           (tree_parent[u] == v && tree_slot[u] == inverse_slot(s));
  };

  g.basis_edge_.assign(order.size(), std::vector<int>(alphabet.rank, SubgroupGraph::kNone));
  for (int gen = 1; gen <= alphabet.rank; ++gen) {
    const int s = slot_of(static_cast<Letter>(gen));
    for (int u = 0; u < static_cast<int>(order.size()); ++u) {
      const int v = g.adjacency_[u][s];
      if (v == SubgroupGraph::kNone || is_tree_edge(u, s, v)) continue;
      WordBuilder b(alphabet);
      b.append(path[u]);
      b.push(static_cast<Letter>(gen));
      b.append_inverse(path[v]);
      g.basis_edge_[u][gen - 1] = static_cast<int>(g.basis_.size());
      g.basis_.push_back(std::move(b).finish());
    }
  }
  return g;
}

SubgroupGraph build(std::span<const FreeWord> generators) {
  const Alphabet alphabet = generators.empty() ? Alphabet{2} : generators.front().alphabet();
  return build(generators, alphabet);
}

SubgroupGraph build(std::initializer_list<FreeWord> generators) {
  return build(std::span<const FreeWord>(generators.begin(), generators.size()));
}

std::size_t SubgroupGraph::edge_count() const {
  std::size_t n = 0;
  for (const auto& row : adjacency_) {
    for (int s = 0; s < static_cast<int>(row.size()); s += 2) n += row[s] != kNone;
  }
  return n;
}

std::optional<std::size_t> SubgroupGraph::index() const {
  for (const auto& row : adjacency_) {
    for (int t : row) {
      if (t == kNone) return std::nullopt;
    }
  }
  return adjacency_.size();
}

bool SubgroupGraph::contains(const FreeWord& w) const {
  if (w.alphabet() != alphabet_) throw AlphabetMismatch("word and subgroup over different alphabets");
  int v = 0;
  for (Letter l : w.letters()) {
    v = follow(v, l);
    if (v == kNone) return false;
  }
  return v == 0;
}

std::optional<FreeWord> SubgroupGraph::rewrite(const FreeWord& w) const {
  if (w.alphabet() != alphabet_) throw AlphabetMismatch("word and subgroup over different alphabets");
  if (rank() > Alphabet::kMaxRank) {
    throw MalformedInput("subgroup rank " + std::to_string(rank()) + " exceeds the printable alphabet");
  }
  WordBuilder b(Alphabet{std::max(1, rank())});
  int v = 0;
  for (Letter l : w.letters()) {
    const int next = follow(v, l);
    if (next == kNone) return std::nullopt;
    if (l > 0) {
      const int idx = basis_edge_[v][l - 1];
      if (idx != kNone) b.push(static_cast<Letter>(idx + 1));
    } else {
      const int idx = basis_edge_[next][-l - 1];
      if (idx != kNone) b.push(static_cast<Letter>(-(idx + 1)));
    }
    v = next;
  }
  if (v != 0) return std::nullopt;
  return std::move(b).finish();
}

std::string SubgroupGraph::canonical_form() const {
  std::string out = std::to_string(adjacency_.size()) + ":";
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    for (int s = 0; s < static_cast<int>(adjacency_[v].size()); s += 2) {
      const int t = adjacency_[v][s];
      if (t == kNone) continue;
      out += std::to_string(v) + letter_char(letter_of_slot(s)) + std::to_string(t) + ";";
    }
  }
  return out;
}

}  // namespace jsjd
