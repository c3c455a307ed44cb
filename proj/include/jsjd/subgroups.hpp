#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jsjd/words.hpp"

namespace jsjd {

/// Folded core graph of a finitely generated subgroup, with the basepoint at
/// vertex 0. Vertices are numbered in breadth-first order from the basepoint,
/// so two graphs of the same subgroup compare equal.
class SubgroupGraph {
 public:
  static constexpr int kNone = -1;

  Alphabet alphabet() const { return alphabet_; }
  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;

  /// Endpoint of the edge leaving v with label l (inverse letters follow
  /// edges backwards), or kNone.
  int follow(int v, Letter l) const { return adjacency_[v][slot(l)]; }

  const std::vector<FreeWord>& generators() const { return generators_; }
  /// Free basis read off the breadth-first spanning tree; ordered by
  /// generator, then by source vertex.
  const std::vector<FreeWord>& basis() const { return basis_; }

  int rank() const { return static_cast<int>(basis_.size()); }
  /// Present iff every vertex has all incident edges, i.e. the graph is a cover.
  std::optional<std::size_t> index() const;

  bool contains(const FreeWord& w) const;
  /// w written in basis(), over an alphabet of rank max(1, rank()).
  std::optional<FreeWord> rewrite(const FreeWord& w) const;

  /// Transition table serialized as text; equal iff the graphs are equal.
  std::string canonical_form() const;

  friend bool operator==(const SubgroupGraph& g, const SubgroupGraph& h) {
    return g.alphabet_ == h.alphabet_ && g.adjacency_ == h.adjacency_;
  }

 private:
  friend SubgroupGraph build(std::span<const FreeWord> generators, Alphabet alphabet);

  int slot(Letter l) const { return letter_order(l); }

  Alphabet alphabet_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<FreeWord> generators_;
  std::vector<FreeWord> basis_;
  // For each non-tree positive edge (v, generator): its basis index, else kNone.
  std::vector<std::vector<int>> basis_edge_;
};

/// Folds the petals of the generators. An empty list gives the trivial subgroup.
SubgroupGraph build(std::span<const FreeWord> generators, Alphabet alphabet);
/// Same, with the alphabet taken from the generators (rank 2 if there are none).
SubgroupGraph build(std::span<const FreeWord> generators);
SubgroupGraph build(std::initializer_list<FreeWord> generators);

inline bool contains(const SubgroupGraph& g, const FreeWord& w) { return g.contains(w); }

}  // namespace jsjd
