#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jsjd/words.hpp"

namespace jsjd {

enum class VertexKind { Rigid, QH, Cyclic };

const char* to_string(VertexKind kind);

/// A vertex of a splitting of a double. Words are written in the free basis
/// a, b of the side the vertex belongs to ("A" or "B"); a QH vertex spans
/// both sides and has an empty side.
struct Vertex {
  std::string id;
  VertexKind kind;
  std::string side;
  // QH only.
  bool orientable = true;
  int genus = 0;
  int boundaries = 0;
  /// Rigid: subgroup generators. Cyclic: the generator. QH: boundary words.
  std::vector<FreeWord> basis;

  /// Euler characteristic of a QH vertex's surface.
  int euler_characteristic() const;
};

struct Edge {
  std::size_t from;
  std::size_t to;
  FreeWord image_from;
  FreeWord image_to;

  bool loop() const { return from == to; }
};

struct GraphOfGroups {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  std::size_t add_vertex(Vertex v);
  void add_edge(std::size_t from, std::size_t to, FreeWord image_from, FreeWord image_to);
  std::size_t find(const std::string& id) const;

  /// First Betti number of the subgraph spanned by one side's vertices.
  int side_betti(const std::string& side) const;

  /// Throws std::logic_error naming the first violated structural invariant:
  /// nontrivial edge images; images at rigid vertices lie in the vertex group;
  /// images at cyclic vertices are nonzero powers of the generator; images at
  /// QH vertices are boundary words; QH surfaces are hyperbolic; each side
  /// refines to a graph of Betti number at most one.
  void validate() const;
};

}  // namespace jsjd
