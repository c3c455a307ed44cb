#include "jsjd/graph_of_groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "jsjd/subgroups.hpp"

namespace jsjd {

const char* to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::Rigid:
      return "rigid";
    case VertexKind::QH:
      return "qh";
    case VertexKind::Cyclic:
      return "cyclic";
  }
  return "rigid";
}

int Vertex::euler_characteristic() const {
  return orientable ? 2 - 2 * genus - boundaries : 2 - genus - boundaries;
}

std::size_t GraphOfGroups::add_vertex(Vertex v) {
  vertices.push_back(std::move(v));
  return vertices.size() - 1;
}

void GraphOfGroups::add_edge(std::size_t from, std::size_t to, FreeWord image_from,
                             FreeWord image_to) {
  edges.push_back({from, to, std::move(image_from), std::move(image_to)});
}

std::size_t GraphOfGroups::find(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id == id) return i;
  }
  throw std::out_of_range("no vertex " + id);
}

int GraphOfGroups::side_betti(const std::string& side) const {
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int v = 0;
  for (const auto& vertex : vertices) v += vertex.side == side;
  int e = 0;
  int components = v;
  for (const auto& edge : edges) {
    if (vertices[edge.from].side != side || vertices[edge.to].side != side) continue;
    ++e;
    const auto x = root(edge.from);
    const auto y = root(edge.to);
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  return e - v + components;
}

namespace {

void check_endpoint(const Vertex& v, const FreeWord& image, std::size_t edge) {
  const std::string where = "edge " + std::to_string(edge) + " at " + v.id;
  if (image.empty()) throw std::logic_error(where + ": trivial edge image");
  switch (v.kind) {
    case VertexKind::Rigid:
      if (!build(v.basis, image.alphabet()).contains(image)) {
        throw std::logic_error(where + ": image " + to_string(image) + " not in the vertex group");
      }
      break;
    case VertexKind::Cyclic: {
      const auto k = v.basis.size() == 1 ? exponent_in(image, v.basis.front()) : std::nullopt;
      if (!k || *k == 0) {
        throw std::logic_error(where + ": image " + to_string(image) +
                               " is not a power of the generator");
      }
      break;
    }
    case VertexKind::QH:
      if (std::find(v.basis.begin(), v.basis.end(), image) == v.basis.end()) {
        throw std::logic_error(where + ": image " + to_string(image) + " is not a boundary word");
      }
      break;
  }
}

}  // namespace

void GraphOfGroups::validate() const {
  for (const auto& v : vertices) {
    if (v.kind == VertexKind::QH) {
      if (v.euler_characteristic() >= 0) {
        throw std::logic_error("QH vertex " + v.id + " has non-negative Euler characteristic");
      }
      if (static_cast<int>(v.basis.size()) != v.boundaries) {
        throw std::logic_error("QH vertex " + v.id + " lists the wrong number of boundary words");
      }
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.from >= vertices.size() || e.to >= vertices.size()) {
      throw std::logic_error("edge " + std::to_string(i) + " has a dangling endpoint");
    }
    check_endpoint(vertices[e.from], e.image_from, i);
    check_endpoint(vertices[e.to], e.image_to, i);
  }
  for (const char* side : {"A", "B"}) {
    if (side_betti(side) > 1) {
      throw std::logic_error(std::string("side ") + side + " has Betti number above one");
    }
  }
}

}  // namespace jsjd
