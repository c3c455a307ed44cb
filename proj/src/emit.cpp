#include "jsjd/emit.hpp"

#include <sstream>

namespace jsjd {

namespace {

Json words(const std::vector<FreeWord>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(to_string(w));
  return out;
}

Json optional_int(const std::optional<long long>& v) { return v ? Json(*v) : Json(nullptr); }

std::string surface_label(const Vertex& v) {
  return std::string(v.orientable ? "orientable" : "non-orientable") + " genus " +
         std::to_string(v.genus) + ", " + std::to_string(v.boundaries) + " boundaries";
}

std::string dot_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

std::string word_label(const FreeWord& w) { return w.empty() ? "1" : to_string(w); }

}  // namespace

Json to_json(const GraphOfGroups& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices) {
    const bool surface = v.kind == VertexKind::QH;
    vertices.push_back({
        {"id", v.id},
        {"kind", to_string(v.kind)},
        {"orientable", surface ? Json(v.orientable) : Json(nullptr)},
        {"genus", surface ? Json(v.genus) : Json(nullptr)},
        {"boundaries", surface ? Json(v.boundaries) : Json(nullptr)},
        {"basis", words(v.basis)},
    });
  }
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back({
        {"from", g.vertices[e.from].id},
        {"to", g.vertices[e.to].id},
        {"loop", e.loop()},
        {"image_from", to_string(e.image_from)},
        {"image_to", to_string(e.image_to)},
    });
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Json to_json(const AutChain& chain) {
  Json out = Json::array();
  for (const auto& s : chain.to_strings()) out.push_back(s);
  return out;
}

Json to_json(const Classification& c, const std::string& input) {
  Json witness = nullptr;
  if (c.witness) {
    witness = {{"chain", to_json(c.witness->chain)},
               {"basis", {to_string(c.witness->basis[0]), to_string(c.witness->basis[1])}}};
  }
  return {
      {"input", input},
      {"verdict", to_string(c.verdict)},
      {"params", {{"n", optional_int(c.n)}, {"m", optional_int(c.m)}, {"k", optional_int(c.k)}}},
      {"witness", std::move(witness)},
      {"bounded", c.bounded},
      {"graph", c.graph ? to_json(*c.graph) : Json(nullptr)},
  };
}

Json to_json(const SuiteReport& r) {
  return {{"suite", r.suite},   {"seed", r.seed},     {"samples", r.samples},
          {"passed", r.passed}, {"failed", r.failed}, {"failures", r.failures}};
}

Json to_json(const DoubleHom& h) {
  return {{"a1", to_string(h.a[0])},
          {"a2", to_string(h.a[1])},
          {"b1", to_string(h.b[0])},
          {"b2", to_string(h.b[1])}};
}

Json to_json(const Factorization& f) {
  if (const auto* eta = std::get_if<EtaFactor>(&f)) {
    return {{"factor", "eta"},
            {"root_a", to_string(eta->root_a)},
            {"exponents_a", eta->exp_a},
            {"root_b", to_string(eta->root_b)},
            {"exponents_b", eta->exp_b}};
  }
  return {{"factor", "pi"}, {"k", std::get<PiFactor>(f).k}};
}

std::string to_dot(const GraphOfGroups& g) {
  std::ostringstream out;
  out << "digraph jsj {\n";
  for (const auto& v : g.vertices) {
    std::string label = v.id + "\\n";
    const char* shape = "box";
    switch (v.kind) {
      case VertexKind::Rigid: {
        label += "<";
        for (std::size_t i = 0; i < v.basis.size(); ++i) {
          label += (i ? ", " : "") + word_label(v.basis[i]);
        }
        label += ">";
        break;
      }
      case VertexKind::QH:
        shape = "ellipse";
        label += surface_label(v);
        break;
      case VertexKind::Cyclic:
        shape = "circle";
        label += "<" + word_label(v.basis.front()) + ">";
        break;
    }
    out << "  " << dot_string(v.id) << " [shape=" << shape << ", label=" << dot_string(label) << "];\n";
  }
  for (const auto& e : g.edges) {
    out << "  " << dot_string(g.vertices[e.from].id) << " -> " << dot_string(g.vertices[e.to].id)
        << " [label=" << dot_string(word_label(e.image_from) + " / " + word_label(e.image_to))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace jsjd
