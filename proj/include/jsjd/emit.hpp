#pragma once

#include <string>

#include <json.hpp>

#include "jsjd/classifier.hpp"
#include "jsjd/graph_of_groups.hpp"
#include "jsjd/ivanov.hpp"
#include "jsjd/mr.hpp"
#include "jsjd/whitehead.hpp"

namespace jsjd {

using Json = nlohmann::ordered_json;

Json to_json(const GraphOfGroups& g);
Json to_json(const AutChain& chain);

/// {input, verdict, params, witness, bounded, graph}.
Json to_json(const Classification& c, const std::string& input);

Json to_json(const SuiteReport& r);
Json to_json(const DoubleHom& h);
/// {"factor": "eta", roots and exponents} or {"factor": "pi", "k": k}.
Json to_json(const Factorization& f);

/// DOT digraph: rigid vertices are boxes, QH vertices ellipses labelled with
/// the surface, cyclic vertices circles; edges carry both images.
std::string to_dot(const GraphOfGroups& g);

}  // namespace jsjd
