#include "jsjd/classifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "jsjd/subgroups.hpp"

namespace jsjd {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::NotOneEnded: return "NotOneEnded";
    case Verdict::ProperPower: return "ProperPower";
    case Verdict::SurfaceOrientableGenus2: return "SurfaceOrientableGenus2";
    case Verdict::SurfaceNonOrientableGenus4: return "SurfaceNonOrientableGenus4";
    case Verdict::DoubleIsJsj: return "DoubleIsJsj";
    case Verdict::Case1_QH3: return "Case1_QH3";
    case Verdict::Case1_Moebius: return "Case1_Moebius";
    case Verdict::Case1_Rigid: return "Case1_Rigid";
    case Verdict::Case2_Rigid: return "Case2_Rigid";
    case Verdict::Case2_QH4: return "Case2_QH4";
    case Verdict::Case3_Rigid: return "Case3_Rigid";
    case Verdict::Case3_QH4: return "Case3_QH4";
    case Verdict::Case3_QH5: return "Case3_QH5";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

namespace {

const Alphabet kRank2{2};

const FreeWord& gen_a() {
  static const FreeWord a = FreeWord::generator(1, kRank2);
  return a;
}
const FreeWord& gen_b() {
  static const FreeWord b = FreeWord::generator(2, kRank2);
  return b;
}

void require_input(const FreeWord& w) {
  if (w.empty()) throw MalformedInput("the double along the empty word is undefined");
  if (w.alphabet() != kRank2) throw AlphabetMismatch("classification needs a rank 2 word");
}

FreeWord prefix(const FreeWord& w, std::size_t len) {
  WordBuilder b(w.alphabet());
  for (std::size_t i = 0; i < len; ++i) b.push(w[i]);
  return std::move(b).finish();
}

/// Extends `chain` by an inner automorphism so that chain(w) is exactly the
/// rotation of its cyclic core starting at the first position accepted by
/// `start`.
template <typename Pred>
void make_literal(AutChain& chain, const FreeWord& w, Pred start) {
  const auto cr = cyclic_reduce(chain.apply(w));
  const FreeWord& core = cr.core.word();
  const std::size_t len = core.size();
  std::size_t s = 0;
  while (s < len && !start(core, s)) ++s;
  if (s == len) throw std::logic_error("no admissible rotation of " + to_string(core));
  chain.append(inner_chain(multiply(cr.conjugator, prefix(core, s))));
}

BasisWitness finish_witness(AutChain chain) {
  const AutChain inv = chain.inverse();
  return {std::move(chain), {inv.apply(gen_a()), inv.apply(gen_b())}};
}

struct Run {
  int gen;  // 1 for the x role, 2 for y
  long long exp;
};

/// Maximal syllables of a cyclic word, with generator `x` relabelled as 1.
std::vector<Run> syllables(const FreeWord& c, int x) {
  std::vector<Run> out;
  const std::size_t len = c.size();
  auto gen_of = [&](std::size_t i) { return std::abs(c[i % len]) == x ? 1 : 2; };
  std::size_t s = 0;
  while (s < len && gen_of(s) == gen_of(s + len - 1)) ++s;
  if (s == len) return out;
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t p = s + i;
    const long long step = c[p % len] > 0 ? 1 : -1;
    if (i > 0 && out.back().gen == gen_of(p)) {
      out.back().exp += step;
    } else {
      out.push_back({gen_of(p), step});
    }
  }
  return out;
}

struct AmalgamCandidate {
  long long n;
  long long m;  // 1 when absent
  bool form;
};

std::optional<AmalgamCandidate> amalgam_candidate(const std::vector<Run>& runs) {
  long long n = 0;
  long long m = 0;
  int x_runs = 0;
  for (const auto& r : runs) {
    if (r.gen == 1) {
      n = std::gcd(n, std::llabs(r.exp));
      ++x_runs;
    } else {
      m = std::gcd(m, std::llabs(r.exp));
    }
  }
  if (n < 2) return std::nullopt;
  return AmalgamCandidate{n, m, x_runs == 1 && m >= 2};
}

struct HnnCandidate {
  long long m;
  long long n;
  bool reorient;
  bool form;
};

std::optional<HnnCandidate> hnn_candidate(const std::vector<Run>& runs) {
  long long outside = 0;
  long long inside = 0;
  int x_runs = 0;
  long long last_sign = 0;
  long long first_sign = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& r = runs[i];
    if (r.gen == 1) {
      if (std::llabs(r.exp) != 1 || r.exp == last_sign) return std::nullopt;
      if (x_runs == 0) first_sign = r.exp;
      last_sign = r.exp;
      ++x_runs;
    } else if (x_runs > 0) {
      auto& g = last_sign > 0 ? inside : outside;
      g = std::gcd(g, std::llabs(r.exp));
    }
  }
  if (x_runs < 2 || first_sign == last_sign) return std::nullopt;
  // The y-run before the first x-run follows the last x-run cyclically.
  if (runs.front().gen == 2) {
    auto& g = last_sign > 0 ? inside : outside;
    g = std::gcd(g, std::llabs(runs.front().exp));
  }
  const bool reorient = outside > inside;
  if (reorient) std::swap(outside, inside);
  return HnnCandidate{outside, inside, reorient, x_runs == 2};
}

struct Node {
  CyclicWord word;
  int parent;  // -1 for orbit nodes
  int move;
  int orbit_index;
};

struct Choice {
  std::size_t node;
  int x;
  bool reorient;
};

}  // namespace

SearchReport search_conditions(const FreeWord& w, const SearchBound& bound) {
  require_input(w);
  const Orbit orbit = explore_minimal_orbit(w, false, bound.orbit_cap);
  const auto& moves = whitehead_moves();

  std::vector<Node> nodes;
  std::vector<std::size_t> depth;
  std::unordered_map<std::string, std::size_t> seen;
  using Entry = std::tuple<std::size_t, std::size_t, std::string, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    seen.emplace(orbit.keys[i], nodes.size());
    queue.emplace(orbit.words[i].size(), 0, orbit.keys[i], nodes.size());
    nodes.push_back({orbit.words[i], -1, -1, static_cast<int>(i)});
    depth.push_back(0);
  }

  SearchReport report;
  std::optional<std::pair<AmalgamCandidate, Choice>> best_amalgam;
  std::optional<std::pair<HnnCandidate, Choice>> best_hnn;
  auto amalgam_rank = [](const AmalgamCandidate& c) { return std::tuple(c.n, c.m, c.form); };
  auto hnn_rank = [](const HnnCandidate& c) {
    return std::tuple(std::gcd(c.m, c.n), c.n, c.m, c.form);
  };

  std::size_t extension = 0;
  while (!queue.empty()) {
    const auto [len, d, key, id] = queue.top();
    queue.pop();
    if (d > 0) {
      if (extension >= bound.nodes) break;
      ++extension;
    }
    ++report.nodes;
    for (int x : {1, 2}) {
      const auto runs = syllables(nodes[id].word.word(), x);
      if (runs.empty()) continue;
      if (const auto c = amalgam_candidate(runs)) {
        ++report.amalgam_candidates;
        if (!best_amalgam || amalgam_rank(*c) > amalgam_rank(best_amalgam->first)) {
          best_amalgam.emplace(*c, Choice{id, x, false});
        }
      }
      if (const auto c = hnn_candidate(runs)) {
        ++report.hnn_candidates;
        if (!best_hnn || hnn_rank(*c) > hnn_rank(best_hnn->first)) {
          best_hnn.emplace(*c, Choice{id, x, c->reorient});
        }
      }
    }
    if (d >= bound.depth) continue;
    for (std::size_t mv = 0; mv < moves.size(); ++mv) {
      CyclicWord child = apply_cyclic(moves[mv], nodes[id].word);
      std::string child_key = child.normal_key();
      if (seen.contains(child_key)) continue;
      seen.emplace(child_key, nodes.size());
      queue.emplace(child.size(), d + 1, std::move(child_key), nodes.size());
      nodes.push_back({std::move(child), static_cast<int>(id), static_cast<int>(mv),
                       nodes[id].orbit_index});
      depth.push_back(d + 1);
    }
  }

  auto chain_for = [&](const Choice& c) {
    std::vector<WhiteheadAutomorphism> tail;
    std::size_t v = c.node;
    while (nodes[v].parent >= 0) {
      tail.push_back(moves[static_cast<std::size_t>(nodes[v].move)]);
      v = static_cast<std::size_t>(nodes[v].parent);
    }
    std::reverse(tail.begin(), tail.end());
    AutChain chain = orbit.chain_to(static_cast<std::size_t>(nodes[v].orbit_index));
    chain.append(AutChain(std::move(tail)));
    if (c.x == 2) chain.push_back(TypeI{{2, 1}});
    if (c.reorient) chain.push_back(TypeI{{-1, 2}});
    return chain;
  };

  if (best_amalgam) {
    const auto& [cand, choice] = *best_amalgam;
    AutChain chain = chain_for(choice);
    make_literal(chain, w, [](const FreeWord& core, std::size_t s) {
      const std::size_t len = core.size();
      return std::abs(core[(s + len - 1) % len]) != std::abs(core[s]);
    });
    BasisWitness witness = finish_witness(std::move(chain));
    const auto& [x, y] = witness.basis;
    const auto sub = build({power(x, cand.n), cand.m >= 2 ? power(y, cand.m) : y});
    if (!sub.contains(w)) throw std::logic_error("amalgam witness failed certification");
    report.amalgam = AmalgamWitness{std::move(witness), cand.n,
                                    cand.m >= 2 ? std::optional<long long>(cand.m) : std::nullopt,
                                    cand.form};
  }
  if (best_hnn) {
    const auto& [cand, choice] = *best_hnn;
    AutChain chain = chain_for(choice);
    make_literal(chain, w, [](const FreeWord& core, std::size_t s) {
      return core[(s + core.size() - 1) % core.size()] == -1;
    });
    BasisWitness witness = finish_witness(std::move(chain));
    const auto& [x, y] = witness.basis;
    const auto sub = build({power(y, cand.m), conjugate(power(y, cand.n), x)});
    if (!sub.contains(w)) throw std::logic_error("HNN witness failed certification");
    report.hnn = HnnWitness{std::move(witness), cand.m, cand.n, cand.form};
  }
  return report;
}

std::optional<AmalgamWitness> search_condition_amalgam(const FreeWord& w, const SearchBound& bound) {
  return search_conditions(w, bound).amalgam;
}

std::optional<HnnWitness> search_condition_hnn(const FreeWord& w, const SearchBound& bound) {
  return search_conditions(w, bound).hnn;
}

std::optional<Classification> check_preconditions(const FreeWord& w) {
  require_input(w);
  Classification c;
  if (const auto root = is_proper_power(w)) {
    c.verdict = Verdict::ProperPower;
    c.root = root->root;
    c.k = root->exponent;
    return c;
  }
  if (!is_primitive(w)) return std::nullopt;
  AutChain chain = minimize(w).chain;
  make_literal(chain, w, [](const FreeWord&, std::size_t) { return true; });
  c.verdict = Verdict::NotOneEnded;
  c.root = w;
  c.witness = finish_witness(std::move(chain));
  return c;
}

namespace {

GraphOfGroups surface_graph(bool orientable) {
  GraphOfGroups g;
  g.add_vertex({"QH", VertexKind::QH, "", orientable, orientable ? 2 : 4, 0, {}});
  return g;
}

}  // namespace

std::optional<Classification> detect_surface(const FreeWord& w, std::size_t cap) {
  require_input(w);
  const Orbit orbit = explore_minimal_orbit(w, true, cap);
  if (orbit.words.front().size() != 4) return std::nullopt;
  static const std::vector<std::pair<std::string, bool>> reps{
      {"abAB", true}, {"baBA", true}, {"aabb", false}, {"aaBB", false}, {"AAbb", false},
      {"AABB", false}, {"abAb", false}, {"BaBA", false}, {"abaB", false}, {"bABA", false},
  };
  for (const auto& [rep, orientable] : reps) {
    const FreeWord target = word_from_letters(rep);
    const std::string key = CyclicWord(target).directed_key();
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      if (orbit.keys[i] != key) continue;
      AutChain chain = orbit.chain_to(i);
      make_literal(chain, w, [&](const FreeWord& core, std::size_t s) {
        return rotate(core, s) == target;
      });
      Classification c;
      c.verdict = orientable ? Verdict::SurfaceOrientableGenus2 : Verdict::SurfaceNonOrientableGenus4;
      c.variant = rep;
      c.witness = finish_witness(std::move(chain));
      c.graph = surface_graph(orientable);
      return c;
    }
  }
  return std::nullopt;
}

GraphOfGroups double_graph(const FreeWord& w) {
  GraphOfGroups g;
  const auto a = g.add_vertex({"A", VertexKind::Rigid, "A", true, 0, 0, {gen_a(), gen_b()}});
  const auto b = g.add_vertex({"B", VertexKind::Rigid, "B", true, 0, 0, {gen_a(), gen_b()}});
  g.add_edge(a, b, w, w);
  return g;
}

namespace {

Vertex rigid(const std::string& side, const std::string& name, std::vector<FreeWord> basis) {
  return {side + "." + name, VertexKind::Rigid, side, true, 0, 0, std::move(basis)};
}

Vertex cyclic(const std::string& side, const std::string& name, FreeWord generator) {
  return {side + "." + name, VertexKind::Cyclic, side, true, 0, 0, {std::move(generator)}};
}

Vertex qh(bool orientable, int genus, std::vector<FreeWord> boundaries) {
  const int count = static_cast<int>(boundaries.size());
  return {"QH", VertexKind::QH, "", orientable, genus, count, std::move(boundaries)};
}

// Graph builders. Each side carries the same words x, y in its own copy of
// F(a,b); w is glued along the edge between the two sides' copies.

GraphOfGroups case1_rigid(const FreeWord& w, const FreeWord& x, const FreeWord& y, long long n,
                          std::optional<long long> m) {
  GraphOfGroups g;
  const FreeWord xn = power(x, n);
  const FreeWord ym = m ? power(y, *m) : y;
  std::size_t main[2];
  int i = 0;
  for (const std::string side : {"A", "B"}) {
    const auto r = g.add_vertex(rigid(side, "R", {xn, ym}));
    const auto xv = g.add_vertex(cyclic(side, "X", x));
    g.add_edge(r, xv, xn, xn);
    if (m) {
      const auto yv = g.add_vertex(cyclic(side, "Y", y));
      g.add_edge(yv, r, ym, ym);
    }
    main[i++] = r;
  }
  g.add_edge(main[0], main[1], w, w);
  return g;
}

GraphOfGroups case1_qh3(const FreeWord& x, const FreeWord& y, long long n, long long m) {
  GraphOfGroups g;
  const FreeWord xn = power(x, n);
  const FreeWord ym = power(y, m);
  const auto s = g.add_vertex(qh(true, 0, {xn, ym, xn, ym}));
  for (const std::string side : {"A", "B"}) {
    g.add_edge(g.add_vertex(cyclic(side, "X", x)), s, xn, xn);
    g.add_edge(g.add_vertex(cyclic(side, "Y", y)), s, ym, ym);
  }
  return g;
}

/// The parameter equal to 2 becomes a Moebius band; the other boundary
/// stays attached to cyclic vertices.
GraphOfGroups case1_moebius(const FreeWord& x, const FreeWord& y, long long n, long long m) {
  GraphOfGroups g;
  const bool keep_x = n > 2;
  const FreeWord& base = keep_x ? x : y;
  const FreeWord bw = power(base, keep_x ? n : m);
  const auto s = g.add_vertex(qh(false, 2, {bw, bw}));
  for (const std::string side : {"A", "B"}) {
    g.add_edge(g.add_vertex(cyclic(side, keep_x ? "X" : "Y", base)), s, bw, bw);
  }
  return g;
}

/// Two boundary words per side: y^m and x y^n x^-1, both attached to the
/// cyclic vertex <y>.
GraphOfGroups qh4(const FreeWord& x, const FreeWord& y, long long m, long long n) {
  GraphOfGroups g;
  const FreeWord ym = power(y, m);
  const FreeWord yn = power(y, n);
  const FreeWord xynx = conjugate(yn, x);
  const auto s = g.add_vertex(qh(true, 0, {ym, xynx, ym, xynx}));
  for (const std::string side : {"A", "B"}) {
    const auto yv = g.add_vertex(cyclic(side, "Y", y));
    g.add_edge(yv, s, ym, ym);
    g.add_edge(yv, s, yn, xynx);
  }
  return g;
}

GraphOfGroups qh5(const FreeWord& x, const FreeWord& y, long long m, long long n, long long k) {
  GraphOfGroups g;
  const FreeWord ym = power(y, m);
  const FreeWord yn = power(y, n);
  const FreeWord yk = power(y, k);
  const FreeWord xynx = conjugate(yn, x);
  const auto s = g.add_vertex(qh(true, 0, {ym, xynx, ym, xynx}));
  for (const std::string side : {"A", "B"}) {
    const auto yv = g.add_vertex(cyclic(side, "Y", y));
    const auto kv = g.add_vertex(cyclic(side, "K", yk));
    g.add_edge(yv, kv, yk, yk);
    g.add_edge(kv, s, ym, ym);
    g.add_edge(kv, s, yn, xynx);
  }
  return g;
}

GraphOfGroups case2_loop(const FreeWord& w, const FreeWord& x, const FreeWord& y, long long l) {
  GraphOfGroups g;
  const FreeWord yl = power(y, l);
  const FreeWord xylx = conjugate(yl, x);
  std::size_t main[2];
  int i = 0;
  for (const std::string side : {"A", "B"}) {
    const auto r = g.add_vertex(rigid(side, "R", {y, xylx}));
    g.add_edge(r, r, yl, xylx);
    main[i++] = r;
  }
  g.add_edge(main[0], main[1], w, w);
  return g;
}

GraphOfGroups case2_two_edge(const FreeWord& w, const FreeWord& x, const FreeWord& y, long long m,
                             long long n) {
  GraphOfGroups g;
  const FreeWord ym = power(y, m);
  const FreeWord yn = power(y, n);
  const FreeWord xynx = conjugate(yn, x);
  std::size_t main[2];
  int i = 0;
  for (const std::string side : {"A", "B"}) {
    const auto yv = g.add_vertex(cyclic(side, "Y", y));
    const auto r = g.add_vertex(rigid(side, "R", {ym, xynx}));
    g.add_edge(yv, r, ym, ym);
    g.add_edge(yv, r, yn, xynx);
    main[i++] = r;
  }
  g.add_edge(main[0], main[1], w, w);
  return g;
}

/// <y> *_{<y^m>} R with an HNN loop on R; here m divides n.
GraphOfGroups case3_top(const FreeWord& w, const FreeWord& x, const FreeWord& y, long long m,
                        long long n) {
  GraphOfGroups g;
  const FreeWord ym = power(y, m);
  const FreeWord yn = power(y, n);
  const FreeWord xynx = conjugate(yn, x);
  std::size_t main[2];
  int i = 0;
  for (const std::string side : {"A", "B"}) {
    const auto yv = g.add_vertex(cyclic(side, "Y", y));
    const auto r = g.add_vertex(rigid(side, "R", {ym, xynx}));
    g.add_edge(yv, r, ym, ym);
    g.add_edge(r, r, yn, xynx);
    main[i++] = r;
  }
  g.add_edge(main[0], main[1], w, w);
  return g;
}

GraphOfGroups case3_bottom(const FreeWord& w, const FreeWord& x, const FreeWord& y, long long m,
                           long long n, long long k) {
  GraphOfGroups g;
  const FreeWord ym = power(y, m);
  const FreeWord yn = power(y, n);
  const FreeWord yk = power(y, k);
  const FreeWord xynx = conjugate(yn, x);
  std::size_t main[2];
  int i = 0;
  for (const std::string side : {"A", "B"}) {
    const auto yv = g.add_vertex(cyclic(side, "Y", y));
    const auto kv = g.add_vertex(cyclic(side, "K", yk));
    const auto r = g.add_vertex(rigid(side, "R", {ym, xynx}));
    g.add_edge(yv, kv, yk, yk);
    g.add_edge(kv, r, ym, ym);
    g.add_edge(kv, r, yn, xynx);
    main[i++] = r;
  }
  g.add_edge(main[0], main[1], w, w);
  return g;
}

Classification indeterminate(std::size_t consumed) {
  Classification c;
  c.verdict = Verdict::Indeterminate;
  c.consumed = consumed;
  return c;
}

Classification from_search(const FreeWord& w, const SearchReport& report) {
  Classification c;
  const auto& am = report.amalgam;
  const auto& hn = report.hnn;
  if (!am && !hn) {
    c.verdict = Verdict::DoubleIsJsj;
    c.graph = double_graph(w);
    return c;
  }
  if (am && !hn) {
    const auto& [x, y] = am->witness.basis;
    c.witness = am->witness;
    c.n = am->n;
    c.m = am->m;
    if (am->form) {
      const long long n = am->n;
      const long long m = *am->m;
      if (n == 2 && m == 2) throw std::logic_error("x^2 y^2 reached the amalgam case");
      if (n > 2 && m > 2) {
        c.verdict = Verdict::Case1_QH3;
        c.graph = case1_qh3(x, y, n, m);
      } else {
        c.verdict = Verdict::Case1_Moebius;
        c.graph = case1_moebius(x, y, n, m);
      }
      return c;
    }
    c.verdict = Verdict::Case1_Rigid;
    c.variant = am->m ? "two-edge" : "one-edge";
    c.graph = case1_rigid(w, x, y, am->n, am->m);
    return c;
  }
  const auto& [x, y] = hn->witness.basis;
  const long long m = hn->m;
  const long long n = hn->n;
  c.witness = hn->witness;
  c.m = m;
  c.n = n;
  if (!am) {
    if (hn->form && m != n) {
      c.verdict = Verdict::Case2_QH4;
      c.graph = qh4(x, y, m, n);
    } else if (m == 1) {
      c.verdict = Verdict::Case2_Rigid;
      c.variant = "loop";
      c.graph = case2_loop(w, x, y, n);
    } else {
      c.verdict = Verdict::Case2_Rigid;
      c.variant = "two-edge";
      c.graph = case2_two_edge(w, x, y, m, n);
    }
    return c;
  }
  const long long k = std::gcd(m, n);
  if (k == 1) {
    Classification out = indeterminate(report.nodes);
    out.variant = "coprime HNN parameters alongside an amalgam witness";
    return out;
  }
  c.k = k;
  if (hn->form) {
    c.verdict = k == m ? Verdict::Case3_QH4 : Verdict::Case3_QH5;
    c.graph = k == m ? qh4(x, y, m, n) : qh5(x, y, m, n, k);
  } else {
    c.verdict = Verdict::Case3_Rigid;
    c.variant = k == m ? "top" : "bottom";
    c.graph = k == m ? case3_top(w, x, y, m, n) : case3_bottom(w, x, y, m, n, k);
  }
  return c;
}

}  // namespace

Classification classify(const FreeWord& w, const SearchBound& bound) {
  require_input(w);
  if (auto pre = check_preconditions(w)) return *pre;
  try {
    if (auto surface = detect_surface(w, bound.orbit_cap)) return *surface;
    const SearchReport report = search_conditions(w, bound);
    Classification c = from_search(w, report);
    if (c.verdict != Verdict::Indeterminate) {
      c.bounded = true;
      c.bound = bound.nodes;
    }
    if (c.graph) c.graph->validate();
    return c;
  } catch (const ResourceExhausted& e) {
    Classification c = indeterminate(e.consumed());
    c.variant = e.what();
    return c;
  }
}

}  // namespace jsjd
