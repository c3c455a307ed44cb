#include "jsjd/whitehead.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <unordered_map>

namespace jsjd {

namespace {

const Alphabet kRank2{2};

FreeWord letter_word(Letter l) {
  WordBuilder b(kRank2);
  b.push(l);
  return std::move(b).finish();
}

void require_rank2(const FreeWord& w) {
  if (w.alphabet() != kRank2) {
    throw AlphabetMismatch("Whitehead automorphisms act on rank 2 words only");
  }
}

void require_nontrivial(const FreeWord& w, const char* what) {
  if (w.empty()) throw MalformedInput(std::string(what) + " of the identity is undefined");
}

}  // namespace

WhiteheadAutomorphism::WhiteheadAutomorphism(TypeII t) : kind_(t) {
  if (t.multiplier == 0 || std::abs(t.multiplier) > 2) {
    throw MalformedInput("multiplier must be a letter of rank 2");
  }
}

FreeWord WhiteheadAutomorphism::image(int generator) const {
  if (const auto* p = std::get_if<TypeI>(&kind_)) {
    return letter_word(p->images[static_cast<std::size_t>(generator - 1)]);
  }
  const auto& t = std::get<TypeII>(kind_);
  const int own = std::abs(t.multiplier);
  const FreeWord y = letter_word(static_cast<Letter>(generator));
  if (generator == own) return y;
  const FreeWord m = letter_word(t.multiplier);
  const FreeWord m_inv = letter_word(static_cast<Letter>(-t.multiplier));
  switch (t.action) {
    case Action::Fix:
      return y;
    case Action::RightMultiply:
      return multiply(y, m);
    case Action::LeftMultiply:
      return multiply(m_inv, y);
    case Action::Conjugate:
      return multiply(multiply(m_inv, y), m);
  }
  return y;
}

FreeWord WhiteheadAutomorphism::apply(const FreeWord& w) const {
  require_rank2(w);
  const std::array<FreeWord, 2> images{image(1), image(2)};
  return substitute(w, images);
}

WhiteheadAutomorphism WhiteheadAutomorphism::inverse() const {
  if (const auto* p = std::get_if<TypeI>(&kind_)) {
    TypeI inv{};
    for (int i = 0; i < 2; ++i) {
      const Letter l = p->images[static_cast<std::size_t>(i)];
      inv.images[static_cast<std::size_t>(std::abs(l) - 1)] =
          static_cast<Letter>(l > 0 ? i + 1 : -(i + 1));
    }
    return inv;
  }
  const auto& t = std::get<TypeII>(kind_);
  return TypeII{static_cast<Letter>(-t.multiplier), t.action};
}

std::string WhiteheadAutomorphism::to_string() const {
  return "(" + jsjd::to_string(image(1)) + "," + jsjd::to_string(image(2)) + ")";
}

const std::vector<WhiteheadAutomorphism>& whitehead_moves() {
  static const std::vector<WhiteheadAutomorphism> moves = [] {
    std::vector<WhiteheadAutomorphism> out;
    for (bool swap : {false, true}) {
      for (int sa : {1, -1}) {
        for (int sb : {1, -1}) {
          if (!swap && sa == 1 && sb == 1) continue;
          const TypeI t{{static_cast<Letter>(sa * (swap ? 2 : 1)),
                         static_cast<Letter>(sb * (swap ? 1 : 2))}};
          out.emplace_back(t);
        }
      }
    }
    for (Letter m : {Letter{1}, Letter{-1}, Letter{2}, Letter{-2}}) {
      for (Action a : {Action::RightMultiply, Action::LeftMultiply, Action::Conjugate}) {
        out.emplace_back(TypeII{m, a});
      }
    }
    return out;
  }();
  return moves;
}

void AutChain::append(const AutChain& other) {
  moves_.insert(moves_.end(), other.moves_.begin(), other.moves_.end());
}

FreeWord AutChain::apply(const FreeWord& w) const {
  require_rank2(w);
  if (moves_.empty()) return w;
  const auto imgs = images();
  return substitute(w, imgs);
}

AutChain AutChain::inverse() const {
  std::vector<WhiteheadAutomorphism> inv;
  inv.reserve(moves_.size());
  for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) inv.push_back(it->inverse());
  return AutChain(std::move(inv));
}

std::array<FreeWord, 2> AutChain::images() const {
  std::array<FreeWord, 2> imgs{letter_word(1), letter_word(2)};
  for (const auto& m : moves_) {
    imgs = {m.apply(imgs[0]), m.apply(imgs[1])};
  }
  return imgs;
}

std::vector<std::string> AutChain::to_strings() const {
  std::vector<std::string> out;
  out.reserve(moves_.size());
  for (const auto& m : moves_) out.push_back(m.to_string());
  return out;
}

AutChain inner_chain(const FreeWord& g) {
  AutChain chain;
  for (Letter l : g.letters()) chain.push_back(TypeII{l, Action::Conjugate});
  return chain;
}

FreeWord apply(const WhiteheadAutomorphism& aut, const FreeWord& w) { return aut.apply(w); }
FreeWord apply(const AutChain& chain, const FreeWord& w) { return chain.apply(w); }

CyclicWord apply_cyclic(const WhiteheadAutomorphism& aut, const CyclicWord& w) {
  return cyclic_reduce(aut.apply(w.word())).core;
}

Minimized minimize(const FreeWord& w) {
  require_nontrivial(w, "minimize");
  require_rank2(w);
  CyclicWord current = cyclic_reduce(w).core;
  AutChain chain;
  const auto& moves = whitehead_moves();
  while (true) {
    std::optional<CyclicWord> best;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      CyclicWord c = apply_cyclic(moves[i], current);
      if (c.size() < (best ? best->size() : current.size())) {
        best = std::move(c);
        best_index = i;
      }
    }
    if (!best) break;
    current = std::move(*best);
    chain.push_back(moves[best_index]);
  }
  return {std::move(current), std::move(chain)};
}

AutChain Orbit::chain_to(std::size_t i) const {
  std::vector<WhiteheadAutomorphism> path;
  for (int v = static_cast<int>(i); parent[static_cast<std::size_t>(v)] >= 0;
       v = parent[static_cast<std::size_t>(v)]) {
    path.push_back(whitehead_moves()[static_cast<std::size_t>(move[static_cast<std::size_t>(v)])]);
  }
  std::reverse(path.begin(), path.end());
  AutChain chain = to_start;
  chain.append(AutChain(std::move(path)));
  return chain;
}

std::vector<std::size_t> Orbit::sorted() const {
  std::vector<std::size_t> idx(words.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return keys[x] < keys[y]; });
  return idx;
}

Orbit explore_minimal_orbit(const FreeWord& w, bool directed, std::size_t cap) {
  auto [start, chain] = minimize(w);
  const std::size_t length = start.size();
  Orbit orbit;
  orbit.to_start = std::move(chain);
  std::unordered_map<std::string, std::size_t> seen;
  auto key_of = [directed](const CyclicWord& c) {
    return directed ? c.directed_key() : c.normal_key();
  };
  auto add = [&](CyclicWord c, int parent, int move) {
    std::string key = key_of(c);
    if (seen.contains(key)) return;
    if (orbit.words.size() >= cap) {
      throw ResourceExhausted("minimal orbit exceeds " + std::to_string(cap) + " nodes",
                              orbit.words.size());
    }
    seen.emplace(key, orbit.words.size());
    orbit.words.push_back(std::move(c));
    orbit.keys.push_back(std::move(key));
    orbit.parent.push_back(parent);
    orbit.move.push_back(move);
  };
  add(std::move(start), -1, -1);
  const auto& moves = whitehead_moves();
  for (std::size_t i = 0; i < orbit.words.size(); ++i) {
    for (std::size_t m = 0; m < moves.size(); ++m) {
      CyclicWord c = apply_cyclic(moves[m], orbit.words[i]);
      if (c.size() != length) continue;
      add(std::move(c), static_cast<int>(i), static_cast<int>(m));
    }
  }
  return orbit;
}

CyclicWord normal_form(const CyclicWord& w) {
  const CyclicWord forward = w.least_rotation();
  const CyclicWord backward = CyclicWord(inverse(w.word())).least_rotation();
  return backward.directed_key() < forward.directed_key() ? backward : forward;
}

std::vector<CyclicWord> minimal_orbit(const FreeWord& w, std::size_t cap) {
  const Orbit orbit = explore_minimal_orbit(w, false, cap);
  std::vector<CyclicWord> out;
  out.reserve(orbit.size());
  for (std::size_t i : orbit.sorted()) out.push_back(normal_form(orbit.words[i]));
  return out;
}

bool is_primitive(const FreeWord& w) {
  require_nontrivial(w, "primitivity");
  return minimize(w).min.size() == 1;
}

bool in_proper_free_factor(const FreeWord& w) {
  require_nontrivial(w, "free factor membership");
  const auto root = is_proper_power(w);
  return is_primitive(root ? root->root : w);
}

std::optional<AutChain> aut_conjugacy_equivalent(const FreeWord& u, const FreeWord& v,
                                                 std::size_t cap) {
  require_nontrivial(u, "orbit equivalence");
  require_nontrivial(v, "orbit equivalence");
  const Minimized mv = minimize(v);
  const Orbit orbit = explore_minimal_orbit(u, true, cap);
  if (orbit.words.front().size() != mv.min.size()) return std::nullopt;
  const std::string target = mv.min.directed_key();
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (orbit.keys[i] != target) continue;
    AutChain chain = orbit.chain_to(i);
    chain.append(mv.chain.inverse());
    return chain;
  }
  return std::nullopt;
}

}  // namespace jsjd
