#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "jsjd/words.hpp"

namespace jsjd {

/// Thrown when an orbit enumeration exceeds its node cap.
class ResourceExhausted : public std::runtime_error {
 public:
  ResourceExhausted(const std::string& what, std::size_t consumed)
      : std::runtime_error(what), consumed_(consumed) {}

  std::size_t consumed() const { return consumed_; }

 private:
  std::size_t consumed_;
};

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

/// Signed permutation of the generators: a -> images[0], b -> images[1].
struct TypeI {
  std::array<Letter, 2> images;
  friend bool operator==(const TypeI&, const TypeI&) = default;
};

enum class Action { Fix, LeftMultiply, RightMultiply, Conjugate };

/// One-multiplier move on rank 2. The multiplier's generator is fixed; the
/// other generator y goes to y m (right), m^-1 y (left) or m^-1 y m
/// (conjugate).
struct TypeII {
  Letter multiplier;
  Action action;
  friend bool operator==(const TypeII&, const TypeII&) = default;
};

class WhiteheadAutomorphism {
 public:
  WhiteheadAutomorphism(TypeI t) : kind_(t) {}
  WhiteheadAutomorphism(TypeII t);

  const std::variant<TypeI, TypeII>& kind() const { return kind_; }

  /// Image of the generator with the given (positive) index.
  FreeWord image(int generator) const;
  FreeWord apply(const FreeWord& w) const;
  WhiteheadAutomorphism inverse() const;

  /// "(image of a,image of b)", e.g. "(a,ba)".
  std::string to_string() const;

  friend bool operator==(const WhiteheadAutomorphism&, const WhiteheadAutomorphism&) = default;

 private:
  std::variant<TypeI, TypeII> kind_;
};

/// The 19 nontrivial Whitehead automorphisms of F(a,b): seven signed
/// permutations, then multipliers a, A, b, B each with right, left and
/// conjugate actions. This order breaks ties everywhere.
const std::vector<WhiteheadAutomorphism>& whitehead_moves();

/// Automorphisms applied left to right: chain(w) = m_k(...m_1(w)).
class AutChain {
 public:
  AutChain() = default;
  explicit AutChain(std::vector<WhiteheadAutomorphism> moves) : moves_(std::move(moves)) {}

  const std::vector<WhiteheadAutomorphism>& moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }

  void push_back(const WhiteheadAutomorphism& m) { moves_.push_back(m); }
  void append(const AutChain& other);

  FreeWord apply(const FreeWord& w) const;
  AutChain inverse() const;
  /// Images of a and b.
  std::array<FreeWord, 2> images() const;

  std::vector<std::string> to_strings() const;

 private:
  std::vector<WhiteheadAutomorphism> moves_;
};

/// Inner automorphism u -> g^-1 u g as a chain of conjugating moves.
AutChain inner_chain(const FreeWord& g);

FreeWord apply(const WhiteheadAutomorphism& aut, const FreeWord& w);
FreeWord apply(const AutChain& chain, const FreeWord& w);

/// Cyclic reduction of aut(w).
CyclicWord apply_cyclic(const WhiteheadAutomorphism& aut, const CyclicWord& w);

struct Minimized {
  CyclicWord min;
  AutChain chain;  // chain(w) is conjugate to min
};

/// Greedy Whitehead descent: repeatedly applies the move with the largest
/// cyclic-length drop (first in enumeration order on ties).
Minimized minimize(const FreeWord& w);

/// Minimal-length part of an Aut-orbit, explored by length-preserving
/// Whitehead moves from minimize(w). Nodes are kept in discovery order with
/// parent pointers, deduplicated up to rotation (and inversion unless the
/// exploration is directed).
struct Orbit {
  AutChain to_start;  // takes w to a conjugate of words[0]
  std::vector<CyclicWord> words;
  std::vector<std::string> keys;
  std::vector<int> parent;  // -1 for the start node
  std::vector<int> move;    // index into whitehead_moves()

  std::size_t size() const { return words.size(); }
  /// Chain taking w to a conjugate of words[i].
  AutChain chain_to(std::size_t i) const;
  /// Node indices ordered by key.
  std::vector<std::size_t> sorted() const;
};

Orbit explore_minimal_orbit(const FreeWord& w, bool directed, std::size_t cap = kDefaultOrbitCap);

/// Minimal-length cyclic words of the orbit, each as the least rotation of
/// itself or its inverse, sorted.
std::vector<CyclicWord> minimal_orbit(const FreeWord& w, std::size_t cap = kDefaultOrbitCap);

/// Least rotation of w or w^-1, whichever is smaller.
CyclicWord normal_form(const CyclicWord& w);

bool is_primitive(const FreeWord& w);
bool in_proper_free_factor(const FreeWord& w);

/// A chain carrying u into the conjugacy class of v, if one exists.
std::optional<AutChain> aut_conjugacy_equivalent(const FreeWord& u, const FreeWord& v,
                                                 std::size_t cap = kDefaultOrbitCap);

}  // namespace jsjd
