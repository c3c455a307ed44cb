#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "jsjd/graph_of_groups.hpp"
#include "jsjd/whitehead.hpp"
#include "jsjd/words.hpp"

namespace jsjd {

enum class Verdict {
  NotOneEnded,
  ProperPower,
  SurfaceOrientableGenus2,
  SurfaceNonOrientableGenus4,
  DoubleIsJsj,
  Case1_QH3,
  Case1_Moebius,
  Case1_Rigid,
  Case2_Rigid,
  Case2_QH4,
  Case3_Rigid,
  Case3_QH4,
  Case3_QH5,
  Indeterminate,
};

const char* to_string(Verdict v);

inline constexpr std::size_t kDefaultSearchNodes = 5000;
inline constexpr std::size_t kDefaultSearchDepth = 8;

/// Budget for the basis search: the whole minimal orbit (up to `orbit_cap`
/// nodes) plus `nodes` further words reached by at most `depth` moves.
struct SearchBound {
  std::size_t nodes = kDefaultSearchNodes;
  std::size_t depth = kDefaultSearchDepth;
  std::size_t orbit_cap = kDefaultOrbitCap;
};

/// A new basis x = chain^-1(a), y = chain^-1(b). chain(w) is a cyclically
/// reduced word whose syllables exhibit the witnessed membership literally.
struct BasisWitness {
  AutChain chain;
  std::array<FreeWord, 2> basis;
};

/// w lies in <x^n, y^m> (in <x^n, y> when m is absent) with n, m maximal.
/// `form` means w is conjugate to x^{+-n} y^{+-m}.
struct AmalgamWitness {
  BasisWitness witness;
  long long n;
  std::optional<long long> m;
  bool form;
};

/// w lies in <y^m, x y^n x^-1> with m <= n maximal. `form` means w is
/// conjugate to y^{+-m} x y^{+-n} x^-1.
struct HnnWitness {
  BasisWitness witness;
  long long m;
  long long n;
  bool form;
};

struct SearchReport {
  std::optional<AmalgamWitness> amalgam;
  std::optional<HnnWitness> hnn;
  /// Number of (node, role) pairs that passed each test.
  std::size_t amalgam_candidates = 0;
  std::size_t hnn_candidates = 0;
  std::size_t nodes = 0;
};

/// Runs both basis searches over one exploration. Throws ResourceExhausted
/// if the minimal orbit exceeds the cap.
SearchReport search_conditions(const FreeWord& w, const SearchBound& bound = {});
std::optional<AmalgamWitness> search_condition_amalgam(const FreeWord& w,
                                                       const SearchBound& bound = {});
std::optional<HnnWitness> search_condition_hnn(const FreeWord& w, const SearchBound& bound = {});

struct Classification {
  Verdict verdict = Verdict::Indeterminate;
  /// Shape within the verdict: "one-edge", "two-edge", "loop", "top",
  /// "bottom", or the matched surface representative.
  std::string variant;
  std::optional<long long> n;
  std::optional<long long> m;
  std::optional<long long> k;
  /// NotOneEnded: the primitive root. ProperPower: the root, with k the exponent.
  std::optional<FreeWord> root;
  std::optional<BasisWitness> witness;
  /// Set when the verdict depends on the bounded basis search.
  bool bounded = false;
  std::size_t bound = 0;
  /// Nodes consumed before an Indeterminate verdict.
  std::size_t consumed = 0;
  std::optional<GraphOfGroups> graph;
};

/// NotOneEnded or ProperPower when w fails the hypotheses; ProperPower wins
/// when both apply. Throws MalformedInput on the empty word.
std::optional<Classification> check_preconditions(const FreeWord& w);

/// Exact orbit test against the genus 2 orientable and genus 4
/// non-orientable surface words.
std::optional<Classification> detect_surface(const FreeWord& w,
                                             std::size_t cap = kDefaultOrbitCap);

/// Full decision tree. Orbit exhaustion yields Indeterminate rather than an
/// exception. Every emitted graph has passed GraphOfGroups::validate.
Classification classify(const FreeWord& w, const SearchBound& bound = {});

/// The double itself: two rigid copies of F(a,b) glued along w.
GraphOfGroups double_graph(const FreeWord& w);

}  // namespace jsjd
