#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "jsjd/ivanov.hpp"
#include "jsjd/words.hpp"

namespace jsjd {

/// Images of a1, a2, b1, b2 under a homomorphism from the double G_w to F(a,b).
struct DoubleHom {
  WordPair a;
  WordPair b;
  friend bool operator==(const DoubleHom&, const DoubleHom&) = default;
};

/// The relator is violated, so the images do not define a homomorphism.
class NotAHomomorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Neither branch applies within the twist bound.
class Unfactored : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Through the projection onto Z^2 * Z^2: each side maps into a cyclic
/// group, a_i -> root_a^exp_a[i] and b_i -> root_b^exp_b[i].
struct EtaFactor {
  FreeWord root_a;
  std::array<long long, 2> exp_a;
  FreeWord root_b;
  std::array<long long, 2> exp_b;
};

/// Through the retraction onto A after a Dehn twist by w^k on the B side:
/// b_i = W^k a_i W^-k with W = w(a1, a2).
struct PiFactor {
  long long k;
};

using Factorization = std::variant<EtaFactor, PiFactor>;

/// w(a-images) == w(b-images).
bool validate(const DoubleHom& h, const FreeWord& w);

inline constexpr long long kDefaultTwistBound = 16;

/// Throws NotAHomomorphism if validate fails and Unfactored if no branch
/// applies with |k| <= k_bound.
Factorization factor(const DoubleHom& h, const FreeWord& w, long long k_bound = kDefaultTwistBound);

/// Rebuilds the four images from the factorization and the a-images (the
/// retraction branch) or from the factorization alone (the projection).
DoubleHom recompose(const Factorization& f, const DoubleHom& h, const FreeWord& w);

struct SampledHom {
  DoubleHom hom;
  bool eta;
  long long k;  // 0 for projection samples
};

/// Alternates between the two branches at random: cyclic images on both
/// sides, or a non-commuting a-pair with b-images twisted by W^k, |k| <= 5.
std::vector<SampledHom> sample_homs(const FreeWord& w, std::size_t samples, std::uint64_t seed,
                                    std::size_t max_len = 6);

/// For g = [b1, b2], counts sampled homs with phi(g) outside <phi(a1), phi(a2)>.
SuiteReport separability_experiment(const FreeWord& w, std::size_t samples, std::uint64_t seed,
                                    std::size_t max_len = 6);

}  // namespace jsjd
