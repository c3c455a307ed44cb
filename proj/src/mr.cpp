#include "jsjd/mr.hpp"

#include "jsjd/random.hpp"
#include "jsjd/subgroups.hpp"

namespace jsjd {

namespace {

const Alphabet kRank2{2};
constexpr long long kSampleTwist = 5;
constexpr long long kSampleExponent = 3;

/// Root r and exponents with pair = (r^p, r^q); the pair must commute.
std::pair<FreeWord, std::array<long long, 2>> cyclic_root(const WordPair& pair) {
  const FreeWord& u = pair[0].empty() ? pair[1] : pair[0];
  if (u.empty()) return {FreeWord(kRank2), {0, 0}};
  const auto root = is_proper_power(u);
  const FreeWord r = root ? root->root : u;
  const auto p = exponent_in(pair[0], r);
  const auto q = exponent_in(pair[1], r);
  if (!p || !q) throw Unfactored("images of one side do not commute");
  return {r, {*p, *q}};
}

WordPair twisted(const WordPair& a, const FreeWord& shift) {
  return {conjugate(a[0], shift), conjugate(a[1], shift)};
}

}  // namespace

bool validate(const DoubleHom& h, const FreeWord& w) {
  return evaluate(w, h.a) == evaluate(w, h.b);
}

Factorization factor(const DoubleHom& h, const FreeWord& w, long long k_bound) {
  const FreeWord value = evaluate(w, h.a);
  if (value != evaluate(w, h.b)) throw NotAHomomorphism("w(a-images) differs from w(b-images)");
  if (value.empty()) {
    auto [ra, ea] = cyclic_root(h.a);
    auto [rb, eb] = cyclic_root(h.b);
    return EtaFactor{std::move(ra), ea, std::move(rb), eb};
  }
  // w lies in the commutator subgroup, so a nontrivial value forces a
  // non-commuting a-pair; the conjugator is then unique.
  if (h.b[0].empty()) throw Unfactored("b-images are not conjugate to the a-images");
  const auto s = simultaneous_conjugator(h.a, h.b);
  if (!s) throw Unfactored("b-images are not conjugate to the a-images");
  const auto k = exponent_in(*s, value);
  if (!k) throw Unfactored("conjugator " + to_compact_string(*s) + " is not a power of w(a-images)");
  if (std::llabs(*k) > k_bound) {
    throw Unfactored("twist exponent " + std::to_string(*k) + " exceeds the bound " +
                     std::to_string(k_bound));
  }
  if (twisted(h.a, power(value, *k)) != h.b) throw std::logic_error("twist identity failed");
  return PiFactor{*k};
}

DoubleHom recompose(const Factorization& f, const DoubleHom& h, const FreeWord& w) {
  if (const auto* eta = std::get_if<EtaFactor>(&f)) {
    return {{power(eta->root_a, eta->exp_a[0]), power(eta->root_a, eta->exp_a[1])},
            {power(eta->root_b, eta->exp_b[0]), power(eta->root_b, eta->exp_b[1])}};
  }
  const long long k = std::get<PiFactor>(f).k;
  return {h.a, twisted(h.a, power(evaluate(w, h.a), k))};
}

std::vector<SampledHom> sample_homs(const FreeWord& w, std::size_t samples, std::uint64_t seed,
                                    std::size_t max_len) {
  Rng rng(seed);
  std::vector<SampledHom> out;
  out.reserve(samples);
  auto exponent = [&] { return rng.uniform(-kSampleExponent, kSampleExponent); };
  while (out.size() < samples) {
    if (rng.coin()) {
      const FreeWord c = random_word(rng, 1, max_len, kRank2);
      const FreeWord d = random_word(rng, 1, max_len, kRank2);
      DoubleHom h{{power(c, exponent()), power(c, exponent())},
                  {power(d, exponent()), power(d, exponent())}};
      out.push_back({std::move(h), true, 0});
      continue;
    }
    WordPair a{random_word(rng, 1, max_len, kRank2), random_word(rng, 1, max_len, kRank2)};
    if (commute(a[0], a[1])) continue;
    const long long k = rng.uniform(-kSampleTwist, kSampleTwist);
    WordPair b = twisted(a, power(evaluate(w, a), k));
    out.push_back({{std::move(a), std::move(b)}, false, k});
  }
  return out;
}

SuiteReport separability_experiment(const FreeWord& w, std::size_t samples, std::uint64_t seed,
                                    std::size_t max_len) {
  SuiteReport report{"separability", seed, 0, 0, 0, {}};
  for (const auto& s : sample_homs(w, samples, seed, max_len)) {
    const FreeWord g = commutator(s.hom.b[0], s.hom.b[1]);
    const bool inside = build({s.hom.a[0], s.hom.a[1]}).contains(g);
    ++report.samples;
    if (inside) {
      ++report.passed;
    } else {
      ++report.failed;
      if (report.failures.size() < 10) {
        report.failures.push_back("(" + to_string(s.hom.a[0]) + "," + to_string(s.hom.a[1]) + ")");
      }
    }
  }
  return report;
}

}  // namespace jsjd
