#include "jsjd/ivanov.hpp"

#include <cstdlib>

#include "jsjd/random.hpp"
#include "jsjd/whitehead.hpp"

namespace jsjd {

namespace {

const Alphabet kRank2{2};
constexpr std::size_t kMaxListedFailures = 10;

FreeWord prefix(const FreeWord& w, std::size_t len) {
  WordBuilder b(w.alphabet());
  for (std::size_t i = 0; i < len; ++i) b.push(w[i]);
  return std::move(b).finish();
}

/// Number of leading copies of r in t.
std::size_t leading_copies(const FreeWord& t, const FreeWord& r) {
  std::size_t copies = 0;
  const std::size_t m = r.size();
  while ((copies + 1) * m <= t.size()) {
    for (std::size_t i = 0; i < m; ++i) {
      if (t[copies * m + i] != r[i]) return copies;
    }
    ++copies;
  }
  return copies;
}

std::string describe(const WordPair& p) {
  return "(" + to_string(p[0]) + "," + to_string(p[1]) + ")";
}

void record(SuiteReport& report, bool ok, const std::string& what) {
  ++report.samples;
  if (ok) {
    ++report.passed;
    return;
  }
  ++report.failed;
  if (report.failures.size() < kMaxListedFailures) report.failures.push_back(what);
}

WordPair random_noncommuting_pair(Rng& rng, std::size_t max_len) {
  while (true) {
    WordPair p{random_word(rng, 1, max_len, kRank2), random_word(rng, 1, max_len, kRank2)};
    if (!commute(p[0], p[1])) return p;
  }
}

}  // namespace

FreeWord ivanov_word(const IvanovSpec& spec) {
  const FreeWord x = FreeWord::generator(1, kRank2);
  const FreeWord y = FreeWord::generator(2, kRank2);
  const FreeWord c = commutator(power(x, spec.base), power(y, spec.base));
  WordBuilder b(kRank2);
  std::size_t total = 0;
  for (int e : spec.blocks) total += static_cast<std::size_t>(e) * c.size() + 1;
  b.reserve(total);
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    for (int r = 0; r < spec.blocks[i]; ++r) b.append(c);
    b.push(spec.letters[i]);
  }
  return std::move(b).finish();
}

FreeWord evaluate(const FreeWord& w, const WordPair& images) { return substitute(w, images); }

std::optional<FreeWord> simultaneous_conjugator(const WordPair& a, const WordPair& b) {
  if (a[0].empty() || b[0].empty()) {
    throw MalformedInput("simultaneous conjugacy needs a nontrivial first entry");
  }
  const auto [c1, u1] = cyclic_reduce(a[0]);
  const auto [d1, v1] = cyclic_reduce(b[0]);
  if (c1.size() != d1.size()) return std::nullopt;
  const std::string doubled = c1.word().key() + c1.word().key();
  const std::size_t s = doubled.find(d1.word().key());
  if (s == std::string::npos) return std::nullopt;

  // S0 a1 S0^-1 = b1; every solution is S0 u1 r^j u1^-1 with r the root of c1.
  const FreeWord p = prefix(c1.word(), s);
  const FreeWord s0u1 = multiply(v1, inverse(p));
  const auto root = is_proper_power(c1.word());
  const FreeWord r = root ? root->root : c1.word();
  const FreeWord a2 = conjugate_inverse(a[1], u1);
  if (commute(a2, r)) throw MalformedInput("simultaneous conjugacy needs a non-cyclic pair");
  const FreeWord t = conjugate_inverse(b[1], s0u1);

  const auto window = static_cast<long long>(a2.size() / r.size() + 2);
  const auto up = static_cast<long long>(leading_copies(t, r));
  const auto down = static_cast<long long>(leading_copies(t, inverse(r)));
  for (const long long centre : {up, -down}) {
    for (long long j = centre - window; j <= centre + window; ++j) {
      const FreeWord rj = power(r, j);
      if (conjugate(a2, rj) != t) continue;
      return multiply(multiply(s0u1, rj), inverse(u1));
    }
  }
  return std::nullopt;
}

SuiteReport ctest_cyclic_null(std::size_t samples, std::uint64_t seed, std::size_t max_len) {
  SuiteReport report{"cyclic", seed, 0, 0, 0, {}};
  const FreeWord w = ivanov_word();
  Rng rng(seed);
  const auto bound = static_cast<std::int64_t>(max_len);
  while (report.samples < samples) {
    const FreeWord c = random_word(rng, 1, max_len, kRank2);
    const WordPair pair{power(c, rng.uniform(-bound, bound)), power(c, rng.uniform(-bound, bound))};
    if (pair[0].size() > max_len || pair[1].size() > max_len) continue;
    if (pair[0].empty() && pair[1].empty()) continue;
    record(report, evaluate(w, pair).empty(), describe(pair));
  }
  return report;
}

SuiteReport ctest_noncyclic_nonnull(std::size_t samples, std::uint64_t seed, std::size_t max_len) {
  SuiteReport report{"noncyclic", seed, 0, 0, 0, {}};
  const FreeWord w = ivanov_word();
  Rng rng(seed);
  while (report.samples < samples) {
    const WordPair pair = random_noncommuting_pair(rng, max_len);
    record(report, !evaluate(w, pair).empty(), describe(pair));
  }
  return report;
}

SuiteReport ctest_conjugacy_constructed(std::size_t samples, std::uint64_t seed,
                                        std::size_t max_len) {
  SuiteReport report{"ctest-constructed", seed, 0, 0, 0, {}};
  const FreeWord w = ivanov_word();
  Rng rng(seed);
  while (report.samples < samples) {
    const WordPair a = random_noncommuting_pair(rng, max_len);
    long long k = rng.uniform(-2, 1);
    if (k >= 0) ++k;
    const FreeWord value = evaluate(w, a);
    const FreeWord shift = power(value, k);
    const WordPair b{conjugate(a[0], shift), conjugate(a[1], shift)};
    bool ok = !value.empty() && evaluate(w, b) == value;
    if (ok) {
      const auto s = simultaneous_conjugator(a, b);
      ok = s && exponent_in(*s, value) == k;
    }
    record(report, ok, describe(a) + " k=" + std::to_string(k));
  }
  return report;
}

SuiteReport ctest_conjugacy_independent(std::size_t samples, std::uint64_t seed,
                                        std::size_t max_len) {
  SuiteReport report{"ctest-independent", seed, 0, 0, 0, {}};
  const FreeWord w = ivanov_word();
  Rng rng(seed);
  while (report.samples < samples) {
    const WordPair a = random_noncommuting_pair(rng, max_len);
    const WordPair b = random_noncommuting_pair(rng, max_len);
    const FreeWord va = evaluate(w, a);
    bool ok = true;
    if (va == evaluate(w, b)) {
      const auto s = simultaneous_conjugator(a, b);
      ok = s && exponent_in(*s, va).has_value();
    }
    record(report, ok, describe(a) + " " + describe(b));
  }
  return report;
}

SuiteReport stabilizer_probe() {
  SuiteReport report{"stabilizer", 0, 0, 0, 0, {}};
  const FreeWord w = ivanov_word();
  record(report, conjugate(w, w) == w, "conjugation by w");
  for (const auto& m : whitehead_moves()) record(report, m.apply(w) != w, m.to_string());
  return report;
}

}  // namespace jsjd
