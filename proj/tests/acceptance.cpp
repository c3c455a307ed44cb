// Runs the acceptance criteria end to end and prints one line per criterion.
// Usage: acceptance [path-to-jsjd-binary]

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "jsjd/classifier.hpp"
#include "jsjd/cli.hpp"
#include "jsjd/ivanov.hpp"
#include "jsjd/mr.hpp"
#include "jsjd/parse.hpp"
#include "jsjd/subgroups.hpp"
#include "jsjd/whitehead.hpp"
#include "oracles.hpp"

namespace jsjd {
namespace {

using testing::W;

struct Result {
  bool pass;
  std::string detail;
};

Result check(bool ok, std::string detail) { return {ok, std::move(detail)}; }

AutChain random_chain(Rng& rng, std::size_t length) {
  AutChain chain;
  const auto& moves = whitehead_moves();
  for (std::size_t i = 0; i < length; ++i) {
    chain.push_back(moves[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(moves.size()) - 1))]);
  }
  return chain;
}

Result minimization() {
  const auto minima = oracle::orbit_minima(10);
  std::size_t checked = 0;
  std::size_t wrong = 0;
  std::string first;
  for (const auto& [key, best] : minima) {
    if (key.size() > 8) continue;
    ++checked;
    if (minimize(W(key)).min.size() != best) {
      if (wrong++ == 0) first = key;
    }
  }
  return check(wrong == 0, std::to_string(checked) + " cyclic classes, " + std::to_string(wrong) +
                               " mismatches" + (first.empty() ? "" : ", first " + first));
}

Result primitivity() {
  const auto reachable = oracle::primitive_classes(8);
  std::size_t checked = 0;
  std::size_t wrong = 0;
  for (std::size_t len = 1; len <= 6; ++len) {
    for (const FreeWord& w : testing::all_reduced_words(len)) {
      const bool expected = reachable.contains(oracle::cyclic_key(oracle::cyclic_core(to_string(w))));
      ++checked;
      if (is_primitive(w) != expected) ++wrong;
    }
  }
  return check(wrong == 0, std::to_string(checked) + " words, " + std::to_string(wrong) + " mismatches");
}

Result stallings() {
  Rng rng(3);
  std::size_t members = 0;
  std::size_t wrong = 0;
  std::size_t inconclusive = 0;
  std::string first;
  for (int i = 0; i < 10000; ++i) {
    std::vector<FreeWord> gens;
    std::vector<std::string> texts;
    const auto count = rng.uniform(1, 3);
    for (int g = 0; g < count; ++g) {
      gens.push_back(random_word(rng, 1, 6));
      texts.push_back(to_string(gens.back()));
    }
    std::string w;
    if (rng.coin()) {
      const auto factors = rng.uniform(0, 6);
      for (int f = 0; f < factors; ++f) {
        const auto& t = texts[static_cast<std::size_t>(rng.uniform(0, count - 1))];
        w = oracle::reduce_str(w + (rng.coin() ? t : oracle::invert(t)));
      }
      if (rng.coin()) w = oracle::reduce_str(w + to_string(random_word(rng, 1, 2)));
    } else {
      w = to_string(random_word(rng, 0, 12));
    }
    const auto reduced = oracle::nielsen_reduce(texts);
    if (!reduced) {
      ++inconclusive;
      continue;
    }
    const bool expected = oracle::nielsen_member(*reduced, w);
    const bool got = build(gens).contains(W(w));
    members += expected;
    if (got != expected && wrong++ == 0) first = w;
  }
  return check(wrong == 0 && inconclusive == 0,
               "10000 pairs, " + std::to_string(members) + " members, " + std::to_string(wrong) +
                   " mismatches, " + std::to_string(inconclusive) + " inconclusive" +
                   (first.empty() ? "" : ", first " + first));
}

Result surfaces() {
  struct Row {
    const char* word;
    Verdict verdict;
    bool orientable;
    int genus;
  };
  const Row rows[] = {{"[a,b]", Verdict::SurfaceOrientableGenus2, true, 2},
                      {"aabb", Verdict::SurfaceNonOrientableGenus4, false, 4},
                      {"aaBB", Verdict::SurfaceNonOrientableGenus4, false, 4},
                      {"abAb", Verdict::SurfaceNonOrientableGenus4, false, 4},
                      {"abaB", Verdict::SurfaceNonOrientableGenus4, false, 4}};
  std::string bad;
  for (const auto& r : rows) {
    const auto c = classify(parse_word(r.word));
    const bool ok = c.verdict == r.verdict && c.graph && c.graph->vertices.size() == 1 &&
                    c.graph->vertices[0].orientable == r.orientable && c.graph->vertices[0].genus == r.genus &&
                    c.graph->vertices[0].boundaries == 0;
    if (!ok) bad += std::string(" ") + r.word;
  }
  return check(bad.empty(), bad.empty() ? "5/5 rows" : "wrong:" + bad);
}

std::size_t count_kind(const GraphOfGroups& g, VertexKind k) {
  std::size_t n = 0;
  for (const auto& v : g.vertices) n += v.kind == k;
  return n;
}

Result corpus() {
  std::string bad;
  const auto qh3 = classify(W("aaabbb"));
  if (!(qh3.verdict == Verdict::Case1_QH3 && qh3.n == 3 && qh3.m == 3 && qh3.graph &&
        qh3.graph->vertices.size() == 5 && qh3.graph->edges.size() == 4 &&
        count_kind(*qh3.graph, VertexKind::Cyclic) == 4)) {
    bad += " aaabbb";
  }
  const auto moebius = classify(W("aaabb"));
  if (!(moebius.verdict == Verdict::Case1_Moebius && moebius.n == 3 && moebius.m == 2 && moebius.graph &&
        count_kind(*moebius.graph, VertexKind::Cyclic) == 2)) {
    bad += " aaabb";
  }
  const auto qh4 = classify(W("bbabbbA"));
  if (!(qh4.verdict == Verdict::Case2_QH4 && qh4.m == 2 && qh4.n == 3 && qh4.graph &&
        qh4.graph->vertices.size() == 3 && qh4.graph->edges.size() == 4 &&
        count_kind(*qh4.graph, VertexKind::Cyclic) == 2)) {
    bad += " bbabbbA";
  }
  return check(bad.empty(), bad.empty() ? "3/3 words" : "wrong:" + bad);
}

bool same_classification(const Classification& x, const Classification& y) {
  return x.verdict == y.verdict && x.variant == y.variant && x.n == y.n && x.m == y.m && x.k == y.k;
}

Result invariance() {
  const char* corpus[] = {"a", "abab", "abAB", "aabb", "abaB", "aaabbb", "aaabb", "bbabbbA", "aaabaaabb"};
  Rng rng(6);
  std::size_t checked = 0;
  std::size_t wrong = 0;
  std::string first;
  std::vector<std::pair<FreeWord, Classification>> base;
  for (const char* s : corpus) base.emplace_back(W(s), classify(W(s)));
  for (int i = 0; i < 100; ++i) {
    const AutChain phi = random_chain(rng, static_cast<std::size_t>(rng.uniform(1, 6)));
    for (const auto& [w, expected] : base) {
      const auto got = classify(phi.apply(w));
      ++checked;
      if (!same_classification(got, expected) && wrong++ == 0) first = to_string(phi.apply(w));
    }
  }
  return check(wrong == 0, "100 chains x 9 words, " + std::to_string(wrong) + " mismatches" +
                               (first.empty() ? "" : ", first " + first));
}

Result ivanov_checks() {
  const FreeWord w = ivanov_word();
  const bool sums = exponent_sums(w) == std::vector<long long>{0, 0};
  const bool not_power = !is_proper_power(w).has_value();
  const bool reduced = is_cyclically_reduced(w);
  const bool not_factor = !in_proper_free_factor(w);
  return check(sums && not_power && reduced && not_factor,
               "length " + std::to_string(w.size()) + ", sums " + (sums ? "ok" : "bad") + ", power " +
                   (not_power ? "ok" : "bad") + ", cyclic " + (reduced ? "ok" : "bad") + ", free factor " +
                   (not_factor ? "ok" : "bad"));
}

Result ctest_suites() {
  const SuiteReport reports[] = {ctest_cyclic_null(1000, 8), ctest_noncyclic_nonnull(1000, 8),
                                 ctest_conjugacy_constructed(200, 8), ctest_conjugacy_independent(200, 8)};
  const std::size_t expected[] = {1000, 1000, 200, 200};
  bool ok = true;
  std::string detail;
  for (std::size_t i = 0; i < 4; ++i) {
    ok = ok && reports[i].failed == 0 && reports[i].passed == expected[i];
    detail += (i ? ", " : "") + reports[i].suite + " " + std::to_string(reports[i].passed) + "/" +
              std::to_string(reports[i].samples);
  }
  return check(ok, detail);
}

Result mr_factorization() {
  const FreeWord w = ivanov_word();
  std::size_t unfactored = 0;
  std::size_t wrong = 0;
  std::size_t eta = 0;
  for (const auto& s : sample_homs(w, 500, 9)) {
    eta += s.eta;
    try {
      const auto f = factor(s.hom, w);
      const bool tag = std::holds_alternative<EtaFactor>(f) == s.eta;
      const bool twist = s.eta || std::get<PiFactor>(f).k == s.k;
      if (!tag || !twist || recompose(f, s.hom, w) != s.hom) ++wrong;
    } catch (const Unfactored&) {
      ++unfactored;
    }
  }
  return check(unfactored == 0 && wrong == 0,
               "500 homs (" + std::to_string(eta) + " eta), " + std::to_string(unfactored) + " unfactored, " +
                   std::to_string(wrong) + " round-trip failures");
}

Result separability() {
  const auto r = separability_experiment(ivanov_word(), 500, 10);
  return check(r.failed == 0 && r.samples == 500,
               std::to_string(r.passed) + "/" + std::to_string(r.samples) + " with phi(g) in phi(A)");
}

std::string capture(const cli::Command& cmd, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = cli::run(cmd, out, err);
  return std::to_string(code) + "\n" + out.str();
}

std::optional<std::string> shell(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(::popen(command.c_str(), "r"), ::pclose);
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

Result determinism(const std::string& binary) {
  const std::vector<cli::Command> commands = {
      cli::IvanovVerify{"all", 50, 11, std::nullopt},
      cli::MrSeparability{50, 12},
      cli::MrFactor{R"({"a1":"ab","a2":"aB","b1":"ab","b2":"aB"})"},
      cli::Classify{"aaabaaabb"},
      cli::Classify{"bbabbbA", std::nullopt, "dot"},
      cli::OrbitMin{"a^5 b a^2 B"},
      cli::IvanovEmit{true},
  };
  std::size_t differing = 0;
  for (const auto& c : commands) {
    int first_code = 0;
    int second_code = 0;
    const auto first = capture(c, first_code);
    if (capture(c, second_code) != first) ++differing;
  }
  std::size_t processes = 0;
  if (!binary.empty()) {
    const char* args[] = {"ivanov verify --suite ctest --samples 40 --seed 5",
                          "mr separability --samples 40 --seed 6", "classify aabaaB --emit dot"};
    for (const char* a : args) {
      const std::string command = "'" + binary + "' " + a + " 2>&1";
      const auto first = shell(command);
      const auto second = shell(command);
      ++processes;
      if (!first || !second || first->empty() || *first != *second) ++differing;
    }
  }
  return check(differing == 0, std::to_string(commands.size()) + " in-process and " + std::to_string(processes) +
                                   " process commands, " + std::to_string(differing) + " differing");
}

}  // namespace
}  // namespace jsjd

int main(int argc, char** argv) {
  using namespace jsjd;
  const std::string binary = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
      {"Whitehead minimization matches brute force up to length 8", minimization},
      {"primitivity matches bounded orbit search up to length 6", primitivity},
      {"Stallings membership matches product enumeration", stallings},
      {"surface detection table", surfaces},
      {"classifier corpus", corpus},
      {"classifier Aut-invariance", invariance},
      {"Ivanov word checks", ivanov_checks},
      {"C-test suites", ctest_suites},
      {"MR factorization round trips", mr_factorization},
      {"separability experiment", separability},
      {"determinism of seeded commands", [&] { return determinism(binary); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !r.pass;
    std::printf("criterion %2zu: %s  %s (%s; %.1fs)\n", i + 1, r.pass ? "PASS" : "FAIL", criteria[i].first,
                r.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
