#include "jsjd/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include "jsjd/classifier.hpp"
#include "jsjd/emit.hpp"
#include "jsjd/ivanov.hpp"
#include "jsjd/mr.hpp"
#include "jsjd/parse.hpp"
#include "jsjd/subgroups.hpp"
#include "jsjd/whitehead.hpp"

namespace jsjd::cli {

namespace {

const Alphabet kRank2{2};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void emit(std::ostream& out, const Json& record) { out << record.dump(2) << '\n'; }

Json chain_or_null(const std::optional<AutChain>& chain) {
  return chain ? to_json(*chain) : Json(nullptr);
}

FreeWord parse_nonempty(const std::string& text) {
  FreeWord w = parse_word(text, kRank2);
  if (w.empty()) throw UsageError("the word '" + text + "' reduces to the identity");
  return w;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw UsageError(what + " must be a non-negative integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(value);
}

std::size_t search_nodes(const Classify& c) {
  if (c.bound) return *c.bound;
  if (const char* env = std::getenv(kBoundVariable); env && *env) {
    return parse_count(env, kBoundVariable);
  }
  return kDefaultSearchNodes;
}

int classify_command(const Classify& c, std::ostream& out, std::ostream& err) {
  if (c.format != "json" && c.format != "dot") throw UsageError("--emit must be json or dot");
  const FreeWord w = parse_word(c.word, kRank2);
  if (w.empty()) throw UsageError("classify needs a nontrivial word");
  SearchBound bound;
  bound.nodes = search_nodes(c);
  const Classification result = classify(w, bound);

  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + c.out + "' for writing");
  }
  std::ostream& sink = c.out.empty() ? out : file;
  if (c.format == "json") {
    emit(sink, to_json(result, to_string(w)));
  } else if (result.graph) {
    sink << to_dot(*result.graph);
  } else {
    err << "verdict " << to_string(result.verdict) << " has no graph; emitting an empty digraph\n";
    sink << "digraph jsj {\n}\n";
  }
  if (result.verdict == Verdict::Indeterminate) {
    err << "indeterminate after " << result.consumed << " search nodes\n";
    return kIndeterminate;
  }
  return kOk;
}

int orbit_min_command(const OrbitMin& c, std::ostream& out) {
  const FreeWord w = parse_nonempty(c.word);
  const Minimized m = minimize(w);
  emit(out, {{"input", to_string(w)},
             {"minimal", to_string(m.min)},
             {"length", m.min.size()},
             {"chain", to_json(m.chain)}});
  return kOk;
}

int is_primitive_command(const IsPrimitive& c, std::ostream& out) {
  const FreeWord w = parse_nonempty(c.word);
  const bool primitive = is_primitive(w);
  std::optional<AutChain> chain;
  if (primitive) chain = aut_conjugacy_equivalent(w, FreeWord::generator(1, kRank2));
  emit(out, {{"input", to_string(w)}, {"primitive", primitive}, {"chain", chain_or_null(chain)}});
  return kOk;
}

int aut_equiv_command(const AutEquiv& c, std::ostream& out) {
  const FreeWord u = parse_nonempty(c.first);
  const FreeWord v = parse_nonempty(c.second);
  const auto chain = aut_conjugacy_equivalent(u, v);
  emit(out, {{"inputs", {to_string(u), to_string(v)}},
             {"equivalent", chain.has_value()},
             {"chain", chain_or_null(chain)}});
  return kOk;
}

int membership_command(const Membership& c, std::ostream& out) {
  const auto texts = split_word_list(c.subgroup);
  // Rank is the largest generator mentioned anywhere.
  int rank = parse_word(c.word).alphabet().rank;
  for (const auto& t : texts) rank = std::max(rank, parse_word(t).alphabet().rank);
  const Alphabet alphabet{rank};
  const FreeWord w = parse_word(c.word, alphabet);
  std::vector<FreeWord> gens;
  for (const auto& t : texts) gens.push_back(parse_word(t, alphabet));

  const SubgroupGraph g = build(gens, alphabet);
  Json subgroup = Json::array();
  for (const auto& h : gens) subgroup.push_back(to_string(h));
  Json record = {{"word", to_string(w)}, {"subgroup", std::move(subgroup)}, {"member", g.contains(w)}};
  if (c.rewrite) {
    const auto rewritten = g.rewrite(w);
    record["rewritten"] = rewritten ? Json(to_string(*rewritten)) : Json(nullptr);
    Json basis = Json::object();
    for (std::size_t i = 0; i < g.basis().size(); ++i) {
      basis[to_string(FreeWord::generator(static_cast<int>(i) + 1, Alphabet{g.rank()}))] =
          to_string(g.basis()[i]);
    }
    record["basis"] = std::move(basis);
  }
  emit(out, record);
  return kOk;
}

int ivanov_emit_command(const IvanovEmit& c, std::ostream& out) {
  const FreeWord w = ivanov_word();
  emit(out, {{"length", w.size()}, {"word", c.compact ? to_compact_string(w) : to_string(w)}});
  return kOk;
}

int ivanov_verify_command(const IvanovVerify& c, std::ostream& out) {
  static const std::vector<std::string> kSuites = {"cyclic", "noncyclic", "ctest", "stabilizer", "all"};
  if (std::find(kSuites.begin(), kSuites.end(), c.suite) == kSuites.end()) {
    throw UsageError("unknown suite '" + c.suite + "'");
  }
  auto wants = [&](const char* s) { return c.suite == "all" || c.suite == s; };
  auto samples = [&](std::size_t fallback) { return c.samples.value_or(fallback); };
  auto len = [&](std::size_t fallback) { return c.max_len.value_or(fallback); };

  std::vector<SuiteReport> reports;
  if (wants("cyclic")) reports.push_back(ctest_cyclic_null(samples(1000), c.seed, len(10)));
  if (wants("noncyclic")) reports.push_back(ctest_noncyclic_nonnull(samples(1000), c.seed, len(12)));
  if (wants("ctest")) {
    reports.push_back(ctest_conjugacy_constructed(samples(200), c.seed, len(6)));
    reports.push_back(ctest_conjugacy_independent(samples(200), c.seed, len(12)));
  }
  if (wants("stabilizer")) reports.push_back(stabilizer_probe());

  Json list = Json::array();
  std::size_t failed = 0;
  for (const auto& r : reports) {
    failed += r.failed;
    list.push_back(to_json(r));
  }
  emit(out, {{"reports", std::move(list)}, {"failed", failed}});
  return failed == 0 ? kOk : kCheckFailed;
}

DoubleHom parse_hom(const std::string& text) {
  Json record;
  try {
    record = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("--hom is not valid JSON: ") + e.what());
  }
  if (!record.is_object()) throw UsageError("--hom must be a JSON object");
  auto image = [&](const char* key) {
    if (!record.contains(key) || !record[key].is_string()) {
      throw UsageError(std::string("--hom needs a string entry \"") + key + "\"");
    }
    return parse_word(record[key].get<std::string>(), kRank2);
  };
  return {{image("a1"), image("a2")}, {image("b1"), image("b2")}};
}

int mr_factor_command(const MrFactor& c, std::ostream& out, std::ostream& err) {
  const DoubleHom h = parse_hom(c.hom);
  const FreeWord w = ivanov_word();
  try {
    const Factorization f = factor(h, w, c.k_bound.value_or(kDefaultTwistBound));
    if (recompose(f, h, w) != h) throw std::logic_error("recomposition differs from the input");
    emit(out, {{"hom", to_json(h)}, {"factorization", to_json(f)}});
    return kOk;
  } catch (const NotAHomomorphism& e) {
    throw UsageError(e.what());
  } catch (const Unfactored& e) {
    err << "unfactored: " << e.what() << '\n';
    emit(out, {{"hom", to_json(h)}, {"factorization", nullptr}});
    return kUnfactored;
  }
}

int mr_separability_command(const MrSeparability& c, std::ostream& out) {
  const SuiteReport r = separability_experiment(ivanov_word(), c.samples, c.seed);
  emit(out, to_json(r));
  return r.failed == 0 ? kOk : kCheckFailed;
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    return std::visit(
        [&](const auto& c) -> int {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, Classify>) return classify_command(c, out, err);
          if constexpr (std::is_same_v<T, OrbitMin>) return orbit_min_command(c, out);
          if constexpr (std::is_same_v<T, IsPrimitive>) return is_primitive_command(c, out);
          if constexpr (std::is_same_v<T, AutEquiv>) return aut_equiv_command(c, out);
          if constexpr (std::is_same_v<T, Membership>) return membership_command(c, out);
          if constexpr (std::is_same_v<T, IvanovEmit>) return ivanov_emit_command(c, out);
          if constexpr (std::is_same_v<T, IvanovVerify>) return ivanov_verify_command(c, out);
          if constexpr (std::is_same_v<T, MrFactor>) return mr_factor_command(c, out, err);
          if constexpr (std::is_same_v<T, MrSeparability>) return mr_separability_command(c, out);
          if constexpr (std::is_same_v<T, Version>) {
            emit(out, {{"name", "jsjd"}, {"version", kVersion}});
            return kOk;
          }
        },
        cmd);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceExhausted& e) {
    err << "indeterminate: " << e.what() << '\n';
    return kIndeterminate;
  }
}

}  // namespace jsjd::cli
