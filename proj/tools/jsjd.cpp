#include <CLI11.hpp>

#include <iostream>

#include "jsjd/cli.hpp"

using namespace jsjd::cli;

int main(int argc, char** argv) {
  CLI::App app{"Cyclic JSJ decompositions of doubles of the free group of rank 2"};
  app.require_subcommand(1);
  Command cmd = Version{};

  Classify classify;
  std::size_t bound = 0;
  auto* c = app.add_subcommand("classify", "Classify the double of a word and emit its JSJ graph");
  c->add_option("word", classify.word, "Word in the a/b grammar")->required();
  auto* bound_opt = c->add_option("--bound", bound, "Extension-node budget of the basis search");
  c->add_option("--emit", classify.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
  c->add_option("--out", classify.out, "Write the record to this file");
  c->callback([&] {
    if (*bound_opt) classify.bound = bound;
    cmd = classify;
  });

  OrbitMin orbit;
  auto* o = app.add_subcommand("orbit-min", "Whitehead-minimize a word");
  o->add_option("word", orbit.word)->required();
  o->callback([&] { cmd = orbit; });

  IsPrimitive primitive;
  auto* p = app.add_subcommand("is-primitive", "Decide whether a word is part of a basis");
  p->add_option("word", primitive.word)->required();
  p->callback([&] { cmd = primitive; });

  AutEquiv equiv;
  auto* e = app.add_subcommand("aut-equiv", "Decide whether two words lie in one Aut-orbit up to conjugacy");
  e->add_option("first", equiv.first)->required();
  e->add_option("second", equiv.second)->required();
  e->callback([&] { cmd = equiv; });

  Membership member;
  auto* m = app.add_subcommand("membership", "Subgroup membership via Stallings folding");
  m->add_option("word", member.word)->required();
  m->add_option("--subgroup", member.subgroup, "Comma-separated generators")->required();
  m->add_flag("--rewrite", member.rewrite, "Rewrite the word in the free basis of the subgroup");
  m->callback([&] { cmd = member; });

  auto* iv = app.add_subcommand("ivanov", "The rank 2 C-test word");
  iv->require_subcommand(1);
  IvanovEmit iv_emit;
  auto* ive = iv->add_subcommand("emit", "Print the word");
  ive->add_flag("--compact", iv_emit.compact, "Use exponent notation");
  ive->callback([&] { cmd = iv_emit; });
  IvanovVerify verify;
  std::size_t verify_samples = 0;
  std::size_t verify_len = 0;
  auto* ivv = iv->add_subcommand("verify", "Run the randomized C-test suites");
  ivv->add_option("--suite", verify.suite)
      ->check(CLI::IsMember({"cyclic", "noncyclic", "ctest", "stabilizer", "all"}));
  auto* samples_opt = ivv->add_option("--samples", verify_samples);
  ivv->add_option("--seed", verify.seed);
  auto* len_opt = ivv->add_option("--max-len", verify_len);
  ivv->callback([&] {
    if (*samples_opt) verify.samples = verify_samples;
    if (*len_opt) verify.max_len = verify_len;
    cmd = verify;
  });

  auto* mr = app.add_subcommand("mr", "Homomorphisms from the double of the C-test word");
  mr->require_subcommand(1);
  MrFactor mr_factor;
  long long k_bound = 0;
  auto* mrf = mr->add_subcommand("factor", "Factor a homomorphism through the diagram");
  mrf->add_option("--hom", mr_factor.hom, R"(JSON object with keys "a1","a2","b1","b2")")->required();
  auto* k_opt = mrf->add_option("--k-bound", k_bound, "Largest twist exponent tried");
  mrf->callback([&] {
    if (*k_opt) mr_factor.k_bound = k_bound;
    cmd = mr_factor;
  });
  MrSeparability sep;
  auto* mrs = mr->add_subcommand("separability", "Check [b1,b2] against the image of A");
  mrs->add_option("--samples", sep.samples);
  mrs->add_option("--seed", sep.seed);
  mrs->callback([&] { cmd = sep; });

  app.add_subcommand("version", "Print the version")->callback([&] { cmd = Version{}; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kUsage;
  }
  return run(cmd, std::cout, std::cerr);
}
