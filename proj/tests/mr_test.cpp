#include <gtest/gtest.h>

#include "jsjd/mr.hpp"
#include "jsjd/random.hpp"
#include "support.hpp"

namespace jsjd {
namespace {

using testing::W;

const FreeWord& ivanov() {
  static const FreeWord w = ivanov_word();
  return w;
}

DoubleHom twisted_hom(const WordPair& a, long long k) {
  const FreeWord shift = power(evaluate(ivanov(), a), k);
  return {a, {conjugate(a[0], shift), conjugate(a[1], shift)}};
}

TEST(Validate, Examples) {
  const WordPair ab{W("a"), W("b")};
  EXPECT_TRUE(validate({ab, ab}, ivanov()));
  EXPECT_TRUE(validate(twisted_hom(ab, 1), ivanov()));
  EXPECT_FALSE(validate({ab, {W("b"), W("a")}}, ivanov()));
}

TEST(Factor, EtaType) {
  const FreeWord c = W("abA");
  const FreeWord d = W("bba");
  const DoubleHom h{{power(c, 2), power(c, 5)}, {power(d, 3), d}};
  ASSERT_TRUE(validate(h, ivanov()));
  const auto f = factor(h, ivanov());
  const auto* eta = std::get_if<EtaFactor>(&f);
  ASSERT_NE(eta, nullptr);
  EXPECT_EQ(eta->root_a, c);
  EXPECT_EQ(eta->exp_a, (std::array<long long, 2>{2, 5}));
  EXPECT_EQ(eta->root_b, d);
  EXPECT_EQ(eta->exp_b, (std::array<long long, 2>{3, 1}));
  EXPECT_EQ(recompose(f, h, ivanov()), h);
}

TEST(Factor, EtaTypeWithTrivialImages) {
  const DoubleHom h{{FreeWord(Alphabet{2}), FreeWord(Alphabet{2})}, {W("ab"), FreeWord(Alphabet{2})}};
  const auto f = factor(h, ivanov());
  ASSERT_TRUE(std::holds_alternative<EtaFactor>(f));
  EXPECT_EQ(recompose(f, h, ivanov()), h);
}

TEST(Factor, PiType) {
  const DoubleHom one = twisted_hom({W("a"), W("b")}, 1);
  const auto f1 = factor(one, ivanov());
  ASSERT_TRUE(std::holds_alternative<PiFactor>(f1));
  EXPECT_EQ(std::get<PiFactor>(f1).k, 1);
  EXPECT_EQ(recompose(f1, one, ivanov()), one);

  // A random basis: the image of (a, b) under a Whitehead chain.
  const WordPair basis{W("aab"), W("ab")};
  const DoubleHom three = twisted_hom(basis, 3);
  const auto f3 = factor(three, ivanov());
  ASSERT_TRUE(std::holds_alternative<PiFactor>(f3));
  EXPECT_EQ(std::get<PiFactor>(f3).k, 3);
  EXPECT_EQ(recompose(f3, three, ivanov()), three);

  const DoubleHom diagonal{basis, basis};
  EXPECT_EQ(std::get<PiFactor>(factor(diagonal, ivanov())).k, 0);
}

TEST(Factor, Errors) {
  const WordPair ab{W("a"), W("b")};
  EXPECT_THROW(factor({ab, {W("b"), W("a")}}, ivanov()), NotAHomomorphism);
  EXPECT_THROW(factor(twisted_hom(ab, 4), ivanov(), 3), Unfactored);
  EXPECT_NO_THROW(factor(twisted_hom(ab, -4), ivanov(), 4));

  // A relator-respecting hom outside both branches, for a word that is not
  // a C-test word: w = [a,b]^2 with the b-side sent to a conjugate of the
  // a-side by the square root of w(a-images).
  const FreeWord w = W("abABabAB");
  const DoubleHom h{ab, {conjugate(W("a"), W("abAB")), conjugate(W("b"), W("abAB"))}};
  ASSERT_TRUE(validate(h, w));
  EXPECT_THROW(factor(h, w), Unfactored);
}

TEST(Sampling, RoundTripsRecoverTagAndTwist) {
  const auto homs = sample_homs(ivanov(), 60, 11);
  ASSERT_EQ(homs.size(), 60u);
  std::size_t eta = 0;
  for (const auto& s : homs) {
    ASSERT_TRUE(validate(s.hom, ivanov()));
    const auto f = factor(s.hom, ivanov());
    ASSERT_EQ(std::holds_alternative<EtaFactor>(f), s.eta);
    if (s.eta) {
      ++eta;
      EXPECT_TRUE(commute(s.hom.a[0], s.hom.a[1]));
      EXPECT_TRUE(commute(s.hom.b[0], s.hom.b[1]));
      EXPECT_TRUE(evaluate(ivanov(), s.hom.a).empty());
      EXPECT_TRUE(evaluate(ivanov(), s.hom.b).empty());
    } else {
      EXPECT_EQ(std::get<PiFactor>(f).k, s.k);
      EXPECT_LE(std::llabs(s.k), 5);
    }
    EXPECT_EQ(recompose(f, s.hom, ivanov()), s.hom);
  }
  EXPECT_GT(eta, 10u);
  EXPECT_LT(eta, 50u);
}

TEST(Sampling, Deterministic) {
  const auto first = sample_homs(ivanov(), 10, 5);
  const auto second = sample_homs(ivanov(), 10, 5);
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) EXPECT_EQ(first[i].hom, second[i].hom);
}

TEST(Factor, InvariantUnderTargetConjugation) {
  Rng rng(23);
  for (const auto& s : sample_homs(ivanov(), 20, 29)) {
    const FreeWord g = random_word(rng, 1, 6);
    auto c = [&](const FreeWord& u) { return conjugate(u, g); };
    const DoubleHom moved{{c(s.hom.a[0]), c(s.hom.a[1])}, {c(s.hom.b[0]), c(s.hom.b[1])}};
    const auto before = factor(s.hom, ivanov());
    const auto after = factor(moved, ivanov());
    ASSERT_EQ(before.index(), after.index());
    if (const auto* pi = std::get_if<PiFactor>(&before)) {
      EXPECT_EQ(std::get<PiFactor>(after).k, pi->k);
    }
    EXPECT_EQ(recompose(after, moved, ivanov()), moved);
  }
}

TEST(Separability, NoSampledHomSeparates) {
  const auto report = separability_experiment(ivanov(), 40, 3);
  EXPECT_EQ(report.samples, 40u);
  EXPECT_EQ(report.failed, 0u);

  const DoubleHom pi = twisted_hom({W("ab"), W("aB")}, 2);
  const FreeWord g = commutator(pi.b[0], pi.b[1]);
  EXPECT_EQ(g, conjugate(commutator(pi.a[0], pi.a[1]), power(evaluate(ivanov(), pi.a), 2)));
}

}  // namespace
}  // namespace jsjd
