#include <gtest/gtest.h>

#include "catalg/moebius.hpp"
#include "oracles.hpp"

using namespace catalg;

namespace {

void expect_matches_poset_oracle(const CategoryPtr& cat) {
  const auto cert = invert(zeta<Rational>(cat));
  EXPECT_TRUE(cert.exact());
  EXPECT_EQ(cert.max_residual(), 0.0);
  const auto expected = oracle::poset_mu(*cat);
  for (ArrowId c = 0; c < cat->arrow_count(); ++c) EXPECT_EQ(cert.inverse(c), expected[c]) << cat->arrow_label(c);
}

}  // namespace

TEST(Moebius, ChainAlternates) {
  const auto cat = chain(5);
  const auto mu = mobius<Rational>(cat);
  for (ArrowId c = 0; c < cat->arrow_count(); ++c) {
    const auto gap = static_cast<long>(cat->cod(c)) - static_cast<long>(cat->dom(c));
    EXPECT_EQ(mu(c), gap == 0 ? Rational(1) : gap == 1 ? Rational(-1) : Rational(0));
  }
  expect_matches_poset_oracle(cat);
}

TEST(Moebius, DivisorPosetsMatchNumberTheory) {
  for (std::size_t n : {12U, 30U, 60U, 36U}) {
    const auto cat = divisor_poset(n);
    const auto mu = mobius<Rational>(cat);
    for (ArrowId c = 0; c < cat->arrow_count(); ++c) {
      const auto a = std::stoul(cat->object_label(cat->dom(c)));
      const auto b = std::stoul(cat->object_label(cat->cod(c)));
      EXPECT_EQ(mu(c), Rational(oracle::mu_number(static_cast<unsigned>(b / a)))) << a << " | " << b;
    }
    expect_matches_poset_oracle(cat);
  }
  const auto d60 = divisor_poset(60);
  const auto mu = mobius<Rational>(d60);
  auto from_one = [&](const char* d) { return mu(d60->hom(0, *d60->find_object(d)).front()); };
  EXPECT_EQ(from_one("6"), Rational(1));
  EXPECT_EQ(from_one("12"), Rational(0));
  EXPECT_EQ(from_one("60"), Rational(0));
  EXPECT_EQ(from_one("30"), Rational(-1));
}

TEST(Moebius, BooleanLatticesAreInclusionExclusion) {
  for (std::size_t k : {2U, 3U, 4U}) {
    const auto cat = boolean_lattice(k);
    const auto mu = mobius<Rational>(cat);
    std::size_t comparable = 0;
    for (ArrowId c = 0; c < cat->arrow_count(); ++c) {
      ++comparable;
      const auto s = static_cast<unsigned>(cat->dom(c)), t = static_cast<unsigned>(cat->cod(c));
      EXPECT_EQ(s & ~t, 0U);
      EXPECT_EQ(mu(c), Rational(oracle::inclusion_exclusion(s, t)));
    }
    std::size_t pow3 = 1;
    for (std::size_t i = 0; i < k; ++i) pow3 *= 3;
    EXPECT_EQ(comparable, pow3);
  }
}

TEST(Moebius, GroupsAndIndiscrete) {
  // zeta on a nontrivial group is not invertible: zeta^2 = |G| zeta
  EXPECT_THROW(mobius<Rational>(cyclic_group(3)), Error);
  try {
    mobius<Rational>(indiscrete(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_invertible);
  }
  const auto d = discrete(3);
  EXPECT_EQ(mobius<Rational>(d), unit<Rational>(d));
  // A3 free category: mu is 1 on identities, -1 on edges, 0 on longer paths
  const auto a3 = free_on_acyclic_quiver(3, {{0, 1, "a"}, {1, 2, "b"}});
  const auto mu = mobius<Rational>(a3);
  EXPECT_EQ(mu(*a3->find_arrow("a")), Rational(-1));
  EXPECT_EQ(mu(*a3->find_arrow("b.a")), Rational(0));
}

TEST(Moebius, OverComplex) {
  const auto cat = divisor_poset(12);
  const auto cert = invert(zeta<Complex>(cat));
  EXPECT_LE(cert.max_residual(), 1e-12);
  const auto exact = mobius<Rational>(cat);
  for (ArrowId c = 0; c < cat->arrow_count(); ++c)
    EXPECT_NEAR(cert.inverse(c).real(), exact(c).to_double(), 1e-12);
}

TEST(Moebius, InversionRoundTrip) {
  Rng rng(31);
  for (const auto& cat : {divisor_poset(60), boolean_lattice(3), chain(4)}) {
    for (int t = 0; t < 50; ++t) {
      const auto f = random_element<Rational>(cat, rng);
      const auto zf = mobius_inversion(f, InversionDirection::zeta_then_mu);
      EXPECT_EQ(zf, zeta<Rational>(cat) * f);
      const auto mf = mobius_inversion(f, InversionDirection::mu_then_zeta);
      EXPECT_EQ(mf, mobius<Rational>(cat) * f);
      EXPECT_EQ(mobius<Rational>(cat) * zf, f);
    }
  }
}

TEST(Moebius, RingsWithoutDivisionAreRejected) {
  for (auto thrower : {+[] { invert(zeta<Integer>(chain(2))); }, +[] { invert(zeta<Tropical>(chain(2))); },
                       +[] { invert(zeta<Natural>(chain(2))); }, +[] { invert(zeta<Boolean>(chain(2))); }}) {
    try {
      thrower();
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::unsupported_rig);
    }
  }
}

TEST(Moebius, InvertibleGroupElements) {
  // 2e + g in Q[Z/3] has an inverse since 2 + w != 0 for cube roots of unity
  const auto cat = cyclic_group(3);
  auto a = zero_element<Rational>(cat);
  a(0) = Rational(2);
  a(1) = Rational(1);
  const auto cert = invert(a);
  EXPECT_TRUE(cert.exact());
  EXPECT_EQ(cert.inverse * a, unit<Rational>(cat));
  // inverse of 2 + g is (4 - 2g + g^2) / 9
  EXPECT_EQ(cert.inverse(0), Rational(4, 9));
  EXPECT_EQ(cert.inverse(1), Rational(-2, 9));
  EXPECT_EQ(cert.inverse(2), Rational(1, 9));
}
