#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>

#include "catalg/fincat.hpp"
#include "oracles.hpp"

using namespace catalg;

namespace {

ArrowId arrow(const FinCategory& cat, const std::string& label) {
  const auto c = cat.find_arrow(label);
  EXPECT_TRUE(c.has_value()) << label;
  return c.value_or(no_arrow);
}

// Every composable triple, checked without the validator.
bool associative_by_hand(const FinCategory& cat) {
  for (ArrowId h = 0; h < cat.arrow_count(); ++h)
    for (ArrowId g = 0; g < cat.arrow_count(); ++g)
      for (ArrowId f = 0; f < cat.arrow_count(); ++f)
        if (cat.composable(h, g) && cat.composable(g, f) &&
            cat.compose(cat.compose(h, g), f) != cat.compose(h, cat.compose(g, f)))
          return false;
  return true;
}

}  // namespace

TEST(FinCat, BuildersAreValid) {
  for (const auto& cat : {discrete(0), discrete(1), discrete(4), indiscrete(1), indiscrete(3), cyclic_group(5),
                          symmetric_group(3), chain(4), divisor_poset(60), boolean_lattice(3),
                          free_on_acyclic_quiver(4, {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "c"}, {2, 3, "d"}})}) {
    const auto r = validate_category(*cat);
    EXPECT_TRUE(r.valid()) << (r.violations.empty() ? "" : r.violations.front().kind);
  }
}

TEST(FinCat, EmptyCategoryIsDegenerate) {
  const auto cat = discrete(0);
  EXPECT_EQ(cat->arrow_count(), 0U);
  const auto r = validate_category(*cat);
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.degenerate);
}

TEST(FinCat, Discrete) {
  const auto cat = discrete(3);
  EXPECT_EQ(cat->object_count(), 3U);
  EXPECT_EQ(cat->arrow_count(), 3U);
  for (ArrowId c = 0; c < 3; ++c) EXPECT_TRUE(cat->is_identity(c));
  EXPECT_EQ(discrete(1)->arrow_count(), 1U);
}

TEST(FinCat, IndiscreteComposition) {
  const auto cat = indiscrete(2);
  EXPECT_EQ(cat->arrow_count(), 4U);
  EXPECT_EQ(cat->compose(arrow(*cat, "c12"), arrow(*cat, "c21")), arrow(*cat, "c11"));
  EXPECT_TRUE(is_indiscrete(*cat));
  const auto three = indiscrete(3);
  for (ObjectId x = 0; x < 3; ++x)
    for (ObjectId y = 0; y < 3; ++y) EXPECT_EQ(three->hom(x, y).size(), 1U);
  EXPECT_TRUE(associative_by_hand(*three));
  EXPECT_EQ(indiscrete(1)->arrow_count(), 1U);
}

TEST(FinCat, SymmetricGroupMatchesPermutationComposition) {
  const auto cat = symmetric_group(3);
  ASSERT_EQ(cat->arrow_count(), 6U);
  auto perm = [&](ArrowId c) {
    const auto& l = cat->arrow_label(c);
    return std::array<int, 3>{l[1] - '0', l[2] - '0', l[3] - '0'};
  };
  for (ArrowId g = 0; g < 6; ++g)
    for (ArrowId f = 0; f < 6; ++f) {
      const auto pg = perm(g), pf = perm(f), ph = perm(cat->compose(g, f));
      for (int x = 0; x < 3; ++x) EXPECT_EQ(ph[x], pg[pf[x]]);
    }
  EXPECT_TRUE(associative_by_hand(*cat));
}

TEST(FinCat, MonoidTable) {
  const auto z2 = monoid_from_table({{0, 1}, {1, 0}}, 0, {"e", "g"});
  EXPECT_EQ(z2->object_count(), 1U);
  EXPECT_EQ(z2->compose(arrow(*z2, "g"), arrow(*z2, "g")), arrow(*z2, "e"));
  EXPECT_THROW(monoid_from_table({{1, 1}, {1, 0}}, 0), Error);  // broken unit row
  // x*x = y, x*y = x, y*x = y, y*y = x is not associative
  EXPECT_THROW(monoid_from_table({{0, 1, 2}, {1, 2, 1}, {2, 2, 1}}, 0), Error);
  try {
    monoid_from_table({{1, 1}, {1, 0}}, 0);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_monoid);
  }
}

TEST(FinCat, Posets) {
  const auto c = chain(3);
  EXPECT_EQ(c->arrow_count(), 6U);
  const auto d12 = divisor_poset(12);
  EXPECT_EQ(d12->object_count(), 6U);
  // divisor pairs a | b with a, b | 12
  std::size_t pairs = 0;
  for (int a : {1, 2, 3, 4, 6, 12})
    for (int b : {1, 2, 3, 4, 6, 12}) pairs += b % a == 0;
  EXPECT_EQ(d12->arrow_count(), pairs);
  for (ObjectId x = 0; x < d12->object_count(); ++x)
    for (ObjectId y = 0; y < d12->object_count(); ++y) EXPECT_LE(d12->hom(x, y).size(), 1U);

  try {
    poset_from_relation(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
    FAIL() << "missing transitive pair accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_poset);
  }
  EXPECT_THROW(poset_from_relation(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}), Error);
  EXPECT_THROW(poset_from_relation(2, {{0, 0}}), Error);
}

TEST(FinCat, Quivers) {
  EXPECT_EQ(free_on_acyclic_quiver(2, {{0, 1, "a"}})->arrow_count(), 3U);
  const auto a3 = free_on_acyclic_quiver(3, {{0, 1, "a"}, {1, 2, "b"}});
  EXPECT_EQ(a3->arrow_count(), 6U);
  const auto ba = a3->compose(arrow(*a3, "b"), arrow(*a3, "a"));
  EXPECT_EQ(a3->arrow_label(ba), "b.a");
  EXPECT_EQ(a3->dom(ba), 0U);
  EXPECT_EQ(a3->cod(ba), 2U);
  // two parallel paths stay distinct
  const auto sq = free_on_acyclic_quiver(4, {{0, 1, "a"}, {1, 3, "b"}, {0, 2, "c"}, {2, 3, "d"}});
  EXPECT_EQ(sq->hom(0, 3).size(), 2U);
  try {
    free_on_acyclic_quiver(1, {{0, 0, "loop"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::cyclic_quiver);
  }
  EXPECT_THROW(free_on_acyclic_quiver(2, {{0, 1, "a"}, {1, 0, "b"}}), Error);
}

TEST(FinCat, FactorizationCounts) {
  const auto d2 = discrete(2);
  EXPECT_EQ(d2->factorizations().factorizations(0).size(), 1U);
  const auto i2 = indiscrete(2);
  EXPECT_EQ(i2->factorizations().factorizations(arrow(*i2, "c11")).size(), 2U);
  const auto c3 = chain(3);
  const auto top = c3->hom(0, 2).front();
  EXPECT_EQ(c3->factorizations().factorizations(top).size(), 3U);

  for (const auto& [name, cat] : oracle::test_categories()) {
    std::size_t composable = 0;
    for (ArrowId g = 0; g < cat->arrow_count(); ++g)
      for (ArrowId f = 0; f < cat->arrow_count(); ++f) composable += cat->composable(g, f);
    EXPECT_EQ(cat->factorizations().pair_count(), composable) << name;
  }
}

TEST(FinCat, BrokenTablesAreDiagnosed) {
  // S3 with one composite swapped: identity laws intact, associativity broken.
  const auto s3 = symmetric_group(3);
  std::vector<ArrowId> table(36);
  for (ArrowId g = 0; g < 6; ++g)
    for (ArrowId f = 0; f < 6; ++f) table[g * 6 + f] = s3->compose(g, f);
  std::swap(table[1 * 6 + 2], table[1 * 6 + 3]);
  std::vector<std::string> labels;
  for (ArrowId c = 0; c < 6; ++c) labels.push_back(s3->arrow_label(c));
  const FinCategory broken(1, std::vector<ObjectId>(6, 0), std::vector<ObjectId>(6, 0), {0}, table, labels);
  const auto r = validate_category(broken);
  EXPECT_FALSE(r.valid());
  ASSERT_GT(r.count("associativity"), 0U);
  for (const auto& v : r.violations) {
    if (v.kind != "associativity") continue;
    ASSERT_EQ(v.witness.size(), 3U);
    const auto h = v.witness[0], g = v.witness[1], f = v.witness[2];
    EXPECT_NE(broken.compose(broken.compose(h, g), f), broken.compose(h, broken.compose(g, f)));
  }

  // A missing composite and a bad identity.
  auto gap = table;
  gap[5 * 6 + 5] = no_arrow;
  EXPECT_GT(validate_category(FinCategory(1, std::vector<ObjectId>(6, 0), std::vector<ObjectId>(6, 0), {0}, gap))
                .count("composability_gap"),
            0U);
  const auto bad_id = validate_category(
      FinCategory(1, std::vector<ObjectId>(6, 0), std::vector<ObjectId>(6, 0), {1}, std::vector<ArrowId>(s3->factorizations().arrow_count() * 6, 0)));
  EXPECT_GT(bad_id.count("identity_law"), 0U);
}

TEST(FinCat, Daggers) {
  const auto s3 = symmetric_group(3);
  const auto inv = canonical_dagger(*s3, DaggerKind::inverse);
  EXPECT_TRUE(validate_dagger(*s3, inv).valid());
  for (ArrowId g = 0; g < 6; ++g) EXPECT_TRUE(s3->is_identity(s3->compose(inv(g), g)));

  const auto d3 = discrete(3);
  const auto id = canonical_dagger(*d3, DaggerKind::identity);
  for (ArrowId c = 0; c < 3; ++c) EXPECT_EQ(id(c), c);

  const auto i2 = indiscrete(2);
  const auto rev = canonical_dagger(*i2, DaggerKind::reverse);
  EXPECT_EQ(rev(arrow(*i2, "c12")), arrow(*i2, "c21"));
  EXPECT_TRUE(validate_dagger(*indiscrete(3), canonical_dagger(*indiscrete(3), DaggerKind::reverse)).valid());

  // swapping two identities is not the identity on objects
  const Dagger swapped(std::vector<ArrowId>{1, 0, 2});
  const auto r = validate_dagger(*d3, swapped);
  EXPECT_FALSE(r.valid());
  EXPECT_GT(r.count("identity_on_objects") + r.count("endpoint_swap"), 0U);

  try {
    canonical_dagger(*chain(3), DaggerKind::inverse);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::no_inverse);
  }
  try {
    canonical_dagger(*s3, DaggerKind::reverse);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_indiscrete);
  }
  // identity map on S3 is not contravariant
  try {
    canonical_dagger(*s3, DaggerKind::identity);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_dagger);
  }
}

TEST(FinCat, CanonicalDaggersAlwaysValidate) {
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_TRUE(validate_dagger(*cyclic_group(n), canonical_dagger(*cyclic_group(n), DaggerKind::inverse)).valid());
    EXPECT_TRUE(validate_dagger(*indiscrete(n), canonical_dagger(*indiscrete(n), DaggerKind::reverse)).valid());
    EXPECT_TRUE(validate_dagger(*indiscrete(n), canonical_dagger(*indiscrete(n), DaggerKind::inverse)).valid());
    EXPECT_TRUE(validate_dagger(*discrete(n), canonical_dagger(*discrete(n), DaggerKind::identity)).valid());
  }
}
