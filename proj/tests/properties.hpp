#pragma once

// Algebra identities as named predicates over random rational instances.
// Shared by the unit tests and the acceptance binary.

#include <map>
#include <string>

#include "oracles.hpp"

namespace props {

using namespace catalg;
using El = AlgebraElement<Rational>;

struct Tally {
  std::size_t instances = 0;
  std::map<std::string, std::size_t> failures;  ///< identity name -> failing instances

  void check(const std::string& name, bool ok) {
    auto& f = failures[name];
    if (!ok) ++f;
  }
  bool passed() const {
    for (const auto& [name, n] : failures)
      if (n) return false;
    return true;
  }
  std::string first_failure() const {
    for (const auto& [name, n] : failures)
      if (n) return name;
    return {};
  }
};

inline El sum(const CategoryPtr& cat, const std::vector<El>& terms) {
  auto out = zero_element<Rational>(cat);
  for (const auto& t : terms) out = out + t;
  return out;
}

// One random instance of every identity on `cat`.
inline void algebra_instance(const CategoryPtr& cat, Rng& rng, Tally& tally) {
  ++tally.instances;
  const auto a = random_element<Rational>(cat, rng), b = random_element<Rational>(cat, rng),
             c = random_element<Rational>(cat, rng);
  const auto r = oracle::small_rational(rng), s = oracle::small_rational(rng);
  const auto e = unit<Rational>(cat);
  const auto zero = zero_element<Rational>(cat);
  const std::size_t objects = cat->object_count();

  tally.check("associativity", (a * b) * c == a * (b * c));
  tally.check("unit", e * a == a && a * e == a);
  tally.check("distributivity", a * (b + c) == a * b + a * c && (a + b) * c == a * c + b * c);
  tally.check("bimodule", (r * a) * (b * s) == r * (a * b) * s && r * (s * a) == (r * s) * a &&
                              (a * r) * s == a * (r * s) && (r * a) * s == r * (a * s) && (r + s) * a == r * a + s * a);
  tally.check("convolution_oracle",
              a * b == El(cat, oracle::brute_convolve<Rational>(*cat, a.coeffs(), b.coeffs())));

  // calculus of indeterminates on one random pair
  const auto pick = [&] {
    return static_cast<ArrowId>(uniform_int(rng, 0, static_cast<std::int64_t>(cat->arrow_count()) - 1));
  };
  const ArrowId g = pick(), f = pick();
  const auto ig = indeterminate<Rational>(cat, g), jf = indeterminate<Rational>(cat, f);
  const auto expected = cat->composable(g, f) ? indeterminate<Rational>(cat, cat->compose(g, f)) : zero;
  tally.check("indeterminate_calculus", ig * jf == expected && r * ig == ig * r);

  // polynomial expression
  std::vector<El> left_terms, right_terms;
  for (ArrowId k = 0; k < a.size(); ++k) {
    left_terms.push_back(a(k) * indeterminate<Rational>(cat, k));
    right_terms.push_back(indeterminate<Rational>(cat, k) * a(k));
  }
  bool entries_ok = true;
  for (ObjectId y = 0; y < objects; ++y)
    for (ObjectId x = 0; x < objects; ++x) {
      std::vector<El> terms;
      for (ArrowId k : cat->hom(x, y)) terms.push_back(a(k) * indeterminate<Rational>(cat, k));
      entries_ok = entries_ok && entry(a, y, x) == sum(cat, terms);
    }
  tally.check("polynomial_expression", sum(cat, left_terms) == a && sum(cat, right_terms) == a && entries_ok &&
                                           from_polynomial<Rational>(cat, to_polynomial(a)) == a);

  // the nine matrix-calculus identities; entry(a, y, x) is the (y, x)-entry
  bool add_col = true, add_row = true, add_entry = true, sc_col = true, sc_row = true, sc_entry = true,
       mul_col = true, mul_row = true, mul_entry = true;
  const auto rar = r * a * s;
  const auto ab = a * b;
  for (ObjectId x = 0; x < objects; ++x) {
    add_col = add_col && column(a + b, x) == column(a, x) + column(b, x);
    add_row = add_row && row(a + b, x) == row(a, x) + row(b, x);
    sc_col = sc_col && column(rar, x) == r * column(a, x) * s;
    sc_row = sc_row && row(rar, x) == r * row(a, x) * s;

    std::vector<El> col_terms, row_terms;
    for (ObjectId z = 0; z < objects; ++z) {
      col_terms.push_back(column(a, z) * entry(b, z, x));
      row_terms.push_back(entry(a, x, z) * row(b, z));
    }
    mul_col = mul_col && column(ab, x) == a * column(b, x) && column(ab, x) == sum(cat, col_terms);
    mul_row = mul_row && row(ab, x) == row(a, x) * b && row(ab, x) == sum(cat, row_terms);

    for (ObjectId y = 0; y < objects; ++y) {
      add_entry = add_entry && entry(a + b, y, x) == entry(a, y, x) + entry(b, y, x);
      sc_entry = sc_entry && entry(rar, y, x) == r * entry(a, y, x) * s;
      std::vector<El> terms;
      for (ObjectId z = 0; z < objects; ++z) terms.push_back(entry(a, y, z) * entry(b, z, x));
      mul_entry = mul_entry && entry(ab, y, x) == row(a, y) * column(b, x) && entry(ab, y, x) == sum(cat, terms);
    }
  }
  tally.check("matrix_calculus_column_sum", add_col);
  tally.check("matrix_calculus_row_sum", add_row);
  tally.check("matrix_calculus_entry_sum", add_entry);
  tally.check("matrix_calculus_column_scalar", sc_col);
  tally.check("matrix_calculus_row_scalar", sc_row);
  tally.check("matrix_calculus_entry_scalar", sc_entry);
  tally.check("matrix_calculus_column_product", mul_col);
  tally.check("matrix_calculus_row_product", mul_row);
  tally.check("matrix_calculus_entry_product", mul_entry);

  // decomposition of the unit
  std::vector<El> unit_terms, product_terms, all_entries;
  for (ObjectId x = 0; x < objects; ++x) {
    unit_terms.push_back(column(e, x) * row(e, x));
    product_terms.push_back(column(a, x) * row(b, x));
    for (ObjectId y = 0; y < objects; ++y) all_entries.push_back(entry(a, y, x));
  }
  tally.check("unit_decomposition",
              sum(cat, unit_terms) == e && sum(cat, product_terms) == ab && sum(cat, all_entries) == a);

  // determination by columns and rows of the unit: half the time b' = a
  auto other = uniform_int(rng, 0, 1) ? a : b;
  bool same_cols = true, same_rows = true;
  for (ObjectId x = 0; x < objects; ++x) {
    same_cols = same_cols && a * column(e, x) == other * column(e, x);
    same_rows = same_rows && row(e, x) * a == row(e, x) * other;
  }
  tally.check("determined_by_columns", same_cols == (a == other) && same_rows == (a == other));
}

inline Tally algebra_identities(std::uint64_t seed, std::size_t per_category = 200) {
  Rng rng(seed);
  Tally tally;
  for (const auto& [name, cat] : oracle::test_categories())
    for (std::size_t i = 0; i < per_category; ++i) algebra_instance(cat, rng, tally);
  return tally;
}

}  // namespace props
