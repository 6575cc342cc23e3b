#pragma once

// JSON documents describing a category, a rig, and optional dagger,
// elements and functional.
//
//   {
//     "rig": "rational",
//     "category": {"builder": "indiscrete", "n": 2},
//     "dagger": "reverse",
//     "elements": {"a": ["1/2", "0", "1", "-3"]},
//     "functional": {"c11": "1/2", "c22": "1/2"}
//   }
//
// An explicit category lists objects, arrows {label, dom, cod[, identity]}
// and compose entries {left, right, result} meaning left o right = result.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "catalg/algebra.hpp"
#include "catalg/fincat.hpp"
#include "catalg/rig.hpp"

namespace catalg {

using Json = nlohmann::json;

using CoefficientVector = std::variant<DenseVector<Rational>, DenseVector<Complex>, DenseVector<Integer>,
                                       DenseVector<Natural>, DenseVector<Boolean>, DenseVector<Tropical>>;

struct CatSpecDocument {
  RigKind rig = RigKind::rational;
  CategoryPtr category;
  std::optional<Dagger> dagger;
  std::string dagger_source;  ///< "identity", "inverse", "reverse" or "map"
  std::vector<std::pair<std::string, CoefficientVector>> elements;
  std::optional<CoefficientVector> functional;

  const CoefficientVector* find_element(std::string_view name) const;
};

/// Throws ParseError (with line and column), SchemaError (with a JSON
/// pointer), UnknownRig or BadLiteral.
CatSpecDocument parse_document(std::string_view text);
CatSpecDocument parse_document_json(const Json& doc);

CategoryPtr parse_category(const Json& spec, const std::string& path = "/category");

// Coefficient literals: rationals and integers as strings ("3/4", "-2"),
// complex as [re, im], booleans as true/false, tropical as a number or "inf".
Rational parse_literal(const Json& j, std::type_identity<Rational>);
Complex parse_literal(const Json& j, std::type_identity<Complex>);
Integer parse_literal(const Json& j, std::type_identity<Integer>);
Natural parse_literal(const Json& j, std::type_identity<Natural>);
Boolean parse_literal(const Json& j, std::type_identity<Boolean>);
Tropical parse_literal(const Json& j, std::type_identity<Tropical>);

Json to_json(const Rational& x);
Json to_json(const Complex& x);
Json to_json(const Integer& x);
Json to_json(const Natural& x);
Json to_json(Boolean x);
Json to_json(Tropical x);

template <RigScalar S>
S parse_literal(const Json& j) {
  return parse_literal(j, std::type_identity<S>{});
}

template <RigScalar S>
AlgebraElement<S> element(const CatSpecDocument& doc, std::string_view name) {
  const auto* v = doc.find_element(name);
  if (!v) throw Error(Errc::schema_error, "/elements: no element named '" + std::string(name) + "'");
  return AlgebraElement<S>(doc.category, std::get<DenseVector<S>>(*v));
}

}  // namespace catalg
