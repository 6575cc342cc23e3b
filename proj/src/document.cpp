#include "catalg/document.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace catalg {
namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(Errc::schema_error, path + ": " + what);
}

[[noreturn]] void bad_literal(const std::string& what) { throw Error(Errc::bad_literal, what); }

const Json& member(const Json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(path, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t natural_field(const Json& obj, const char* key, const std::string& path) {
  const Json& v = member(obj, key, path);
  if (!v.is_number_unsigned()) schema(path + "/" + key, "expected a non-negative integer");
  return v.get<std::size_t>();
}

std::string string_at(const Json& v, const std::string& path) {
  if (!v.is_string()) schema(path, "expected a string");
  return v.get<std::string>();
}

void allow_only(const Json& obj, std::initializer_list<std::string_view> keys, const std::string& path) {
  for (const auto& [k, _] : obj.items())
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) schema(path, "unknown field '" + k + "'");
}

std::vector<std::string> labels_at(const Json& obj, const char* key, const std::string& path) {
  std::vector<std::string> out;
  auto it = obj.find(key);
  if (it == obj.end()) return out;
  if (!it->is_array()) schema(path + "/" + key, "expected an array of strings");
  for (std::size_t i = 0; i < it->size(); ++i) out.push_back(string_at((*it)[i], path + "/" + key + "/" + std::to_string(i)));
  return out;
}

CategoryPtr builder_category(const Json& spec, const std::string& path) {
  const std::string name = string_at(member(spec, "builder", path), path + "/builder");
  auto simple = [&](const char* key, auto make) {
    allow_only(spec, {"builder", key}, path);
    return make(natural_field(spec, key, path));
  };
  if (name == "discrete") return simple("n", discrete);
  if (name == "indiscrete") return simple("n", indiscrete);
  if (name == "chain") return simple("n", chain);
  if (name == "cyclic_group") return simple("n", cyclic_group);
  if (name == "symmetric_group") return simple("n", symmetric_group);
  if (name == "divisor_poset") return simple("n", divisor_poset);
  if (name == "boolean_lattice") return simple("k", boolean_lattice);

  if (name == "monoid") {
    allow_only(spec, {"builder", "table", "unit", "labels"}, path);
    const Json& t = member(spec, "table", path);
    if (!t.is_array()) schema(path + "/table", "expected a square array of element indices");
    std::vector<std::vector<std::size_t>> table;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string rp = path + "/table/" + std::to_string(i);
      if (!t[i].is_array()) schema(rp, "expected an array");
      auto& row = table.emplace_back();
      for (std::size_t j = 0; j < t[i].size(); ++j) {
        if (!t[i][j].is_number_unsigned()) schema(rp + "/" + std::to_string(j), "expected an element index");
        row.push_back(t[i][j].get<std::size_t>());
      }
    }
    return monoid_from_table(table, natural_field(spec, "unit", path), labels_at(spec, "labels", path));
  }
  if (name == "poset") {
    allow_only(spec, {"builder", "n", "leq", "labels"}, path);
    const std::size_t n = natural_field(spec, "n", path);
    const Json& leq = member(spec, "leq", path);
    if (!leq.is_array()) schema(path + "/leq", "expected an array of [a, b] pairs");
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < leq.size(); ++i) {
      const Json& p = leq[i];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
        schema(path + "/leq/" + std::to_string(i), "expected [a, b] with element indices");
      rel.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
    return poset_from_relation(n, rel, labels_at(spec, "labels", path));
  }
  if (name == "quiver") {
    allow_only(spec, {"builder", "vertices", "edges"}, path);
    const std::size_t v = natural_field(spec, "vertices", path);
    const Json& edges = member(spec, "edges", path);
    if (!edges.is_array()) schema(path + "/edges", "expected an array of edges");
    std::vector<QuiverEdge> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string ep = path + "/edges/" + std::to_string(i);
      if (!edges[i].is_object()) schema(ep, "expected {src, dst, label}");
      allow_only(edges[i], {"src", "dst", "label"}, ep);
      out.push_back({natural_field(edges[i], "src", ep), natural_field(edges[i], "dst", ep),
                     string_at(member(edges[i], "label", ep), ep + "/label")});
    }
    return free_on_acyclic_quiver(v, out);
  }
  schema(path + "/builder", "unknown builder '" + name + "'");
}

CategoryPtr explicit_category(const Json& spec, const std::string& path) {
  allow_only(spec, {"objects", "arrows", "compose"}, path);
  const auto objects = labels_at(spec, "objects", path);
  if (!spec.contains("objects")) schema(path, "missing field 'objects'");
  std::map<std::string, ObjectId> object_index;
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (!object_index.emplace(objects[i], i).second)
      schema(path + "/objects/" + std::to_string(i), "duplicate object '" + objects[i] + "'");

  const Json& arrows = member(spec, "arrows", path);
  if (!arrows.is_array()) schema(path + "/arrows", "expected an array");
  const std::size_t n = arrows.size();
  std::vector<ObjectId> dom(n), cod(n);
  std::vector<std::string> labels(n);
  std::vector<std::optional<bool>> flagged(n);
  std::map<std::string, ArrowId> arrow_index;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string ap = path + "/arrows/" + std::to_string(i);
    const Json& a = arrows[i];
    if (!a.is_object()) schema(ap, "expected {label, dom, cod}");
    allow_only(a, {"label", "dom", "cod", "identity"}, ap);
    labels[i] = string_at(member(a, "label", ap), ap + "/label");
    if (!arrow_index.emplace(labels[i], i).second) schema(ap + "/label", "duplicate arrow '" + labels[i] + "'");
    auto object = [&](const char* key) {
      const std::string name = string_at(member(a, key, ap), ap + "/" + key);
      auto it = object_index.find(name);
      if (it == object_index.end()) schema(ap + "/" + key, "unknown object '" + name + "'");
      return it->second;
    };
    dom[i] = object("dom");
    cod[i] = object("cod");
    if (auto it = a.find("identity"); it != a.end()) {
      if (!it->is_boolean()) schema(ap + "/identity", "expected a boolean");
      flagged[i] = it->get<bool>();
      if (*flagged[i] && dom[i] != cod[i]) schema(ap + "/identity", "an identity must be an endomorphism");
    }
  }

  std::vector<ArrowId> table(n * n, no_arrow);
  const Json& compose = member(spec, "compose", path);
  if (!compose.is_array()) schema(path + "/compose", "expected an array");
  for (std::size_t i = 0; i < compose.size(); ++i) {
    const std::string cp = path + "/compose/" + std::to_string(i);
    const Json& e = compose[i];
    if (!e.is_object()) schema(cp, "expected {left, right, result}");
    allow_only(e, {"left", "right", "result"}, cp);
    auto arrow = [&](const char* key) {
      const std::string name = string_at(member(e, key, cp), cp + "/" + key);
      auto it = arrow_index.find(name);
      if (it == arrow_index.end()) schema(cp + "/" + key, "unknown arrow '" + name + "'");
      return it->second;
    };
    const ArrowId g = arrow("left"), f = arrow("right"), h = arrow("result");
    if (dom[g] != cod[f]) schema(cp, "'" + labels[g] + "' and '" + labels[f] + "' are not composable");
    if (table[g * n + f] != no_arrow) schema(cp, "duplicate entry for " + labels[g] + " o " + labels[f]);
    table[g * n + f] = h;
  }

  // An identity is either flagged or the unique endomorphism acting neutrally
  // in every listed composite at its object.
  std::vector<ArrowId> identity(objects.size(), no_arrow);
  for (ArrowId c = 0; c < n; ++c) {
    if (flagged[c].value_or(false)) {
      if (identity[dom[c]] != no_arrow) schema(path + "/arrows/" + std::to_string(c), "second identity at object");
      identity[dom[c]] = c;
    }
  }
  for (ObjectId x = 0; x < objects.size(); ++x) {
    if (identity[x] != no_arrow) continue;
    std::vector<ArrowId> candidates;
    for (ArrowId e = 0; e < n; ++e) {
      if (dom[e] != x || cod[e] != x || flagged[e].has_value()) continue;
      bool neutral = true;
      for (ArrowId f = 0; f < n && neutral; ++f) {
        if (dom[f] == x && table[f * n + e] != f) neutral = false;
        if (cod[f] == x && table[e * n + f] != f) neutral = false;
      }
      if (neutral) candidates.push_back(e);
    }
    if (candidates.size() != 1)
      schema(path + "/objects/" + std::to_string(x),
             candidates.empty() ? "no identity arrow for '" + objects[x] + "'"
                                : "ambiguous identity for '" + objects[x] + "'; mark one with \"identity\": true");
    identity[x] = candidates.front();
  }
  return std::make_shared<const FinCategory>(objects.size(), std::move(dom), std::move(cod), std::move(identity),
                                             std::move(table), std::move(labels), objects);
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::size_t column_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  const auto nl = text.substr(0, byte).rfind('\n');
  return nl == std::string_view::npos ? byte + 1 : byte - nl;
}

template <RigScalar S>
DenseVector<S> coefficients(const CatSpecDocument& doc, const Json& spec, const std::string& path) {
  const FinCategory& cat = *doc.category;
  const auto n = static_cast<Eigen::Index>(cat.arrow_count());
  DenseVector<S> v = DenseVector<S>::Constant(n, rig_zero<S>());
  auto literal = [&](const Json& j, const std::string& p) {
    try {
      return parse_literal<S>(j);
    } catch (const Error& e) {
      if (e.code() != Errc::bad_literal) throw;
      throw Error(Errc::bad_literal, p + ": " + e.what());
    }
  };
  if (spec.is_array()) {
    if (spec.size() != cat.arrow_count())
      schema(path, "expected " + std::to_string(cat.arrow_count()) + " coefficients, got " + std::to_string(spec.size()));
    for (Eigen::Index i = 0; i < n; ++i) v(i) = literal(spec[static_cast<std::size_t>(i)], path + "/" + std::to_string(i));
  } else if (spec.is_object()) {
    for (const auto& [label, value] : spec.items()) {
      const auto c = cat.find_arrow(label);
      if (!c) schema(path + "/" + label, "unknown arrow '" + label + "'");
      v(static_cast<Eigen::Index>(*c)) = literal(value, path + "/" + label);
    }
  } else {
    schema(path, "expected a coefficient list or an arrow-label map");
  }
  return v;
}

CoefficientVector coefficients_for(const CatSpecDocument& doc, const Json& spec, const std::string& path) {
  return visit_rig(doc.rig, [&](auto tag) -> CoefficientVector {
    using S = typename decltype(tag)::type;
    return coefficients<S>(doc, spec, path);
  });
}

}  // namespace

const CoefficientVector* CatSpecDocument::find_element(std::string_view name) const {
  for (const auto& [n, v] : elements)
    if (n == name) return &v;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Literals

Rational parse_literal(const Json& j, std::type_identity<Rational>) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigRational(j.get<std::int64_t>()));
  bad_literal("rational literals are strings like \"3/4\" or integers");
}

Complex parse_literal(const Json& j, std::type_identity<Complex>) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  bad_literal("complex literals are numbers or [re, im]");
}

Integer parse_literal(const Json& j, std::type_identity<Integer>) {
  if (j.is_string()) return Integer::parse(j.get<std::string>());
  if (j.is_number_integer()) return Integer::of(j.get<std::int64_t>());
  bad_literal("integer literals are strings or integers");
}

Natural parse_literal(const Json& j, std::type_identity<Natural>) {
  if (j.is_string()) return Natural::parse(j.get<std::string>());
  if (j.is_number_unsigned()) return Natural::of(BigInt(j.get<std::uint64_t>()));
  bad_literal("natural literals are strings or non-negative integers");
}

Boolean parse_literal(const Json& j, std::type_identity<Boolean>) {
  if (j.is_boolean()) return Boolean::of(j.get<bool>());
  if (j.is_number_unsigned() && j.get<std::uint64_t>() <= 1) return Boolean::of(j.get<std::uint64_t>() == 1);
  bad_literal("boolean literals are true, false, 0 or 1");
}

Tropical parse_literal(const Json& j, std::type_identity<Tropical>) {
  if (j.is_number()) return Tropical::of(j.get<double>());
  if (j.is_string() && (j.get<std::string>() == "inf" || j.get<std::string>() == "+inf")) return Tropical::of(Tropical::infinity);
  bad_literal("tropical literals are numbers or \"inf\"");
}

Json to_json(const Rational& x) { return x.str(); }
Json to_json(const Complex& x) { return Json::array({x.real(), x.imag()}); }
Json to_json(const Integer& x) { return x.str(); }
Json to_json(const Natural& x) { return x.str(); }
Json to_json(Boolean x) { return x.value(); }
Json to_json(Tropical x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

// ---------------------------------------------------------------------------
// Documents

CategoryPtr parse_category(const Json& spec, const std::string& path) {
  if (!spec.is_object()) schema(path, "expected an object");
  if (spec.contains("builder")) return builder_category(spec, path);
  return explicit_category(spec, path);
}

CatSpecDocument parse_document_json(const Json& doc) {
  if (!doc.is_object()) schema("", "document must be a JSON object");
  allow_only(doc, {"rig", "category", "dagger", "elements", "functional", "name"}, "");

  CatSpecDocument out;
  out.rig = parse_rig_kind(string_at(member(doc, "rig", ""), "/rig"));
  out.category = parse_category(member(doc, "category", ""));

  if (auto it = doc.find("dagger"); it != doc.end()) {
    if (it->is_string()) {
      const std::string kind = it->get<std::string>();
      DaggerKind k;
      if (kind == "identity")
        k = DaggerKind::identity;
      else if (kind == "inverse")
        k = DaggerKind::inverse;
      else if (kind == "reverse")
        k = DaggerKind::reverse;
      else
        schema("/dagger", "unknown dagger kind '" + kind + "'");
      out.dagger = canonical_dagger(*out.category, k);
      out.dagger_source = kind;
    } else if (it->is_object()) {
      const auto& cat = *out.category;
      std::vector<ArrowId> map(cat.arrow_count(), no_arrow);
      for (const auto& [from, to] : it->items()) {
        const std::string p = "/dagger/" + from;
        const auto a = cat.find_arrow(from);
        if (!a) schema(p, "unknown arrow '" + from + "'");
        const auto b = cat.find_arrow(string_at(to, p));
        if (!b) schema(p, "unknown arrow '" + to.get<std::string>() + "'");
        map[*a] = *b;
      }
      for (ArrowId c = 0; c < map.size(); ++c)
        if (map[c] == no_arrow) schema("/dagger", "no image for arrow '" + cat.arrow_label(c) + "'");
      out.dagger = Dagger(std::move(map));
      out.dagger_source = "map";
    } else {
      schema("/dagger", "expected a dagger kind or an arrow map");
    }
  }

  if (auto it = doc.find("elements"); it != doc.end()) {
    if (!it->is_object()) schema("/elements", "expected a map from names to coefficients");
    for (const auto& [name, spec] : it->items())
      out.elements.emplace_back(name, coefficients_for(out, spec, "/elements/" + name));
  }
  if (auto it = doc.find("functional"); it != doc.end()) out.functional = coefficients_for(out, *it, "/functional");
  return out;
}

CatSpecDocument parse_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(Errc::parse_error, "line " + std::to_string(line_of(text, byte)) + ", column " +
                                       std::to_string(column_of(text, byte)) + ": " + e.what());
  }
  return parse_document_json(doc);
}

}  // namespace catalg
