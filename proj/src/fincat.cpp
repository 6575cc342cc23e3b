#include "catalg/fincat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "catalg/error.hpp"

namespace catalg {

// ---------------------------------------------------------------------------
// FactorizationTable

FactorizationTable::FactorizationTable(const FinCategory& cat) {
  const std::size_t n = cat.arrow_count();
  std::vector<std::vector<Pair>> lists(n);
  for (ArrowId g = 0; g < n; ++g) {
    for (ArrowId f = 0; f < n; ++f) {
      if (!cat.composable(g, f)) continue;
      const ArrowId h = cat.compose(g, f);
      if (h == no_arrow || h >= n) continue;
      lists[h].emplace_back(g, f);
    }
  }
  offsets_.assign(n + 1, 0);
  for (ArrowId h = 0; h < n; ++h) offsets_[h + 1] = offsets_[h] + lists[h].size();
  pairs_.reserve(offsets_[n]);
  for (auto& l : lists) pairs_.insert(pairs_.end(), l.begin(), l.end());
}

FactorizationTable build_factorizations(const FinCategory& cat) { return FactorizationTable(cat); }

// ---------------------------------------------------------------------------
// FinCategory

FinCategory::FinCategory() : factorizations_(std::make_shared<FactorizationTable>(*this)) {}

FinCategory::FinCategory(std::size_t object_count, std::vector<ObjectId> dom, std::vector<ObjectId> cod,
                         std::vector<ArrowId> identity, std::vector<ArrowId> compose,
                         std::vector<std::string> arrow_labels, std::vector<std::string> object_labels)
    : dom_(std::move(dom)),
      cod_(std::move(cod)),
      identity_(std::move(identity)),
      compose_(std::move(compose)),
      arrow_labels_(std::move(arrow_labels)),
      object_labels_(std::move(object_labels)) {
  const std::size_t n = dom_.size();
  if (cod_.size() != n) throw Error(Errc::mismatch, "dom and cod have different lengths");
  if (identity_.size() != object_count) throw Error(Errc::mismatch, "identity map must cover every object");
  if (compose_.size() != n * n) throw Error(Errc::mismatch, "composition table must be arrow_count^2");
  for (ArrowId c = 0; c < n; ++c) {
    if (dom_[c] >= object_count || cod_[c] >= object_count)
      throw Error(Errc::bad_object, "arrow " + std::to_string(c) + " has an out-of-range endpoint");
  }
  for (ArrowId id : identity_)
    if (id >= n) throw Error(Errc::bad_arrow, "identity arrow out of range");
  for (ArrowId h : compose_)
    if (h != no_arrow && h >= n) throw Error(Errc::bad_arrow, "composite out of range");

  if (arrow_labels_.empty()) {
    arrow_labels_.resize(n);
    for (ArrowId c = 0; c < n; ++c) arrow_labels_[c] = "a" + std::to_string(c);
  }
  if (object_labels_.empty()) {
    object_labels_.resize(object_count);
    for (ObjectId x = 0; x < object_count; ++x) object_labels_[x] = std::to_string(x);
  }
  if (arrow_labels_.size() != n) throw Error(Errc::mismatch, "one label per arrow required");
  if (object_labels_.size() != object_count) throw Error(Errc::mismatch, "one label per object required");

  factorizations_ = std::make_shared<FactorizationTable>(*this);
}

bool FinCategory::is_identity(ArrowId c) const {
  return std::find(identity_.begin(), identity_.end(), c) != identity_.end();
}

std::vector<ArrowId> FinCategory::hom(ObjectId x, ObjectId y) const {
  std::vector<ArrowId> out;
  for (ArrowId c = 0; c < arrow_count(); ++c)
    if (dom_[c] == x && cod_[c] == y) out.push_back(c);
  return out;
}

std::optional<ArrowId> FinCategory::find_arrow(std::string_view label) const {
  for (ArrowId c = 0; c < arrow_labels_.size(); ++c)
    if (arrow_labels_[c] == label) return c;
  return std::nullopt;
}

std::optional<ObjectId> FinCategory::find_object(std::string_view label) const {
  for (ObjectId x = 0; x < object_labels_.size(); ++x)
    if (object_labels_[x] == label) return x;
  return std::nullopt;
}

void FinCategory::check_arrow(ArrowId c) const {
  if (c >= arrow_count()) throw Error(Errc::bad_arrow, "arrow id " + std::to_string(c) + " out of range");
}

void FinCategory::check_object(ObjectId x) const {
  if (x >= object_count()) throw Error(Errc::bad_object, "object id " + std::to_string(x) + " out of range");
}

bool operator==(const FinCategory& a, const FinCategory& b) {
  return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.identity_ == b.identity_ && a.compose_ == b.compose_;
}

// ---------------------------------------------------------------------------
// Validation

std::size_t ValidationReport::count(std::string_view kind) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; }));
}

ValidationReport validate_category(const FinCategory& cat) {
  ValidationReport report;
  const std::size_t n = cat.arrow_count();
  report.degenerate = cat.object_count() == 0;
  auto& out = report.violations;

  for (ObjectId x = 0; x < cat.object_count(); ++x) {
    const ArrowId id = cat.identity(x);
    if (cat.dom(id) != x || cat.cod(id) != x)
      out.push_back({"identity_shape", {id}, "identity of object " + cat.object_label(x) + " is not an endo"});
  }

  bool table_ok = true;
  for (ArrowId g = 0; g < n; ++g) {
    for (ArrowId f = 0; f < n; ++f) {
      const ArrowId h = cat.compose(g, f);
      if (cat.composable(g, f)) {
        if (h == no_arrow) {
          out.push_back({"composability_gap", {g, f}, cat.arrow_label(g) + " o " + cat.arrow_label(f) + " undefined"});
          table_ok = false;
        } else if (cat.dom(h) != cat.dom(f) || cat.cod(h) != cat.cod(g)) {
          out.push_back({"composite_shape", {g, f, h}, "composite has wrong endpoints"});
          table_ok = false;
        }
      } else if (h != no_arrow) {
        out.push_back({"spurious_composite", {g, f, h}, "defined on a non-composable pair"});
        table_ok = false;
      }
    }
  }

  for (ArrowId c = 0; c < n; ++c) {
    const ArrowId left = cat.compose(cat.identity(cat.cod(c)), c);
    const ArrowId right = cat.compose(c, cat.identity(cat.dom(c)));
    if (left != c || right != c)
      out.push_back({"identity_law", {c}, "identity law fails at " + cat.arrow_label(c)});
  }

  if (!table_ok) return report;

  // Associativity on all composable triples h o (g o f) = (h o g) o f.
  for (ArrowId g = 0; g < n; ++g) {
    for (ArrowId f = 0; f < n; ++f) {
      if (!cat.composable(g, f)) continue;
      const ArrowId gf = cat.compose(g, f);
      for (ArrowId h = 0; h < n; ++h) {
        if (!cat.composable(h, g)) continue;
        const ArrowId lhs = cat.compose(h, gf);
        const ArrowId rhs = cat.compose(cat.compose(h, g), f);
        if (lhs != rhs)
          out.push_back({"associativity", {h, g, f},
                         "(" + cat.arrow_label(h) + ", " + cat.arrow_label(g) + ", " + cat.arrow_label(f) + ")"});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Builders

CategoryPtr discrete(std::size_t n) {
  std::vector<ObjectId> ends(n);
  std::iota(ends.begin(), ends.end(), 0);
  std::vector<ArrowId> compose(n * n, no_arrow);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    compose[i * n + i] = i;
    labels[i] = "1_" + std::to_string(i);
  }
  return std::make_shared<FinCategory>(n, ends, ends, ends, std::move(compose), std::move(labels));
}

CategoryPtr indiscrete(std::size_t n) {
  const std::size_t m = n * n;
  std::vector<ObjectId> dom(m), cod(m);
  std::vector<ArrowId> identity(n), compose(m * m, no_arrow);
  std::vector<std::string> labels(m), objects(n);
  for (std::size_t i = 0; i < n; ++i) {
    objects[i] = std::to_string(i + 1);
    identity[i] = i * n + i;
    for (std::size_t j = 0; j < n; ++j) {
      const ArrowId c = i * n + j;
      cod[c] = i;
      dom[c] = j;
      labels[c] = n < 10 ? "c" + std::to_string(i + 1) + std::to_string(j + 1)
                         : "c" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) compose[(i * n + j) * m + (j * n + k)] = i * n + k;
  return std::make_shared<FinCategory>(n, std::move(dom), std::move(cod), std::move(identity), std::move(compose),
                                       std::move(labels), std::move(objects));
}

CategoryPtr monoid_from_table(const std::vector<std::vector<std::size_t>>& table, std::size_t unit_index,
                              std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(Errc::not_a_monoid, "a monoid has at least its unit");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(Errc::not_a_monoid, "table is not square");
    for (std::size_t v : row)
      if (v >= n) throw Error(Errc::not_a_monoid, "table is not closed");
  }
  if (unit_index >= n) throw Error(Errc::not_a_monoid, "unit index out of range");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[unit_index][a] != a || table[a][unit_index] != a)
      throw Error(Errc::not_a_monoid, "unit law fails at element " + std::to_string(a));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(Errc::not_a_monoid, "associativity fails at (" + std::to_string(a) + ", " +
                                              std::to_string(b) + ", " + std::to_string(c) + ")");

  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t a = 0; a < n; ++a) labels[a] = a == unit_index ? "e" : "m" + std::to_string(a);
  }
  std::vector<ArrowId> compose(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) compose[a * n + b] = table[a][b];
  return std::make_shared<FinCategory>(1, std::vector<ObjectId>(n, 0), std::vector<ObjectId>(n, 0),
                                       std::vector<ArrowId>{unit_index}, std::move(compose), std::move(labels),
                                       std::vector<std::string>{"*"});
}

CategoryPtr poset_from_relation(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& leq,
                                std::vector<std::string> object_labels) {
  std::set<std::pair<std::size_t, std::size_t>> rel;
  for (auto [a, b] : leq) {
    if (a >= n || b >= n) throw Error(Errc::not_a_poset, "relation mentions an element outside 0..n-1");
    rel.emplace(a, b);
  }
  for (std::size_t a = 0; a < n; ++a)
    if (!rel.count({a, a})) throw Error(Errc::not_a_poset, "not reflexive at " + std::to_string(a));
  for (auto [a, b] : rel)
    if (a != b && rel.count({b, a}))
      throw Error(Errc::not_a_poset, "not antisymmetric at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  for (auto [a, b] : rel)
    for (std::size_t c = 0; c < n; ++c)
      if (rel.count({b, c}) && !rel.count({a, c}))
        throw Error(Errc::not_a_poset, "not transitive: missing (" + std::to_string(a) + ", " + std::to_string(c) + ")");

  if (object_labels.empty()) {
    object_labels.resize(n);
    for (std::size_t x = 0; x < n; ++x) object_labels[x] = std::to_string(x);
  }
  std::map<std::pair<std::size_t, std::size_t>, ArrowId> index;
  std::vector<ObjectId> dom, cod;
  std::vector<std::string> labels;
  for (auto [a, b] : rel) {
    index[{a, b}] = dom.size();
    dom.push_back(a);
    cod.push_back(b);
    labels.push_back(object_labels[a] + "->" + object_labels[b]);
  }
  const std::size_t m = dom.size();
  std::vector<ArrowId> identity(n), compose(m * m, no_arrow);
  for (std::size_t x = 0; x < n; ++x) identity[x] = index.at({x, x});
  for (ArrowId g = 0; g < m; ++g)
    for (ArrowId f = 0; f < m; ++f)
      if (dom[g] == cod[f]) compose[g * m + f] = index.at({dom[f], cod[g]});
  return std::make_shared<FinCategory>(n, std::move(dom), std::move(cod), std::move(identity), std::move(compose),
                                       std::move(labels), std::move(object_labels));
}

CategoryPtr free_on_acyclic_quiver(std::size_t vertices, const std::vector<QuiverEdge>& edges) {
  for (const auto& e : edges)
    if (e.src >= vertices || e.dst >= vertices) throw Error(Errc::bad_object, "edge endpoint out of range");

  // Kahn's algorithm: a leftover vertex means a directed cycle.
  std::vector<std::size_t> indegree(vertices, 0);
  for (const auto& e : edges) ++indegree[e.dst];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < vertices; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& e : edges)
      if (e.src == v && --indegree[e.dst] == 0) ready.push_back(e.dst);
  }
  if (seen != vertices) throw Error(Errc::cyclic_quiver, "quiver has a directed cycle; its free category is infinite");

  // Paths as edge sequences in travel order, grouped by length.
  std::vector<std::vector<std::size_t>> paths;
  std::vector<ObjectId> dom, cod;
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < vertices; ++v) {
    paths.emplace_back();
    dom.push_back(v);
    cod.push_back(v);
    labels.push_back("1_" + std::to_string(v));
  }
  std::size_t frontier_begin = 0;
  std::size_t frontier_end = paths.size();
  while (frontier_begin < frontier_end) {
    for (std::size_t p = frontier_begin; p < frontier_end; ++p) {
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].src != cod[p]) continue;
        auto path = paths[p];
        path.push_back(e);
        paths.push_back(path);
        dom.push_back(dom[p]);
        cod.push_back(edges[e].dst);
        labels.push_back(paths[p].empty() ? edges[e].label : edges[e].label + "." + labels[p]);
      }
    }
    frontier_begin = frontier_end;
    frontier_end = paths.size();
  }
  // Empty paths are told apart by their vertex.
  std::map<std::pair<ObjectId, std::vector<std::size_t>>, ArrowId> index;
  for (ArrowId c = 0; c < paths.size(); ++c) index.emplace(std::make_pair(dom[c], paths[c]), c);

  const std::size_t m = paths.size();
  std::vector<ArrowId> identity(vertices), compose(m * m, no_arrow);
  for (std::size_t v = 0; v < vertices; ++v) identity[v] = v;
  for (ArrowId g = 0; g < m; ++g) {
    for (ArrowId f = 0; f < m; ++f) {
      if (dom[g] != cod[f]) continue;
      auto path = paths[f];
      path.insert(path.end(), paths[g].begin(), paths[g].end());
      compose[g * m + f] = index.at({dom[f], path});
    }
  }
  std::vector<std::string> objects(vertices);
  for (std::size_t v = 0; v < vertices; ++v) objects[v] = std::to_string(v);
  return std::make_shared<FinCategory>(vertices, std::move(dom), std::move(cod), std::move(identity),
                                       std::move(compose), std::move(labels), std::move(objects));
}

CategoryPtr cyclic_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return monoid_from_table(table, 0, std::move(labels));
}

CategoryPtr symmetric_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = i;
    std::string label = "[";
    for (std::size_t x : perms[i]) label += std::to_string(x);
    labels.push_back(label + "]");
  }
  std::vector<std::vector<std::size_t>> table(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t g = 0; g < perms.size(); ++g) {
    for (std::size_t f = 0; f < perms.size(); ++f) {
      std::vector<std::size_t> gf(n);
      for (std::size_t x = 0; x < n; ++x) gf[x] = perms[g][perms[f][x]];
      table[g][f] = index.at(gf);
    }
  }
  return monoid_from_table(table, 0, std::move(labels));
}

CategoryPtr chain(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> leq;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) leq.emplace_back(a, b);
  return poset_from_relation(n, leq);
}

CategoryPtr divisor_poset(std::size_t n) {
  if (n == 0) throw Error(Errc::not_a_poset, "divisor poset needs n >= 1");
  std::vector<std::size_t> divisors;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  std::vector<std::pair<std::size_t, std::size_t>> leq;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    labels.push_back(std::to_string(divisors[i]));
    for (std::size_t j = 0; j < divisors.size(); ++j)
      if (divisors[j] % divisors[i] == 0) leq.emplace_back(i, j);
  }
  return poset_from_relation(divisors.size(), leq, std::move(labels));
}

CategoryPtr boolean_lattice(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::pair<std::size_t, std::size_t>> leq;
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < n; ++s) {
    std::string label = "{";
    for (std::size_t i = 0; i < k; ++i) {
      if (s & (std::size_t{1} << i)) {
        if (label.size() > 1) label += ",";
        label += std::to_string(i + 1);
      }
    }
    labels.push_back(label + "}");
    for (std::size_t t = 0; t < n; ++t)
      if ((s & t) == s) leq.emplace_back(s, t);
  }
  return poset_from_relation(n, leq, std::move(labels));
}

bool is_indiscrete(const FinCategory& cat) {
  std::vector<std::size_t> count(cat.object_count() * cat.object_count(), 0);
  for (ArrowId c = 0; c < cat.arrow_count(); ++c) ++count[cat.cod(c) * cat.object_count() + cat.dom(c)];
  return std::all_of(count.begin(), count.end(), [](std::size_t k) { return k == 1; });
}

// ---------------------------------------------------------------------------
// Daggers

ValidationReport validate_dagger(const FinCategory& cat, const Dagger& dag) {
  ValidationReport report;
  auto& out = report.violations;
  const std::size_t n = cat.arrow_count();
  if (dag.size() != n) {
    out.push_back({"size", {}, "dagger must map every arrow"});
    return report;
  }
  for (ArrowId c = 0; c < n; ++c) {
    if (dag(c) >= n) {
      out.push_back({"range", {c}, "image out of range"});
      return report;
    }
  }
  for (ArrowId c = 0; c < n; ++c) {
    const ArrowId d = dag(c);
    if (dag(d) != c) out.push_back({"involution", {c, d}, cat.arrow_label(c) + " is not fixed by dagger twice"});
    if (cat.dom(d) != cat.cod(c) || cat.cod(d) != cat.dom(c))
      out.push_back({"endpoint_swap", {c, d}, "dagger of " + cat.arrow_label(c) + " has the wrong endpoints"});
  }
  for (ObjectId x = 0; x < cat.object_count(); ++x) {
    const ArrowId id = cat.identity(x);
    if (dag(id) != id) out.push_back({"identity_on_objects", {id, dag(id)}, "identity not fixed"});
  }
  for (ArrowId g = 0; g < n; ++g) {
    for (ArrowId f = 0; f < n; ++f) {
      if (!cat.composable(g, f)) continue;
      const ArrowId gf = cat.compose(g, f);
      if (gf == no_arrow) continue;
      if (!cat.composable(dag(f), dag(g))) {
        out.push_back({"functoriality", {g, f}, "daggers not composable"});
        continue;
      }
      if (dag(gf) != cat.compose(dag(f), dag(g)))
        out.push_back({"functoriality", {g, f}, "(g o f)^dagger != f^dagger o g^dagger"});
    }
  }
  return report;
}

Dagger canonical_dagger(const FinCategory& cat, DaggerKind kind) {
  const std::size_t n = cat.arrow_count();
  std::vector<ArrowId> map(n);
  switch (kind) {
    case DaggerKind::identity:
      std::iota(map.begin(), map.end(), 0);
      break;
    case DaggerKind::inverse:
      for (ArrowId c = 0; c < n; ++c) {
        ArrowId inv = no_arrow;
        for (ArrowId d = 0; d < n && inv == no_arrow; ++d) {
          if (cat.composable(d, c) && cat.composable(c, d) && cat.compose(d, c) == cat.identity(cat.dom(c)) &&
              cat.compose(c, d) == cat.identity(cat.cod(c)))
            inv = d;
        }
        if (inv == no_arrow) throw Error(Errc::no_inverse, "arrow " + cat.arrow_label(c) + " has no inverse");
        map[c] = inv;
      }
      break;
    case DaggerKind::reverse:
      if (!is_indiscrete(cat)) throw Error(Errc::not_indiscrete, "reverse dagger needs an indiscrete category");
      for (ArrowId c = 0; c < n; ++c) map[c] = cat.hom(cat.cod(c), cat.dom(c)).front();
      break;
  }
  Dagger dag(std::move(map));
  const auto report = validate_dagger(cat, dag);
  if (!report.valid())
    throw Error(Errc::invalid_dagger, report.violations.front().kind + ": " + report.violations.front().detail);
  return dag;
}

}  // namespace catalg
