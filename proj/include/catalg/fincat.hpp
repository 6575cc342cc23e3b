#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace catalg {

using ArrowId = std::size_t;
using ObjectId = std::size_t;

/// Marks a non-composable pair in the composition table.
inline constexpr ArrowId no_arrow = std::numeric_limits<ArrowId>::max();

class FinCategory;

/// For every arrow c'', the ordered pairs (c', c) with c'' = c' o c.
class FactorizationTable {
 public:
  using Pair = std::pair<ArrowId, ArrowId>;

  FactorizationTable() = default;
  explicit FactorizationTable(const FinCategory& cat);

  std::size_t arrow_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::span<const Pair> factorizations(ArrowId c) const {
    return {pairs_.data() + offsets_[c], pairs_.data() + offsets_[c + 1]};
  }
  /// Number of composable pairs in the category.
  std::size_t pair_count() const { return pairs_.size(); }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Pair> pairs_;
};

/// A finite category with an explicit dense composition table.
///
/// Arrows are 0..arrow_count-1. compose(g, f) is g o f (f first), stored at
/// [g * arrow_count + f], and should be defined exactly when dom(g) = cod(f).
/// The constructor only checks shapes and index ranges; the category axioms
/// are checked by validate_category so that broken tables can be diagnosed.
class FinCategory {
 public:
  FinCategory();
  FinCategory(std::size_t object_count, std::vector<ObjectId> dom, std::vector<ObjectId> cod,
              std::vector<ArrowId> identity, std::vector<ArrowId> compose,
              std::vector<std::string> arrow_labels = {}, std::vector<std::string> object_labels = {});

  std::size_t object_count() const { return identity_.size(); }
  std::size_t arrow_count() const { return dom_.size(); }

  ObjectId dom(ArrowId c) const { return dom_.at(c); }
  ObjectId cod(ArrowId c) const { return cod_.at(c); }
  ArrowId identity(ObjectId x) const { return identity_.at(x); }
  bool is_identity(ArrowId c) const;

  bool composable(ArrowId g, ArrowId f) const { return dom_[g] == cod_[f]; }
  /// g o f, or no_arrow when the table has no entry.
  ArrowId compose(ArrowId g, ArrowId f) const { return compose_[g * arrow_count() + f]; }

  /// Arrows x -> y.
  std::vector<ArrowId> hom(ObjectId x, ObjectId y) const;

  const std::string& arrow_label(ArrowId c) const { return arrow_labels_.at(c); }
  const std::string& object_label(ObjectId x) const { return object_labels_.at(x); }
  std::optional<ArrowId> find_arrow(std::string_view label) const;
  std::optional<ObjectId> find_object(std::string_view label) const;

  const FactorizationTable& factorizations() const { return *factorizations_; }

  void check_arrow(ArrowId c) const;
  void check_object(ObjectId x) const;

  /// Structural equality: same objects, arrows, dom/cod, identities and table.
  friend bool operator==(const FinCategory& a, const FinCategory& b);

 private:
  std::vector<ObjectId> dom_;
  std::vector<ObjectId> cod_;
  std::vector<ArrowId> identity_;
  std::vector<ArrowId> compose_;
  std::vector<std::string> arrow_labels_;
  std::vector<std::string> object_labels_;
  std::shared_ptr<const FactorizationTable> factorizations_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

FactorizationTable build_factorizations(const FinCategory& cat);

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string kind;  ///< identity_shape, identity_law, composability_gap, ...
  std::vector<ArrowId> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// Set for the empty category; informational only.
  bool degenerate = false;

  bool valid() const { return violations.empty(); }
  std::size_t count(std::string_view kind) const;
};

ValidationReport validate_category(const FinCategory& cat);

// ---------------------------------------------------------------------------
// Builders

CategoryPtr discrete(std::size_t n);
/// n objects and one arrow c(i,j): j -> i per pair, stored at id i*n + j.
CategoryPtr indiscrete(std::size_t n);
/// One-object category whose composition is table[g][f] = g o f.
CategoryPtr monoid_from_table(const std::vector<std::vector<std::size_t>>& table, std::size_t unit_index,
                              std::vector<std::string> labels = {});
/// One arrow a -> b for every pair (a, b) of the relation; the relation must
/// already be reflexive, antisymmetric and transitive.
CategoryPtr poset_from_relation(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& leq,
                                std::vector<std::string> object_labels = {});

struct QuiverEdge {
  std::size_t src;
  std::size_t dst;
  std::string label;
};
/// Free category of an acyclic quiver: all directed paths, including the
/// empty path at each vertex.
CategoryPtr free_on_acyclic_quiver(std::size_t vertices, const std::vector<QuiverEdge>& edges);

CategoryPtr cyclic_group(std::size_t n);
/// Permutations of {0..n-1} in lexicographic order; arrow 0 is the identity.
CategoryPtr symmetric_group(std::size_t n);
CategoryPtr chain(std::size_t n);
/// Divisors of n ordered by divisibility, ascending.
CategoryPtr divisor_poset(std::size_t n);
/// Subsets of {1..k} ordered by inclusion; object i is the bitmask i.
CategoryPtr boolean_lattice(std::size_t k);

bool is_indiscrete(const FinCategory& cat);

// ---------------------------------------------------------------------------
// Daggers

/// An arrow map intended to be a contravariant involution fixing objects.
/// Construction does not validate; use validate_dagger or canonical_dagger.
class Dagger {
 public:
  Dagger() = default;
  explicit Dagger(std::vector<ArrowId> map) : map_(std::move(map)) {}

  ArrowId operator()(ArrowId c) const { return map_.at(c); }
  std::size_t size() const { return map_.size(); }
  const std::vector<ArrowId>& map() const { return map_; }

  friend bool operator==(const Dagger&, const Dagger&) = default;

 private:
  std::vector<ArrowId> map_;
};

enum class DaggerKind { identity, inverse, reverse };

ValidationReport validate_dagger(const FinCategory& cat, const Dagger& dag);
Dagger canonical_dagger(const FinCategory& cat, DaggerKind kind);

}  // namespace catalg
