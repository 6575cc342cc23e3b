#pragma once

// The category algebra R[C] of a finite category C over a rig R: R-valued
// functions on arrows with pointwise addition and the convolution product
//   (a' a)(c'') = sum over c'' = c' o c of a'(c') a(c).

#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "catalg/error.hpp"
#include "catalg/fincat.hpp"
#include "catalg/rig.hpp"

namespace catalg {

template <class S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <RigScalar S>
class AlgebraElement {
 public:
  using Scalar = S;
  using Coefficients = DenseVector<S>;

  AlgebraElement() = default;
  AlgebraElement(CategoryPtr cat, Coefficients coeffs) : cat_(std::move(cat)), coeffs_(std::move(coeffs)) {
    if (!cat_) throw Error(Errc::mismatch, "algebra element needs a category");
    if (static_cast<std::size_t>(coeffs_.size()) != cat_->arrow_count())
      throw Error(Errc::mismatch, "coefficient vector length must equal the arrow count");
  }

  static AlgebraElement zero(CategoryPtr cat) {
    const auto n = static_cast<Eigen::Index>(cat->arrow_count());
    return AlgebraElement(std::move(cat), Coefficients::Constant(n, rig_zero<S>()));
  }

  const FinCategory& category() const { return *cat_; }
  const CategoryPtr& category_ptr() const { return cat_; }
  const Coefficients& coeffs() const { return coeffs_; }
  Coefficients& coeffs() { return coeffs_; }
  std::size_t size() const { return static_cast<std::size_t>(coeffs_.size()); }

  const S& operator()(ArrowId c) const { return coeffs_(static_cast<Eigen::Index>(c)); }
  S& operator()(ArrowId c) { return coeffs_(static_cast<Eigen::Index>(c)); }

 private:
  CategoryPtr cat_;
  Coefficients coeffs_;
};

inline bool same_category(const CategoryPtr& a, const CategoryPtr& b) {
  return a == b || (a && b && *a == *b);
}

template <RigScalar S>
void require_same_algebra(const AlgebraElement<S>& a, const AlgebraElement<S>& b) {
  if (!same_category(a.category_ptr(), b.category_ptr()))
    throw Error(Errc::mismatch, "elements live in different category algebras");
}

/// Componentwise equality under the rig's eq.
template <RigScalar S>
bool equal(const AlgebraElement<S>& a, const AlgebraElement<S>& b, double tol = RigTraits<S>::default_tol) {
  if (!same_category(a.category_ptr(), b.category_ptr())) return false;
  for (ArrowId c = 0; c < a.size(); ++c)
    if (!rig_eq(a(c), b(c), tol)) return false;
  return true;
}

template <RigScalar S>
bool operator==(const AlgebraElement<S>& a, const AlgebraElement<S>& b) {
  return equal(a, b);
}

/// Largest per-arrow RigTraits::distance; 0 means equal.
template <RigScalar S>
double max_distance(const AlgebraElement<S>& a, const AlgebraElement<S>& b) {
  require_same_algebra(a, b);
  double worst = 0.0;
  for (ArrowId c = 0; c < a.size(); ++c) worst = std::max(worst, RigTraits<S>::distance(a(c), b(c)));
  return worst;
}

// ---------------------------------------------------------------------------
// Distinguished elements

template <RigScalar S>
AlgebraElement<S> zero_element(CategoryPtr cat) {
  return AlgebraElement<S>::zero(std::move(cat));
}

/// epsilon: one on identity arrows, zero elsewhere.
template <RigScalar S>
AlgebraElement<S> unit(CategoryPtr cat) {
  auto e = AlgebraElement<S>::zero(cat);
  for (ObjectId x = 0; x < cat->object_count(); ++x) e(cat->identity(x)) = rig_one<S>();
  return e;
}

/// iota^c: the indicator function of arrow c.
template <RigScalar S>
AlgebraElement<S> indeterminate(CategoryPtr cat, ArrowId c) {
  cat->check_arrow(c);
  auto e = AlgebraElement<S>::zero(cat);
  e(c) = rig_one<S>();
  return e;
}

template <RigScalar S>
AlgebraElement<S> random_element(CategoryPtr cat, Rng& rng) {
  auto e = AlgebraElement<S>::zero(cat);
  for (ArrowId c = 0; c < e.size(); ++c) e(c) = RigTraits<S>::sample(rng);
  return e;
}

// ---------------------------------------------------------------------------
// Bimodule structure

template <RigScalar S>
AlgebraElement<S> add(const AlgebraElement<S>& a, const AlgebraElement<S>& b) {
  require_same_algebra(a, b);
  return {a.category_ptr(), a.coeffs() + b.coeffs()};
}

template <RigScalar S>
AlgebraElement<S> scalar_left(const S& r, const AlgebraElement<S>& a) {
  return {a.category_ptr(), a.coeffs().unaryExpr([&r](const S& x) { return S(r * x); })};
}

template <RigScalar S>
AlgebraElement<S> scalar_right(const AlgebraElement<S>& a, const S& r) {
  return {a.category_ptr(), a.coeffs().unaryExpr([&r](const S& x) { return S(x * r); })};
}

// ---------------------------------------------------------------------------
// Convolution

template <RigScalar S>
AlgebraElement<S> convolve(const AlgebraElement<S>& a, const AlgebraElement<S>& b, const FactorizationTable& table) {
  require_same_algebra(a, b);
  if (table.arrow_count() != a.size()) throw Error(Errc::mismatch, "factorization table built for another category");
  auto out = AlgebraElement<S>::zero(a.category_ptr());
  for (ArrowId h = 0; h < out.size(); ++h) {
    S acc = rig_zero<S>();
    for (const auto& [g, f] : table.factorizations(h)) acc += a(g) * b(f);
    out(h) = std::move(acc);
  }
  return out;
}

template <RigScalar S>
AlgebraElement<S> convolve(const AlgebraElement<S>& a, const AlgebraElement<S>& b) {
  return convolve(a, b, a.category().factorizations());
}

template <RigScalar S>
AlgebraElement<S> operator+(const AlgebraElement<S>& a, const AlgebraElement<S>& b) {
  return add(a, b);
}

template <RigScalar S>
AlgebraElement<S> operator*(const AlgebraElement<S>& a, const AlgebraElement<S>& b) {
  return convolve(a, b);
}

template <RigScalar S>
AlgebraElement<S> operator*(const S& r, const AlgebraElement<S>& a) {
  return scalar_left(r, a);
}

template <RigScalar S>
AlgebraElement<S> operator*(const AlgebraElement<S>& a, const S& r) {
  return scalar_right(a, r);
}

/// a^k under convolution; a^0 is the unit.
template <RigScalar S>
AlgebraElement<S> power(const AlgebraElement<S>& a, std::size_t k) {
  auto out = unit<S>(a.category_ptr());
  for (std::size_t i = 0; i < k; ++i) out = convolve(out, a);
  return out;
}

/// Matrix of x |-> a x in the arrow basis: L[h][f] = sum of a(g) over g o f = h.
template <RigScalar S>
DenseMatrix<S> left_multiplication_matrix(const AlgebraElement<S>& a) {
  const auto& cat = a.category();
  const auto n = static_cast<Eigen::Index>(a.size());
  DenseMatrix<S> m = DenseMatrix<S>::Constant(n, n, rig_zero<S>());
  for (ArrowId h = 0; h < a.size(); ++h)
    for (const auto& [g, f] : cat.factorizations().factorizations(h))
      m(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(f)) += a(g);
  return m;
}

// ---------------------------------------------------------------------------
// Columns, rows, entries

namespace detail {
template <RigScalar S, class Keep>
AlgebraElement<S> restrict_to(const AlgebraElement<S>& a, Keep keep) {
  auto out = AlgebraElement<S>::zero(a.category_ptr());
  for (ArrowId c = 0; c < a.size(); ++c)
    if (keep(c)) out(c) = a(c);
  return out;
}
}  // namespace detail

/// Restriction of a to arrows with domain x.
template <RigScalar S>
AlgebraElement<S> column(const AlgebraElement<S>& a, ObjectId x) {
  a.category().check_object(x);
  return detail::restrict_to(a, [&](ArrowId c) { return a.category().dom(c) == x; });
}

/// Restriction of a to arrows with codomain y.
template <RigScalar S>
AlgebraElement<S> row(const AlgebraElement<S>& a, ObjectId y) {
  a.category().check_object(y);
  return detail::restrict_to(a, [&](ArrowId c) { return a.category().cod(c) == y; });
}

/// Restriction of a to arrows x -> y (the (y, x)-entry).
template <RigScalar S>
AlgebraElement<S> entry(const AlgebraElement<S>& a, ObjectId y, ObjectId x) {
  a.category().check_object(x);
  a.category().check_object(y);
  return detail::restrict_to(a, [&](ArrowId c) { return a.category().cod(c) == y && a.category().dom(c) == x; });
}

// ---------------------------------------------------------------------------
// Polynomial expression

template <class S>
using PolynomialTerm = std::pair<S, ArrowId>;

/// sum of r * iota^c over the terms.
template <RigScalar S>
AlgebraElement<S> from_polynomial(CategoryPtr cat, const std::vector<PolynomialTerm<S>>& terms) {
  auto out = AlgebraElement<S>::zero(cat);
  for (const auto& [r, c] : terms) {
    cat->check_arrow(c);
    out = add(out, scalar_left(r, indeterminate<S>(cat, c)));
  }
  return out;
}

/// One term per arrow, in arrow order.
template <RigScalar S>
std::vector<PolynomialTerm<S>> to_polynomial(const AlgebraElement<S>& a) {
  std::vector<PolynomialTerm<S>> terms;
  terms.reserve(a.size());
  for (ArrowId c = 0; c < a.size(); ++c) terms.emplace_back(a(c), c);
  return terms;
}

// ---------------------------------------------------------------------------
// Involution

/// a*(c) = conj(a(c^dagger)).
template <RigScalar S>
AlgebraElement<S> star(const AlgebraElement<S>& a, const Dagger& dag) {
  const auto& cat = a.category();
  if (dag.size() != a.size()) throw Error(Errc::invalid_dagger, "dagger does not match the category");
  for (ArrowId c = 0; c < a.size(); ++c) {
    const ArrowId d = dag(c);
    if (d >= a.size() || dag(d) != c || cat.dom(d) != cat.cod(c) || cat.cod(d) != cat.dom(c))
      throw Error(Errc::invalid_dagger, "dagger is not an endpoint-swapping involution at " + cat.arrow_label(c));
  }
  auto out = AlgebraElement<S>::zero(a.category_ptr());
  for (ArrowId c = 0; c < a.size(); ++c) out(c) = conj(a(dag(c)));
  return out;
}

// ---------------------------------------------------------------------------
// Indiscrete categories and matrices

namespace detail {
/// arrows[i][j] is the unique arrow j -> i.
inline std::vector<std::vector<ArrowId>> indiscrete_index(const FinCategory& cat) {
  if (!is_indiscrete(cat)) throw Error(Errc::not_indiscrete, "matrix view needs an indiscrete category");
  const std::size_t n = cat.object_count();
  std::vector<std::vector<ArrowId>> idx(n, std::vector<ArrowId>(n));
  for (ArrowId c = 0; c < cat.arrow_count(); ++c) idx[cat.cod(c)][cat.dom(c)] = c;
  return idx;
}
}  // namespace detail

/// M(i, j) = a(c_ij) where c_ij : j -> i.
template <RigScalar S>
DenseMatrix<S> to_matrix(const AlgebraElement<S>& a) {
  const auto idx = detail::indiscrete_index(a.category());
  const auto n = static_cast<Eigen::Index>(idx.size());
  DenseMatrix<S> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(idx[i][j]);
  return m;
}

template <RigScalar S>
AlgebraElement<S> from_matrix(CategoryPtr cat, const DenseMatrix<S>& m) {
  const auto idx = detail::indiscrete_index(*cat);
  const auto n = static_cast<Eigen::Index>(idx.size());
  if (m.rows() != n || m.cols() != n) throw Error(Errc::shape_mismatch, "matrix size must equal the object count");
  auto out = AlgebraElement<S>::zero(cat);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(idx[i][j]) = m(i, j);
  return out;
}

}  // namespace catalg
