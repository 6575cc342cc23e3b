#pragma once

// Linear functionals on a finite category are exactly arrow-indexed functions
// phi_hat(c) = phi(iota^c); a state is a unital one that intertwines the
// involutions and whose Gram form
//   sum over composable (c'^dagger, c) of conj(xi(c')) phi_hat(c'^dagger o c) xi(c)
// is positive for every xi.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "catalg/algebra.hpp"
#include "catalg/matrix.hpp"

namespace catalg {

template <RigScalar S>
class LinearFunctional {
 public:
  LinearFunctional() = default;
  LinearFunctional(CategoryPtr cat, DenseVector<S> phi_hat) : cat_(std::move(cat)), phi_hat_(std::move(phi_hat)) {
    if (!cat_ || static_cast<std::size_t>(phi_hat_.size()) != cat_->arrow_count())
      throw Error(Errc::mismatch, "functional needs one value per arrow");
    for (Eigen::Index c = 0; c < phi_hat_.size(); ++c)
      if (!RigTraits<S>::is_central(phi_hat_(c)))
        throw Error(Errc::not_central, "value at " + cat_->arrow_label(static_cast<ArrowId>(c)) + " is not central");
  }

  const FinCategory& category() const { return *cat_; }
  const CategoryPtr& category_ptr() const { return cat_; }
  const DenseVector<S>& values() const { return phi_hat_; }
  const S& operator()(ArrowId c) const { return phi_hat_(static_cast<Eigen::Index>(c)); }

 private:
  CategoryPtr cat_;
  DenseVector<S> phi_hat_;
};

/// phi(a) = sum over arrows of a(c) phi_hat(c).
template <RigScalar S>
S evaluate(const LinearFunctional<S>& phi, const AlgebraElement<S>& a) {
  if (!same_category(phi.category_ptr(), a.category_ptr()))
    throw Error(Errc::mismatch, "functional and element live on different categories");
  S acc = rig_zero<S>();
  for (ArrowId c = 0; c < a.size(); ++c) acc += a(c) * phi(c);
  return acc;
}

template <RigScalar S>
using Functional = std::function<S(const AlgebraElement<S>&)>;

/// The evaluation map of an arrow function.
template <RigScalar S>
Functional<S> functional_from_function(const LinearFunctional<S>& phi) {
  return [phi](const AlgebraElement<S>& a) { return evaluate(phi, a); };
}

/// phi_hat(c) = phi(iota^c).
template <RigScalar S>
LinearFunctional<S> function_from_functional(const CategoryPtr& cat, const Functional<S>& phi) {
  DenseVector<S> values(static_cast<Eigen::Index>(cat->arrow_count()));
  for (ArrowId c = 0; c < cat->arrow_count(); ++c) values(static_cast<Eigen::Index>(c)) = phi(indeterminate<S>(cat, c));
  return LinearFunctional<S>(cat, std::move(values));
}

/// Sum of phi_hat over identity arrows equals one.
template <RigScalar S>
bool is_unital(const LinearFunctional<S>& phi, double tol = RigTraits<S>::default_tol) {
  S total = rig_zero<S>();
  for (ObjectId x = 0; x < phi.category().object_count(); ++x) total += phi(phi.category().identity(x));
  return rig_eq(total, rig_one<S>(), tol);
}

/// K(c', c) = phi_hat(c'^dagger o c) when cod(c') = cod(c), zero otherwise.
template <RigScalar S>
DenseMatrix<S> gram_matrix(const LinearFunctional<S>& phi, const Dagger& dag) {
  const auto& cat = phi.category();
  const auto n = static_cast<Eigen::Index>(cat.arrow_count());
  DenseMatrix<S> k = DenseMatrix<S>::Constant(n, n, rig_zero<S>());
  for (ArrowId cp = 0; cp < cat.arrow_count(); ++cp) {
    const ArrowId d = dag(cp);
    for (ArrowId c = 0; c < cat.arrow_count(); ++c) {
      if (!cat.composable(d, c)) continue;
      const ArrowId h = cat.compose(d, c);
      if (h != no_arrow) k(static_cast<Eigen::Index>(cp), static_cast<Eigen::Index>(c)) = phi(h);
    }
  }
  return k;
}

// ---------------------------------------------------------------------------
// State certificates

enum class StateVerdict { state, not_state };

template <RigScalar S>
struct StateCertificate {
  LinearFunctional<S> functional;
  Dagger dagger;
  DenseMatrix<S> gram;
  StateVerdict verdict = StateVerdict::state;
  std::string reason;  ///< empty for states; "not_unital", "not_hermitian" or "not_psd"
  /// Test vector xi with a non-positive Gram form (not_psd), or the
  /// indicator of the offending arrow (not_hermitian).
  std::optional<DenseVector<S>> witness;
  /// Gram form of the witness.
  std::optional<S> witness_value;
  /// Smallest Gram eigenvalue (complex path only).
  std::optional<double> min_eigenvalue;

  bool is_state() const { return verdict == StateVerdict::state; }
};

namespace detail {
template <RigScalar S>
DenseVector<S> indicator(std::size_t n, ArrowId c) {
  DenseVector<S> v = DenseVector<S>::Constant(static_cast<Eigen::Index>(n), rig_zero<S>());
  v(static_cast<Eigen::Index>(c)) = rig_one<S>();
  return v;
}
}  // namespace detail

template <RigScalar S>
inline constexpr bool has_psd_decision =
    std::is_same_v<S, Rational> || std::is_same_v<S, Complex> || std::is_same_v<S, Integer>;

/// Unitality, hermitian symmetry phi_hat(c^dagger) = conj(phi_hat(c)), and
/// positivity of the Gram matrix (exact over Q and Z, eigenvalues >= -tol
/// over C).
template <RigScalar S>
StateCertificate<S> check_state(const LinearFunctional<S>& phi, const Dagger& dag, double psd_tol = 1e-9) {
  if constexpr (!has_psd_decision<S>) {
    throw Error(Errc::unsupported_rig, "no positivity decision over " + std::string(RigTraits<S>::name));
  } else {
    const auto& cat = phi.category();
    const auto report = validate_dagger(cat, dag);
    if (!report.valid()) throw Error(Errc::invalid_dagger, report.violations.front().detail);

    const double eq_tol = std::is_same_v<S, Complex> ? psd_tol : 0.0;
    StateCertificate<S> cert{phi, dag, gram_matrix(phi, dag), StateVerdict::state, {}, {}, {}, {}};

    if (!is_unital(phi, eq_tol)) {
      cert.verdict = StateVerdict::not_state;
      cert.reason = "not_unital";
      return cert;
    }
    for (ArrowId c = 0; c < cat.arrow_count(); ++c) {
      if (!rig_eq(phi(dag(c)), conj(phi(c)), eq_tol)) {
        cert.verdict = StateVerdict::not_state;
        cert.reason = "not_hermitian";
        cert.witness = detail::indicator<S>(cat.arrow_count(), c);
        return cert;
      }
    }

    if constexpr (std::is_same_v<S, Complex>) {
      if (cat.arrow_count() == 0) return cert;
      const auto eig = hermitian_eigen(cert.gram, std::min(psd_tol, 1e-12));
      const double top = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
      cert.min_eigenvalue = eig.values(0);
      if (eig.values(0) < -psd_tol * top) {
        cert.verdict = StateVerdict::not_state;
        cert.reason = "not_psd";
        DenseVector<Complex> xi = eig.vectors.col(0);
        cert.witness_value = (xi.adjoint() * cert.gram * xi)(0, 0);
        cert.witness = std::move(xi);
      }
    } else if constexpr (std::is_same_v<S, Rational>) {
      const auto psd = psd_exact(cert.gram);
      if (!psd.psd) {
        cert.verdict = StateVerdict::not_state;
        cert.reason = "not_psd";
        cert.witness = psd.witness;
        cert.witness_value = psd.value;
      }
    } else {
      const auto psd = psd_exact(cert.gram);
      if (!psd.psd) {
        // Clear denominators so the witness lives in Z^n.
        BigInt lcm = 1;
        for (Eigen::Index i = 0; i < psd.witness.size(); ++i)
          lcm = boost::multiprecision::lcm(lcm, psd.witness(i).denominator());
        DenseVector<Integer> xi(psd.witness.size());
        for (Eigen::Index i = 0; i < psd.witness.size(); ++i)
          xi(i) = Integer(psd.witness(i).numerator() * (lcm / psd.witness(i).denominator()));
        cert.verdict = StateVerdict::not_state;
        cert.reason = "not_psd";
        cert.witness_value = (xi.transpose() * cert.gram * xi)(0, 0);
        cert.witness = std::move(xi);
      }
    }
    return cert;
  }
}

// ---------------------------------------------------------------------------
// Noncommutative probability spaces

/// A *-algebra R[C] (given by its category and dagger) with a state.
template <RigScalar S>
class NCProbabilitySpace {
 public:
  const FinCategory& category() const { return state_.category(); }
  const CategoryPtr& category_ptr() const { return state_.category_ptr(); }
  const Dagger& dagger() const { return dagger_; }
  const LinearFunctional<S>& state() const { return state_; }
  /// False when built by assume_state: positivity was not decided.
  bool positivity_checked() const { return positivity_checked_; }

  template <RigScalar T>
  friend NCProbabilitySpace<T> make_probability_space(const LinearFunctional<T>&, const Dagger&, double);
  template <RigScalar T>
  friend NCProbabilitySpace<T> assume_state(const LinearFunctional<T>&, const Dagger&, double);

 private:
  NCProbabilitySpace(LinearFunctional<S> state, Dagger dagger, bool checked)
      : state_(std::move(state)), dagger_(std::move(dagger)), positivity_checked_(checked) {}

  LinearFunctional<S> state_;
  Dagger dagger_;
  bool positivity_checked_ = true;
};

/// Runs check_state and throws NotAState on a negative verdict.
template <RigScalar T>
NCProbabilitySpace<T> make_probability_space(const LinearFunctional<T>& phi, const Dagger& dag,
                                             double psd_tol = 1e-9) {
  const auto cert = check_state(phi, dag, psd_tol);
  if (!cert.is_state()) throw Error(Errc::not_a_state, cert.reason);
  return NCProbabilitySpace<T>(phi, dag, true);
}

/// For rigs without a positivity decision: checks the dagger, unitality and
/// hermitian symmetry only.
template <RigScalar T>
NCProbabilitySpace<T> assume_state(const LinearFunctional<T>& phi, const Dagger& dag,
                                   double tol = RigTraits<T>::default_tol) {
  const auto report = validate_dagger(phi.category(), dag);
  if (!report.valid()) throw Error(Errc::invalid_dagger, report.violations.front().detail);
  if (!is_unital(phi, tol)) throw Error(Errc::not_a_state, "not_unital");
  for (ArrowId c = 0; c < phi.category().arrow_count(); ++c)
    if (!rig_eq(phi(dag(c)), conj(phi(c)), tol)) throw Error(Errc::not_a_state, "not_hermitian");
  return NCProbabilitySpace<T>(phi, dag, false);
}

/// phi(x_1 x_2 ... x_k); the empty product is the unit.
template <RigScalar S>
S expectation(const NCProbabilitySpace<S>& space, const std::vector<AlgebraElement<S>>& factors) {
  auto product = unit<S>(space.category_ptr());
  for (const auto& x : factors) {
    if (!same_category(x.category_ptr(), space.category_ptr()))
      throw Error(Errc::mismatch, "random variable from another algebra");
    product = convolve(product, x);
  }
  return evaluate(space.state(), product);
}

}  // namespace catalg
