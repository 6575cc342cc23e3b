#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "catalg/algebra.hpp"
#include "catalg/error.hpp"
#include "catalg/rig.hpp"

namespace catalg {

template <class A, class B>
void require_product_shapes(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.cols() != b.rows()) throw Error(Errc::shape_mismatch, "inner dimensions differ");
}

/// Matrix product with rig addition and multiplication.
template <RigScalar S>
DenseMatrix<S> mat_mul(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
  require_product_shapes(a, b);
  return a * b;
}

/// Transpose with the rig involution applied entrywise.
template <RigScalar S>
DenseMatrix<S> conj_transpose(const DenseMatrix<S>& a) {
  return a.transpose().unaryExpr([](const S& x) { return conj(x); });
}

template <RigScalar S>
bool is_hermitian(const DenseMatrix<S>& a, double tol = RigTraits<S>::default_tol) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i; j < a.cols(); ++j)
      if (!rig_eq(a(i, j), conj(a(j, i)), tol)) return false;
  return true;
}

template <RigScalar S>
Eigen::MatrixXcd to_complex(const DenseMatrix<S>& a) {
  Eigen::MatrixXcd out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if constexpr (std::is_same_v<S, Complex>)
        out(i, j) = a(i, j);
      else if constexpr (std::is_same_v<S, Rational>)
        out(i, j) = a(i, j).to_double();
      else if constexpr (std::is_same_v<S, Integer>)
        out(i, j) = a(i, j).value().template convert_to<double>();
      else
        throw Error(Errc::unsupported_rig, "no embedding into the complex numbers");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact positive semidefiniteness

struct PsdResult {
  bool psd = true;
  /// For not-psd results: x with x^T A x = value < 0.
  DenseVector<Rational> witness;
  Rational value{0};
};

/// Exact PSD decision for a symmetric rational matrix by symmetric
/// elimination. A negative pivot is a witness; a zero pivot with a nonzero
/// row yields a witness along two coordinates; a positive pivot is
/// eliminated and the search continues in the Schur complement.
PsdResult psd_exact(const DenseMatrix<Rational>& a);

DenseMatrix<Rational> to_rational(const DenseMatrix<Integer>& a);

template <RigScalar S>
PsdResult psd_exact(const DenseMatrix<S>& a) {
  if constexpr (std::is_same_v<S, Integer>) {
    return psd_exact(to_rational(a));
  } else {
    throw Error(Errc::unsupported_rig, std::string("exact PSD test is not available over ") +
                                           std::string(RigTraits<S>::name));
  }
}

/// x^T A x over the rationals.
Rational quadratic_form(const DenseMatrix<Rational>& a, const DenseVector<Rational>& x);

// ---------------------------------------------------------------------------
// Hermitian eigenproblems

struct HermitianEigen {
  Eigen::VectorXd values;    ///< ascending
  Eigen::MatrixXcd vectors;  ///< orthonormal columns, matching values
  int sweeps = 0;
};

inline constexpr int jacobi_sweep_cap = 100;

/// Cyclic Jacobi: rotate every off-diagonal pair per sweep until all
/// off-diagonal magnitudes are below tol * max(1, max |A|).
HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& a, double tol = 1e-9);

struct NullSpace {
  Eigen::MatrixXcd kernel;             ///< orthonormal basis of the numerical kernel
  Eigen::MatrixXcd complement;         ///< orthonormal eigenvectors spanning the rest
  Eigen::VectorXd complement_values;   ///< eigenvalues belonging to `complement`
  Eigen::VectorXd spectrum;            ///< all eigenvalues, ascending
};

/// Kernel = eigenvectors whose eigenvalue is <= tol * (largest eigenvalue).
NullSpace null_space(const Eigen::MatrixXcd& a, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Linear systems

namespace detail {
inline double pivot_weight(const Rational& x) { return x.is_zero() ? 0.0 : 1.0; }
inline double pivot_weight(const Complex& x) { return std::abs(x); }
}  // namespace detail

/// Solves A x = b by Gaussian elimination with pivoting; nullopt if A is
/// singular (exactly over Q, relative to 1e-12 over C).
template <RigScalar S>
std::optional<DenseVector<S>> solve_linear(DenseMatrix<S> a, DenseVector<S> b) {
  if constexpr (!(std::is_same_v<S, Rational> || std::is_same_v<S, Complex>)) {
    throw Error(Errc::unsupported_rig, "linear solves need a field");
  } else {
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.size() != n) throw Error(Errc::shape_mismatch, "system must be square");
    double scale = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) scale = std::max(scale, detail::pivot_weight(a(i, j)));
    const double singular_below = std::is_same_v<S, Complex> ? 1e-12 * std::max(scale, 1.0) : 0.5;

    for (Eigen::Index k = 0; k < n; ++k) {
      Eigen::Index pivot = k;
      double best = detail::pivot_weight(a(k, k));
      for (Eigen::Index i = k + 1; i < n; ++i) {
        const double w = detail::pivot_weight(a(i, k));
        if (w > best) {
          best = w;
          pivot = i;
        }
      }
      if (best < singular_below) return std::nullopt;
      if (pivot != k) {
        a.row(k).swap(a.row(pivot));
        std::swap(b(k), b(pivot));
      }
      const S inv = S(1) / a(k, k);
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (detail::pivot_weight(a(i, k)) == 0.0) continue;
        const S factor = a(i, k) * inv;
        a.row(i).tail(n - k) -= factor * a.row(k).tail(n - k);
        b(i) -= factor * b(k);
      }
    }
    DenseVector<S> x(n);
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      S acc = b(i);
      for (Eigen::Index j = i + 1; j < n; ++j) acc -= a(i, j) * x(j);
      x(i) = acc / a(i, i);
    }
    return x;
  }
}

/// Basis (as columns) of {x : A x = 0} over the rationals, from the reduced
/// row echelon form.
DenseMatrix<Rational> exact_null_space(const DenseMatrix<Rational>& a);

}  // namespace catalg
