#include "catalg/matrix.hpp"

#include <algorithm>
#include <numeric>

#include <Eigen/Jacobi>

namespace catalg {

Rational quadratic_form(const DenseMatrix<Rational>& a, const DenseVector<Rational>& x) {
  return (x.transpose() * a * x)(0, 0);
}

DenseMatrix<Rational> to_rational(const DenseMatrix<Integer>& a) {
  return a.unaryExpr([](const Integer& v) { return Rational(BigRational(v.value())); });
}

PsdResult psd_exact(const DenseMatrix<Rational>& a) {
  if (a.rows() != a.cols()) throw Error(Errc::not_symmetric, "matrix is not square");
  if (a != a.transpose()) throw Error(Errc::not_symmetric, "matrix is not symmetric");

  const Eigen::Index n = a.rows();
  // x^T A x = y^T s y whenever x = t y; s shrinks by one index per step.
  DenseMatrix<Rational> s = a;
  DenseMatrix<Rational> t = DenseMatrix<Rational>::Identity(n, n);

  auto fail = [&](DenseVector<Rational> x) {
    PsdResult r;
    r.psd = false;
    r.value = quadratic_form(a, x);
    r.witness = std::move(x);
    return r;
  };

  while (s.rows() > 0) {
    const Eigen::Index m = s.rows();
    const Rational p = s(0, 0);
    if (p < Rational(0)) return fail(t.col(0));
    if (p.is_zero()) {
      Eigen::Index j = 1;
      while (j < m && s(0, j).is_zero()) ++j;
      if (j < m) {
        // y = u e_0 + e_j gives 2 u s_0j + s_jj; pick u to make it -1.
        const Rational u = -(s(j, j) + Rational(1)) / (Rational(2) * s(0, j));
        DenseVector<Rational> x = t.col(0) * u + t.col(j);
        return fail(std::move(x));
      }
      s = DenseMatrix<Rational>(s.bottomRightCorner(m - 1, m - 1));
      t = DenseMatrix<Rational>(t.rightCols(m - 1));
      continue;
    }
    const DenseVector<Rational> r = s.row(0).tail(m - 1).transpose() / p;
    DenseMatrix<Rational> next_s = s.bottomRightCorner(m - 1, m - 1) - r * s.row(0).tail(m - 1);
    DenseMatrix<Rational> next_t = t.rightCols(m - 1) - t.col(0) * r.transpose();
    s = std::move(next_s);
    t = std::move(next_t);
  }
  return PsdResult{};
}

HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& a, double tol) {
  if (a.rows() != a.cols()) throw Error(Errc::not_hermitian, "matrix is not square");
  const Eigen::Index n = a.rows();
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if (n > 0 && (a - a.adjoint()).cwiseAbs().maxCoeff() > tol * scale)
    throw Error(Errc::not_hermitian, "matrix is not Hermitian within tolerance");

  Eigen::MatrixXcd m = (a + a.adjoint()) * 0.5;
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
  const double threshold = tol * scale;

  auto off_diagonal = [&] {
    double worst = 0.0;
    for (Eigen::Index q = 1; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) worst = std::max(worst, std::abs(m(p, q)));
    return worst;
  };

  HermitianEigen out;
  bool converged = off_diagonal() < threshold;
  while (!converged) {
    if (out.sweeps == jacobi_sweep_cap)
      throw Error(Errc::no_convergence, "Jacobi did not converge in " + std::to_string(jacobi_sweep_cap) + " sweeps");
    ++out.sweeps;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (m(p, q) == Complex(0.0, 0.0)) continue;
        Eigen::JacobiRotation<Complex> rot;
        rot.makeJacobi(m, p, q);
        m.applyOnTheLeft(p, q, rot.adjoint());
        m.applyOnTheRight(p, q, rot);
        v.applyOnTheRight(p, q, rot);
        m(p, q) = m(q, p) = Complex(0.0, 0.0);
      }
    }
    converged = off_diagonal() < threshold;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return m(i, i).real() < m(j, j).real(); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = m(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

NullSpace null_space(const Eigen::MatrixXcd& a, double tol) {
  const auto eig = hermitian_eigen(a, std::min(tol, 1e-12));
  const Eigen::Index n = eig.values.size();
  const double top = n > 0 ? std::max(eig.values.maxCoeff(), 0.0) : 0.0;
  const double cutoff = tol * top;

  std::vector<Eigen::Index> kernel, rest;
  for (Eigen::Index k = 0; k < n; ++k) (eig.values(k) <= cutoff ? kernel : rest).push_back(k);

  NullSpace out;
  out.spectrum = eig.values;
  out.kernel.resize(n, static_cast<Eigen::Index>(kernel.size()));
  out.complement.resize(n, static_cast<Eigen::Index>(rest.size()));
  out.complement_values.resize(static_cast<Eigen::Index>(rest.size()));
  for (std::size_t i = 0; i < kernel.size(); ++i) out.kernel.col(static_cast<Eigen::Index>(i)) = eig.vectors.col(kernel[i]);
  for (std::size_t i = 0; i < rest.size(); ++i) {
    out.complement.col(static_cast<Eigen::Index>(i)) = eig.vectors.col(rest[i]);
    out.complement_values(static_cast<Eigen::Index>(i)) = eig.values(rest[i]);
  }
  return out;
}

DenseMatrix<Rational> exact_null_space(const DenseMatrix<Rational>& input) {
  DenseMatrix<Rational> a = input;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    a.row(r).swap(a.row(p));
    const Rational inv = Rational(1) / a(r, c);
    a.row(r) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational factor = a(i, c);
      a.row(i) -= factor * a.row(r);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (std::find(pivot_cols.begin(), pivot_cols.end(), c) == pivot_cols.end()) free_cols.push_back(c);

  DenseMatrix<Rational> basis = DenseMatrix<Rational>::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const auto col = static_cast<Eigen::Index>(k);
    basis(free_cols[k], col) = Rational(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      basis(pivot_cols[i], col) = -a(static_cast<Eigen::Index>(i), free_cols[k]);
  }
  return basis;
}

}  // namespace catalg
