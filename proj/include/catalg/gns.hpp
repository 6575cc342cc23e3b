#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "catalg/algebra.hpp"
#include "catalg/matrix.hpp"
#include "catalg/states.hpp"

namespace catalg {

struct VerificationCheck {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double max_residual = 0.0;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.failures == 0; });
  }
  const VerificationCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  /// Index of a new check; indices stay valid as checks are added.
  std::size_t add(const std::string& name) {
    checks.push_back(VerificationCheck{name});
    return checks.size() - 1;
  }
};

inline void record(VerificationReport& report, std::size_t index, double residual, bool ok) {
  auto& check = report.checks[index];
  ++check.trials;
  if (!ok) ++check.failures;
  if (!std::isnan(residual)) check.max_residual = std::max(check.max_residual, residual);
}

/// The module A with <a'|a> = phi(a'^* a), cyclic vector the unit, and the
/// left-regular representation, all in the arrow basis.
template <RigScalar S>
struct SemiHilbertGNS {
  NCProbabilitySpace<S> space;
  DenseMatrix<S> gram;
  DenseVector<S> cyclic;
  std::vector<DenseMatrix<S>> rep;  ///< rep[c]: left multiplication by iota^c

  const FinCategory& category() const { return space.category(); }
};

template <RigScalar S>
SemiHilbertGNS<S> build_semi_hilbert(const NCProbabilitySpace<S>& space) {
  const auto& cat = space.category_ptr();
  SemiHilbertGNS<S> g{space, gram_matrix(space.state(), space.dagger()), unit<S>(cat).coeffs(), {}};
  g.rep.reserve(cat->arrow_count());
  for (ArrowId c = 0; c < cat->arrow_count(); ++c)
    g.rep.push_back(left_multiplication_matrix(indeterminate<S>(cat, c)));
  return g;
}

/// v^dagger gram w, the involution applied to the left argument.
template <RigScalar S>
S pairing(const SemiHilbertGNS<S>& g, const DenseVector<S>& v, const DenseVector<S>& w) {
  if (v.size() != g.gram.rows() || w.size() != g.gram.rows())
    throw Error(Errc::mismatch, "pairing needs one coefficient per arrow");
  const DenseVector<S> gw = g.gram * w;
  S acc = rig_zero<S>();
  for (Eigen::Index i = 0; i < v.size(); ++i) acc += conj(v(i)) * gw(i);
  return acc;
}

/// sum_c a(c) rep[c].
template <RigScalar S>
DenseMatrix<S> represent(const SemiHilbertGNS<S>& g, const AlgebraElement<S>& a) {
  if (!same_category(a.category_ptr(), g.space.category_ptr()))
    throw Error(Errc::mismatch, "element from another algebra");
  const auto n = static_cast<Eigen::Index>(a.size());
  DenseMatrix<S> out = DenseMatrix<S>::Constant(n, n, rig_zero<S>());
  for (ArrowId c = 0; c < a.size(); ++c) {
    if (rig_eq(a(c), rig_zero<S>(), 0.0)) continue;
    out += a(c) * g.rep[c];
  }
  return out;
}

namespace detail {
template <RigScalar S>
double matrix_distance(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) worst = std::max(worst, RigTraits<S>::distance(a(i, j), b(i, j)));
  return worst;
}

template <RigScalar S>
bool matrix_eq(const DenseMatrix<S>& a, const DenseMatrix<S>& b, double tol) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!rig_eq(a(i, j), b(i, j), tol)) return false;
  return true;
}
}  // namespace detail

/// Randomized checks of the GNS identities on the ambient data: exact for
/// exact rigs, within tol otherwise.
template <RigScalar S>
VerificationReport verify_gns(const SemiHilbertGNS<S>& g, std::size_t trials, double tol, Rng& rng) {
  const double eps = RigTraits<S>::is_exact ? 0.0 : tol;
  const auto& cat = g.space.category_ptr();
  const auto& phi = g.space.state();
  const auto& dag = g.space.dagger();
  const auto n = static_cast<Eigen::Index>(cat->arrow_count());

  VerificationReport report;
  {
    const auto check = report.add("cyclic_norm");
    const S norm = pairing(g, g.cyclic, g.cyclic);
    record(report, check, RigTraits<S>::distance(norm, rig_one<S>()), rig_eq(norm, rig_one<S>(), eps));
  }
  {
    const auto check = report.add("unit");
    const DenseMatrix<S> id = DenseMatrix<S>::Identity(n, n);
    const auto r = represent(g, unit<S>(cat));
    record(report, check, detail::matrix_distance(r, id), detail::matrix_eq(r, id, eps));
  }
  const auto reconstruction = report.add("reconstruction");
  const auto adjoint = report.add("adjoint");
  const auto homomorphism = report.add("homomorphism");
  const auto hermitian = report.add("hermitian");
  const auto positivity = report.add("positivity");

  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = random_element<S>(cat, rng);
    const auto b = random_element<S>(cat, rng);
    const DenseVector<S> v = random_element<S>(cat, rng).coeffs();
    const DenseVector<S> w = random_element<S>(cat, rng).coeffs();
    const auto ra = represent(g, a);

    const S lhs = evaluate(phi, a);
    const S rhs = pairing(g, g.cyclic, DenseVector<S>(ra * g.cyclic));
    record(report, reconstruction, RigTraits<S>::distance(lhs, rhs), rig_eq(lhs, rhs, eps));

    const S left = pairing(g, w, DenseVector<S>(ra * v));
    const S right = pairing(g, DenseVector<S>(represent(g, star(a, dag)) * w), v);
    record(report, adjoint, RigTraits<S>::distance(left, right), rig_eq(left, right, eps));

    const auto rab = represent(g, convolve(a, b));
    const DenseMatrix<S> prod = ra * represent(g, b);
    record(report, homomorphism, detail::matrix_distance(rab, prod), detail::matrix_eq(rab, prod, eps));

    const S vw = pairing(g, v, w);
    const S wv = conj(pairing(g, w, v));
    record(report, hermitian, RigTraits<S>::distance(vw, wv), rig_eq(vw, wv, eps));

    const S vv = pairing(g, v, v);
    record(report, positivity, 0.0, RigTraits<S>::is_positive(vv, eps));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Quotient by the null space (complex numbers)

struct PreHilbertGNS {
  SemiHilbertGNS<Complex> ambient;
  std::size_t quotient_dim = 0;
  Eigen::MatrixXcd basis;   ///< U, with U^dagger G U = I
  Eigen::MatrixXcd kernel;  ///< orthonormal basis of N
  Eigen::VectorXd spectrum;
  std::vector<Eigen::MatrixXcd> rep_q;
  Eigen::VectorXcd cyclic_q;
  /// max over kernel vectors k and arrows c of the gram norm of rep(c) k.
  double kernel_residual = 0.0;
};

/// Orthonormalizes the complement of the kernel of the Gram matrix and
/// compresses the representation onto it.
template <RigScalar S>
PreHilbertGNS build_pre_hilbert(const SemiHilbertGNS<S>& g, double tol = 1e-9) {
  if constexpr (!std::is_same_v<S, Complex>) {
    throw Error(Errc::unsupported_rig, "the quotient is built over the complex numbers only");
  } else {
    const auto ns = null_space(g.gram, tol);
    const Eigen::Index n = g.gram.rows();
    if (n > 0) {
      const double top = std::max(1.0, ns.spectrum.cwiseAbs().maxCoeff());
      if (ns.spectrum(0) < -tol * top)
        throw Error(Errc::not_psd, "Gram matrix has eigenvalue " + std::to_string(ns.spectrum(0)));
    }

    const Eigen::MatrixXcd basis = ns.complement * ns.complement_values.cwiseSqrt().cwiseInverse().asDiagonal();
    const Eigen::MatrixXcd ug = basis.adjoint() * g.gram;
    std::vector<Eigen::MatrixXcd> rep_q;
    rep_q.reserve(g.rep.size());
    for (const auto& r : g.rep) rep_q.push_back(ug * r * basis);

    double residual = 0.0;
    for (const auto& r : g.rep) {
      for (Eigen::Index k = 0; k < ns.kernel.cols(); ++k) {
        const Eigen::VectorXcd v = r * ns.kernel.col(k);
        residual = std::max(residual, std::sqrt(std::max(0.0, (v.adjoint() * g.gram * v)(0, 0).real())));
      }
    }
    return PreHilbertGNS{g,     static_cast<std::size_t>(basis.cols()), basis, ns.kernel, ns.spectrum,
                         rep_q, ug * g.cyclic,                          residual};
  }
}

inline Eigen::MatrixXcd represent_quotient(const PreHilbertGNS& p, const AlgebraElement<Complex>& a) {
  const auto d = static_cast<Eigen::Index>(p.quotient_dim);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
  for (ArrowId c = 0; c < a.size(); ++c) out += a(c) * p.rep_q[c];
  return out;
}

/// Checks that the quotient carries a *-representation: adjoints, products,
/// reconstruction, orthonormality of the basis, kernel invariance and
/// Cauchy-Schwarz on `cs_pairs` random vector pairs.
inline VerificationReport verify_star_representation(const PreHilbertGNS& p, std::size_t trials, double tol, Rng& rng,
                                                     std::size_t cs_pairs = 500) {
  const auto& g = p.ambient;
  const auto& cat = g.space.category_ptr();
  const auto d = static_cast<Eigen::Index>(p.quotient_dim);

  VerificationReport report;
  {
    const auto check = report.add("orthonormal_basis");
    const Eigen::MatrixXcd gram_q = p.basis.adjoint() * g.gram * p.basis;
    const double r = d == 0 ? 0.0 : (gram_q - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
    record(report, check, r, r <= 1e-8);
  }
  {
    const auto check = report.add("kernel_invariance");
    record(report, check, p.kernel_residual, p.kernel_residual <= tol);
  }
  const auto adjoint = report.add("quotient_adjoint");
  const auto homomorphism = report.add("quotient_homomorphism");
  const auto reconstruction = report.add("quotient_reconstruction");
  const auto cs = report.add("cauchy_schwarz");

  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = random_element<Complex>(cat, rng);
    const auto b = random_element<Complex>(cat, rng);
    const Eigen::MatrixXcd ra = represent_quotient(p, a);
    const Eigen::MatrixXcd rs = represent_quotient(p, star(a, g.space.dagger()));
    const double adj = d == 0 ? 0.0 : (rs - ra.adjoint()).cwiseAbs().maxCoeff();
    record(report, adjoint, adj, adj <= tol * std::max(1.0, ra.cwiseAbs().maxCoeff()));

    const Eigen::MatrixXcd rab = represent_quotient(p, convolve(a, b));
    const Eigen::MatrixXcd prod = ra * represent_quotient(p, b);
    const double hom = d == 0 ? 0.0 : (rab - prod).cwiseAbs().maxCoeff();
    record(report, homomorphism, hom, hom <= tol * std::max(1.0, prod.cwiseAbs().maxCoeff()));

    const Complex lhs = evaluate(g.space.state(), a);
    const Complex rhs = p.cyclic_q.dot(ra * p.cyclic_q);
    record(report, reconstruction, std::abs(lhs - rhs), std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(lhs)));
  }

  for (std::size_t t = 0; t < cs_pairs; ++t) {
    Eigen::VectorXcd u(d), v(d);
    for (Eigen::Index i = 0; i < d; ++i) {
      u(i) = RigTraits<Complex>::sample(rng);
      v(i) = RigTraits<Complex>::sample(rng);
    }
    const double lhs = std::norm(u.dot(v));
    const double rhs = u.squaredNorm() * v.squaredNorm();
    record(report, cs, std::max(0.0, lhs - rhs), lhs <= rhs + tol);
  }
  return report;
}

/// Exact kernel invariance over Q: for a basis k of the kernel of the Gram
/// matrix, every rep(c) k stays in the kernel.
inline bool kernel_invariant_exact(const SemiHilbertGNS<Rational>& g) {
  const auto kernel = exact_null_space(g.gram);
  for (const auto& r : g.rep) {
    for (Eigen::Index k = 0; k < kernel.cols(); ++k) {
      const DenseVector<Rational> gv = g.gram * (r * kernel.col(k));
      for (Eigen::Index i = 0; i < gv.size(); ++i)
        if (!gv(i).is_zero()) return false;
    }
  }
  return true;
}

/// Rank of the Gram matrix over Q.
inline std::size_t exact_quotient_dim(const SemiHilbertGNS<Rational>& g) {
  return static_cast<std::size_t>(g.gram.cols() - exact_null_space(g.gram).cols());
}

}  // namespace catalg
