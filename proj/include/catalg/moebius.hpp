#pragma once

#include "catalg/algebra.hpp"
#include "catalg/matrix.hpp"

namespace catalg {

template <RigScalar S>
struct InverseCertificate {
  AlgebraElement<S> element;
  AlgebraElement<S> inverse;
  AlgebraElement<S> residual_left;   ///< inverse * element - unit
  AlgebraElement<S> residual_right;  ///< element * inverse - unit

  bool exact() const {
    const auto zero = zero_element<S>(element.category_ptr());
    return equal(residual_left, zero, 0.0) && equal(residual_right, zero, 0.0);
  }
  double max_residual() const {
    const auto zero = zero_element<S>(element.category_ptr());
    return std::max(max_distance(residual_left, zero), max_distance(residual_right, zero));
  }
};

/// The all-ones element.
template <RigScalar S>
AlgebraElement<S> zeta(CategoryPtr cat) {
  const auto n = static_cast<Eigen::Index>(cat->arrow_count());
  return AlgebraElement<S>(std::move(cat), DenseVector<S>::Constant(n, rig_one<S>()));
}

/// Two-sided convolution inverse. Solves L_a x = unit, where L_a is the
/// left-multiplication matrix of a, then checks x a = unit as well.
template <RigScalar S>
InverseCertificate<S> invert(const AlgebraElement<S>& a, double tol = RigTraits<S>::default_tol) {
  if constexpr (!RigTraits<S>::is_field || !RigTraits<S>::has_subtraction) {
    throw Error(Errc::unsupported_rig,
                "inversion needs a field; " + std::string(RigTraits<S>::name) + " is not one");
  } else {
    const auto e = unit<S>(a.category_ptr());
    auto solution = solve_linear<S>(left_multiplication_matrix(a), e.coeffs());
    if (!solution) throw Error(Errc::not_invertible, "left-multiplication matrix is singular");

    InverseCertificate<S> cert{a, AlgebraElement<S>(a.category_ptr(), std::move(*solution)), {}, {}};
    const auto left = convolve(cert.inverse, a);
    const auto right = convolve(a, cert.inverse);
    cert.residual_left = AlgebraElement<S>(a.category_ptr(), left.coeffs() - e.coeffs());
    cert.residual_right = AlgebraElement<S>(a.category_ptr(), right.coeffs() - e.coeffs());
    if (!equal(left, e, tol) || !equal(right, e, tol))
      throw Error(Errc::not_invertible, "one-sided inverse only");
    return cert;
  }
}

/// mu: the convolution inverse of zeta.
template <RigScalar S>
AlgebraElement<S> mobius(CategoryPtr cat) {
  return invert(zeta<S>(std::move(cat))).inverse;
}

enum class InversionDirection { zeta_then_mu, mu_then_zeta };

/// Multiplies f by zeta (or mu), multiplies the result by the other factor
/// and requires the original f back. Returns the intermediate transform.
template <RigScalar S>
AlgebraElement<S> mobius_inversion(const AlgebraElement<S>& f, InversionDirection direction,
                                   double tol = RigTraits<S>::default_tol) {
  const auto z = zeta<S>(f.category_ptr());
  const auto m = invert(z, tol).inverse;
  const auto& first = direction == InversionDirection::zeta_then_mu ? z : m;
  const auto& second = direction == InversionDirection::zeta_then_mu ? m : z;
  auto transformed = convolve(first, f);
  const auto restored = convolve(second, transformed);
  if (!equal(restored, f, tol)) throw Error(Errc::not_invertible, "Mobius round trip did not restore the input");
  return transformed;
}

}  // namespace catalg
