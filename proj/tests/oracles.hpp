#pragma once

// Reference computations written without the library's algebra code, plus
// hand-rolled generators for property tests.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Eigenvalues>

#include "catalg/algebra.hpp"
#include "catalg/fincat.hpp"
#include "catalg/rig.hpp"

namespace oracle {

using namespace catalg;

// Classical Mobius function by trial division.
inline int mu_number(unsigned n) {
  int result = 1;
  for (unsigned p = 2; p <= n; ++p) {
    int power = 0;
    while (n % p == 0) {
      n /= p;
      ++power;
    }
    if (power > 1) return 0;
    if (power == 1) result = -result;
  }
  return result;
}

inline int inclusion_exclusion(unsigned s, unsigned t) {
  unsigned diff = t & ~s;
  int bits = 0;
  for (; diff; diff >>= 1) bits += static_cast<int>(diff & 1U);
  return bits % 2 ? -1 : 1;
}

// mu(x, x) = 1, mu(x, y) = -sum_{x <= z < y} mu(x, z) on a poset category,
// read off from hom-sets only.
inline std::vector<Rational> poset_mu(const FinCategory& cat) {
  const std::size_t n = cat.object_count();
  auto arrow = [&](ObjectId x, ObjectId y) -> std::optional<ArrowId> {
    const auto h = cat.hom(x, y);
    if (h.empty()) return std::nullopt;
    return h.front();
  };
  std::vector<std::vector<std::optional<Rational>>> memo(n, std::vector<std::optional<Rational>>(n));
  std::function<Rational(ObjectId, ObjectId)> mu = [&](ObjectId x, ObjectId y) -> Rational {
    if (memo[x][y]) return *memo[x][y];
    Rational v(0);
    if (x == y) {
      v = Rational(1);
    } else {
      for (ObjectId z = 0; z < n; ++z)
        if (z != y && arrow(x, z) && arrow(z, y)) v = v - mu(x, z);
    }
    memo[x][y] = v;
    return v;
  };
  std::vector<Rational> out(cat.arrow_count(), Rational(0));
  for (ArrowId c = 0; c < cat.arrow_count(); ++c) out[c] = mu(cat.dom(c), cat.cod(c));
  return out;
}

// Convolution straight from the definition: scan all ordered arrow pairs.
template <RigScalar S>
DenseVector<S> brute_convolve(const FinCategory& cat, const DenseVector<S>& a, const DenseVector<S>& b) {
  const std::size_t n = cat.arrow_count();
  DenseVector<S> out = DenseVector<S>::Constant(static_cast<Eigen::Index>(n), S(0));
  for (ArrowId g = 0; g < n; ++g)
    for (ArrowId f = 0; f < n; ++f)
      if (cat.dom(g) == cat.cod(f)) {
        const ArrowId h = cat.compose(g, f);
        out(static_cast<Eigen::Index>(h)) =
            out(static_cast<Eigen::Index>(h)) + a(static_cast<Eigen::Index>(g)) * b(static_cast<Eigen::Index>(f));
      }
  return out;
}

using Weights = std::vector<std::vector<double>>;
inline constexpr double inf = std::numeric_limits<double>::infinity();

inline Weights min_plus(const Weights& a, const Weights& b) {
  const std::size_t n = a.size(), m = b.front().size(), k = b.size();
  Weights out(n, std::vector<double>(m, inf));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = 0; t < k; ++t) out[i][j] = std::min(out[i][j], a[i][t] + b[t][j]);
  return out;
}

inline Weights floyd_warshall(Weights d) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) d[i][i] = std::min(d[i][i], 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Shortest i -> j walk using at most `hops` edges.
inline Weights bellman_ford_hops(const Weights& w, std::size_t hops) {
  const std::size_t n = w.size();
  Weights d(n, std::vector<double>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (std::size_t round = 0; round < hops; ++round) {
    Weights next = d;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) next[i][v] = std::min(next[i][v], d[i][u] + w[u][v]);
    d = next;
  }
  return d;
}

// Roots of x^2 - tr x + det for a 2x2 Hermitian matrix, ascending.
inline std::pair<double, double> eigen2(const Eigen::Matrix2cd& m) {
  const double tr = (m(0, 0) + m(1, 1)).real();
  const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
  return {tr / 2 - disc, tr / 2 + disc};
}

inline Eigen::VectorXd reference_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  return solver.eigenvalues();
}

// ---------------------------------------------------------------------------
// Generators

inline Rational small_rational(Rng& rng, int range = 6) {
  return Rational(uniform_int(rng, -range, range), uniform_int(rng, 1, 4));
}

inline DenseVector<Rational> rational_vector(Rng& rng, Eigen::Index n, int range = 6) {
  DenseVector<Rational> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = small_rational(rng, range);
  return v;
}

inline DenseMatrix<Rational> rational_symmetric(Rng& rng, Eigen::Index n) {
  DenseMatrix<Rational> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) m(i, j) = m(j, i) = small_rational(rng);
  return m;
}

// B^T B with B of the given rank: PSD by construction.
inline DenseMatrix<Rational> rational_psd(Rng& rng, Eigen::Index n, Eigen::Index rank) {
  DenseMatrix<Rational> b(rank, n);
  for (Eigen::Index i = 0; i < rank; ++i) b.row(i) = rational_vector(rng, n).transpose();
  return b.transpose() * b;
}

inline Eigen::MatrixXcd complex_hermitian(Rng& rng, Eigen::Index n) {
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = uniform_real(rng, -3, 3);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      m(i, j) = Complex(uniform_real(rng, -3, 3), uniform_real(rng, -3, 3));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

// Categories used across algebra property tests.
inline std::vector<std::pair<std::string, CategoryPtr>> test_categories() {
  return {{"discrete3", discrete(3)},
          {"indiscrete3", indiscrete(3)},
          {"S3", symmetric_group(3)},
          {"chain3", chain(3)},
          {"divisors12", divisor_poset(12)},
          {"A3", free_on_acyclic_quiver(3, {{0, 1, "a"}, {1, 2, "b"}})}};
}

}  // namespace oracle
