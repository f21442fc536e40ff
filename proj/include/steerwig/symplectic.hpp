#pragma once

// Real symplectic linear algebra for covariance matrices in the convention
// [x, p] = 2i (vacuum covariance = identity).
//
// The symplectic form is fixed by [q(a), q(b)] = -2i (a, Omega b), which for
// a single mode in (x, p) ordering gives Omega = [[0, -1], [1, 0]]. The
// conjugate quadrature of a mode vector f is then q(Omega f).

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "steerwig/errors.hpp"
#include "steerwig/types.hpp"

namespace steerwig {

enum class QuadratureOrdering {
  interleaved,  ///< (x1, p1, x2, p2, ...)
  blockwise,    ///< (x1, ..., xm, p1, ..., pm)
};

/// 2m x 2m symplectic form in the requested ordering.
template <typename Scalar = double>
MatrixXT<Scalar> symplectic_form(Eigen::Index modes,
                                 QuadratureOrdering ordering = QuadratureOrdering::interleaved) {
  if (modes <= 0) throw Error(ErrorKind::dimension, "symplectic_form: modes must be positive");
  MatrixXT<Scalar> omega = MatrixXT<Scalar>::Zero(2 * modes, 2 * modes);
  for (Eigen::Index k = 0; k < modes; ++k) {
    const Eigen::Index x = ordering == QuadratureOrdering::interleaved ? 2 * k : k;
    const Eigen::Index p = ordering == QuadratureOrdering::interleaved ? 2 * k + 1 : modes + k;
    omega(x, p) = Scalar(-1);
    omega(p, x) = Scalar(1);
  }
  return omega;
}

template <typename Scalar = double>
Matrix2T<Scalar> symplectic_form2() {
  Matrix2T<Scalar> omega;
  omega << Scalar(0), Scalar(-1), Scalar(1), Scalar(0);
  return omega;
}

namespace detail {

template <typename Derived>
Eigen::Index checked_modes(const Eigen::MatrixBase<Derived>& m, const char* who) {
  if (m.rows() == 0 || m.rows() % 2 != 0)
    throw Error(ErrorKind::dimension, std::string(who) + ": dimension must be even and positive");
  return m.rows() / 2;
}

}  // namespace detail

/// True iff max|M^t Omega M - Omega| <= tol.
template <typename Derived>
bool is_symplectic(const Eigen::MatrixBase<Derived>& m, typename Derived::RealScalar tol) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw Error(ErrorKind::dimension, "is_symplectic: matrix must be square");
  const auto modes = detail::checked_modes(m, "is_symplectic");
  const MatrixXT<Scalar> omega = symplectic_form<Scalar>(modes);
  const MatrixXT<Scalar> defect = m.transpose() * omega * m - omega;
  return defect.cwiseAbs().maxCoeff() <= tol;
}

/// Index map p with (ordered `to`)[i] = (ordered `from`)[p[i]].
inline std::vector<Eigen::Index> ordering_permutation(Eigen::Index modes, QuadratureOrdering from,
                                                      QuadratureOrdering to) {
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(2 * modes));
  auto index_of = [modes](QuadratureOrdering o, Eigen::Index mode, int quad) {
    return o == QuadratureOrdering::interleaved ? 2 * mode + quad : quad * modes + mode;
  };
  for (Eigen::Index k = 0; k < modes; ++k)
    for (int quad = 0; quad < 2; ++quad)
      perm[static_cast<std::size_t>(index_of(to, k, quad))] = index_of(from, k, quad);
  return perm;
}

/// Reorders a quadrature vector (one column) or a covariance-like square
/// matrix (rows and columns) between orderings.
template <typename Derived>
MatrixXT<typename Derived::Scalar> reorder(const Eigen::MatrixBase<Derived>& m,
                                           QuadratureOrdering from, QuadratureOrdering to) {
  using Scalar = typename Derived::Scalar;
  const bool is_vector = m.cols() == 1;
  if (!is_vector && m.rows() != m.cols())
    throw Error(ErrorKind::dimension, "reorder: expected a vector or a square matrix");
  const auto modes = detail::checked_modes(m, "reorder");
  const auto perm = ordering_permutation(modes, from, to);
  const auto n = m.rows();
  MatrixXT<Scalar> out(n, m.cols());
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto pi = perm[static_cast<std::size_t>(i)];
    if (is_vector) {
      out(i, 0) = m(pi, 0);
    } else {
      for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(pi, perm[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

/// Condition number of a 2x2 matrix (ratio of singular values).
template <typename Derived>
typename Derived::RealScalar condition_number_2x2(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  const Eigen::JacobiSVD<Matrix2T<Real>> svd(m);
  const auto& sv = svd.singularValues();
  if (sv(1) == Real(0)) return std::numeric_limits<Real>::infinity();
  return sv(0) / sv(1);
}

/// Schur complement V_g - V_fg^t V_f^{-1} V_fg: the covariance of mode g
/// conditioned on a joint (x, p) outcome in mode f.
template <typename Scalar>
Matrix2T<Scalar> conditional_covariance(const Matrix2T<Scalar>& v_f, const Matrix2T<Scalar>& v_fg,
                                        const Matrix2T<Scalar>& v_g) {
  if (condition_number_2x2(v_f) > Scalar(tol::max_condition))
    throw Error(ErrorKind::singular_marginal, "conditional_covariance: V_f is singular");
  const Matrix2T<Scalar> c = v_g - v_fg.transpose() * v_f.inverse() * v_fg;
  return (c + c.transpose()) / Scalar(2);
}

/// Principal square root of a symmetric positive-definite 2x2 matrix.
template <typename Scalar>
Matrix2T<Scalar> spd_sqrt_2x2(const Matrix2T<Scalar>& v) {
  using std::sqrt;
  const Scalar root_det = sqrt(v.determinant());
  const Scalar scale = sqrt(v.trace() + Scalar(2) * root_det);
  return (v + root_det * Matrix2T<Scalar>::Identity()) / scale;
}

template <typename Scalar>
struct WilliamsonFactorsT {
  Scalar nu;            ///< symplectic eigenvalue
  Matrix2T<Scalar> s;   ///< symplectic, symmetric positive gauge
};
using WilliamsonFactors = WilliamsonFactorsT<double>;

/// Single-mode Williamson decomposition V = nu S^t S.
///
/// The gauge S -> O S (O orthogonal symplectic) is fixed by taking S as the
/// symmetric positive square root of V / nu. Only nu and gauge-invariant
/// combinations of S should be treated as physical.
template <typename Scalar>
WilliamsonFactorsT<Scalar> williamson_2x2(const Matrix2T<Scalar>& v) {
  using std::abs;
  using std::sqrt;
  const Scalar scale = v.cwiseAbs().maxCoeff();
  if (!(scale > Scalar(0)) || abs(v(0, 1) - v(1, 0)) > Scalar(1e-12) * scale)
    throw Error(ErrorKind::decomposition_domain, "williamson_2x2: input must be symmetric and nonzero");
  const Matrix2T<Scalar> sym = (v + v.transpose()) / Scalar(2);
  const Scalar det = sym.determinant();
  if (!(sym(0, 0) > Scalar(0)) || !(det > Scalar(0)))
    throw Error(ErrorKind::decomposition_domain, "williamson_2x2: input must be positive definite");
  const Scalar nu = sqrt(det);
  return {nu, spd_sqrt_2x2<Scalar>(sym / nu)};
}

/// Symplectic eigenvalues of a 2m x 2m positive-definite covariance matrix
/// (interleaved ordering), ascending.
template <typename Scalar>
VectorXT<Scalar> symplectic_eigenvalues(const MatrixXT<Scalar>& v) {
  const auto modes = detail::checked_modes(v, "symplectic_eigenvalues");
  const Eigen::SelfAdjointEigenSolver<MatrixXT<Scalar>> sqrt_solver(v);
  if (sqrt_solver.info() != Eigen::Success || sqrt_solver.eigenvalues().minCoeff() <= Scalar(0))
    throw Error(ErrorKind::decomposition_domain, "symplectic_eigenvalues: V must be positive definite");
  const MatrixXT<Scalar> root = sqrt_solver.operatorSqrt();
  using Complex = std::complex<Scalar>;
  const MatrixXT<Complex> herm =
      Complex(0, 1) * (root * symplectic_form<Scalar>(modes) * root).template cast<Complex>();
  const Eigen::SelfAdjointEigenSolver<MatrixXT<Complex>> solver(herm);
  // Eigenvalues come as +-nu pairs; the upper half holds the nu's.
  return solver.eigenvalues().tail(modes);
}

}  // namespace steerwig
