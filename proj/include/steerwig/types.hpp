#pragma once

#include <Eigen/Dense>

namespace steerwig {

template <typename Scalar>
using Matrix2T = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using Vector2T = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using MatrixXT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorXT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat2 = Eigen::Matrix2d;
using Vec2 = Eigen::Vector2d;
using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;
using MatX = Eigen::MatrixXd;
using VecX = Eigen::VectorXd;

/// Quadrature-space tolerances shared across modules.
namespace tol {
inline constexpr double physicality = 1e-9;
inline constexpr double symplectic = 1e-10;
inline constexpr double mode_norm = 1e-12;
inline constexpr double mode_overlap = 1e-10;
inline constexpr double max_condition = 1e12;
inline constexpr double no_photon = 1e-12;
inline constexpr double verdict = 1e-12;
}  // namespace tol

}  // namespace steerwig
