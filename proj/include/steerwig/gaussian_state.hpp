#pragma once

#include <optional>

#include "steerwig/symplectic.hpp"
#include "steerwig/types.hpp"

namespace steerwig {

/// m-mode Gaussian state: covariance V (2m x 2m, interleaved ordering,
/// vacuum = identity) and mean vector xi. Construction only checks shapes;
/// use validate_state for physicality.
class GaussianState {
 public:
  GaussianState(MatX covariance, VecX mean);
  explicit GaussianState(MatX covariance);

  static GaussianState vacuum(Eigen::Index modes);

  Eigen::Index modes() const { return covariance_.rows() / 2; }
  const MatX& covariance() const { return covariance_; }
  const VecX& mean() const { return mean_; }

  /// 2x2 block (j, k) of the covariance, 0-based mode indices.
  Mat2 block(Eigen::Index j, Eigen::Index k) const {
    return covariance_.block<2, 2>(2 * j, 2 * k);
  }
  Vec2 mode_mean(Eigen::Index k) const { return mean_.segment<2>(2 * k); }

 private:
  MatX covariance_;
  VecX mean_;
};

struct StateDiagnostics {
  double min_eigenvalue;   ///< of the Hermitian matrix V + i Omega
  double symmetry_defect;  ///< max |V - V^t|
  std::optional<double> min_symplectic_eigenvalue;  ///< empty if V is not positive definite
  bool physical;
};

StateDiagnostics validate_state(const GaussianState& state);

/// Unit phase-space vector f in R^{2m}. The mode it describes has
/// quadratures (q(f), q(Omega f)).
class ModeVector {
 public:
  explicit ModeVector(VecX f);

  /// Mode k (0-based) of the canonical basis, i.e. the x_k direction.
  static ModeVector canonical(Eigen::Index modes, Eigen::Index k);

  const VecX& vector() const { return f_; }
  Eigen::Index dimension() const { return f_.size(); }
  /// [f, Omega f] as a 2m x 2 matrix.
  Eigen::Matrix<double, Eigen::Dynamic, 2> quadrature_basis() const;

 private:
  VecX f_;
};

/// Two-mode marginal of a state for a (target f, subtraction g) pair.
/// The sign structure of v_fg depends on phase conventions (beamsplitter
/// phase, choice of f vs -f); all derived scalar quantities do not.
struct ModePair {
  Mat2 v_f;
  Mat2 v_g;
  Mat2 v_fg;
  Vec2 xi_f = Vec2::Zero();
  Vec2 xi_g = Vec2::Zero();

  /// Assembled [[V_f, V_fg], [V_fg^t, V_g]].
  Mat4 joint() const;
  Vec4 joint_mean() const;
  /// Split a 4x4 joint covariance (mode f first) into blocks.
  static ModePair from_joint(const Mat4& v, const Vec4& xi = Vec4::Zero());
};

ModePair extract_pair(const GaussianState& state, const ModeVector& f, const ModeVector& g);
/// Convenience overload for canonical basis modes (0-based).
ModePair extract_pair(const GaussianState& state, Eigen::Index f, Eigen::Index g);

/// Conditional covariance V_{g|f} of the pair.
Mat2 schur_conditional(const ModePair& pair);

/// Local Gaussian operation on mode k: V_kk -> R^t V_kk R, V_jk -> V_jk R,
/// xi_k -> R^t xi_k.
GaussianState apply_local_symplectic(const GaussianState& state, Eigen::Index k, const Mat2& r);

GaussianState displace(const GaussianState& state, const VecX& delta);

/// Beam splitter on modes (j, k) with cos(theta) = sqrt(t). Quadratures mix
/// as q_j -> cos q_j + sin q_k, q_k -> -sin q_j + cos q_k in both planes.
GaussianState beamsplitter(const GaussianState& state, Eigen::Index j, Eigen::Index k, double t);
GaussianState beamsplitter_angle(const GaussianState& state, Eigen::Index j, Eigen::Index k,
                                 double theta);

/// (det V_f)^{-1/2}.
double purity_factor(const Mat2& v_f);
inline double purity_factor(const ModePair& pair) { return purity_factor(pair.v_f); }

/// Physicality of a 2-mode joint matrix: min eigenvalue of V + i Omega.
double min_physicality_eigenvalue(const MatX& v);

}  // namespace steerwig
