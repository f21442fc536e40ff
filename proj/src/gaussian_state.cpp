#include "steerwig/gaussian_state.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace steerwig {

GaussianState::GaussianState(MatX covariance, VecX mean)
    : covariance_(std::move(covariance)), mean_(std::move(mean)) {
  if (covariance_.rows() != covariance_.cols() || covariance_.rows() == 0 ||
      covariance_.rows() % 2 != 0)
    throw Error(ErrorKind::dimension, "GaussianState: covariance must be 2m x 2m");
  if (mean_.size() != covariance_.rows())
    throw Error(ErrorKind::dimension, "GaussianState: mean must have length 2m");
}

GaussianState::GaussianState(MatX covariance)
    : GaussianState(covariance, VecX::Zero(covariance.rows())) {}

GaussianState GaussianState::vacuum(Eigen::Index modes) {
  if (modes <= 0) throw Error(ErrorKind::dimension, "vacuum: modes must be positive");
  return GaussianState(MatX::Identity(2 * modes, 2 * modes));
}

double min_physicality_eigenvalue(const MatX& v) {
  using Complex = std::complex<double>;
  const auto modes = detail::checked_modes(v, "min_physicality_eigenvalue");
  const MatX sym = (v + v.transpose()) / 2.0;
  const Eigen::MatrixXcd herm =
      sym.cast<Complex>() + Complex(0, 1) * symplectic_form<double>(modes).cast<Complex>();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

StateDiagnostics validate_state(const GaussianState& state) {
  const MatX& v = state.covariance();
  StateDiagnostics d{};
  d.symmetry_defect = (v - v.transpose()).cwiseAbs().maxCoeff();
  d.min_eigenvalue = min_physicality_eigenvalue(v);
  try {
    d.min_symplectic_eigenvalue = symplectic_eigenvalues<double>((v + v.transpose()) / 2.0).minCoeff();
  } catch (const Error&) {
    d.min_symplectic_eigenvalue.reset();
  }
  d.physical = d.symmetry_defect <= tol::physicality && d.min_eigenvalue >= -tol::physicality;
  return d;
}

ModeVector::ModeVector(VecX f) : f_(std::move(f)) {
  if (f_.size() == 0 || f_.size() % 2 != 0)
    throw Error(ErrorKind::dimension, "ModeVector: dimension must be 2m");
  if (std::abs(f_.norm() - 1.0) > tol::mode_norm)
    throw Error(ErrorKind::normalization, "ModeVector: |f| must be 1, got " + std::to_string(f_.norm()));
}

ModeVector ModeVector::canonical(Eigen::Index modes, Eigen::Index k) {
  if (k < 0 || k >= modes) throw Error(ErrorKind::dimension, "ModeVector::canonical: mode index out of range");
  return ModeVector(VecX::Unit(2 * modes, 2 * k));
}

Eigen::Matrix<double, Eigen::Dynamic, 2> ModeVector::quadrature_basis() const {
  Eigen::Matrix<double, Eigen::Dynamic, 2> basis(f_.size(), 2);
  basis.col(0) = f_;
  basis.col(1) = symplectic_form<double>(f_.size() / 2) * f_;
  return basis;
}

Mat4 ModePair::joint() const {
  Mat4 v;
  v << v_f, v_fg, v_fg.transpose(), v_g;
  return v;
}

Vec4 ModePair::joint_mean() const {
  Vec4 xi;
  xi << xi_f, xi_g;
  return xi;
}

ModePair ModePair::from_joint(const Mat4& v, const Vec4& xi) {
  return ModePair{v.topLeftCorner<2, 2>(), v.bottomRightCorner<2, 2>(), v.topRightCorner<2, 2>(),
                  xi.head<2>(), xi.tail<2>()};
}

ModePair extract_pair(const GaussianState& state, const ModeVector& f, const ModeVector& g) {
  const auto dim = state.covariance().rows();
  if (f.dimension() != dim || g.dimension() != dim)
    throw Error(ErrorKind::dimension, "extract_pair: mode vectors must match the state dimension");
  const MatX omega = symplectic_form<double>(state.modes());
  const double overlap = std::max(std::abs(f.vector().dot(g.vector())),
                                  std::abs(f.vector().dot(omega * g.vector())));
  if (overlap > tol::mode_overlap)
    throw Error(ErrorKind::mode_overlap,
                "extract_pair: modes f and g must be orthogonal (overlap " + std::to_string(overlap) + ")");
  const auto bf = f.quadrature_basis();
  const auto bg = g.quadrature_basis();
  const MatX& v = state.covariance();
  ModePair pair;
  pair.v_f = bf.transpose() * v * bf;
  pair.v_g = bg.transpose() * v * bg;
  pair.v_fg = bf.transpose() * v * bg;
  pair.xi_f = bf.transpose() * state.mean();
  pair.xi_g = bg.transpose() * state.mean();
  return pair;
}

ModePair extract_pair(const GaussianState& state, Eigen::Index f, Eigen::Index g) {
  return extract_pair(state, ModeVector::canonical(state.modes(), f),
                      ModeVector::canonical(state.modes(), g));
}

Mat2 schur_conditional(const ModePair& pair) {
  return conditional_covariance<double>(pair.v_f, pair.v_fg, pair.v_g);
}

GaussianState apply_local_symplectic(const GaussianState& state, Eigen::Index k, const Mat2& r) {
  if (k < 0 || k >= state.modes())
    throw Error(ErrorKind::dimension, "apply_local_symplectic: mode index out of range");
  if (!is_symplectic(r, tol::symplectic))
    throw Error(ErrorKind::domain, "apply_local_symplectic: R must be symplectic (det R = 1)");
  MatX m = MatX::Identity(state.covariance().rows(), state.covariance().cols());
  m.block<2, 2>(2 * k, 2 * k) = r;
  MatX v = m.transpose() * state.covariance() * m;
  v = (v + v.transpose()) / 2.0;
  return GaussianState(std::move(v), m.transpose() * state.mean());
}

GaussianState displace(const GaussianState& state, const VecX& delta) {
  if (delta.size() != state.mean().size())
    throw Error(ErrorKind::dimension, "displace: delta must have length 2m");
  return GaussianState(state.covariance(), state.mean() + delta);
}

GaussianState beamsplitter_angle(const GaussianState& state, Eigen::Index j, Eigen::Index k,
                                 double theta) {
  const auto m = state.modes();
  if (j == k || j < 0 || k < 0 || j >= m || k >= m)
    throw Error(ErrorKind::domain, "beamsplitter: modes must be distinct and in range");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  MatX b = MatX::Identity(2 * m, 2 * m);
  for (int quad = 0; quad < 2; ++quad) {
    const auto qj = 2 * j + quad;
    const auto qk = 2 * k + quad;
    b(qj, qj) = c;
    b(qj, qk) = s;
    b(qk, qj) = -s;
    b(qk, qk) = c;
  }
  MatX v = b * state.covariance() * b.transpose();
  v = (v + v.transpose()) / 2.0;
  return GaussianState(std::move(v), b * state.mean());
}

GaussianState beamsplitter(const GaussianState& state, Eigen::Index j, Eigen::Index k, double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw Error(ErrorKind::domain, "beamsplitter: transmittance must lie in [0, 1]");
  return beamsplitter_angle(state, j, k, std::acos(std::sqrt(t)));
}

double purity_factor(const Mat2& v_f) {
  const double det = v_f.determinant();
  if (!(det > 0.0) || condition_number_2x2(v_f) > tol::max_condition)
    throw Error(ErrorKind::singular_marginal, "purity_factor: V_f must be positive definite");
  return 1.0 / std::sqrt(det);
}

}  // namespace steerwig
