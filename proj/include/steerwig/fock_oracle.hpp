#pragma once

// Brute-force photon subtraction in a truncated number basis. Nothing here
// uses covariance matrices: states are built from thermal populations and
// exponentiated ladder-operator generators, so the results are an
// independent check on the closed-form Gaussian expressions.
//
// Quadratures follow x = a + a^dag, p = -i (a - a^dag), so [x, p] = 2i and a
// coherent state |alpha> has mean (2 Re alpha, 2 Im alpha).

#include <complex>
#include <optional>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "steerwig/subtraction.hpp"
#include "steerwig/types.hpp"

namespace steerwig::fock {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

struct OracleConfig {
  int cutoff = 30;              ///< number states 0..cutoff-1 per mode
  double leakage_bound = 1e-6;  ///< max population allowed on the top level
  int padding = 40;             ///< extra levels used when exponentiating generators
};

/// Density operator on one or two truncated modes. Two-mode index is
/// i_first * cutoff + i_second.
class FockDensityMatrix {
 public:
  FockDensityMatrix(int modes, int cutoff, CMat rho);

  static FockDensityMatrix number_state(int n, int cutoff);
  static FockDensityMatrix pure(const CVec& psi);

  int modes() const { return modes_; }
  int cutoff() const { return cutoff_; }
  const CMat& rho() const { return rho_; }

  double trace() const { return rho_.trace().real(); }
  double hermiticity_defect() const { return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff(); }
  double min_eigenvalue() const;
  /// Population of number state cutoff-1 in the marginal of `mode`.
  double top_level_population(int mode) const;
  double leakage() const;

 private:
  int modes_;
  int cutoff_;
  CMat rho_;
};

// Single-mode building blocks (cutoff x cutoff).
Eigen::MatrixXd annihilation(int cutoff);
Eigen::MatrixXd thermal_populations_matrix(double mean_photons, int cutoff);
/// <m| exp((r/2)(a^dag^2 - a^2)) |n>: x -> e^r x, p -> e^-r p.
Eigen::MatrixXd squeeze_unitary(double r, int cutoff, int padding);
/// exp(i phi a^dag a): rotates (x, p) by [[cos, -sin], [sin, cos]].
CMat rotation_unitary(double phi, int cutoff);
/// exp(alpha a^dag - conj(alpha) a).
CMat displacement_unitary(Complex alpha, int cutoff, int padding);
/// Unitary U with U^dag q U = M q for a 2x2 symplectic M.
CMat gaussian_unitary(const Mat2& m, int cutoff, int padding);
/// exp(theta (a^dag b - a b^dag)) on two modes, a = first.
Eigen::SparseMatrix<double> beamsplitter_unitary(double theta, int cutoff);

/// A rho A^dag with A acting on `mode`.
FockDensityMatrix apply_mode_operator(const FockDensityMatrix& rho, int mode, const CMat& op);
FockDensityMatrix displace_mode(const FockDensityMatrix& rho, int mode, const Vec2& xi, int padding);
FockDensityMatrix partial_trace(const FockDensityMatrix& rho, int keep);

/// Two-mode noisy EPR state: thermal modes (quadrature variance n), squeezed
/// to diag(n s1, n/s1) and diag(n/s2, n s2), mixed on a balanced splitter.
FockDensityMatrix build_epr_fock(double s1, double s2, double n, const OracleConfig& config = {});

struct SubtractionResult {
  FockDensityMatrix state;
  double probability;  ///< tr[rho a^dag a] in the subtraction mode (after R)
};

/// a rho a^dag / tr[rho a^dag a] on `mode`. When `r` is given, the local
/// Gaussian operation with V -> R^t V R is applied first.
SubtractionResult subtract_photon_fock(const FockDensityMatrix& rho, int mode,
                                       const std::optional<Mat2>& r = std::nullopt,
                                       const OracleConfig& config = {});

/// Wigner function of a single-mode state, normalized over dx dp.
double wigner_single_mode_fock(const FockDensityMatrix& rho, const Vec2& beta);

struct QuadratureMoments {
  VecX mean;
  MatX covariance;  ///< symmetrized, interleaved ordering
};
QuadratureMoments quadrature_moments(const FockDensityMatrix& rho);

struct OracleResult {
  WignerGrid grid;
  double subtraction_probability;
  double leakage;
};

/// Build -> displace mode g by xi_g -> optional R on g -> subtract in g ->
/// trace out g -> sample the Wigner function of f.
OracleResult oracle_reduced_wigner(double s1, double s2, double n, const std::optional<Mat2>& r,
                                   const Vec2& xi_g, PhaseWindow window, Eigen::Index nx,
                                   Eigen::Index np, const OracleConfig& config = {});

/// Same pipeline on an already built two-mode state.
OracleResult oracle_reduced_wigner(const FockDensityMatrix& rho, const std::optional<Mat2>& r,
                                   const Vec2& xi_g, PhaseWindow window, Eigen::Index nx,
                                   Eigen::Index np, const OracleConfig& config = {});

}  // namespace steerwig::fock
