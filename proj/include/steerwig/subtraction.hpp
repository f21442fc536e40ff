#pragma once

#include <optional>

#include "steerwig/gaussian_state.hpp"

namespace steerwig {

/// Outcome of the steering / negativity analysis of a (f, g) mode pair, where
/// a photon is subtracted from g and the Wigner function of f is inspected.
struct SteeringReport {
  double nu;                 ///< symplectic eigenvalue of V_{g|f}; f steers g iff nu < 1
  Mat2 s;                    ///< Williamson factor, symmetric-positive gauge
  Mat2 r_opt;                ///< S^{-1}
  double tr_conditional;     ///< tr V_{g|f}
  double tr_conditional_opt; ///< tr R^t V_{g|f} R at R = R_opt, equals 2 nu
  bool negativity_bare;      ///< tr V_{g|f} < 2
  bool negativity_steered;   ///< nu < 1
  bool marginal_bare;        ///< |tr V_{g|f} - 2| within verdict tolerance
  bool marginal_steered;     ///< |nu - 1| within verdict tolerance
  /// Empty when the subtraction is undefined (no photon in g) or the
  /// minimum location is undefined.
  std::optional<double> w_min_bare;
  std::optional<double> w_min_opt;
  double purity_f;
};

/// Photon-subtracted, g-traced Wigner function of mode f, with an optional
/// local symplectic R applied to g before subtraction
/// (V_g -> R^t V_g R, V_fg -> V_fg R, xi_g -> R^t xi_g).
class SubtractedWigner {
 public:
  SubtractedWigner(const ModePair& pair, const Mat2& r = Mat2::Identity());

  double operator()(const Vec2& beta) const;

  /// Mean photon number of g after R and before subtraction.
  double subtraction_photon_number() const { return denominator_ / 4.0; }
  /// tr R^t V_{g|f} R.
  double conditional_trace() const { return conditional_trace_; }
  /// Point where the polynomial factor is minimal; empty if V_fg R is
  /// singular and xi_g is nonzero.
  std::optional<Vec2> minimum_location() const;
  /// Value of the Wigner function at minimum_location().
  double minimum_value() const;

 private:
  Mat2 v_f_;
  Mat2 v_f_inv_;
  Mat2 v_gf_;  // R^t V_fg^t
  Vec2 xi_f_;
  Vec2 xi_g_;  // R^t xi_g
  double conditional_trace_;
  double denominator_;
  double prefactor_;
};

double reduced_subtracted_wigner(const ModePair& pair, const Mat2& r, const Vec2& beta);

/// Minimal value of the reduced Wigner function for subtraction after R.
double w_min(const ModePair& pair, const Mat2& r = Mat2::Identity());

SteeringReport analyze(const ModePair& pair);

struct PhaseWindow {
  double x_min;
  double x_max;
  double p_min;
  double p_max;

  static PhaseWindow square(double half_width) {
    return {-half_width, half_width, -half_width, half_width};
  }
};

/// Wigner function sampled on a rectangular window, values(i, j) at
/// (x(i), p(j)). Density is per unit phase-space area dx dp.
struct WignerGrid {
  PhaseWindow window;
  MatX values;
  std::optional<Vec2> minimum_location;  ///< analytic, when known
  std::optional<double> analytic_minimum;

  WignerGrid(PhaseWindow w, Eigen::Index nx, Eigen::Index np);

  Eigen::Index nx() const { return values.rows(); }
  Eigen::Index np() const { return values.cols(); }
  double x(Eigen::Index i) const;
  double p(Eigen::Index j) const;
  double dx() const { return (window.x_max - window.x_min) / static_cast<double>(nx() - 1); }
  double dp() const { return (window.p_max - window.p_min) / static_cast<double>(np() - 1); }

  /// Trapezoidal integral over the window.
  double integral() const;
  double min_value() const { return values.minCoeff(); }
};

WignerGrid wigner_grid(const ModePair& pair, const Mat2& r, PhaseWindow window, Eigen::Index nx,
                       Eigen::Index np);

}  // namespace steerwig
