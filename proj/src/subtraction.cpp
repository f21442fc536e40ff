#include "steerwig/subtraction.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace steerwig {

namespace {

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void require_symplectic(const Mat2& r) {
  if (!is_symplectic(r, tol::symplectic))
    throw Error(ErrorKind::domain, "local operation R must be symplectic (det R = 1)");
}

}  // namespace

SubtractedWigner::SubtractedWigner(const ModePair& pair, const Mat2& r) {
  require_symplectic(r);
  if (pair.v_f.determinant() <= 0.0 || condition_number_2x2(pair.v_f) > tol::max_condition)
    throw Error(ErrorKind::singular_marginal, "V_f must be positive definite");
  v_f_ = pair.v_f;
  v_f_inv_ = pair.v_f.inverse();
  v_gf_ = r.transpose() * pair.v_fg.transpose();
  xi_f_ = pair.xi_f;
  xi_g_ = r.transpose() * pair.xi_g;

  const Mat2 v_g = r.transpose() * pair.v_g * r;
  conditional_trace_ = (r.transpose() * schur_conditional(pair) * r).trace();
  denominator_ = v_g.trace() + xi_g_.squaredNorm() - 2.0;
  if (!(denominator_ > tol::no_photon))
    throw Error(ErrorKind::no_photon,
                "mode g carries no photon to subtract (tr V_g + |xi_g|^2 - 2 = " +
                    fmt_g(denominator_) + ")");
  prefactor_ = 1.0 / (2.0 * std::numbers::pi * std::sqrt(v_f_.determinant()) * denominator_);
}

double SubtractedWigner::operator()(const Vec2& beta) const {
  const Vec2 d = beta - xi_f_;
  const Vec2 w = v_f_inv_ * d;
  const double envelope = std::exp(-0.5 * d.dot(w));
  const double polynomial = (v_gf_ * w + xi_g_).squaredNorm() + conditional_trace_ - 2.0;
  return prefactor_ * envelope * polynomial;
}

std::optional<Vec2> SubtractedWigner::minimum_location() const {
  if (xi_g_.isZero(0.0)) return xi_f_;
  if (condition_number_2x2(v_gf_) > tol::max_condition) return std::nullopt;
  return Vec2(-v_f_ * v_gf_.inverse() * xi_g_ + xi_f_);
}

double SubtractedWigner::minimum_value() const {
  double exponent = 0.0;
  if (!xi_g_.isZero(0.0)) {
    if (condition_number_2x2(v_gf_) > tol::max_condition)
      throw Error(ErrorKind::undefined_minimum,
                  "minimum location undefined: V_fg R is singular while xi_g is nonzero");
    const Mat2 inv = v_gf_.inverse();
    exponent = 0.5 * xi_g_.dot(inv.transpose() * v_f_ * inv * xi_g_);
  }
  return prefactor_ * (conditional_trace_ - 2.0) * std::exp(-exponent);
}

double reduced_subtracted_wigner(const ModePair& pair, const Mat2& r, const Vec2& beta) {
  return SubtractedWigner(pair, r)(beta);
}

double w_min(const ModePair& pair, const Mat2& r) { return SubtractedWigner(pair, r).minimum_value(); }

SteeringReport analyze(const ModePair& pair) {
  const Mat2 conditional = schur_conditional(pair);
  const WilliamsonFactors factors = williamson_2x2<double>(conditional);

  SteeringReport rep{};
  rep.nu = factors.nu;
  rep.s = factors.s;
  rep.r_opt = factors.s.inverse();
  rep.tr_conditional = conditional.trace();
  rep.tr_conditional_opt = (rep.r_opt.transpose() * conditional * rep.r_opt).trace();
  rep.negativity_bare = rep.tr_conditional < 2.0;
  rep.negativity_steered = rep.nu < 1.0;
  rep.marginal_bare = std::abs(rep.tr_conditional - 2.0) <= tol::verdict;
  rep.marginal_steered = std::abs(rep.nu - 1.0) <= tol::verdict;
  rep.purity_f = purity_factor(pair.v_f);

  auto try_w_min = [&pair](const Mat2& r) -> std::optional<double> {
    try {
      return w_min(pair, r);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::no_photon || e.kind() == ErrorKind::undefined_minimum)
        return std::nullopt;
      throw;
    }
  };
  rep.w_min_bare = try_w_min(Mat2::Identity());
  rep.w_min_opt = try_w_min(rep.r_opt);
  return rep;
}

WignerGrid::WignerGrid(PhaseWindow w, Eigen::Index nx, Eigen::Index np)
    : window(w), values(MatX::Zero(nx, np)) {
  if (nx < 2 || np < 2) throw Error(ErrorKind::domain, "Wigner grid resolution must be at least 2x2");
  if (!(w.x_max > w.x_min) || !(w.p_max > w.p_min))
    throw Error(ErrorKind::domain, "Wigner grid window must have positive extent");
}

double WignerGrid::x(Eigen::Index i) const { return window.x_min + static_cast<double>(i) * dx(); }
double WignerGrid::p(Eigen::Index j) const { return window.p_min + static_cast<double>(j) * dp(); }

double WignerGrid::integral() const {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < nx(); ++i) {
    const double wx = (i == 0 || i == nx() - 1) ? 0.5 : 1.0;
    for (Eigen::Index j = 0; j < np(); ++j) {
      const double wp = (j == 0 || j == np() - 1) ? 0.5 : 1.0;
      sum += wx * wp * values(i, j);
    }
  }
  return sum * dx() * dp();
}

WignerGrid wigner_grid(const ModePair& pair, const Mat2& r, PhaseWindow window, Eigen::Index nx,
                       Eigen::Index np) {
  const SubtractedWigner wigner(pair, r);
  WignerGrid grid(window, nx, np);
  for (Eigen::Index i = 0; i < nx; ++i)
    for (Eigen::Index j = 0; j < np; ++j) grid.values(i, j) = wigner(Vec2(grid.x(i), grid.p(j)));
  grid.minimum_location = wigner.minimum_location();
  if (grid.minimum_location) grid.analytic_minimum = wigner.minimum_value();
  return grid;
}

}  // namespace steerwig
