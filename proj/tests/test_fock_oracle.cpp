#include <doctest.h>

#include <numbers>

#include "steerwig/fock_oracle.hpp"
#include "steerwig/state_factories.hpp"
#include "steerwig/subtraction.hpp"

using namespace steerwig;
using namespace steerwig::fock;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

CVec coherent(Complex alpha, int cutoff) {
  CVec psi(cutoff);
  double log_fact = 0.0;
  for (int k = 0; k < cutoff; ++k) {
    if (k > 0) log_fact += std::log(static_cast<double>(k));
    psi(k) = std::exp(-0.5 * std::norm(alpha) - 0.5 * log_fact) * std::pow(alpha, k);
  }
  return psi;
}

ModePair epr_pair(double s1, double s2, double n) {
  return extract_pair(epr_state(SqueezingSpec::from_ratio(s1), SqueezingSpec::from_ratio(s2), ThermalNoise(n)), 0, 1);
}

double sup_distance(const WignerGrid& a, const WignerGrid& b) { return (a.values - b.values).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("single-mode Wigner kernel") {
  const auto vac = FockDensityMatrix::number_state(0, 10);
  CHECK(wigner_single_mode_fock(vac, Vec2::Zero()) == doctest::Approx(1.0 / two_pi));
  CHECK(wigner_single_mode_fock(vac, Vec2(1.0, 2.0)) == doctest::Approx(std::exp(-2.5) / two_pi));

  const auto one = FockDensityMatrix::number_state(1, 10);
  CHECK(wigner_single_mode_fock(one, Vec2::Zero()) == doctest::Approx(-1.0 / two_pi));

  const Complex alpha(0.7, -0.4);
  const auto coh = FockDensityMatrix::pure(coherent(alpha, 30));
  const Vec2 peak(2.0 * alpha.real(), 2.0 * alpha.imag());
  CHECK(wigner_single_mode_fock(coh, peak) == doctest::Approx(1.0 / two_pi).epsilon(1e-9));
  CHECK(wigner_single_mode_fock(coh, peak + Vec2(0.5, 0.0)) < wigner_single_mode_fock(coh, peak));

  // Normalization by quadrature on +-8.
  for (const auto& rho : {vac, one, coh}) {
    double sum = 0.0;
    const int points = 161;
    const double h = 16.0 / (points - 1);
    for (int i = 0; i < points; ++i)
      for (int j = 0; j < points; ++j) sum += wigner_single_mode_fock(rho, Vec2(-8.0 + i * h, -8.0 + j * h));
    CHECK(sum * h * h == doctest::Approx(1.0).epsilon(1e-4));
  }
}

TEST_CASE("photon subtraction on single modes") {
  const auto one = FockDensityMatrix::number_state(1, 8);
  const auto out = subtract_photon_fock(one, 0);
  CHECK(out.probability == doctest::Approx(1.0));
  CHECK(std::abs(out.state.rho()(0, 0) - 1.0) < 1e-14);

  const auto coh = FockDensityMatrix::pure(coherent(Complex(1.0, 0.0), 30));
  const auto sub = subtract_photon_fock(coh, 0);
  CHECK(sub.probability == doctest::Approx(1.0).epsilon(1e-6));
  const double fidelity = (coh.rho() * sub.state.rho()).trace().real();
  CHECK(fidelity >= 1.0 - 1e-6);

  CHECK_THROWS_AS(subtract_photon_fock(FockDensityMatrix::number_state(0, 8), 0), Error);
}

TEST_CASE("Gaussian unitaries act on quadratures as intended") {
  const int d = 30;
  const auto coh = FockDensityMatrix::pure(coherent(Complex(0.5, 0.25), d));
  const Mat2 m = (Mat2() << 1.3, 0.4, 0.2, (1.0 + 0.4 * 0.2) / 1.3).finished();
  const auto moved = apply_mode_operator(coh, 0, gaussian_unitary(m, d, 40));
  const auto before = quadrature_moments(coh);
  const auto after = quadrature_moments(moved);
  CHECK((after.mean - m * before.mean).cwiseAbs().maxCoeff() < 1e-8);
  CHECK((after.covariance - m * before.covariance * m.transpose()).cwiseAbs().maxCoeff() < 1e-7);

  const auto disp = displace_mode(FockDensityMatrix::number_state(0, d), 0, Vec2(1.0, -0.5), 40);
  CHECK((quadrature_moments(disp).mean - Vec2(1.0, -0.5)).norm() < 1e-10);
}

TEST_CASE("EPR state in the number basis") {
  SUBCASE("vacuum") {
    const auto rho = build_epr_fock(1.0, 1.0, 1.0, {10, 1e-6, 40});
    CHECK(std::abs(rho.rho()(0, 0) - 1.0) < 1e-12);
    CHECK(rho.rho().cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("moments match the covariance model") {
    const OracleConfig cfg;
    for (double n : {1.0, 1.2, 1.5})
      for (double db : {1.0, 2.0, 4.0}) {
        const double s = std::pow(10.0, db / 10.0);
        const auto rho = build_epr_fock(s, s, n, cfg);
        CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(rho.hermiticity_defect() < 1e-12);
        CHECK(rho.min_eigenvalue() > -1e-10);
        const auto mom = quadrature_moments(rho);
        const MatX ref = epr_state(SqueezingSpec::from_ratio(s), SqueezingSpec::from_ratio(s), ThermalNoise(n)).covariance();
        CHECK((mom.covariance - ref).cwiseAbs().maxCoeff() < 1e-4);
        CHECK(mom.mean.norm() < 1e-10);
      }
  }
  SUBCASE("mean photon number in g") {
    const double s = std::pow(10.0, 0.4);
    const auto rho = build_epr_fock(s, s, 1.2);
    const auto sub = subtract_photon_fock(rho, 1);
    const ModePair pair = epr_pair(s, s, 1.2);
    CHECK(sub.probability == doctest::Approx(0.373).epsilon(1e-3));
    CHECK(std::abs(sub.probability - (pair.v_g.trace() - 2.0) / 4.0) < 1e-4);
    const auto disp = subtract_photon_fock(displace_mode(rho, 1, Vec2(1.0, 0.0), 40), 1);
    CHECK(std::abs(disp.probability - (pair.v_g.trace() + 1.0 - 2.0) / 4.0) < 1e-4);
  }
  SUBCASE("too small a cutoff is reported") {
    try {
      build_epr_fock(std::pow(10.0, 0.4), std::pow(10.0, 0.4), 1.2, {6, 1e-6, 40});
      FAIL("expected insufficient cutoff");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::insufficient_cutoff);
    }
  }
  SUBCASE("operations keep the trace") {
    const double s = std::pow(10.0, 0.2);
    const auto rho = build_epr_fock(s, s, 1.2);
    const auto reduced = partial_trace(rho, 0);
    CHECK(reduced.modes() == 1);
    CHECK(reduced.trace() == doctest::Approx(1.0).epsilon(1e-10));
    const auto moved = displace_mode(rho, 1, Vec2(0.5, 0.5), 40);
    CHECK(moved.trace() == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(moved.hermiticity_defect() < 1e-12);
  }
}

TEST_CASE("oracle reduced Wigner function against the closed form") {
  const auto window = PhaseWindow::square(6.0);
  const double s = std::pow(10.0, 0.4);
  SUBCASE("symmetric 4 dB, both local operations, with and without displacement") {
    const ModePair base = epr_pair(s, s, 1.2);
    const Mat2 r_opt = analyze(base).r_opt;
    for (const Mat2& r : {Mat2(Mat2::Identity()), r_opt})
      for (const Vec2& xi : {Vec2(0, 0), Vec2(1, 0)}) {
        ModePair pair = base;
        pair.xi_g = xi;
        const auto oracle = oracle_reduced_wigner(s, s, 1.2, r, xi, window, 61, 61);
        const WignerGrid analytic = wigner_grid(pair, r, window, 61, 61);
        CHECK(sup_distance(oracle.grid, analytic) < 1e-6);
        CHECK(oracle.subtraction_probability ==
              doctest::Approx(SubtractedWigner(pair, r).subtraction_photon_number()).epsilon(1e-6));
        if (xi.isZero()) CHECK(std::abs(oracle.grid.min_value() - w_min(pair, r)) < 1e-3);
      }
  }
  SUBCASE("independent modes") {
    const auto oracle = oracle_reduced_wigner(1.0, 1.0, 1.4, std::nullopt, Vec2::Zero(), window, 41, 41);
    for (Eigen::Index i = 0; i < 41; ++i)
      for (Eigen::Index j = 0; j < 41; ++j) {
        const Vec2 b(oracle.grid.x(i), oracle.grid.p(j));
        const double gauss = std::exp(-0.5 * b.squaredNorm() / 1.4) / (two_pi * 1.4);
        CHECK(std::abs(oracle.grid.values(i, j) - gauss) < 1e-4);
      }
  }
  SUBCASE("doubling the cutoff changes little") {
    OracleConfig small;
    small.cutoff = 30;
    OracleConfig large;
    large.cutoff = 60;
    const auto a = oracle_reduced_wigner(s, s, 1.2, std::nullopt, Vec2::Zero(), window, 41, 41, small);
    const auto b = oracle_reduced_wigner(s, s, 1.2, std::nullopt, Vec2::Zero(), window, 41, 41, large);
    CHECK(sup_distance(a.grid, b.grid) <= 1e-5);
  }
}
