#include "steerwig/fock_oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

namespace steerwig::fock {

namespace {

void require_cutoff(int cutoff) {
  if (cutoff < 4) throw Error(ErrorKind::domain, "Fock cutoff must be at least 4");
}

void require_modes(const FockDensityMatrix& rho, int mode) {
  if (mode < 0 || mode >= rho.modes()) throw Error(ErrorKind::dimension, "Fock mode index out of range");
}

// Swaps the two tensor factors of a two-mode operator.
CMat swap_modes(const CMat& rho, int d) {
  CMat out(rho.rows(), rho.cols());
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l) out(k * d + i, l * d + j) = rho(i * d + k, j * d + l);
  return out;
}

// Top-left cutoff x cutoff block of exp(generator) computed on a larger space.
template <typename Mat>
Mat padded_exp(const Mat& generator, int cutoff) {
  const Mat full = generator.exp();
  return full.topLeftCorner(cutoff, cutoff);
}

void check_leakage(const FockDensityMatrix& rho, double bound, const char* stage) {
  const double leak = rho.leakage();
  if (leak > bound)
    throw Error(ErrorKind::insufficient_cutoff,
                std::string(stage) + ": top Fock level population " + std::to_string(leak) +
                    " exceeds bound " + std::to_string(bound) + " at cutoff " +
                    std::to_string(rho.cutoff()));
}

}  // namespace

FockDensityMatrix::FockDensityMatrix(int modes, int cutoff, CMat rho)
    : modes_(modes), cutoff_(cutoff), rho_(std::move(rho)) {
  if (modes != 1 && modes != 2) throw Error(ErrorKind::dimension, "Fock oracle supports 1 or 2 modes");
  require_cutoff(cutoff);
  const Eigen::Index dim = modes == 1 ? cutoff : cutoff * cutoff;
  if (rho_.rows() != dim || rho_.cols() != dim)
    throw Error(ErrorKind::dimension, "density matrix size does not match cutoff^modes");
}

FockDensityMatrix FockDensityMatrix::number_state(int n, int cutoff) {
  require_cutoff(cutoff);
  if (n < 0 || n >= cutoff) throw Error(ErrorKind::domain, "number state outside the cutoff");
  CMat rho = CMat::Zero(cutoff, cutoff);
  rho(n, n) = 1.0;
  return FockDensityMatrix(1, cutoff, std::move(rho));
}

FockDensityMatrix FockDensityMatrix::pure(const CVec& psi) {
  const CVec unit = psi.normalized();
  return FockDensityMatrix(1, static_cast<int>(psi.size()), unit * unit.adjoint());
}

double FockDensityMatrix::min_eigenvalue() const {
  const Eigen::SelfAdjointEigenSolver<CMat> solver((rho_ + rho_.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double FockDensityMatrix::top_level_population(int mode) const {
  const int d = cutoff_;
  if (modes_ == 1) return rho_(d - 1, d - 1).real();
  double pop = 0.0;
  for (int other = 0; other < d; ++other) {
    const int idx = mode == 0 ? (d - 1) * d + other : other * d + (d - 1);
    pop += rho_(idx, idx).real();
  }
  return pop;
}

double FockDensityMatrix::leakage() const {
  double leak = 0.0;
  for (int m = 0; m < modes_; ++m) leak = std::max(leak, top_level_population(m));
  return leak;
}

Eigen::MatrixXd annihilation(int cutoff) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Eigen::MatrixXd thermal_populations_matrix(double mean_photons, int cutoff) {
  if (mean_photons < 0.0) throw Error(ErrorKind::domain, "thermal mean photon number must be >= 0");
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(cutoff, cutoff);
  const double ratio = mean_photons / (1.0 + mean_photons);
  double p = 1.0 / (1.0 + mean_photons);
  for (int k = 0; k < cutoff; ++k, p *= ratio) rho(k, k) = p;
  return rho;
}

Eigen::MatrixXd squeeze_unitary(double r, int cutoff, int padding) {
  const int big = cutoff + padding;
  const Eigen::MatrixXd a = annihilation(big);
  const Eigen::MatrixXd a2 = a * a;
  const Eigen::MatrixXd generator = 0.5 * r * (a2.transpose() - a2);
  return padded_exp(generator, cutoff);
}

CMat rotation_unitary(double phi, int cutoff) {
  CMat u = CMat::Zero(cutoff, cutoff);
  for (int k = 0; k < cutoff; ++k) u(k, k) = std::polar(1.0, phi * k);
  return u;
}

CMat displacement_unitary(Complex alpha, int cutoff, int padding) {
  const int big = cutoff + padding;
  const CMat a = annihilation(big).cast<Complex>();
  const CMat generator = alpha * a.adjoint() - std::conj(alpha) * a;
  return padded_exp(generator, cutoff);
}

CMat gaussian_unitary(const Mat2& m, int cutoff, int padding) {
  if (!is_symplectic(m, tol::symplectic))
    throw Error(ErrorKind::domain, "gaussian_unitary: matrix must be symplectic");
  const Eigen::JacobiSVD<Mat2> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat2 left = svd.matrixU();
  Mat2 right = svd.matrixV();
  if (left.determinant() < 0.0) {
    left.col(1) *= -1.0;
    right.col(1) *= -1.0;
  }
  // m = Rot(a) diag(e^r, e^-r) Rot(-b)
  const double a = std::atan2(left(1, 0), left(0, 0));
  const double b = std::atan2(right(1, 0), right(0, 0));
  const double r = std::log(svd.singularValues()(0));
  return rotation_unitary(a, cutoff) * squeeze_unitary(r, cutoff, padding).cast<Complex>() *
         rotation_unitary(-b, cutoff);
}

Eigen::SparseMatrix<double> beamsplitter_unitary(double theta, int cutoff) {
  const int d = cutoff;
  std::vector<Eigen::Triplet<double>> triplets;
  // The generator conserves total photon number, so each N-block is
  // exponentiated separately.
  for (int total = 0; total <= 2 * (d - 1); ++total) {
    const int lo = std::max(0, total - (d - 1));
    const int hi = std::min(d - 1, total);
    const int size = hi - lo + 1;
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(size, size);
    for (int k = lo; k <= hi; ++k) {
      const int col = k - lo;
      const int other = total - k;
      if (k + 1 <= hi)  // a^dag b |k, N-k>
        gen(col + 1, col) += theta * std::sqrt(static_cast<double>((k + 1) * other));
      if (k - 1 >= lo)  // -a b^dag |k, N-k>
        gen(col - 1, col) -= theta * std::sqrt(static_cast<double>(k * (other + 1)));
    }
    const Eigen::MatrixXd block = gen.exp();
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        if (block(i, j) != 0.0) {
          const int ki = lo + i;
          const int kj = lo + j;
          triplets.emplace_back(ki * d + (total - ki), kj * d + (total - kj), block(i, j));
        }
  }
  Eigen::SparseMatrix<double> u(d * d, d * d);
  u.setFromTriplets(triplets.begin(), triplets.end());
  return u;
}

FockDensityMatrix apply_mode_operator(const FockDensityMatrix& rho, int mode, const CMat& op) {
  require_modes(rho, mode);
  const int d = rho.cutoff();
  if (op.rows() != d || op.cols() != d) throw Error(ErrorKind::dimension, "mode operator size mismatch");
  if (rho.modes() == 1) return FockDensityMatrix(1, d, op * rho.rho() * op.adjoint());

  CMat work = mode == 0 ? swap_modes(rho.rho(), d) : rho.rho();
  const CMat op_adj = op.adjoint();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      auto blk = work.block(i * d, j * d, d, d);
      blk = (op * blk * op_adj).eval();
    }
  if (mode == 0) work = swap_modes(work, d);
  return FockDensityMatrix(2, d, std::move(work));
}

FockDensityMatrix displace_mode(const FockDensityMatrix& rho, int mode, const Vec2& xi, int padding) {
  if (xi.isZero(0.0)) return rho;
  const Complex alpha(xi(0) / 2.0, xi(1) / 2.0);
  return apply_mode_operator(rho, mode, displacement_unitary(alpha, rho.cutoff(), padding));
}

FockDensityMatrix partial_trace(const FockDensityMatrix& rho, int keep) {
  if (rho.modes() != 2) throw Error(ErrorKind::dimension, "partial_trace needs a two-mode state");
  require_modes(rho, keep);
  const int d = rho.cutoff();
  CMat out = CMat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        out(i, j) += keep == 0 ? rho.rho()(i * d + k, j * d + k) : rho.rho()(k * d + i, k * d + j);
  return FockDensityMatrix(1, d, std::move(out));
}

FockDensityMatrix build_epr_fock(double s1, double s2, double n, const OracleConfig& config) {
  if (!(s1 > 0.0) || !(s2 > 0.0) || !(n >= 1.0))
    throw Error(ErrorKind::domain, "build_epr_fock: need s1, s2 > 0 and n >= 1");
  const int d = config.cutoff;
  require_cutoff(d);
  const int big = d + config.padding;
  const double mean_photons = (n - 1.0) / 2.0;
  const Eigen::MatrixXd thermal = thermal_populations_matrix(mean_photons, big);

  auto squeezed = [&](double r) {
    const Eigen::MatrixXd u = squeeze_unitary(r, big, config.padding);
    Eigen::MatrixXd rho = (u * thermal * u.transpose()).topLeftCorner(d, d);
    return Eigen::MatrixXd(rho / rho.trace());
  };
  const Eigen::MatrixXd rho1 = squeezed(0.5 * std::log(s1));
  const Eigen::MatrixXd rho2 = squeezed(-0.5 * std::log(s2));

  Eigen::MatrixXd product(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) product.block(i * d, j * d, d, d) = rho1(i, j) * rho2;

  const Eigen::SparseMatrix<double> bs = beamsplitter_unitary(std::numbers::pi / 4.0, d);
  Eigen::MatrixXd mixed = bs * product;
  mixed = (mixed * bs.transpose()).eval();
  mixed /= mixed.trace();

  FockDensityMatrix out(2, d, mixed.cast<Complex>());
  check_leakage(out, config.leakage_bound, "build_epr_fock");
  return out;
}

SubtractionResult subtract_photon_fock(const FockDensityMatrix& rho, int mode,
                                       const std::optional<Mat2>& r, const OracleConfig& config) {
  require_modes(rho, mode);
  const int d = rho.cutoff();
  FockDensityMatrix state = rho;
  if (r) state = apply_mode_operator(state, mode, gaussian_unitary(r->transpose(), d, config.padding));

  const CMat a = annihilation(d).cast<Complex>();
  FockDensityMatrix lowered = apply_mode_operator(state, mode, a);
  const double probability = lowered.trace();
  if (!(probability > 1e-10))
    throw Error(ErrorKind::no_photon, "subtract_photon_fock: mode carries no photon to subtract");
  return {FockDensityMatrix(rho.modes(), d, lowered.rho() / probability), probability};
}

double wigner_single_mode_fock(const FockDensityMatrix& rho, const Vec2& beta) {
  if (rho.modes() != 1) throw Error(ErrorKind::dimension, "wigner_single_mode_fock needs one mode");
  const CMat& m = rho.rho();
  const int d = rho.cutoff();
  // Iterative Laguerre recursion on W_{mn}; alpha = (x + ip) / 2.
  const Complex alpha(beta(0) / 2.0, beta(1) / 2.0);
  std::vector<Complex> w(static_cast<std::size_t>(d));
  w[0] = std::exp(-2.0 * std::norm(alpha)) / (2.0 * std::numbers::pi);
  double total = m(0, 0).real() * w[0].real();
  for (int n = 1; n < d; ++n) {
    w[n] = 2.0 * alpha * w[n - 1] / std::sqrt(static_cast<double>(n));
    total += 2.0 * (m(0, n) * w[n]).real();
  }
  for (int k = 1; k < d; ++k) {
    const double sk = std::sqrt(static_cast<double>(k));
    Complex temp = w[k];
    w[k] = (2.0 * std::conj(alpha) * temp - sk * w[k - 1]) / sk;
    total += (m(k, k) * w[k]).real();
    for (int n = k + 1; n < d; ++n) {
      const Complex next = (2.0 * alpha * w[n - 1] - sk * temp) / std::sqrt(static_cast<double>(n));
      temp = w[n];
      w[n] = next;
      total += 2.0 * (m(k, n) * w[n]).real();
    }
  }
  return total;
}

QuadratureMoments quadrature_moments(const FockDensityMatrix& rho) {
  const int d = rho.cutoff();
  const CMat a = annihilation(d).cast<Complex>();
  const CMat x = a + a.adjoint();
  const CMat p = Complex(0, -1) * (a - a.adjoint());
  const CMat id = CMat::Identity(d, d);
  const CMat& r = rho.rho();

  // tr[rho (A (x) B)] for two modes, tr[rho A] for one.
  auto expect = [&](const CMat& first, const CMat& second) {
    if (rho.modes() == 1) return (r * first).trace();
    Complex sum = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (first(j, i) == Complex(0.0)) continue;
        Complex inner = 0.0;
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) inner += r(i * d + k, j * d + l) * second(l, k);
        sum += first(j, i) * inner;
      }
    return sum;
  };

  const int modes = rho.modes();
  std::vector<CMat> quads;
  for (int k = 0; k < 2 * modes; ++k) quads.push_back(k % 2 == 0 ? x : p);
  auto on_mode = [&](int q) { return q / 2; };

  QuadratureMoments out{VecX::Zero(2 * modes), MatX::Zero(2 * modes, 2 * modes)};
  for (int i = 0; i < 2 * modes; ++i) {
    const CMat& qi = quads[static_cast<std::size_t>(i)];
    out.mean(i) = (on_mode(i) == 0 ? expect(qi, id) : expect(id, qi)).real();
  }
  for (int i = 0; i < 2 * modes; ++i)
    for (int j = i; j < 2 * modes; ++j) {
      const CMat& qi = quads[static_cast<std::size_t>(i)];
      const CMat& qj = quads[static_cast<std::size_t>(j)];
      Complex second;
      if (on_mode(i) == on_mode(j)) {
        const CMat prod = qi * qj;
        second = on_mode(i) == 0 ? expect(prod, id) : expect(id, prod);
      } else {
        second = expect(qi, qj);
      }
      out.covariance(i, j) = out.covariance(j, i) = second.real() - out.mean(i) * out.mean(j);
    }
  return out;
}

OracleResult oracle_reduced_wigner(const FockDensityMatrix& rho, const std::optional<Mat2>& r,
                                   const Vec2& xi_g, PhaseWindow window, Eigen::Index nx,
                                   Eigen::Index np, const OracleConfig& config) {
  if (rho.modes() != 2) throw Error(ErrorKind::dimension, "oracle_reduced_wigner needs a two-mode state");
  FockDensityMatrix state = displace_mode(rho, 1, xi_g, config.padding);
  check_leakage(state, config.leakage_bound, "oracle_reduced_wigner");
  const SubtractionResult sub = subtract_photon_fock(state, 1, r, config);
  const FockDensityMatrix reduced = partial_trace(sub.state, 0);

  WignerGrid grid(window, nx, np);
  for (Eigen::Index i = 0; i < nx; ++i)
    for (Eigen::Index j = 0; j < np; ++j)
      grid.values(i, j) = wigner_single_mode_fock(reduced, Vec2(grid.x(i), grid.p(j)));
  return {std::move(grid), sub.probability, std::max(state.leakage(), sub.state.leakage())};
}

OracleResult oracle_reduced_wigner(double s1, double s2, double n, const std::optional<Mat2>& r,
                                   const Vec2& xi_g, PhaseWindow window, Eigen::Index nx,
                                   Eigen::Index np, const OracleConfig& config) {
  return oracle_reduced_wigner(build_epr_fock(s1, s2, n, config), r, xi_g, window, nx, np, config);
}

}  // namespace steerwig::fock
