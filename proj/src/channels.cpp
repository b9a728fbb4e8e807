#include "qwalk/channels.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qwalk {

ComplexMatrix weyl_operator(WeylIndex idx) {
  if (idx.d == 0) throw std::invalid_argument("weyl_operator: dimension must be positive");
  if (idx.u >= idx.d || idx.v >= idx.d) {
    throw std::invalid_argument("weyl_operator: indices must lie in [0, d-1]");
  }
  const double d = static_cast<double>(idx.d);
  ComplexMatrix w(idx.d, idx.d);
  for (std::size_t k = 0; k < idx.d; ++k) {
    // Reduce k*u mod d first so the phase argument stays small.
    const double phase = 2.0 * std::numbers::pi * static_cast<double>((k * idx.u) % idx.d) / d;
    w(k, (k + idx.v) % idx.d) = std::polar(1.0, phase);
  }
  return w;
}

double rtn_kernel(double t, double a, double gamma) {
  if (!(a > 0.0) || !(gamma > 0.0)) throw std::invalid_argument("rtn_kernel: a and gamma must be positive");
  if (t < 0.0) throw std::invalid_argument("rtn_kernel: time must be nonnegative");
  const double ratio = 2.0 * a / gamma;
  const double nu_sq = ratio * ratio - 1.0;
  if (!(nu_sq > 0.0)) {
    throw UnsupportedRegimeError("rtn_kernel: (2a/gamma)^2 <= 1 has no real oscillation frequency");
  }
  const double nu = std::sqrt(nu_sq);
  const double phase = nu * gamma * t;
  return std::exp(-gamma * t) * (std::cos(phase) + std::sin(phase) / nu);
}

double oun_kernel(double t, double lambda, double gamma) {
  if (!(lambda > 0.0) || !(gamma > 0.0)) {
    throw std::invalid_argument("oun_kernel: lambda and gamma must be positive");
  }
  if (t < 0.0) throw std::invalid_argument("oun_kernel: time must be nonnegative");
  return std::exp(-0.5 * lambda * (t + std::expm1(-gamma * t) / gamma));
}

std::string_view to_string(NoiseKind kind) {
  return kind == NoiseKind::Rtn ? "rtn" : "oun";
}

NoiseChannel NoiseChannel::rtn(std::size_t dimension, double a, double gamma) {
  if (dimension == 0) throw std::invalid_argument("noise channel dimension must be positive");
  if (!(a > 0.0) || !(gamma > 0.0)) throw std::invalid_argument("RTN parameters a and gamma must be positive");
  // Real ν exists exactly when a/γ > 0.5, so every accepted RTN channel is
  // in the non-Markovian regime.
  rtn_kernel(0.0, a, gamma);
  return NoiseChannel(NoiseKind::Rtn, dimension, a, gamma);
}

NoiseChannel NoiseChannel::oun(std::size_t dimension, double lambda, double gamma) {
  if (dimension == 0) throw std::invalid_argument("noise channel dimension must be positive");
  if (!(lambda > 0.0) || !(gamma > 0.0)) {
    throw std::invalid_argument("OUN parameters lambda and gamma must be positive");
  }
  return NoiseChannel(NoiseKind::Oun, dimension, lambda, gamma);
}

double NoiseChannel::kernel(double t) const {
  return kind_ == NoiseKind::Rtn ? rtn_kernel(t, strength_, gamma_) : oun_kernel(t, strength_, gamma_);
}

KrausSet::KrausSet(std::vector<ComplexMatrix> operators, double time)
    : operators_(std::move(operators)), time_(time) {
  if (operators_.empty()) throw std::invalid_argument("KrausSet needs at least one operator");
  if (time_ < 0.0) throw std::invalid_argument("KrausSet time must be nonnegative");
  const std::size_t d = operators_.front().rows();
  for (const auto& k : operators_) {
    if (k.rows() != d || k.cols() != d) throw DimensionError("Kraus operators must all be d x d");
  }
  const double err = max_norm_diff(completeness(), ComplexMatrix::identity(d));
  if (err > Tolerances::completeness) {
    throw std::logic_error("Kraus set violates completeness by " + std::to_string(err));
  }
}

ComplexMatrix KrausSet::completeness() const {
  const std::size_t d = dimension();
  ComplexMatrix sum(d, d);
  for (const auto& k : operators_) sum += matmul(k.adjoint(), k);
  return sum;
}

KrausSet dephasing_kraus(std::size_t dimension, double kappa, double t) {
  if (!std::isfinite(kappa) || std::abs(kappa) > 1.0) {
    throw InvalidKernelError("kernel value " + std::to_string(kappa) + " outside [-1, 1]");
  }
  std::vector<ComplexMatrix> ops;
  ops.push_back(std::sqrt((1.0 + kappa) / 2.0) * weyl_operator({dimension, 0, 0}));
  ops.push_back(std::sqrt((1.0 - kappa) / 2.0) * weyl_operator({dimension, 1 % dimension, 0}));
  return KrausSet(std::move(ops), t);
}

KrausSet kraus_set(const NoiseChannel& ch, double t) {
  return dephasing_kraus(ch.dimension(), ch.kernel(t), t);
}

ComplexMatrix apply_channel(const ComplexMatrix& rho, const KrausSet& ks) {
  if (!rho.is_square() || rho.rows() != ks.dimension()) {
    throw DimensionError("apply_channel: density matrix is " + std::to_string(rho.rows()) + "x" +
                         std::to_string(rho.cols()) + " but channel acts in dimension " +
                         std::to_string(ks.dimension()));
  }
  if (!is_density_matrix(rho)) throw std::invalid_argument("apply_channel: input is not a density matrix");

  ComplexMatrix out(rho.rows(), rho.cols());
  for (const auto& k : ks.operators()) out += matmul(matmul(k, rho), k.adjoint());
  return out;
}

}  // namespace qwalk
