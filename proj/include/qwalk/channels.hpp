#pragma once

#include <stdexcept>
#include <string_view>
#include <vector>

#include "qwalk/linalg.hpp"

namespace qwalk {

/// Thrown for RTN parameters outside the oscillatory regime (2a/γ)² > 1.
class UnsupportedRegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a memory kernel value leaves [-1, 1].
class InvalidKernelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct WeylIndex {
  std::size_t d = 1;
  std::size_t u = 0;
  std::size_t v = 0;
};

/// U_{u,v} = Σ_k exp(2πi·k·u/d) |k⟩⟨(k+v) mod d|
ComplexMatrix weyl_operator(WeylIndex idx);

/// Damped-oscillator RTN kernel e^{-γt}[cos(νγt) + sin(νγt)/ν], ν = √((2a/γ)² - 1).
double rtn_kernel(double t, double a, double gamma);

/// Modified Ornstein-Uhlenbeck kernel exp(-(λ/2)(t + (e^{-γt} - 1)/γ)).
double oun_kernel(double t, double lambda, double gamma);

enum class NoiseKind { Rtn, Oun };

std::string_view to_string(NoiseKind kind);

/// Time-parameterized dephasing channel in dimension `dimension`.
/// For RTN, `strength` is a and `gamma` is the damping rate; for OUN,
/// `strength` is λ and `gamma` is the noise bandwidth.
class NoiseChannel {
 public:
  static NoiseChannel rtn(std::size_t dimension, double a = 0.1, double gamma = 0.01);
  static NoiseChannel oun(std::size_t dimension, double lambda = 1.0, double gamma = 0.05);

  NoiseKind kind() const noexcept { return kind_; }
  std::size_t dimension() const noexcept { return dimension_; }
  double strength() const noexcept { return strength_; }
  double gamma() const noexcept { return gamma_; }

  double kernel(double t) const;

 private:
  NoiseChannel(NoiseKind kind, std::size_t dimension, double strength, double gamma)
      : kind_(kind), dimension_(dimension), strength_(strength), gamma_(gamma) {}

  NoiseKind kind_;
  std::size_t dimension_;
  double strength_;
  double gamma_;
};

/// Kraus operators of a channel at one time; completeness is checked on construction.
class KrausSet {
 public:
  KrausSet(std::vector<ComplexMatrix> operators, double time);

  const std::vector<ComplexMatrix>& operators() const noexcept { return operators_; }
  double time() const noexcept { return time_; }
  std::size_t dimension() const noexcept { return operators_.front().rows(); }

  /// Σ K†K
  ComplexMatrix completeness() const;

 private:
  std::vector<ComplexMatrix> operators_;
  double time_;
};

/// {√((1+κ)/2)·U_{0,0}, √((1-κ)/2)·U_{1,0}} with κ the channel kernel at t.
KrausSet kraus_set(const NoiseChannel& ch, double t);

/// Same pair for an explicit kernel value κ ∈ [-1, 1].
KrausSet dephasing_kraus(std::size_t dimension, double kappa, double t = 0.0);

/// ρ' = Σ K ρ K†
ComplexMatrix apply_channel(const ComplexMatrix& rho, const KrausSet& ks);

}  // namespace qwalk
