#pragma once

#include <stdexcept>

#include "qwalk/linalg.hpp"

namespace qwalk {

class FidelityRangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Fidelity in [0, 1]. Raw values within 1e-10 of the interval are clamped;
/// anything further out throws FidelityRangeError.
class FidelityValue {
 public:
  static constexpr double kClampWindow = 1e-10;

  explicit FidelityValue(double raw);

  double value() const noexcept { return value_; }
  operator double() const noexcept { return value_; }

 private:
  double value_;
};

/// |⟨ψ|φ⟩|²
FidelityValue fidelity_pure(const ComplexVector& psi, const ComplexVector& phi);

/// Uhlmann fidelity (tr √(√ρ σ √ρ))².
FidelityValue fidelity_density(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// ⟨φ|ρ|φ⟩, which equals the Uhlmann fidelity when the target is pure.
FidelityValue fidelity_pure_target(const ComplexMatrix& rho, const ComplexVector& phi);

}  // namespace qwalk
