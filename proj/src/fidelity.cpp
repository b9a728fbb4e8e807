#include "qwalk/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qwalk {

FidelityValue::FidelityValue(double raw) {
  if (!std::isfinite(raw) || raw < -kClampWindow || raw > 1.0 + kClampWindow) {
    throw FidelityRangeError("fidelity " + std::to_string(raw) + " is outside [0, 1]");
  }
  value_ = std::clamp(raw, 0.0, 1.0);
}

namespace {

void require_unit(const ComplexVector& v, const char* name) {
  if (std::abs(v.norm() - 1.0) > Tolerances::norm) {
    throw std::invalid_argument(std::string(name) + " is not a unit vector");
  }
}

void require_density(const ComplexMatrix& m, const char* name) {
  if (!is_density_matrix(m)) throw std::invalid_argument(std::string(name) + " is not a density matrix");
}

}  // namespace

FidelityValue fidelity_pure(const ComplexVector& psi, const ComplexVector& phi) {
  if (psi.size() != phi.size()) throw DimensionError("fidelity_pure: dimension mismatch");
  require_unit(psi, "psi");
  require_unit(phi, "phi");
  return FidelityValue(std::norm(inner(psi, phi)));
}

FidelityValue fidelity_density(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw DimensionError("fidelity_density: dimension mismatch");
  }
  require_density(rho, "rho");
  require_density(sigma, "sigma");

  const ComplexMatrix root_rho = psd_sqrt(rho);
  ComplexMatrix inner_product = matmul(matmul(root_rho, sigma), root_rho);
  // Re-symmetrize to remove round-off asymmetry from the triple product.
  inner_product = 0.5 * (inner_product + inner_product.adjoint());
  const double t = psd_sqrt(inner_product).trace().real();
  return FidelityValue(t * t);
}

FidelityValue fidelity_pure_target(const ComplexMatrix& rho, const ComplexVector& phi) {
  if (!rho.is_square() || rho.rows() != phi.size()) throw DimensionError("fidelity_pure_target: dimension mismatch");
  require_density(rho, "rho");
  require_unit(phi, "phi");
  return FidelityValue(inner(phi, matvec(rho, phi)).real());
}

}  // namespace qwalk
