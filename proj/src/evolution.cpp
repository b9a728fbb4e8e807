#include "qwalk/evolution.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

namespace {

void check_state(const WalkOperators& ops, const ComplexVector& psi0) {
  if (psi0.size() != ops.unitary.cols()) {
    throw DimensionError("initial state has dimension " + std::to_string(psi0.size()) +
                         " but the walk acts in dimension " + std::to_string(ops.unitary.cols()));
  }
  if (std::abs(psi0.norm() - 1.0) > Tolerances::norm) {
    throw std::invalid_argument("initial state is not normalized");
  }
}

}  // namespace

ComplexVector evolve_pure(const WalkOperators& ops, const ComplexVector& psi0, std::size_t t) {
  check_state(ops, psi0);
  ComplexVector psi = psi0;
  for (std::size_t i = 0; i < t; ++i) psi = matvec(ops.unitary, psi);
  return psi;
}

ComplexMatrix evolve_density(const WalkOperators& ops, const ComplexMatrix& rho0, std::size_t t) {
  if (!rho0.is_square() || rho0.rows() != ops.unitary.rows()) {
    throw DimensionError("density matrix dimension does not match the walk");
  }
  if (!is_density_matrix(rho0)) throw std::invalid_argument("evolve_density: input is not a density matrix");

  const ComplexMatrix u_dag = ops.unitary.adjoint();
  ComplexMatrix rho = rho0;
  for (std::size_t i = 0; i < t; ++i) rho = matmul(matmul(ops.unitary, rho), u_dag);
  return rho;
}

ComplexMatrix noisy_state(const WalkOperators& ops, const ComplexVector& psi0, const NoiseChannel& ch,
                          std::size_t t) {
  if (ch.dimension() != ops.unitary.rows()) throw DimensionError("channel dimension does not match the walk");
  const ComplexVector psi = evolve_pure(ops, psi0, t);
  return apply_channel(projector(psi), kraus_set(ch, static_cast<double>(t)));
}

std::vector<EvolutionRecord> evolve_records(const WalkOperators& ops, const ComplexVector& psi0,
                                            std::size_t steps, const std::optional<NoiseChannel>& channel) {
  check_state(ops, psi0);
  if (channel && channel->dimension() != ops.unitary.rows()) {
    throw DimensionError("channel dimension does not match the walk");
  }

  std::vector<EvolutionRecord> records;
  records.reserve(steps + 1);
  ComplexVector psi = psi0;
  for (std::size_t t = 0; t <= steps; ++t) {
    if (t > 0) psi = matvec(ops.unitary, psi);
    EvolutionRecord rec{t, psi, projector(psi), std::nullopt};
    if (channel) rec.noisy_density = apply_channel(rec.density, kraus_set(*channel, static_cast<double>(t)));
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace qwalk
