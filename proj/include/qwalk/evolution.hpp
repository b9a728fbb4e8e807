#pragma once

#include <optional>
#include <vector>

#include "qwalk/channels.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// Walker state after `step` applications of U.
struct EvolutionRecord {
  std::size_t step = 0;
  ComplexVector pure_state;
  ComplexMatrix density;                      ///< |ψ_t⟩⟨ψ_t|
  std::optional<ComplexMatrix> noisy_density;  ///< channel at time t applied once to density
};

/// U^t |ψ0⟩ by repeated matrix-vector products.
ComplexVector evolve_pure(const WalkOperators& ops, const ComplexVector& psi0, std::size_t t);

/// U^t ρ0 (U^t)†
ComplexMatrix evolve_density(const WalkOperators& ops, const ComplexMatrix& rho0, std::size_t t);

/// Noiseless evolution to step t followed by a single application of the
/// channel's Kraus set at time t. Noise is not compounded across steps.
ComplexMatrix noisy_state(const WalkOperators& ops, const ComplexVector& psi0, const NoiseChannel& ch,
                          std::size_t t);

/// Records for steps 0..steps inclusive, sharing one pass of the evolution.
std::vector<EvolutionRecord> evolve_records(const WalkOperators& ops, const ComplexVector& psi0,
                                            std::size_t steps,
                                            const std::optional<NoiseChannel>& channel = std::nullopt);

}  // namespace qwalk
