#include "qwalk/walk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qwalk {

WalkSpec::WalkSpec(Graph graph, Vertex sender, Vertex receiver)
    : graph_(std::make_shared<const Graph>(std::move(graph))),
      space_(std::make_shared<const DirectedEdgeSpace>(*graph_)),
      sender_(sender),
      receiver_(receiver) {
  if (!graph_->has_vertex(sender)) {
    throw std::invalid_argument("sender vertex " + std::to_string(sender) + " is not in the graph");
  }
  if (!graph_->has_vertex(receiver)) {
    throw std::invalid_argument("receiver vertex " + std::to_string(receiver) + " is not in the graph");
  }
}

ComplexMatrix grover_diffusion(std::size_t d) {
  if (d == 0) throw std::invalid_argument("grover_diffusion: degree must be positive");
  const double off = 2.0 / static_cast<double>(d);
  ComplexMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) g(i, j) = (i == j) ? off - 1.0 : off;
  }
  return g;
}

ComplexMatrix coin_operator(const WalkSpec& spec) {
  const auto& space = spec.space();
  ComplexMatrix coin(space.dimension(), space.dimension());
  for (Vertex v = 0; v < space.vertex_count(); ++v) {
    const IndexRange block = space.outgoing(v);
    const bool negate = v == spec.sender() || v == spec.receiver();
    const ComplexMatrix g = grover_diffusion(block.size());
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = 0; j < block.size(); ++j) {
        coin(block.begin + i, block.begin + j) = negate ? -g(i, j) : g(i, j);
      }
    }
  }
  return coin;
}

ComplexMatrix shift_operator(const DirectedEdgeSpace& space) {
  ComplexMatrix shift(space.dimension(), space.dimension());
  for (std::size_t k = 0; k < space.dimension(); ++k) shift(space.reverse_of(k), k) = 1.0;
  return shift;
}

WalkOperators walk_unitary(const WalkSpec& spec) {
  WalkOperators ops;
  ops.coin = coin_operator(spec);
  ops.shift = shift_operator(spec.space());
  ops.unitary = matmul(ops.shift, ops.coin);

  const auto id = ComplexMatrix::identity(spec.dimension());
  if (max_norm_diff(matmul(ops.coin, ops.coin), id) > Tolerances::unitary) {
    throw std::logic_error("coin operator is not an involution");
  }
  if (max_norm_diff(matmul(ops.shift, ops.shift), id) > Tolerances::unitary) {
    throw std::logic_error("shift operator is not an involution");
  }
  if (!is_unitary(ops.unitary)) throw std::logic_error("walk operator is not unitary");
  return ops;
}

ComplexVector sender_state(const WalkSpec& spec) {
  const IndexRange block = spec.space().outgoing(spec.sender());
  ComplexVector psi(spec.dimension());
  const double amp = 1.0 / std::sqrt(static_cast<double>(block.size()));
  for (std::size_t k = block.begin; k < block.end; ++k) psi[k] = amp;
  return psi;
}

ComplexVector receiver_state(const WalkSpec& spec, ReceiverMode mode) {
  const auto& space = spec.space();
  ComplexVector psi(spec.dimension());
  if (mode == ReceiverMode::Outgoing) {
    const IndexRange block = space.outgoing(spec.receiver());
    const double amp = 1.0 / std::sqrt(static_cast<double>(block.size()));
    for (std::size_t k = block.begin; k < block.end; ++k) psi[k] = amp;
  } else {
    const auto& in = space.incoming(spec.receiver());
    const double amp = 1.0 / std::sqrt(static_cast<double>(in.size()));
    for (std::size_t k : in) psi[k] = amp;
  }
  return psi;
}

}  // namespace qwalk
