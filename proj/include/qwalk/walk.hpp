#pragma once

#include <memory>

#include "qwalk/graph.hpp"
#include "qwalk/linalg.hpp"

namespace qwalk {

/// Which directed edges carry the receiver's target amplitude.
///   Incoming: edges (u, r), i.e. the walker has just arrived at r.
///   Outgoing: edges (r, v), the convention of the printed case-study vectors.
enum class ReceiverMode { Incoming, Outgoing };

/// Graph plus sender/receiver placement. sender == receiver describes a
/// periodicity experiment.
class WalkSpec {
 public:
  WalkSpec(Graph graph, Vertex sender, Vertex receiver);

  const Graph& graph() const noexcept { return *graph_; }
  const DirectedEdgeSpace& space() const noexcept { return *space_; }
  Vertex sender() const noexcept { return sender_; }
  Vertex receiver() const noexcept { return receiver_; }
  bool is_periodicity() const noexcept { return sender_ == receiver_; }
  std::size_t dimension() const noexcept { return space_->dimension(); }

 private:
  std::shared_ptr<const Graph> graph_;
  std::shared_ptr<const DirectedEdgeSpace> space_;
  Vertex sender_;
  Vertex receiver_;
};

struct WalkOperators {
  ComplexMatrix coin;
  ComplexMatrix shift;
  ComplexMatrix unitary;  ///< shift * coin
};

/// 2|φ⟩⟨φ| - I for the uniform unit vector φ in dimension d.
ComplexMatrix grover_diffusion(std::size_t d);

/// Direct sum of per-vertex Grover blocks in vertex order; the blocks of the
/// sender and receiver are negated (once, when they coincide).
ComplexMatrix coin_operator(const WalkSpec& spec);

/// Permutation with a 1 at (reverse_of(k), k).
ComplexMatrix shift_operator(const DirectedEdgeSpace& space);

/// Builds C, S and U = S*C and verifies C² = S² = I and U†U = I.
/// A failed check is an internal error and throws std::logic_error.
WalkOperators walk_unitary(const WalkSpec& spec);

/// Uniform superposition over the outgoing edges of the sender.
ComplexVector sender_state(const WalkSpec& spec);

/// Uniform superposition over the receiver's incoming or outgoing edges.
ComplexVector receiver_state(const WalkSpec& spec, ReceiverMode mode = ReceiverMode::Incoming);

}  // namespace qwalk
