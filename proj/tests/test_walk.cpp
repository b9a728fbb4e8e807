#include <doctest.h>

#include <cmath>
#include <random>

#include "printed_matrices.hpp"
#include "qwalk/walk.hpp"
#include "test_support.hpp"

using namespace qwalk;
using namespace testing_support;

namespace {

std::size_t support_size(const ComplexVector& v) {
  std::size_t count = 0;
  for (const auto& z : v) count += std::abs(z) > 0.0;
  return count;
}

ComplexVector scaled(std::initializer_list<double> entries, double scale) {
  ComplexVector v(entries.size());
  std::size_t i = 0;
  for (double x : entries) v[i++] = x * scale;
  return v;
}

}  // namespace

TEST_CASE("grover_diffusion") {
  CHECK(max_norm_diff(grover_diffusion(1), ComplexMatrix{{1.0}}) == 0.0);
  CHECK(max_norm_diff(grover_diffusion(2), ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}) == 0.0);

  const auto g3 = grover_diffusion(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(g3(i, j).real() == doctest::Approx(i == j ? -1.0 / 3.0 : 2.0 / 3.0).epsilon(1e-15));
    }
  }
  for (std::size_t d = 1; d <= 9; ++d) {
    const auto g = grover_diffusion(d);
    CHECK(max_norm_diff(matmul(g, g), ComplexMatrix::identity(d)) <= 1e-12);
  }
  CHECK_THROWS_AS(grover_diffusion(0), std::invalid_argument);
}

TEST_CASE("coin_operator matches the printed coins that agree with the construction") {
  CHECK(max_norm_diff(coin_operator(WalkSpec(cycle_graph(6), 0, 3)), from_table(printed::coin_c6_transfer)) <= 1e-6);
  CHECK(max_norm_diff(coin_operator(WalkSpec(path_graph(5), 0, 0)), from_table(printed::coin_p5_periodicity)) <=
        1e-6);
  CHECK(max_norm_diff(coin_operator(WalkSpec(star_graph(6), 0, 0)), from_table(printed::coin_s6_periodicity)) <=
        1e-6);

  const auto k23 = coin_operator(WalkSpec(complete_bipartite_graph(2, 3), 0, 1));
  CHECK(max_norm_diff(k23, exact_thirds(printed::coin_k23_transfer)) <= 1e-6);
  CHECK(max_norm_diff(k23, from_table(printed::coin_k23_transfer)) <= 0.005);
  const auto k23p = coin_operator(WalkSpec(complete_bipartite_graph(2, 3), 0, 0));
  CHECK(max_norm_diff(k23p, exact_thirds(printed::coin_k23_periodicity)) <= 1e-6);
  CHECK(max_norm_diff(k23p, from_table(printed::coin_k23_periodicity)) <= 0.005);
}

TEST_CASE("coin_operator where the printed coins deviate from the direct-sum rule") {
  SUBCASE("P5 transfer negates the receiver block too") {
    const auto coin = coin_operator(WalkSpec(path_graph(5), 0, 4));
    ComplexMatrix expected = from_table(printed::coin_p5_transfer);
    expected(7, 7) = -1.0;
    CHECK(max_norm_diff(coin, expected) == 0.0);
    // The print differs only in that one entry.
    CHECK(max_norm_diff(coin, from_table(printed::coin_p5_transfer)) == doctest::Approx(2.0));
  }
  SUBCASE("S6 transfer negates vertex 1's block at index 5") {
    const auto coin = coin_operator(WalkSpec(star_graph(6), 0, 1));
    ComplexMatrix expected = from_table(printed::coin_s6_transfer);
    expected(5, 5) = -1.0;
    expected(7, 7) = 1.0;
    CHECK(max_norm_diff(coin, expected) <= 1e-12);
  }
}

TEST_CASE("coin_operator structure") {
  const std::vector<WalkSpec> specs = {WalkSpec(path_graph(5), 0, 4), WalkSpec(cycle_graph(6), 0, 1),
                                       WalkSpec(star_graph(6), 1, 0), WalkSpec(complete_bipartite_graph(2, 3), 0, 1),
                                       WalkSpec(complete_bipartite_graph(3, 4), 2, 2)};
  for (const auto& spec : specs) {
    const auto coin = coin_operator(spec);
    CHECK(is_real(coin));
    CHECK(is_hermitian(coin, 0.0));
    CHECK(max_norm_diff(matmul(coin, coin), ComplexMatrix::identity(spec.dimension())) <= 1e-12);

    // Each block is ε·(2/d·J − I); nothing outside the blocks.
    const auto& space = spec.space();
    for (std::size_t r = 0; r < coin.rows(); ++r) {
      const Vertex v = space.edge(r).from;
      const auto block = space.outgoing(v);
      const double d = static_cast<double>(block.size());
      const double eps = (v == spec.sender() || v == spec.receiver()) ? -1.0 : 1.0;
      for (std::size_t c = 0; c < coin.cols(); ++c) {
        const double expected = block.contains(c) ? eps * (2.0 / d - (r == c ? 1.0 : 0.0)) : 0.0;
        CHECK(std::abs(coin(r, c).real() - expected) <= 1e-12);
      }
    }

    const WalkSpec swapped(spec.graph(), spec.receiver(), spec.sender());
    CHECK(max_norm_diff(coin_operator(swapped), coin) == 0.0);
  }
}

TEST_CASE("shift_operator matches the printed shifts") {
  CHECK(max_norm_diff(shift_operator(edge_space(path_graph(5))), from_table(printed::shift_p5)) == 0.0);
  CHECK(max_norm_diff(shift_operator(edge_space(cycle_graph(6))), from_table(printed::shift_c6)) == 0.0);
  CHECK(max_norm_diff(shift_operator(edge_space(star_graph(6))), from_table(printed::shift_s6)) == 0.0);
  CHECK(max_norm_diff(shift_operator(edge_space(complete_bipartite_graph(2, 3))), from_table(printed::shift_k23)) ==
        0.0);

  const auto k23 = shift_operator(edge_space(complete_bipartite_graph(2, 3)));
  CHECK(k23(6, 0) == Complex{1.0});

  for (const Graph& g : {path_graph(7), cycle_graph(5), star_graph(4), complete_bipartite_graph(3, 3)}) {
    const auto s = shift_operator(edge_space(g));
    CHECK(max_norm_diff(matmul(s, s), ComplexMatrix::identity(s.rows())) == 0.0);
  }
}

TEST_CASE("walk_unitary") {
  const std::vector<WalkSpec> specs = {WalkSpec(path_graph(5), 0, 4), WalkSpec(star_graph(6), 0, 1),
                                       WalkSpec(cycle_graph(6), 0, 3), WalkSpec(complete_bipartite_graph(2, 3), 0, 0)};
  for (const auto& spec : specs) {
    const auto ops = walk_unitary(spec);
    CHECK(ops.unitary.rows() == spec.dimension());
    CHECK(is_unitary(ops.unitary, 1e-12));
    CHECK(is_real(ops.unitary));
    CHECK(max_norm_diff(ops.unitary, matmul(ops.shift, ops.coin)) == 0.0);
  }
  CHECK(walk_unitary(WalkSpec(path_graph(5), 0, 4)).unitary.rows() == 8);
  CHECK(walk_unitary(WalkSpec(star_graph(6), 0, 1)).unitary.rows() == 10);
}

TEST_CASE("WalkSpec rejects vertices outside the graph") {
  CHECK_THROWS_AS(WalkSpec(path_graph(5), 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(WalkSpec(path_graph(5), 0, 9), std::invalid_argument);
  CHECK(WalkSpec(path_graph(5), 2, 2).is_periodicity());
}

TEST_CASE("sender_state") {
  CHECK(max_norm_diff(sender_state(WalkSpec(path_graph(5), 0, 4)), ComplexVector::basis(8, 0)) == 0.0);
  CHECK(max_norm_diff(sender_state(WalkSpec(cycle_graph(6), 0, 3)),
                      scaled({1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 1 / std::sqrt(2.0))) <= 1e-15);
  CHECK(max_norm_diff(sender_state(WalkSpec(star_graph(6), 0, 1)),
                      scaled({1, 1, 1, 1, 1, 0, 0, 0, 0, 0}, 1 / std::sqrt(5.0))) <= 1e-15);
}

TEST_CASE("receiver_state") {
  SUBCASE("outgoing convention reproduces the printed receiver vectors") {
    CHECK(max_norm_diff(receiver_state(WalkSpec(path_graph(5), 0, 4), ReceiverMode::Outgoing),
                        ComplexVector::basis(8, 7)) == 0.0);
    CHECK(max_norm_diff(receiver_state(WalkSpec(cycle_graph(6), 0, 3), ReceiverMode::Outgoing),
                        scaled({0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0}, 1 / std::sqrt(2.0))) <= 1e-15);
    CHECK(max_norm_diff(receiver_state(WalkSpec(star_graph(6), 0, 1), ReceiverMode::Outgoing),
                        ComplexVector::basis(10, 5)) == 0.0);
  }
  SUBCASE("incoming convention follows the arriving edges") {
    // P5: (3,4) is index 6. S6: the only edge into vertex 1 is (0,1), index 0.
    CHECK(max_norm_diff(receiver_state(WalkSpec(path_graph(5), 0, 4)), ComplexVector::basis(8, 6)) == 0.0);
    CHECK(max_norm_diff(receiver_state(WalkSpec(star_graph(6), 0, 1)), ComplexVector::basis(10, 0)) == 0.0);
    // C6 edges into 3: (2,3) at 5 and (4,3) at 8.
    const auto c6 = receiver_state(WalkSpec(cycle_graph(6), 0, 3));
    CHECK(std::abs(c6[5] - 1 / std::sqrt(2.0)) <= 1e-15);
    CHECK(std::abs(c6[8] - 1 / std::sqrt(2.0)) <= 1e-15);
  }
  SUBCASE("unit norm and support size") {
    const WalkSpec spec(complete_bipartite_graph(2, 3), 0, 3);
    for (auto mode : {ReceiverMode::Incoming, ReceiverMode::Outgoing}) {
      const auto psi = receiver_state(spec, mode);
      CHECK(std::abs(psi.norm() - 1.0) <= 1e-12);
      CHECK(support_size(psi) == spec.graph().degree(3));
    }
    const auto s = sender_state(spec);
    CHECK(std::abs(s.norm() - 1.0) <= 1e-12);
    CHECK(support_size(s) == spec.graph().degree(0));
  }
}
