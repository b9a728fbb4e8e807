#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qwalk/channels.hpp"
#include "test_support.hpp"

using namespace qwalk;
using namespace testing_support;

namespace {

// Reference values computed independently (double precision, direct formula
// evaluation outside this code base).
constexpr double kRtnAt16 = -0.8532027710227794;  // a=0.1, γ=0.01
constexpr double kRtnAt50 = -0.52920881890702;
constexpr double kOunAt10 = 0.3446221783984445;   // λ=1, γ=0.05
constexpr double kOunAt50 = 1.346145959399988e-07;

}  // namespace

TEST_CASE("weyl_operator") {
  for (std::size_t d : {1u, 2u, 5u, 12u}) {
    CHECK(max_norm_diff(weyl_operator({d, 0, 0}), ComplexMatrix::identity(d)) == 0.0);
  }

  CHECK(max_norm_diff(weyl_operator({2, 1, 0}), ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}) <= 1e-15);

  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const std::vector<Complex> diag = {1.0, w, w * w};
  CHECK(max_norm_diff(weyl_operator({3, 1, 0}), ComplexMatrix::diagonal(std::span<const Complex>(diag))) <= 1e-15);

  // v shifts the column: U_{0,1} |k⟩⟨k+1|.
  const auto x = weyl_operator({4, 0, 1});
  for (std::size_t k = 0; k < 4; ++k) CHECK(x(k, (k + 1) % 4) == Complex{1.0});

  for (std::size_t d : {2u, 3u, 8u, 10u, 12u}) {
    for (std::size_t u = 0; u < d; ++u) {
      for (std::size_t v = 0; v < d; ++v) {
        const auto m = weyl_operator({d, u, v});
        CHECK(is_unitary(m, 1e-12));
        CHECK(is_unitary(m.adjoint(), 1e-12));
      }
    }
  }

  CHECK_THROWS_AS(weyl_operator({3, 3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(weyl_operator({3, 0, 4}), std::invalid_argument);
}

TEST_CASE("rtn_kernel") {
  CHECK(rtn_kernel(0.0, 0.1, 0.01) == 1.0);
  CHECK(rtn_kernel(0.0, 2.0, 0.7) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::sqrt(std::pow(2 * 0.1 / 0.01, 2) - 1) == doctest::Approx(19.974984355438178).epsilon(1e-14));
  CHECK(rtn_kernel(16.0, 0.1, 0.01) == doctest::Approx(kRtnAt16).epsilon(1e-13));
  CHECK(rtn_kernel(50.0, 0.1, 0.01) == doctest::Approx(kRtnAt50).epsilon(1e-13));

  for (int t = 0; t <= 300; ++t) CHECK(std::abs(rtn_kernel(t, 0.1, 0.01)) <= 1.0);

  int sign_changes = 0;
  double prev = rtn_kernel(0.0, 0.1, 0.01);
  for (int t = 1; t <= 100; ++t) {
    const double cur = rtn_kernel(t, 0.1, 0.01);
    sign_changes += (cur < 0) != (prev < 0);
    prev = cur;
  }
  CHECK(sign_changes >= 2);

  CHECK_THROWS_AS(rtn_kernel(1.0, 0.005, 0.01), UnsupportedRegimeError);  // a/γ = 0.5 exactly
  CHECK_THROWS_AS(rtn_kernel(1.0, 0.001, 0.01), UnsupportedRegimeError);
  CHECK_THROWS_AS(rtn_kernel(1.0, -0.1, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(rtn_kernel(-1.0, 0.1, 0.01), std::invalid_argument);
}

TEST_CASE("oun_kernel") {
  CHECK(oun_kernel(0.0, 1.0, 0.05) == 1.0);
  CHECK(oun_kernel(0.0, 3.0, 2.0) == 1.0);
  CHECK(oun_kernel(10.0, 1.0, 0.05) == doctest::Approx(kOunAt10).epsilon(1e-13));
  CHECK(oun_kernel(50.0, 1.0, 0.05) == doctest::Approx(kOunAt50).epsilon(1e-12));

  double prev = oun_kernel(0.0, 1.0, 0.05);
  for (int t = 1; t <= 100; ++t) {
    const double cur = oun_kernel(t, 1.0, 0.05);
    CHECK(cur > 0.0);
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK_THROWS_AS(oun_kernel(1.0, 0.0, 0.05), std::invalid_argument);
}

TEST_CASE("kraus_set") {
  SUBCASE("t = 0 is the identity channel") {
    for (const auto& ch : {NoiseChannel::rtn(8), NoiseChannel::oun(8)}) {
      const auto ks = kraus_set(ch, 0.0);
      REQUIRE(ks.operators().size() == 2);
      CHECK(max_norm_diff(ks.operators()[0], ComplexMatrix::identity(8)) == 0.0);
      CHECK(max_abs(ks.operators()[1]) == 0.0);
    }
  }

  SUBCASE("completeness across time") {
    const auto rtn = NoiseChannel::rtn(8, 0.1, 0.01);
    for (int t = 0; t <= 100; ++t) {
      const auto ks = kraus_set(rtn, t);
      CHECK(max_norm_diff(ks.completeness(), ComplexMatrix::identity(8)) <= 1e-12);
      CHECK(ks.time() == t);
    }
  }

  SUBCASE("OUN weights sum to one") {
    const auto ch = NoiseChannel::oun(12, 1.0, 0.05);
    const auto ks = kraus_set(ch, 50.0);
    const double p = oun_kernel(50.0, 1.0, 0.05);
    CHECK(std::norm(ks.operators()[0](3, 3)) == doctest::Approx((1 + p) / 2).epsilon(1e-14));
    CHECK(std::norm(ks.operators()[1](3, 3)) == doctest::Approx((1 - p) / 2).epsilon(1e-14));
  }

  SUBCASE("invalid kernel values are rejected") {
    CHECK_THROWS_AS(dephasing_kraus(4, 1.5), InvalidKernelError);
    CHECK_THROWS_AS(dephasing_kraus(4, std::nan("")), InvalidKernelError);
  }

  SUBCASE("an incomplete set is rejected") {
    CHECK_THROWS_AS(KrausSet({0.5 * ComplexMatrix::identity(3)}, 0.0), std::logic_error);
  }

  SUBCASE("channel constructors validate parameters") {
    CHECK_THROWS_AS(NoiseChannel::rtn(8, 0.001, 0.01), UnsupportedRegimeError);
    CHECK_THROWS_AS(NoiseChannel::oun(8, -1.0, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(NoiseChannel::oun(0), std::invalid_argument);
  }
}

TEST_CASE("apply_channel") {
  std::mt19937_64 rng(5);

  SUBCASE("identity set leaves the state unchanged") {
    const auto rho = random_density(6, rng);
    CHECK(max_norm_diff(apply_channel(rho, kraus_set(NoiseChannel::rtn(6), 0.0)), rho) <= 1e-15);
  }

  SUBCASE("full dephasing of |+⟩ in d=2 gives I/2") {
    const ComplexVector plus = {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)};
    const auto rho = projector(plus);
    // Hand-computed (ρ + ZρZ)/2.
    const ComplexMatrix z{{1.0, 0.0}, {0.0, -1.0}};
    const ComplexMatrix expected = 0.5 * (rho + matmul(matmul(z, rho), z));
    const auto out = apply_channel(rho, dephasing_kraus(2, 0.0));
    CHECK(max_norm_diff(out, expected) <= 1e-15);
    CHECK(max_norm_diff(out, 0.5 * ComplexMatrix::identity(2)) <= 1e-15);
  }

  SUBCASE("diagonal states are fixed points") {
    std::vector<double> pops = {0.1, 0.2, 0.3, 0.4};
    const auto rho = ComplexMatrix::diagonal(std::span<const double>(pops));
    for (double kappa : {-1.0, -0.3, 0.0, 0.7}) {
      CHECK(max_norm_diff(apply_channel(rho, dephasing_kraus(4, kappa)), rho) <= 1e-15);
    }
  }

  SUBCASE("trace, Hermiticity and populations are preserved") {
    for (const auto& ch : {NoiseChannel::rtn(10), NoiseChannel::oun(10)}) {
      for (int trial = 0; trial < 20; ++trial) {
        const auto rho = trial % 2 ? random_density(10, rng) : projector(random_unit_vector(10, rng));
        const auto out = apply_channel(rho, kraus_set(ch, 1.0 + 5.0 * trial));
        CHECK(std::abs(out.trace() - rho.trace()) <= 1e-12);
        CHECK(is_hermitian(out, 1e-14));
        CHECK(hermitian_eig(out).values.front() >= -1e-12);
        for (std::size_t k = 0; k < 10; ++k) CHECK(std::abs(out(k, k) - rho(k, k)) <= 1e-15);
      }
    }
  }

  SUBCASE("invalid inputs") {
    CHECK_THROWS_AS(apply_channel(ComplexMatrix::identity(3), dephasing_kraus(4, 0.5)), DimensionError);
    CHECK_THROWS_AS(apply_channel(ComplexMatrix::identity(4), dephasing_kraus(4, 0.5)), std::invalid_argument);
  }
}
