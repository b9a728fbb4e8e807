#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical thresholds shared across the library. All are max-norm based.
struct Tolerances {
  /// Unit-norm check for pure states.
  static constexpr double norm = 1e-10;
  /// Symmetry check before Hermitian eigendecomposition.
  static constexpr double hermitian = 1e-10;
  /// Eigenvalues down to -psd are treated as round-off and clamped to zero.
  static constexpr double psd = 1e-10;
  /// Unit-trace check for density matrices.
  static constexpr double trace = 1e-10;
  /// Unitarity of constructed operators.
  static constexpr double unitary = 1e-12;
  /// Completeness of Kraus sets.
  static constexpr double completeness = 1e-12;
};

class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t dim) : data_(dim) {}
  ComplexVector(std::initializer_list<Complex> values) : data_(values) {}
  explicit ComplexVector(std::vector<Complex> values) : data_(std::move(values)) {}

  static ComplexVector basis(std::size_t dim, std::size_t k);

  std::size_t size() const noexcept { return data_.size(); }

  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }

  std::span<Complex> values() noexcept { return data_; }
  std::span<const Complex> values() const noexcept { return data_; }

  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  double norm() const;

  ComplexVector& operator*=(Complex s);

 private:
  std::vector<Complex> data_;
};

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t n) { return ComplexMatrix(n, n); }
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::span<const Complex> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x);
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }
inline ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x) { return matvec(a, x); }

/// ⟨a|b⟩, conjugating the first argument.
Complex inner(const ComplexVector& a, const ComplexVector& b);

/// |a⟩⟨b|
ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b);
inline ComplexMatrix projector(const ComplexVector& psi) { return outer(psi, psi); }

/// Largest entry magnitude of a - b.
double max_norm_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_norm_diff(const ComplexVector& a, const ComplexVector& b);
double max_abs(const ComplexMatrix& a);

bool is_unitary(const ComplexMatrix& m, double tol = Tolerances::unitary);
bool is_hermitian(const ComplexMatrix& m, double tol = Tolerances::hermitian);
bool is_real(const ComplexMatrix& m, double tol = 0.0);

/// Checks Hermitian, unit trace and eigenvalues >= -Tolerances::psd.
bool is_density_matrix(const ComplexMatrix& rho);

struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< column k pairs with values[k]
};

/// Cyclic complex Jacobi eigensolver. The input is symmetrized as (M + M†)/2
/// after checking it is Hermitian to Tolerances::hermitian.
HermitianEigen hermitian_eig(const ComplexMatrix& m);

/// Principal square root of a Hermitian positive-semidefinite matrix.
/// Eigenvalues in [-Tolerances::psd, 0) and those below the eigensolver's
/// round-off floor are set to zero; anything more negative throws.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

}  // namespace qwalk
