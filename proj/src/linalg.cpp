#include "qwalk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace qwalk {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}

std::string dims(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

ComplexVector ComplexVector::basis(std::size_t dim, std::size_t k) {
  require(k < dim, "basis index out of range");
  ComplexVector v(dim);
  v[k] = 1.0;
  return v;
}

double ComplexVector::norm() const {
  double sum = 0.0;
  for (const auto& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

ComplexVector& ComplexVector::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  require(is_square(), "trace of a non-square matrix");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
  return sum;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix sum dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, "matrix difference dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul inner dimensions disagree: " + dims(a) + " * " + dims(b));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x) {
  if (a.cols() != x.size()) {
    throw DimensionError("matvec dimension mismatch: " + dims(a) + " * " + std::to_string(x.size()));
  }
  ComplexVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex sum = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * x[j];
    out[i] = sum;
  }
  return out;
}

Complex inner(const ComplexVector& a, const ComplexVector& b) {
  require(a.size() == b.size(), "inner product dimension mismatch");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b) {
  ComplexMatrix out(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out(i, j) = a[i] * std::conj(b[j]);
  }
  return out;
}

double max_norm_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "max_norm_diff dimension mismatch");
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  }
  return worst;
}

double max_norm_diff(const ComplexVector& a, const ComplexVector& b) {
  require(a.size() == b.size(), "max_norm_diff dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double max_abs(const ComplexMatrix& a) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& z : a.row(r)) worst = std::max(worst, std::abs(z));
  }
  return worst;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  require(m.is_square(), "is_unitary needs a square matrix");
  return max_norm_diff(matmul(m.adjoint(), m), ComplexMatrix::identity(m.rows())) <= tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = r; c < m.cols(); ++c) {
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
    }
  }
  return true;
}

bool is_real(const ComplexMatrix& m, double tol) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& z : m.row(r)) {
      if (std::abs(z.imag()) > tol) return false;
    }
  }
  return true;
}

bool is_density_matrix(const ComplexMatrix& rho) {
  if (!is_hermitian(rho)) return false;
  if (std::abs(rho.trace() - Complex{1.0}) > Tolerances::trace) return false;
  const auto eig = hermitian_eig(rho);
  return eig.values.front() >= -Tolerances::psd;
}

HermitianEigen hermitian_eig(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("hermitian_eig needs a square matrix, got " + dims(m));
  if (!is_hermitian(m)) throw std::domain_error("hermitian_eig: input is not Hermitian");

  const std::size_t n = m.rows();
  ComplexMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  auto off_diagonal = [&] {
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = r + 1; c < n; ++c) sum += std::norm(a(r, c));
    }
    return std::sqrt(sum);
  };
  double scale = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) scale += std::norm(a(r, c));
  }
  scale = std::sqrt(scale);
  const double eps = std::numeric_limits<double>::epsilon();

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal() <= eps * scale) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;

        // Phase e moves apq onto the positive real axis, then a real Givens
        // rotation annihilates it. J = diag(1, conj(e)) * [[c, s], [-s, c]].
        const Complex e = apq / g;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * std::conj(e);
        const Complex jqq = c * std::conj(e);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  const auto eig = hermitian_eig(m);
  const std::size_t n = m.rows();
  if (n == 0) return {};

  if (eig.values.front() < -Tolerances::psd) {
    throw std::domain_error("psd_sqrt: eigenvalue " + std::to_string(eig.values.front()) +
                            " below -1e-10, input is not positive semidefinite");
  }
  const double largest = std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(n) * largest;

  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    roots[k] = eig.values[k] > floor ? std::sqrt(eig.values[k]) : 0.0;
  }

  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (roots[k] == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vr = roots[k] * eig.vectors(r, k);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += vr * std::conj(eig.vectors(c, k));
    }
  }
  return out;
}

}  // namespace qwalk
