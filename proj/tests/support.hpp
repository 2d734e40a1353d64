#pragma once

// Test-only oracles. These deliberately avoid the library's index formulas:
// partial operations are rebuilt from explicit basis embeddings, spectra are
// checked through power-sum moments, and 2x2 eigenproblems use closed forms.

#include "disent/linalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace disent::test {

inline ComplexMatrix unit_ket_bra(std::size_t n, std::size_t row, std::size_t col) {
  ComplexMatrix e(n, n);
  e(row, col) = 1.0;
  return e;
}

// Embedding |i>_A ⊗ (column of B), as a (dA*dB) x dB matrix built element by element.
inline ComplexMatrix embed_a_basis(std::size_t da, std::size_t db, std::size_t i) {
  ComplexMatrix m(da * db, db);
  for (std::size_t k = 0; k < db; ++k) m(i * db + k, k) = 1.0;
  return m;
}

inline ComplexMatrix embed_b_basis(std::size_t da, std::size_t db, std::size_t k) {
  ComplexMatrix m(da * db, da);
  for (std::size_t i = 0; i < da; ++i) m(i * db + k, i) = 1.0;
  return m;
}

// tr_B ρ = Σ_k (1 ⊗ <k|) ρ (1 ⊗ |k>),  tr_A ρ = Σ_i (<i| ⊗ 1) ρ (|i> ⊗ 1).
inline ComplexMatrix oracle_partial_trace(const ComplexMatrix& rho, Dims dims, Party keep) {
  if (keep == Party::A) {
    ComplexMatrix out(dims.a, dims.a);
    for (std::size_t k = 0; k < dims.b; ++k) {
      const auto e = embed_b_basis(dims.a, dims.b, k);
      out += e.adjoint() * rho * e;
    }
    return out;
  }
  ComplexMatrix out(dims.b, dims.b);
  for (std::size_t i = 0; i < dims.a; ++i) {
    const auto e = embed_a_basis(dims.a, dims.b, i);
    out += e.adjoint() * rho * e;
  }
  return out;
}

// Kronecker product of small matrices, written with an explicit four-deep sum over
// basis operators |i><j| ⊗ |k><l|.
inline ComplexMatrix oracle_kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.rows() * b.rows();
  ComplexMatrix out(n, a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const std::size_t row = i * b.rows() + k;
          const std::size_t col = j * b.cols() + l;
          out(row, col) += a(i, j) * b(k, l);
        }
  return out;
}

// ρ^{T_B} = Σ_{k,l} (1 ⊗ |k><l|) ρ (1 ⊗ |k><l|), and the mirror image for A.
inline ComplexMatrix oracle_partial_transpose(const ComplexMatrix& rho, Dims dims, Party which) {
  ComplexMatrix out(rho.rows(), rho.cols());
  const std::size_t d = which == Party::B ? dims.b : dims.a;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t l = 0; l < d; ++l) {
      const auto local = unit_ket_bra(d, k, l);
      const auto op = which == Party::B ? oracle_kron(ComplexMatrix::identity(dims.a), local)
                                        : oracle_kron(local, ComplexMatrix::identity(dims.b));
      out += op * rho * op;
    }
  return out;
}

// Eigenvalues of a 2x2 Hermitian matrix, ascending.
inline std::vector<double> oracle_eigenvalues_2x2(const ComplexMatrix& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double radius = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m(0, 1)));
  return {mean - radius, mean + radius};
}

// Power sums tr(M^k), k = 1..n, which pin down the spectrum of an n×n matrix.
inline std::vector<double> trace_moments(const ComplexMatrix& m) {
  std::vector<double> out;
  ComplexMatrix power = m;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    out.push_back(power.trace().real());
    power = power * m;
  }
  return out;
}

inline std::vector<double> eigen_moments(const std::vector<double>& values) {
  std::vector<double> out;
  for (std::size_t k = 1; k <= values.size(); ++k) {
    double sum = 0.0;
    for (double v : values) sum += std::pow(v, static_cast<double>(k));
    out.push_back(sum);
  }
  return out;
}

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const double re = u(rng);
      const double im = u(rng);
      m(r, c) = complex(re, im);
    }
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  const auto g = random_matrix(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

inline const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m{{0, 1}, {1, 0}};
  return m;
}
inline const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m{{1, 0}, {0, -1}};
  return m;
}

inline std::vector<complex> phi_plus_ket() {
  const double h = 1.0 / std::sqrt(2.0);
  return {h, 0, 0, h};
}

} // namespace disent::test

#define CHECK_MATRIX_NEAR(actual, expected, eps)                                              \
  do {                                                                                        \
    const ::disent::ComplexMatrix check_a_ = (actual);                                        \
    const ::disent::ComplexMatrix check_e_ = (expected);                                      \
    REQUIRE(check_a_.rows() == check_e_.rows());                                              \
    REQUIRE(check_a_.cols() == check_e_.cols());                                              \
    CHECK(::disent::test::max_abs_diff(check_a_, check_e_) <= (eps));                         \
  } while (false)
