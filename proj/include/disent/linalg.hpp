#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace disent {

using complex = std::complex<double>;

// Scale-aware comparison threshold. A residual r measured against a quantity
// of Frobenius size `scale` is accepted when r <= max(absolute, relative*scale).
struct Tolerance {
  double absolute = 1e-9;
  double relative = 1e-9;

  static Tolerance uniform(double value);

  double threshold(double scale = 1.0) const;
  bool accepts(double residual, double scale = 1.0) const {
    return residual <= threshold(scale);
  }
};

// Dense row-major complex matrix. Entries are always finite.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const complex> values);
  static ComplexMatrix diagonal(std::initializer_list<complex> values);
  // |v><v|
  static ComplexMatrix projector(std::span<const complex> ket);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  std::span<const complex> entries() const { return entries_; }

  complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  complex trace() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(complex scalar, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, complex scalar);

std::vector<complex> operator*(const ComplexMatrix& a, std::span<const complex> v);

// ‖a − b‖_F. Shapes must agree.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

// Bipartite subsystem sizes; the composite index of (i on A, k on B) is i*b + k.
struct Dims {
  std::size_t a = 0;
  std::size_t b = 0;

  std::size_t total() const { return a * b; }
  Dims swapped() const { return {b, a}; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

enum class Party { A, B };

Party other(Party p);
const char* to_string(Party p);

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<complex> tensor_product(std::span<const complex> a, std::span<const complex> b);

// keep == A returns tr_B rho (dims.a × dims.a); keep == B returns tr_A rho.
ComplexMatrix partial_trace(const ComplexMatrix& rho, Dims dims, Party keep);

ComplexMatrix partial_transpose(const ComplexMatrix& rho, Dims dims, Party which);

// Reorders the tensor factors: the result lives on B ⊗ A.
ComplexMatrix swap_parties(const ComplexMatrix& rho, Dims dims);

struct Eigensystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns are eigenvectors
};

// Cyclic Jacobi for complex Hermitian matrices. Throws NotHermitianError when
// ‖a − a†‖_F exceeds tol relative to ‖a‖.
Eigensystem hermitian_eigensystem(const ComplexMatrix& a, const Tolerance& tol = {});

double hermiticity_residual(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, const Tolerance& tol = {});
bool is_unitary(const ComplexMatrix& u, const Tolerance& tol = {});

// ‖ab − ba‖_F, shapes must agree.
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);
bool commutes(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol = {});

bool is_density_matrix(const ComplexMatrix& a, const Tolerance& tol = {});

// Sum of |off-diagonal|² square-rooted.
double off_diagonal_norm(const ComplexMatrix& a);

// Unitary V with V†·m·V diagonal for every m. Members must pairwise commute,
// otherwise NonCommutingError names the first offending pair.
ComplexMatrix simultaneous_diagonalizer(std::span<const ComplexMatrix> mats,
                                        const Tolerance& tol = {});

// U·rho·U†
ComplexMatrix conjugate(const ComplexMatrix& rho, const ComplexMatrix& u);

} // namespace disent
