#include "disent/linalg.hpp"

#include "disent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

namespace disent {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows()
        << "x" << b.cols();
    throw DimensionError(msg.str());
  }
}

void require_bipartite(const ComplexMatrix& rho, Dims dims, const char* op) {
  const std::size_t n = dims.total();
  if (n == 0 || rho.rows() != n || rho.cols() != n) {
    std::ostringstream msg;
    msg << op << ": expected a " << n << "x" << n << " matrix for dims (" << dims.a << ","
        << dims.b << "), got " << rho.rows() << "x" << rho.cols();
    throw DimensionError(msg.str());
  }
}

} // namespace

NonCommutingError::NonCommutingError(std::size_t first, std::size_t second, double residual)
    : Error("matrices " + std::to_string(first) + " and " + std::to_string(second) +
            " do not commute (commutator norm " + std::to_string(residual) + ")"),
      first_(first), second_(second), residual_(residual) {}

IdentifyError::IdentifyError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

// ---------------------------------------------------------------------------
// Tolerance

Tolerance Tolerance::uniform(double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument("tolerance must be a finite non-negative number");
  }
  return {value, value};
}

double Tolerance::threshold(double scale) const {
  return std::max(absolute, relative * scale);
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("ComplexMatrix: " + std::to_string(entries_.size()) +
                         " entries for a " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " matrix");
  }
  for (const auto& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("ComplexMatrix: non-finite entry");
    }
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("ComplexMatrix: ragged initializer");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const complex> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<complex> values) {
  return diagonal(std::span<const complex>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::projector(std::span<const complex> ket) {
  const std::size_t n = ket.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ket[i] * std::conj(ket[j]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

complex ComplexMatrix::trace() const {
  complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const auto& z : entries_) sum += std::norm(z);
  return std::sqrt(sum);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complex scalar) {
  for (auto& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(complex scalar, ComplexMatrix a) { return a *= scalar; }
ComplexMatrix operator*(ComplexMatrix a, complex scalar) { return a *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("operator*: inner dimensions " + std::to_string(a.cols()) + " and " +
                         std::to_string(b.rows()) + " differ");
  }
  ComplexMatrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

std::vector<complex> operator*(const ComplexMatrix& a, std::span<const complex> v) {
  if (a.cols() != v.size()) throw DimensionError("operator*: vector length mismatch");
  std::vector<complex> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "distance");
  return (a - b).frobenius_norm();
}

Party other(Party p) { return p == Party::A ? Party::B : Party::A; }

const char* to_string(Party p) { return p == Party::A ? "A" : "B"; }

// ---------------------------------------------------------------------------
// Bipartite index gymnastics

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rb = b.rows();
  const std::size_t cb = b.cols();
  ComplexMatrix m(a.rows() * rb, a.cols() * cb);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l) m(i * rb + k, j * cb + l) = a(i, j) * b(k, l);
  return m;
}

std::vector<complex> tensor_product(std::span<const complex> a, std::span<const complex> b) {
  std::vector<complex> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, Dims dims, Party keep) {
  require_bipartite(rho, dims, "partial_trace");
  const std::size_t da = dims.a;
  const std::size_t db = dims.b;
  if (keep == Party::A) {
    ComplexMatrix out(da, da);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t k = 0; k < db; ++k) out(i, j) += rho(i * db + k, j * db + k);
    return out;
  }
  ComplexMatrix out(db, db);
  for (std::size_t k = 0; k < db; ++k)
    for (std::size_t l = 0; l < db; ++l)
      for (std::size_t i = 0; i < da; ++i) out(k, l) += rho(i * db + k, i * db + l);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, Dims dims, Party which) {
  require_bipartite(rho, dims, "partial_transpose");
  const std::size_t da = dims.a;
  const std::size_t db = dims.b;
  ComplexMatrix out(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          out(i * db + k, j * db + l) = which == Party::B ? rho(i * db + l, j * db + k)
                                                          : rho(j * db + k, i * db + l);
        }
  return out;
}

ComplexMatrix swap_parties(const ComplexMatrix& rho, Dims dims) {
  require_bipartite(rho, dims, "swap_parties");
  const std::size_t da = dims.a;
  const std::size_t db = dims.b;
  ComplexMatrix out(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          out(k * da + i, l * da + j) = rho(i * db + k, j * db + l);
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& rho, const ComplexMatrix& u) {
  return u * rho * u.adjoint();
}

// ---------------------------------------------------------------------------
// Hermitian eigensystem

double hermiticity_residual(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionError("hermiticity_residual: matrix is not square");
  return (a - a.adjoint()).frobenius_norm();
}

bool is_hermitian(const ComplexMatrix& a, const Tolerance& tol) {
  return a.is_square() && tol.accepts(hermiticity_residual(a), a.frobenius_norm());
}

bool is_unitary(const ComplexMatrix& u, const Tolerance& tol) {
  if (!u.is_square()) return false;
  const auto id = ComplexMatrix::identity(u.rows());
  return tol.accepts(distance(u.adjoint() * u, id), id.frobenius_norm());
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) sum += std::norm(a(r, c));
  return std::sqrt(sum);
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& a, const Tolerance& tol) {
  if (!a.is_square()) throw DimensionError("hermitian_eigensystem: matrix is not square");
  const double norm = a.frobenius_norm();
  const double residual = hermiticity_residual(a);
  if (!tol.accepts(residual, norm)) {
    throw NotHermitianError("hermitian_eigensystem: ‖a − a†‖ = " + std::to_string(residual));
  }

  const std::size_t n = a.rows();
  ComplexMatrix m = 0.5 * (a + a.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double stop = std::numeric_limits<double>::epsilon() * 1e-2 * norm;

  constexpr int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double off = off_diagonal_norm(m);
    if (off == 0.0 || off <= stop) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const complex apq = m(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;

        // Rotation J = [[c, s·e^{iφ}], [−s·e^{−iφ}, c]] on (p, q) annihilates m(p, q)
        // under m ← J† m J, where apq = r·e^{iφ}.
        const complex phase = apq / r;
        const double theta = (m(q, q).real() - m(p, p).real()) / (2.0 * r);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const complex jpq = s * phase;
        const complex jqp = -s * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const complex mkp = m(k, p);
          const complex mkq = m(k, q);
          m(k, p) = mkp * c + mkq * jqp;
          m(k, q) = mkp * jpq + mkq * c;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const complex mpk = m(p, k);
          const complex mqk = m(q, k);
          m(p, k) = c * mpk + std::conj(jqp) * mqk;
          m(q, k) = std::conj(jpq) * mpk + c * mqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const complex vkp = v(k, p);
          const complex vkq = v(k, q);
          v(k, p) = vkp * c + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * c;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        m(p, p) = m(p, p).real();
        m(q, q) = m(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return m(x, x).real() < m(y, y).real();
  });

  Eigensystem result{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t col = 0; col < n; ++col) {
    result.values[col] = m(order[col], order[col]).real();
    for (std::size_t row = 0; row < n; ++row) result.vectors(row, col) = v(row, order[col]);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Predicates

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("commutator: operands must be square and of equal size");
  }
  return (a * b - b * a).frobenius_norm();
}

bool commutes(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerance& tol) {
  return tol.accepts(commutator_norm(a, b), a.frobenius_norm() * b.frobenius_norm());
}

bool is_density_matrix(const ComplexMatrix& a, const Tolerance& tol) {
  if (!a.is_square() || a.rows() == 0) return false;
  if (!is_hermitian(a, tol)) return false;
  if (std::abs(a.trace() - 1.0) > tol.threshold()) return false;
  const auto eig = hermitian_eigensystem(a, tol);
  return eig.values.front() >= -tol.threshold();
}

ComplexMatrix simultaneous_diagonalizer(std::span<const ComplexMatrix> mats,
                                        const Tolerance& tol) {
  if (mats.empty()) throw std::invalid_argument("simultaneous_diagonalizer: empty family");
  const std::size_t n = mats.front().rows();
  for (const auto& m : mats) {
    if (!m.is_square() || m.rows() != n) {
      throw DimensionError("simultaneous_diagonalizer: members must share a square shape");
    }
    if (!is_hermitian(m, tol)) {
      throw NotHermitianError("simultaneous_diagonalizer: member is not Hermitian");
    }
  }
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      if (!commutes(mats[i], mats[j], tol)) {
        throw NonCommutingError(i, j, commutator_norm(mats[i], mats[j]));
      }

  // A generic real combination of a commuting Hermitian family has an eigenbasis
  // shared by every member unless the coefficients hit a degenerate coincidence.
  std::mt19937_64 rng(0x5eedu);
  std::uniform_real_distribution<double> coefficient(0.5, 1.5);
  constexpr int max_attempts = 5;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    ComplexMatrix combined(n, n);
    for (const auto& m : mats) combined += coefficient(rng) * m;
    ComplexMatrix v = hermitian_eigensystem(combined, tol).vectors;

    const bool ok = std::all_of(mats.begin(), mats.end(), [&](const ComplexMatrix& m) {
      return off_diagonal_norm(v.adjoint() * m * v) <= 10.0 * tol.threshold(m.frobenius_norm());
    });
    if (ok) return v;
  }
  throw Error("simultaneous_diagonalizer: no common eigenbasis found after " +
              std::to_string(max_attempts) + " attempts");
}

} // namespace disent
