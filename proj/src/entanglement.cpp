#include "disent/entanglement.hpp"

#include "disent/errors.hpp"

#include <cmath>
#include <sstream>

namespace disent {

BipartiteState::BipartiteState(ComplexMatrix rho, Dims dims, const Tolerance& tol)
    : rho_(std::move(rho)), dims_(dims) {
  const std::size_t n = dims_.total();
  if (n == 0 || rho_.rows() != n || rho_.cols() != n) {
    std::ostringstream msg;
    msg << "state of shape " << rho_.rows() << "x" << rho_.cols() << " does not match dims ("
        << dims_.a << "," << dims_.b << ")";
    throw DimensionError(msg.str());
  }
  if (!is_density_matrix(rho_, tol)) {
    throw InvalidStateError("matrix is not a density matrix (Hermitian, trace one, PSD)");
  }
}

PureState PureState::normalized(std::vector<complex> amplitudes, Dims dims) {
  if (dims.total() == 0 || amplitudes.size() != dims.total()) {
    throw DimensionError("pure state has " + std::to_string(amplitudes.size()) +
                         " amplitudes for dims (" + std::to_string(dims.a) + "," +
                         std::to_string(dims.b) + ")");
  }
  double sum = 0.0;
  for (const auto& z : amplitudes) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidStateError("pure state has a non-finite amplitude");
    }
    sum += std::norm(z);
  }
  const double norm = std::sqrt(sum);
  const double deviation = std::abs(norm - 1.0);

  PureState p;
  p.dims_ = dims;
  p.input_norm_ = norm;
  if (deviation >= kNormRepairLimit) {
    throw InvalidStateError("pure state norm " + std::to_string(norm) +
                            " is too far from 1 to renormalize");
  }
  if (deviation > kNormExactSlack) {
    for (auto& z : amplitudes) z /= norm;
    std::ostringstream msg;
    msg.precision(12);
    msg << "amplitudes had norm " << norm << "; renormalized to 1";
    p.warning_ = msg.str();
  }
  p.amplitudes_ = std::move(amplitudes);
  return p;
}

ComplexMatrix PureState::density() const { return ComplexMatrix::projector(amplitudes_); }

BipartiteState PureState::to_state() const { return BipartiteState(density(), dims_); }

std::pair<ComplexMatrix, ComplexMatrix> marginals(const BipartiteState& s) {
  return {partial_trace(s.rho(), s.dims(), Party::A), partial_trace(s.rho(), s.dims(), Party::B)};
}

ComplexMatrix marginal_product(const BipartiteState& s) {
  const auto [rho_a, rho_b] = marginals(s);
  return tensor_product(rho_a, rho_b);
}

std::vector<double> partial_transpose_spectrum(const BipartiteState& s) {
  return hermitian_eigensystem(partial_transpose(s.rho(), s.dims(), Party::B)).values;
}

bool is_ppt(const BipartiteState& s, const Tolerance& tol) {
  return partial_transpose_spectrum(s).front() >= -tol.threshold();
}

bool ppt_is_exact(Dims dims) {
  return (dims.a == 2 && dims.b == 2) || (dims.a == 2 && dims.b == 3) ||
         (dims.a == 3 && dims.b == 2);
}

bool is_separable(const BipartiteState& s, const Tolerance& tol) {
  if (!ppt_is_exact(s.dims())) {
    throw UnsupportedDimsError("PPT decides separability only for 2x2 and 2x3 systems; got (" +
                               std::to_string(s.dims().a) + "," + std::to_string(s.dims().b) +
                               ")");
  }
  return is_ppt(s, tol);
}

bool is_product(const BipartiteState& s, const Tolerance& tol) {
  return tol.accepts(distance(s.rho(), marginal_product(s)), s.rho().frobenius_norm());
}

bool is_maximally_entangled(const PureState& p, const Tolerance& tol) {
  const Dims dims = p.dims();
  if (dims.a != dims.b) {
    throw DimensionError("maximal entanglement needs equal local dimensions");
  }
  const auto reduced = partial_trace(p.density(), dims, Party::A);
  const auto mixed = (1.0 / static_cast<double>(dims.a)) * ComplexMatrix::identity(dims.a);
  return tol.accepts(distance(reduced, mixed), mixed.frobenius_norm());
}

double negativity(const BipartiteState& s) {
  double sum = 0.0;
  for (double lambda : partial_transpose_spectrum(s))
    if (lambda < 0.0) sum -= lambda;
  return sum;
}

} // namespace disent
