#pragma once

#include "disent/linalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace disent {

// A density matrix on C^{dA} ⊗ C^{dB}. Construction validates shape, Hermiticity,
// unit trace and positivity; an invalid matrix never becomes a BipartiteState.
class BipartiteState {
public:
  BipartiteState(ComplexMatrix rho, Dims dims, const Tolerance& tol = {});

  const ComplexMatrix& rho() const { return rho_; }
  Dims dims() const { return dims_; }

private:
  ComplexMatrix rho_;
  Dims dims_;
};

// A normalized state vector. Use `normalized` to build one from amplitudes that
// may be slightly off unit norm.
class PureState {
public:
  // Vectors whose norm is within 1e-12 of one are kept as they are. Those off by
  // less than 50% are rescaled and carry a warning; anything further off throws
  // InvalidStateError.
  static PureState normalized(std::vector<complex> amplitudes, Dims dims);

  const std::vector<complex>& amplitudes() const { return amplitudes_; }
  Dims dims() const { return dims_; }
  // Norm of the amplitudes as supplied, before any rescaling.
  double input_norm() const { return input_norm_; }
  const std::optional<std::string>& warning() const { return warning_; }

  ComplexMatrix density() const;
  BipartiteState to_state() const;

private:
  PureState() = default;

  std::vector<complex> amplitudes_;
  Dims dims_;
  double input_norm_ = 1.0;
  std::optional<std::string> warning_;
};

// Largest relative norm error corrected silently vs. with a warning.
inline constexpr double kNormExactSlack = 1e-12;
inline constexpr double kNormRepairLimit = 0.5;

std::pair<ComplexMatrix, ComplexMatrix> marginals(const BipartiteState& s);

// Product of the marginals, tr_B ρ ⊗ tr_A ρ.
ComplexMatrix marginal_product(const BipartiteState& s);

// Spectrum of the partial transpose on B, ascending.
std::vector<double> partial_transpose_spectrum(const BipartiteState& s);

bool is_ppt(const BipartiteState& s, const Tolerance& tol = {});

// True when PPT is equivalent to separability for these dims: 2×2, 2×3, 3×2.
bool ppt_is_exact(Dims dims);

// Exact separability for the dims accepted by ppt_is_exact; throws
// UnsupportedDimsError otherwise.
bool is_separable(const BipartiteState& s, const Tolerance& tol = {});

bool is_product(const BipartiteState& s, const Tolerance& tol = {});

bool is_maximally_entangled(const PureState& p, const Tolerance& tol = {});

// Sum of |negative eigenvalues| of the partial transpose.
double negativity(const BipartiteState& s);

} // namespace disent
