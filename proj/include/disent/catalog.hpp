#pragma once

#include "disent/disentangle.hpp"

#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace disent {

// What the literature says about a named set. The demo checks our verdicts
// against it.
enum class ClaimKind {
  ProductPossible,      // can be disentangled (into product states)
  SeparableNotProduct,  // into a mixture of product states, but not into product states
  NotIntoProduct,       // cannot be disentangled into product states
  NotAtAll,             // cannot be disentangled at all
};

const char* to_string(ClaimKind kind);

struct CatalogEntry {
  std::string name;
  StateSet set;
  std::string paper_claim;
  ClaimKind claim;
  // Normalization repairs applied to the printed amplitudes.
  std::vector<std::string> warnings;
};

inline constexpr double kEq3DefaultTheta = std::numbers::pi / 8;
inline constexpr double kEq3DefaultPhi = std::numbers::pi / 3;

// ψ0 = cφ·u⊗u + sφ·v⊗v with u = (cθ, sθ), v = (sθ, −cθ);
// ψ1 = cφ·u'⊗u' + sφ·v'⊗v' with u' = (cθ, −sθ), v' = (sθ, cθ).
std::vector<complex> eq3_amplitudes(double theta, double phi, int which);
StateSet eq3_pair(double theta, double phi);

CatalogEntry eq3_entry(double theta = kEq3DefaultTheta, double phi = kEq3DefaultPhi);
// |00>, |11>, (|00> + |11>)/√2
CatalogEntry eq4_set();
// |00>, |11>, (|00> + |11>)/√2, |++>
CatalogEntry eq5_set();
// Φ±, Ψ±
CatalogEntry bell_states();
// Φ+ and (1 ⊗ diag(1, i))Φ+: maximally entangled, not orthogonal.
CatalogEntry maximally_entangled_pair();

// Names accepted by find_catalog_entry, in demo order.
const std::vector<std::string>& catalog_names();
std::optional<CatalogEntry> find_catalog_entry(const std::string& name);

// Random generators for tests and the acceptance suite. Deterministic for a
// given engine state.
ComplexMatrix random_density_matrix(std::size_t n, std::mt19937_64& rng);
ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng);

// A valid two-qubit density matrix with diagonal B marginal, deterministic in
// seed. Built as ½(ρ + KρK†) with ρ Ginibre-random and K = W ⊗ σz for a random
// unitary W, so the B-side coherences survive while the marginal is dephased.
BipartiteState random_prop2_state(std::uint64_t seed);

} // namespace disent
