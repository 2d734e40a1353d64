#include "disent/catalog.hpp"

#include "disent/errors.hpp"

#include <cmath>
#include <sstream>

namespace disent {

namespace {

constexpr Dims kQubits{2, 2};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::vector<complex> ket(std::initializer_list<complex> amps) { return amps; }

void add_pure(std::vector<Member>& members, std::vector<std::string>& warnings,
              const std::string& label, std::vector<complex> amplitudes, const char* printed) {
  const auto p = PureState::normalized(std::move(amplitudes), kQubits);
  if (p.warning()) warnings.push_back(label + " (printed as " + printed + "): " + *p.warning());
  members.push_back({label, p.to_state()});
}

// For printed amplitudes that are not just off in scale: the literal is checked
// against the normalization policy for the warning, but `intended` is stored.
void add_corrected(std::vector<Member>& members, std::vector<std::string>& warnings,
                   const std::string& label, std::vector<complex> literal,
                   std::vector<complex> intended, const char* printed, const char* read_as) {
  const auto lit = PureState::normalized(std::move(literal), kQubits);
  const auto p = PureState::normalized(std::move(intended), kQubits);
  std::ostringstream msg;
  msg.precision(12);
  msg << label << " (printed as " << printed << ") has norm " << lit.input_norm() << "; read as "
      << read_as;
  warnings.push_back(msg.str());
  members.push_back({label, p.to_state()});
}

} // namespace

const char* to_string(ClaimKind kind) {
  switch (kind) {
  case ClaimKind::ProductPossible: return "product-possible";
  case ClaimKind::SeparableNotProduct: return "separable-not-product";
  case ClaimKind::NotIntoProduct: return "not-into-product";
  case ClaimKind::NotAtAll: return "not-at-all";
  }
  return "?";
}

std::vector<complex> eq3_amplitudes(double theta, double phi, int which) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  const double sign = which == 0 ? 1.0 : -1.0;
  const std::vector<complex> u{ct, sign * st};
  const std::vector<complex> v{st, -sign * ct};
  const auto uu = tensor_product(u, u);
  const auto vv = tensor_product(v, v);
  std::vector<complex> out(4);
  for (std::size_t i = 0; i < 4; ++i) out[i] = cp * uu[i] + sp * vv[i];
  return out;
}

StateSet eq3_pair(double theta, double phi) {
  std::vector<Member> members;
  std::vector<std::string> warnings;
  add_pure(members, warnings, "psi0", eq3_amplitudes(theta, phi, 0), "psi0");
  add_pure(members, warnings, "psi1", eq3_amplitudes(theta, phi, 1), "psi1");
  return StateSet("eq3", kQubits, std::move(members));
}

CatalogEntry eq3_entry(double theta, double phi) {
  return CatalogEntry{"eq3", eq3_pair(theta, phi),
                      "also cannot be disentangled into product states",
                      ClaimKind::NotIntoProduct, {}};
}

CatalogEntry eq4_set() {
  std::vector<Member> members;
  std::vector<std::string> warnings;
  add_pure(members, warnings, "psi0", ket({1, 0, 0, 0}), "|00>");
  add_pure(members, warnings, "psi1", ket({0, 0, 0, 1}), "|11>");
  add_corrected(members, warnings, "psi2", ket({kInvSqrt2, 0, 0, 1}),
                ket({kInvSqrt2, 0, 0, kInvSqrt2}), "(1/sqrt2)|00> + |11>",
                "(1/sqrt2)(|00> + |11>)");
  return CatalogEntry{"eq4", StateSet("eq4", kQubits, std::move(members)),
                      "can be disentangled into a mixture of tensor product states, but not "
                      "into product states",
                      ClaimKind::SeparableNotProduct, std::move(warnings)};
}

CatalogEntry eq5_set() {
  std::vector<Member> members;
  std::vector<std::string> warnings;
  add_pure(members, warnings, "psi0", ket({1, 0, 0, 0}), "|00>");
  add_pure(members, warnings, "psi1", ket({0, 0, 0, 1}), "|11>");
  add_pure(members, warnings, "psi2", ket({kInvSqrt2, 0, 0, kInvSqrt2}),
           "(1/sqrt2)[|00> + |11>]");
  const complex q = 0.5 * kInvSqrt2;
  add_pure(members, warnings, "psi3", ket({q, q, q, q}), "(1/sqrt2)|++>");
  return CatalogEntry{"eq5", StateSet("eq5", kQubits, std::move(members)),
                      "cannot be disentangled at all", ClaimKind::NotAtAll,
                      std::move(warnings)};
}

CatalogEntry bell_states() {
  std::vector<Member> members;
  std::vector<std::string> warnings;
  const double h = kInvSqrt2;
  add_pure(members, warnings, "phi+", ket({h, 0, 0, h}), "phi+");
  add_pure(members, warnings, "phi-", ket({h, 0, 0, -h}), "phi-");
  add_pure(members, warnings, "psi+", ket({0, h, h, 0}), "psi+");
  add_pure(members, warnings, "psi-", ket({0, h, -h, 0}), "psi-");
  return CatalogEntry{"bell", StateSet("bell", kQubits, std::move(members)),
                      "any set of maximally entangled states can be disentangled",
                      ClaimKind::ProductPossible, std::move(warnings)};
}

CatalogEntry maximally_entangled_pair() {
  std::vector<Member> members;
  std::vector<std::string> warnings;
  const double h = kInvSqrt2;
  add_pure(members, warnings, "phi+", ket({h, 0, 0, h}), "phi+");
  add_pure(members, warnings, "phi+i", ket({h, 0, 0, complex(0, h)}), "(|00> + i|11>)/sqrt2");
  return CatalogEntry{"maxent-pair", StateSet("maxent-pair", kQubits, std::move(members)),
                      "pairs of maximally entangled states, not necessary orthogonal, can be "
                      "disentangled",
                      ClaimKind::ProductPossible, std::move(warnings)};
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"eq3", "eq4", "eq5", "bell", "maxent-pair"};
  return names;
}

std::optional<CatalogEntry> find_catalog_entry(const std::string& name) {
  if (name == "eq3") return eq3_entry();
  if (name == "eq4") return eq4_set();
  if (name == "eq5") return eq5_set();
  if (name == "bell") return bell_states();
  if (name == "maxent-pair") return maximally_entangled_pair();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Random states

namespace {

ComplexMatrix ginibre(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = complex(re, im);
    }
  return g;
}

} // namespace

ComplexMatrix random_density_matrix(std::size_t n, std::mt19937_64& rng) {
  const auto g = ginibre(n, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  // Exact Hermiticity; the product is Hermitian only up to rounding.
  return 0.5 * (rho + rho.adjoint());
}

ComplexMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  // Modified Gram-Schmidt on the columns of a Ginibre matrix.
  ComplexMatrix q = ginibre(n, rng);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      complex dot = 0.0;
      for (std::size_t r = 0; r < n; ++r) dot += std::conj(q(r, prev)) * q(r, c);
      for (std::size_t r = 0; r < n; ++r) q(r, c) -= dot * q(r, prev);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(q(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < n; ++r) q(r, c) /= norm;
  }
  return q;
}

BipartiteState random_prop2_state(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto rho = random_density_matrix(4, rng);
  const auto w = random_unitary(2, rng);
  const auto kick = tensor_product(w, ComplexMatrix::diagonal({1.0, -1.0}));
  ComplexMatrix mixed = 0.5 * (rho + conjugate(rho, kick));
  mixed = 0.5 * (mixed + mixed.adjoint());
  return BipartiteState(std::move(mixed), kQubits);
}

} // namespace disent
