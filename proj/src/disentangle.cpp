#include "disent/disentangle.hpp"

#include "disent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace disent {

namespace {

constexpr Dims kQubits{2, 2};

std::vector<ComplexMatrix> party_marginals(const StateSet& set, Party party) {
  std::vector<ComplexMatrix> out;
  out.reserve(set.size());
  for (const auto& m : set.members()) out.push_back(partial_trace(m.state.rho(), set.dims(), party));
  return out;
}

void require_dims(const BipartiteState& input, Dims dims, const char* op) {
  if (input.dims() != dims) {
    throw DimensionError(std::string(op) + ": input dims (" + std::to_string(input.dims().a) +
                         "," + std::to_string(input.dims().b) + ") do not match (" +
                         std::to_string(dims.a) + "," + std::to_string(dims.b) + ")");
  }
}

// Broadcast on the B qubit; `v` diagonalizes the B marginals of interest.
ComplexMatrix broadcast_on_b(const ComplexMatrix& rho, const ComplexMatrix& v) {
  const auto id2 = ComplexMatrix::identity(2);
  const auto to_eigenbasis = tensor_product(id2, v.adjoint());
  const ComplexMatrix rotated = conjugate(rho, to_eigenbasis);

  const auto ancilla = ComplexMatrix::diagonal({1.0, 0.0});
  const auto cnot_bc = tensor_product(id2, broadcast_unitary());
  const ComplexMatrix spread = conjugate(tensor_product(rotated, ancilla), cnot_bc);

  // Tracing out the ancilla or Bob's original qubit gives the same result.
  const ComplexMatrix kept = partial_trace(spread, Dims{4, 2}, Party::A);
  return conjugate(kept, tensor_product(id2, v));
}

} // namespace

// ---------------------------------------------------------------------------
// StateSet

StateSet::StateSet(std::string name, Dims dims, std::vector<Member> members)
    : name_(std::move(name)), dims_(dims), members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("state set '" + name_ + "' has no members");
  std::set<std::string> seen;
  for (const auto& m : members_) {
    if (m.state.dims() != dims_) {
      throw DimensionError("member '" + m.label + "' of set '" + name_ + "' has mismatched dims");
    }
    if (!seen.insert(m.label).second) {
      throw std::invalid_argument("duplicate label '" + m.label + "' in set '" + name_ + "'");
    }
  }
}

std::optional<std::size_t> StateSet::find(const std::string& label) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].label == label) return i;
  return std::nullopt;
}

const char* to_string(Machine m) {
  switch (m) {
  case Machine::MeasurePrepare: return "MeasurePrepare";
  case Machine::BilocalPrepare: return "BilocalPrepare";
  case Machine::LocalBroadcastB: return "LocalBroadcastB";
  case Machine::LocalBroadcastA: return "LocalBroadcastA";
  case Machine::None: return "None";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Sufficient conditions

bool are_perfectly_distinguishable(const StateSet& set, const Tolerance& tol) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const double overlap = (set[i].state.rho() * set[j].state.rho()).trace().real();
      if (overlap > tol.threshold()) return false;
    }
  return true;
}

bool have_identical_marginals(const StateSet& set, const Tolerance& tol) {
  for (Party party : {Party::A, Party::B}) {
    const auto reduced = party_marginals(set, party);
    for (std::size_t i = 1; i < reduced.size(); ++i)
      if (!tol.accepts(distance(reduced[i], reduced[0]), reduced[0].frobenius_norm()))
        return false;
  }
  return true;
}

bool commuting_marginals(const StateSet& set, Party party, const Tolerance& tol) {
  const auto reduced = party_marginals(set, party);
  for (std::size_t i = 0; i < reduced.size(); ++i)
    for (std::size_t j = i + 1; j < reduced.size(); ++j)
      if (!commutes(reduced[i], reduced[j], tol)) return false;
  return true;
}

Classification classify(const StateSet& set, const Tolerance& tol) {
  Classification c;
  c.perfectly_distinguishable = are_perfectly_distinguishable(set, tol);
  c.identical_marginals = have_identical_marginals(set, tol);
  c.commuting_marginals_a = commuting_marginals(set, Party::A, tol);
  c.commuting_marginals_b = commuting_marginals(set, Party::B, tol);

  if (c.perfectly_distinguishable) {
    c.selected_machine = Machine::MeasurePrepare;
  } else if (c.identical_marginals) {
    c.selected_machine = Machine::BilocalPrepare;
  } else if (c.commuting_marginals_b) {
    c.selected_machine = Machine::LocalBroadcastB;
  } else if (c.commuting_marginals_a) {
    c.selected_machine = Machine::LocalBroadcastA;
  }

  if (ppt_is_exact(set.dims())) {
    c.all_members_separable = std::all_of(set.members().begin(), set.members().end(),
                                          [&](const Member& m) { return is_separable(m.state, tol); });
  }
  return c;
}

std::size_t identify(const StateSet& set, const BipartiteState& input, const Tolerance& tol) {
  require_dims(input, set.dims(), "identify");
  std::optional<std::size_t> match;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& rho = set[i].state.rho();
    if (!tol.accepts(distance(input.rho(), rho), rho.frobenius_norm())) continue;
    if (match) {
      throw IdentifyError(IdentifyError::Kind::Ambiguous,
                          "input matches both '" + set[*match].label + "' and '" + set[i].label +
                              "'; tolerance too loose for this set");
    }
    match = i;
  }
  if (!match) {
    throw IdentifyError(IdentifyError::Kind::NoMatch,
                        "input is not a member of set '" + set.name() + "'");
  }
  return *match;
}

// ---------------------------------------------------------------------------
// Product machines

ProductMachine::ProductMachine(const StateSet& set, Machine mode, const Tolerance& tol)
    : set_(set), mode_(mode), tol_(tol) {
  if (mode == Machine::MeasurePrepare) {
    for (const auto& m : set.members()) outputs_.push_back(marginal_product(m.state));
  } else {
    outputs_.push_back(marginal_product(set[0].state));
  }
}

ProductMachine ProductMachine::build(const StateSet& set, Machine mode, const Tolerance& tol) {
  if (mode == Machine::MeasurePrepare) {
    if (!are_perfectly_distinguishable(set, tol)) {
      throw PreconditionViolated("set '" + set.name() + "' is not perfectly distinguishable");
    }
  } else if (mode == Machine::BilocalPrepare) {
    if (!have_identical_marginals(set, tol)) {
      throw PreconditionViolated("members of set '" + set.name() +
                                 "' do not share their reduced density matrices");
    }
  } else {
    throw std::invalid_argument(std::string("ProductMachine cannot run as ") + to_string(mode));
  }
  return ProductMachine(set, mode, tol);
}

ProductMachine ProductMachine::build(const StateSet& set, const Tolerance& tol) {
  if (are_perfectly_distinguishable(set, tol)) return build(set, Machine::MeasurePrepare, tol);
  if (have_identical_marginals(set, tol)) return build(set, Machine::BilocalPrepare, tol);
  throw PreconditionViolated("set '" + set.name() +
                             "' is neither perfectly distinguishable nor marginal-identical");
}

BipartiteState ProductMachine::apply(const BipartiteState& input) const {
  require_dims(input, set_.dims(), "ProductMachine::apply");
  const std::size_t index = mode_ == Machine::MeasurePrepare ? identify(set_, input, tol_) : 0;
  return BipartiteState(outputs_[index], set_.dims(), tol_);
}

BipartiteState disentangle_to_product(const StateSet& set, const BipartiteState& input,
                                      const Tolerance& tol) {
  return ProductMachine::build(set, tol).apply(input);
}

// ---------------------------------------------------------------------------
// Local broadcasting

ComplexMatrix broadcast_unitary() {
  return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
}

BipartiteState local_broadcast(const BipartiteState& input, Party party,
                               const ComplexMatrix& diagonalizer, const Tolerance& tol) {
  if (input.dims() != kQubits) {
    throw UnsupportedDimsError("local broadcasting is defined for two qubits only");
  }
  if (diagonalizer.rows() != 2 || !is_unitary(diagonalizer, tol)) {
    throw NonUnitaryError("local broadcasting needs a 2x2 unitary basis change");
  }
  if (party == Party::B) {
    return BipartiteState(broadcast_on_b(input.rho(), diagonalizer), kQubits, tol);
  }
  const auto swapped = swap_parties(input.rho(), kQubits);
  return BipartiteState(swap_parties(broadcast_on_b(swapped, diagonalizer), kQubits), kQubits,
                        tol);
}

BipartiteState local_broadcast(const BipartiteState& input, Party party, const Tolerance& tol) {
  return local_broadcast(input, party, ComplexMatrix::identity(2), tol);
}

SeparableMachine SeparableMachine::build(const StateSet& set, Party party, const Tolerance& tol) {
  if (set.dims() != kQubits) {
    throw UnsupportedDimsError("the local-broadcast machine needs a two-qubit set");
  }
  const auto reduced = party_marginals(set, party);
  try {
    return SeparableMachine(set.dims(), party, simultaneous_diagonalizer(reduced, tol), tol);
  } catch (const NonCommutingError& e) {
    throw PreconditionViolated(std::string("marginals of party ") + to_string(party) +
                               " in set '" + set.name() + "' do not commute: " + e.what());
  }
}

SeparableMachine SeparableMachine::build(const StateSet& set, const Tolerance& tol) {
  if (commuting_marginals(set, Party::B, tol)) return build(set, Party::B, tol);
  if (commuting_marginals(set, Party::A, tol)) return build(set, Party::A, tol);
  throw PreconditionViolated("no party of set '" + set.name() + "' has commuting marginals");
}

BipartiteState SeparableMachine::apply(const BipartiteState& input) const {
  require_dims(input, dims_, "SeparableMachine::apply");
  return local_broadcast(input, party_, diagonalizer_, tol_);
}

BipartiteState disentangle_to_separable(const StateSet& set, const BipartiteState& input,
                                        const Tolerance& tol) {
  return SeparableMachine::build(set, tol).apply(input);
}

bool fits_general_form(const BipartiteState& input, const Tolerance& tol) {
  if (input.dims() != kQubits) {
    throw UnsupportedDimsError("the commuting-marginal general form is a two-qubit form");
  }
  const auto& rho = input.rho();
  return std::abs(rho(0, 1) + rho(2, 3)) <= tol.threshold(rho.frobenius_norm());
}

// ---------------------------------------------------------------------------
// Verification

DisentanglementReport verify(const BipartiteState& input, const BipartiteState& output,
                             const Tolerance& tol) {
  require_dims(output, input.dims(), "verify");
  const auto [in_a, in_b] = marginals(input);
  const auto [out_a, out_b] = marginals(output);

  const bool product = is_product(output, tol);
  const bool separable = ppt_is_exact(output.dims()) ? is_separable(output, tol) : product;
  return DisentanglementReport{
      .input_label = {},
      .machine = Machine::None,
      .output = output,
      .marginal_deviation_a = distance(in_a, out_a),
      .marginal_deviation_b = distance(in_b, out_b),
      .output_is_product = product,
      .output_is_separable = separable || product,
      .ppt_margin = negativity(output),
  };
}

} // namespace disent
