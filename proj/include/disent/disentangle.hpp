#pragma once

#include "disent/entanglement.hpp"
#include "disent/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace disent {

struct Member {
  std::string label;
  BipartiteState state;
};

// The predefined set a state-dependent machine is built for. Non-empty, shared
// dims, unique labels.
class StateSet {
public:
  StateSet(std::string name, Dims dims, std::vector<Member> members);

  const std::string& name() const { return name_; }
  Dims dims() const { return dims_; }
  const std::vector<Member>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  const Member& operator[](std::size_t i) const { return members_[i]; }
  // Index of the member labelled `label`, if any.
  std::optional<std::size_t> find(const std::string& label) const;

private:
  std::string name_;
  Dims dims_;
  std::vector<Member> members_;
};

enum class Machine { MeasurePrepare, BilocalPrepare, LocalBroadcastB, LocalBroadcastA, None };

const char* to_string(Machine m);

struct Classification {
  bool perfectly_distinguishable = false;
  bool identical_marginals = false;
  bool commuting_marginals_a = false;
  bool commuting_marginals_b = false;
  Machine selected_machine = Machine::None;
  // Informational only: every member already separable. Empty when the dims do
  // not admit an exact separability test.
  std::optional<bool> all_members_separable;
};

struct DisentanglementReport {
  std::string input_label;
  Machine machine = Machine::None;
  BipartiteState output;
  double marginal_deviation_a = 0.0;
  double marginal_deviation_b = 0.0;
  bool output_is_product = false;
  bool output_is_separable = false;
  double ppt_margin = 0.0;
};

// Pairwise tr(ρi ρj) ≤ tol for i ≠ j.
bool are_perfectly_distinguishable(const StateSet& set, const Tolerance& tol = {});
bool have_identical_marginals(const StateSet& set, const Tolerance& tol = {});
bool commuting_marginals(const StateSet& set, Party party, const Tolerance& tol = {});

// Priority: MeasurePrepare > BilocalPrepare > LocalBroadcastB > LocalBroadcastA.
Classification classify(const StateSet& set, const Tolerance& tol = {});

// Index of the unique member within tol of `input` (Frobenius distance).
std::size_t identify(const StateSet& set, const BipartiteState& input, const Tolerance& tol = {});

// Measure-and-prepare (distinguishable sets) or a fixed bilocal preparation
// (sets with identical marginals). Output is tr_B ρ ⊗ tr_A ρ of the member.
class ProductMachine {
public:
  // mode must be MeasurePrepare or BilocalPrepare; throws PreconditionViolated
  // when the set does not satisfy the matching condition.
  static ProductMachine build(const StateSet& set, Machine mode, const Tolerance& tol = {});
  // MeasurePrepare when possible, else BilocalPrepare.
  static ProductMachine build(const StateSet& set, const Tolerance& tol = {});

  Machine mode() const { return mode_; }
  BipartiteState apply(const BipartiteState& input) const;

private:
  ProductMachine(const StateSet& set, Machine mode, const Tolerance& tol);

  StateSet set_;
  Machine mode_;
  Tolerance tol_;
  std::vector<ComplexMatrix> outputs_;
};

BipartiteState disentangle_to_product(const StateSet& set, const BipartiteState& input,
                                      const Tolerance& tol = {});

// The 4×4 permutation |00>→|00>, |01>→|01>, |10>→|11>, |11>→|10>: the first
// qubit controls a flip of the second.
ComplexMatrix broadcast_unitary();

// Runs the ancilla broadcasting pipeline on the chosen party of a two-qubit state:
// rotate that party into the basis of `diagonalizer`, append |0><0|, apply the
// broadcast unitary with the party as control, trace out the ancilla, rotate back.
BipartiteState local_broadcast(const BipartiteState& input, Party party,
                               const ComplexMatrix& diagonalizer, const Tolerance& tol = {});
BipartiteState local_broadcast(const BipartiteState& input, Party party,
                               const Tolerance& tol = {});

// Oblivious local-broadcast channel for a set whose marginals on one party commute.
// The diagonalizer is fixed at build time.
class SeparableMachine {
public:
  // Uses B if its marginals commute, otherwise A; throws PreconditionViolated when
  // neither does.
  static SeparableMachine build(const StateSet& set, const Tolerance& tol = {});
  static SeparableMachine build(const StateSet& set, Party party, const Tolerance& tol = {});

  Party party() const { return party_; }
  Machine machine() const {
    return party_ == Party::B ? Machine::LocalBroadcastB : Machine::LocalBroadcastA;
  }
  const ComplexMatrix& diagonalizer() const { return diagonalizer_; }
  BipartiteState apply(const BipartiteState& input) const;

private:
  SeparableMachine(Dims dims, Party party, ComplexMatrix diagonalizer, const Tolerance& tol)
      : dims_(dims), party_(party), diagonalizer_(std::move(diagonalizer)), tol_(tol) {}

  Dims dims_;
  Party party_;
  ComplexMatrix diagonalizer_;
  Tolerance tol_;
};

BipartiteState disentangle_to_separable(const StateSet& set, const BipartiteState& input,
                                        const Tolerance& tol = {});

// Two-qubit states whose B marginal is diagonal: ρ[0,1] + ρ[2,3] = 0.
bool fits_general_form(const BipartiteState& input, const Tolerance& tol = {});

// Measures how well `output` disentangles `input`. For dims where PPT is not
// exact, output_is_separable is only set for product outputs.
DisentanglementReport verify(const BipartiteState& input, const BipartiteState& output,
                             const Tolerance& tol = {});

} // namespace disent
