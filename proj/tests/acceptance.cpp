// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include "support.hpp"

#include "disent/catalog.hpp"
#include "disent/cli/commands.hpp"

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace disent;
using namespace disent::test;

namespace {

constexpr int kSamples = 1000;
constexpr int kSetPairs = 200;
constexpr int kOracleMatrices = 500;

constexpr double kExact = 1e-12;
constexpr double kMarginal = 1e-9;
constexpr double kPpt = 1e-9;
constexpr double kSpectrum = 1e-10;
constexpr double kRoundTrip = 1e-15;

struct Result {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

ComplexMatrix zero_b_coherences(const ComplexMatrix& rho) {
  ComplexMatrix out = rho;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (r % 2 != c % 2) out(r, c) = 0.0;
  return out;
}

std::string seed_note(std::uint64_t seed) { return "seed " + std::to_string(seed); }

Result broadcast_unitary_exact() {
  Result r;
  const ComplexMatrix expected{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  const auto u = broadcast_unitary();
  r.require(u == expected, "U differs from the controlled flip");
  r.require(u == u.adjoint(), "U is not self-adjoint");
  r.require(u * u == ComplexMatrix::identity(4), "U^2 is not the identity");
  return r;
}

Result broadcast_closed_form() {
  Result r;
  for (std::uint64_t seed = 0; seed < kSamples; ++seed) {
    const auto s = random_prop2_state(seed);
    const auto out = local_broadcast(s, Party::B);
    r.require(max_abs_diff(out.rho(), zero_b_coherences(s.rho())) <= kExact, seed_note(seed));
  }
  return r;
}

Result broadcast_preserves_marginals() {
  Result r;
  for (std::uint64_t seed = 0; seed < kSamples; ++seed) {
    const auto s = random_prop2_state(seed);
    const auto out = local_broadcast(s, Party::B);
    for (auto keep : {Party::A, Party::B}) {
      const auto before = oracle_partial_trace(s.rho(), {2, 2}, keep);
      const auto after = oracle_partial_trace(out.rho(), {2, 2}, keep);
      r.require(max_abs_diff(before, after) <= kMarginal, seed_note(seed));
    }
  }
  return r;
}

Result broadcast_output_separable() {
  Result r;
  for (std::uint64_t seed = 0; seed < kSamples; ++seed) {
    const auto out = local_broadcast(random_prop2_state(seed), Party::B);
    const auto pt = oracle_partial_transpose(out.rho(), {2, 2}, Party::B);
    r.require(max_abs_diff(pt, out.rho()) <= kPpt, seed_note(seed) + ": PT changes the output");
    r.require(is_ppt(out), seed_note(seed) + ": not PPT");
    r.require(negativity(out) <= kPpt, seed_note(seed) + ": negativity");
  }
  return r;
}

Result set_channel_on_rotated_pairs() {
  Result r;
  std::mt19937_64 rng(0xacce55);
  for (int trial = 0; trial < kSetPairs; ++trial) {
    const auto local = oracle_kron(ComplexMatrix::identity(2), random_unitary(2, rng));
    const auto first = BipartiteState(conjugate(random_prop2_state(2 * trial).rho(), local), {2, 2});
    const auto second = BipartiteState(conjugate(random_prop2_state(2 * trial + 1).rho(), local), {2, 2});
    const StateSet set("pair", {2, 2}, {{"x", first}, {"y", second}});
    for (const auto& m : set.members()) {
      const auto out = disentangle_to_separable(set, m.state);
      for (auto keep : {Party::A, Party::B}) {
        const double dev = max_abs_diff(oracle_partial_trace(m.state.rho(), {2, 2}, keep),
                                        oracle_partial_trace(out.rho(), {2, 2}, keep));
        r.require(dev <= kMarginal, "trial " + std::to_string(trial) + ": marginal moved");
      }
      r.require(is_ppt(out), "trial " + std::to_string(trial) + ": output not PPT");
    }
  }
  return r;
}

Result bell_states_to_maximally_mixed() {
  Result r;
  const auto set = bell_states().set;
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<std::vector<complex>> kets{{h, 0, 0, h}, {h, 0, 0, -h}, {0, h, h, 0}, {0, h, -h, 0}};
  for (const auto& k : kets) {
    r.require(is_maximally_entangled(PureState::normalized(k, {2, 2})), "not maximally entangled");
  }
  for (const auto& m : set.members()) {
    const auto out = disentangle_to_product(set, m.state);
    r.require(max_abs_diff(out.rho(), 0.25 * ComplexMatrix::identity(4)) <= kExact, m.label);
  }
  return r;
}

Result catalog_verdicts() {
  Result r;
  const auto eq4 = eq4_set().set;
  const auto machine = classify(eq4).selected_machine;
  r.require(machine == Machine::LocalBroadcastA || machine == Machine::LocalBroadcastB,
            std::string("eq4 selected ") + to_string(machine));
  const auto out = disentangle_to_separable(eq4, eq4[2].state);
  r.require(is_separable(out), "eq4 psi2 output not separable");
  r.require(!is_product(out), "eq4 psi2 output is a product");
  r.require(classify(eq5_set().set).selected_machine == Machine::None, "eq5 has a machine");
  r.require(classify(bell_states().set).selected_machine == Machine::MeasurePrepare,
            "bell not measure-prepare");
  return r;
}

Result partial_operations_match_oracles() {
  Result r;
  std::mt19937_64 rng(0x0dd5);
  for (const Dims dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 2}}) {
    for (int trial = 0; trial < kOracleMatrices; ++trial) {
      const auto m = random_matrix(dims.total(), dims.total(), rng);
      for (auto p : {Party::A, Party::B}) {
        r.require(max_abs_diff(partial_trace(m, dims, p), oracle_partial_trace(m, dims, p)) <= kExact,
                  "partial trace");
        r.require(max_abs_diff(partial_transpose(m, dims, p), oracle_partial_transpose(m, dims, p)) <=
                      kExact,
                  "partial transpose");
      }
    }
  }
  return r;
}

Result phi_plus_partial_transpose() {
  Result r;
  const auto phi = BipartiteState(ComplexMatrix::projector(phi_plus_ket()), {2, 2});
  const auto spectrum = partial_transpose_spectrum(phi);
  const std::vector<double> expected{-0.5, 0.5, 0.5, 0.5};
  for (std::size_t i = 0; i < 4; ++i) {
    r.require(std::abs(spectrum[i] - expected[i]) <= kSpectrum, "eigenvalue " + std::to_string(i));
  }
  // Independent check: the moments tr(M^k) of the oracle transpose.
  const auto moments = trace_moments(oracle_partial_transpose(phi.rho(), {2, 2}, Party::B));
  const auto want = eigen_moments(expected);
  for (std::size_t k = 0; k < 4; ++k) r.require(std::abs(moments[k] - want[k]) <= kSpectrum, "moment");
  r.require(std::abs(negativity(phi) - 0.5) <= kSpectrum, "negativity");
  return r;
}

Result files_and_demo() {
  Result r;
  std::mt19937_64 rng(0xf11e);
  std::vector<Member> members;
  for (int i = 0; i < 10; ++i) {
    members.push_back({"m" + std::to_string(i), BipartiteState(random_density_matrix(4, rng), {2, 2})});
  }
  const StateSet set("round-trip", {2, 2}, members);
  const auto back = cli::parse_state_set(cli::serialize_state_set(set)).set;
  for (std::size_t i = 0; i < set.size(); ++i) {
    r.require(max_abs_diff(back[i].state.rho(), set[i].state.rho()) <= kRoundTrip, "round trip");
  }

  const char* argv[] = {"disent", "demo", "--format", "structured"};
  std::ostringstream out, err;
  r.require(cli::run(4, argv, out, err) == cli::kOk, "demo exit status");
  const auto report = cli::to_json(cli::cmd_demo());
  for (const auto& c : report["claims"]) {
    const auto v = c["verdict"].get<std::string>();
    r.require(v == "REPRODUCED" || v == "CONSISTENT", c["entry"].get<std::string>() + ": " + v);
  }
  return r;
}

} // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"broadcast unitary is the exact controlled flip, self-adjoint, squares to 1",
       broadcast_unitary_exact},
      {"local broadcast of 1000 general-form states zeroes b, d, f (1e-12)", broadcast_closed_form},
      {"local broadcast preserves both marginals (1e-9)", broadcast_preserves_marginals},
      {"local broadcast output is PPT, PT-invariant, negativity <= 1e-9", broadcast_output_separable},
      {"set channel on 200 rotated pairs preserves marginals (1e-9) with PPT outputs",
       set_channel_on_rotated_pairs},
      {"Bell states are maximally entangled and disentangle to 1/4 (1e-12)",
       bell_states_to_maximally_mixed},
      {"catalog verdicts: eq4 separable-not-product, eq5 none, bell measure-prepare",
       catalog_verdicts},
      {"partial trace and transpose match oracles on 1500 matrices (1e-12)",
       partial_operations_match_oracles},
      {"PT of phi+ has spectrum {-1/2, 1/2, 1/2, 1/2} (1e-10), negativity 1/2",
       phi_plus_partial_transpose},
      {"state files round-trip (1e-15); demo exits 0 with no mismatch", files_and_demo},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %zu. %s", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first);
    if (!r.pass) std::printf("  (%s)", r.detail.c_str());
    std::printf("\n");
    if (!r.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
