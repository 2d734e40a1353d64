#include "disent/cli/commands.hpp"

#include "disent/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <variant>

namespace disent::cli {

namespace {

constexpr const char* kFilePrefix = "file:";

// Either machine kind behind one call.
class AnyMachine {
public:
  AnyMachine(ProductMachine m) : impl_(std::move(m)) {}
  AnyMachine(SeparableMachine m) : impl_(std::move(m)) {}

  Machine id() const {
    return std::visit(
        [](const auto& m) {
          if constexpr (std::is_same_v<std::decay_t<decltype(m)>, ProductMachine>) {
            return m.mode();
          } else {
            return m.machine();
          }
        },
        impl_);
  }

  BipartiteState apply(const BipartiteState& input) const {
    return std::visit([&](const auto& m) { return m.apply(input); }, impl_);
  }

private:
  std::variant<ProductMachine, SeparableMachine> impl_;
};

AnyMachine build_machine(const StateSet& set, Machine machine, const Tolerance& tol) {
  switch (machine) {
  case Machine::MeasurePrepare:
  case Machine::BilocalPrepare: return ProductMachine::build(set, machine, tol);
  case Machine::LocalBroadcastB: return SeparableMachine::build(set, Party::B, tol);
  case Machine::LocalBroadcastA: return SeparableMachine::build(set, Party::A, tol);
  case Machine::None: break;
  }
  throw PreconditionViolated("no sufficient condition for disentanglement applies to set '" +
                             set.name() + "'");
}

AnyMachine build_machine(const StateSet& set, Method method, const Tolerance& tol) {
  switch (method) {
  case Method::Auto: return build_machine(set, classify(set, tol).selected_machine, tol);
  case Method::Prop1a: return ProductMachine::build(set, Machine::MeasurePrepare, tol);
  case Method::Prop1b: return ProductMachine::build(set, Machine::BilocalPrepare, tol);
  case Method::Prop2: return SeparableMachine::build(set, tol);
  }
  throw std::logic_error("unhandled method");
}

DisentanglementReport run_on(const AnyMachine& machine, const Member& member,
                             const Tolerance& tol) {
  auto report = verify(member.state, machine.apply(member.state), tol);
  report.input_label = member.label;
  report.machine = machine.id();
  return report;
}

const Member& pick(const StateSet& set, const std::optional<std::string>& label,
                   const std::string& source) {
  if (label) {
    if (auto i = set.find(*label)) return set[*i];
    throw UnknownLabelError("no state labelled '" + *label + "' in " + source);
  }
  if (set.size() != 1) {
    throw UnknownLabelError(source + " holds " + std::to_string(set.size()) +
                            " states; choose one with --state");
  }
  return set[0];
}

bool is_product_machine(Machine m) {
  return m == Machine::MeasurePrepare || m == Machine::BilocalPrepare;
}

ClaimCheck check_claim(const CatalogEntry& entry, const Tolerance& tol) {
  ClaimCheck check{entry.name,  entry.paper_claim,  entry.claim, classify(entry.set, tol),
                   {},          Verdict::Mismatch, {}};
  const Machine machine = check.classification.selected_machine;
  if (machine != Machine::None) {
    const auto runner = build_machine(entry.set, machine, tol);
    for (const auto& m : entry.set.members()) check.states.push_back(run_on(runner, m, tol));
  }

  const auto& states = check.states;
  const bool preserved = std::all_of(states.begin(), states.end(), [&](const auto& r) {
    return r.marginal_deviation_a <= tol.threshold() && r.marginal_deviation_b <= tol.threshold();
  });
  const bool all_separable = std::all_of(states.begin(), states.end(),
                                         [](const auto& r) { return r.output_is_separable; });
  const bool all_product = std::all_of(states.begin(), states.end(),
                                       [](const auto& r) { return r.output_is_product; });
  const bool ran = !states.empty();

  switch (entry.claim) {
  case ClaimKind::ProductPossible:
    if (ran && is_product_machine(machine) && preserved && all_product) {
      check.verdict = Verdict::Reproduced;
      check.detail = "every member disentangled to the product of its marginals";
    } else {
      check.detail = "no product machine applies or verification failed";
    }
    break;
  case ClaimKind::SeparableNotProduct:
    if (ran && !is_product_machine(machine) && preserved && all_separable && !all_product) {
      check.verdict = Verdict::Reproduced;
      check.detail = "local broadcasting yields separable, marginal-preserving outputs; no "
                     "product-state condition holds and some outputs are not product";
    } else {
      check.detail = "expected a separable-only disentanglement";
    }
    break;
  case ClaimKind::NotIntoProduct:
    if (!is_product_machine(machine)) {
      check.verdict = Verdict::Consistent;
      check.detail = "no product-state sufficient condition holds (impossibility not proven)";
    } else {
      check.detail = "a product-state sufficient condition holds";
    }
    break;
  case ClaimKind::NotAtAll:
    if (machine == Machine::None) {
      check.verdict = Verdict::Consistent;
      check.detail = "no sufficient condition holds (impossibility not proven)";
    } else {
      check.detail = "a sufficient condition holds";
    }
    break;
  }
  return check;
}

void emit(const Report& report, Format format, const std::string& output_path,
          std::ostream& out) {
  const std::string text = render(report, format);
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path);
  if (!file) throw IoError("cannot write '" + output_path + "'");
  file << text;
  if (!file) throw IoError("write to '" + output_path + "' failed");
}

} // namespace

LoadedSet resolve_input(const std::string& input, const Tolerance& tol, const Eq3Params& eq3) {
  if (input.rfind(kFilePrefix, 0) == 0) {
    return load_state_set(input.substr(std::string(kFilePrefix).size()), tol);
  }
  if (input == "eq3") {
    auto entry = eq3_entry(eq3.theta, eq3.phi);
    return {std::move(entry.set), std::move(entry.warnings)};
  }
  if (auto entry = find_catalog_entry(input)) {
    return {std::move(entry->set), std::move(entry->warnings)};
  }
  return load_state_set(input, tol);
}

Report cmd_classify(const std::string& input, const Tolerance& tol, const Eq3Params& eq3) {
  auto loaded = resolve_input(input, tol, eq3);
  Report report;
  report.set_name = loaded.set.name();
  report.classification = classify(loaded.set, tol);
  report.warnings = std::move(loaded.warnings);
  return report;
}

Report cmd_disentangle(const std::string& input, const std::optional<std::string>& label,
                       Method method, const Tolerance& tol, const Eq3Params& eq3) {
  auto loaded = resolve_input(input, tol, eq3);
  const StateSet& set = loaded.set;
  if (label && !set.find(*label)) {
    throw UnknownLabelError("no state labelled '" + *label + "' in set '" + set.name() + "'");
  }

  Report report;
  report.set_name = set.name();
  report.classification = classify(set, tol);
  const auto machine = build_machine(set, method, tol);
  for (const auto& m : set.members()) {
    if (label && m.label != *label) continue;
    report.states.push_back(run_on(machine, m, tol));
  }
  report.warnings = std::move(loaded.warnings);
  if (report.classification->all_members_separable.value_or(false)) {
    report.warnings.push_back("all members are already separable; the identity map also "
                              "disentangles this set");
  }
  return report;
}

Report cmd_verify(const std::string& input_file, const std::string& output_file,
                  const std::optional<std::string>& label, const Tolerance& tol) {
  auto before = load_state_set(input_file, tol);
  auto after = load_state_set(output_file, tol);
  const Member& in = pick(before.set, label, input_file);
  const Member& out = pick(after.set, label, output_file);
  if (in.state.dims() != out.state.dims()) {
    throw DimensionError("input and output states have different dims");
  }

  Report report;
  report.set_name = before.set.name();
  auto r = verify(in.state, out.state, tol);
  r.input_label = in.label;
  report.states.push_back(std::move(r));
  report.warnings = std::move(before.warnings);
  report.warnings.insert(report.warnings.end(), after.warnings.begin(), after.warnings.end());
  return report;
}

Report cmd_demo(const Tolerance& tol) {
  Report report;
  report.set_name = "demo";
  for (const auto& name : catalog_names()) {
    auto entry = find_catalog_entry(name);
    report.claims.push_back(check_claim(*entry, tol));
    for (const auto& w : entry->warnings) report.warnings.push_back(name + ": " + w);
  }
  return report;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify sets of bipartite states by sufficient conditions for "
               "disentanglement, run the matching machine and verify its output.",
               "disent"};
  app.require_subcommand(1);

  double tol_value = 1e-9;
  std::string format_name = "text";
  std::string output_path;
  Eq3Params eq3;
  std::string input;
  std::string input_file;
  std::string output_file;
  std::optional<std::string> label;
  Method method = Method::Auto;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol_value, "absolute and relative tolerance")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", format_name, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--output", output_path, "write the report to this file");
  };
  auto eq3_flags = [&](CLI::App* cmd) {
    cmd->add_option("--theta", eq3.theta, "theta of the eq3 catalog pair (radians)");
    cmd->add_option("--phi", eq3.phi, "phi of the eq3 catalog pair (radians)");
  };
  const std::string input_help = "catalog name (eq3, eq4, eq5, bell, maxent-pair) or state-set "
                                 "file; prefix with file: to force a path";

  auto* classify_cmd = app.add_subcommand("classify", "evaluate the sufficient conditions");
  classify_cmd->add_option("input", input, input_help)->required();
  common(classify_cmd);
  eq3_flags(classify_cmd);

  auto* disentangle_cmd = app.add_subcommand("disentangle", "run a disentanglement machine");
  disentangle_cmd->add_option("input", input, input_help)->required();
  disentangle_cmd->add_option("--state", label, "label of the member to disentangle");
  const std::map<std::string, Method> methods{{"auto", Method::Auto},
                                              {"prop1a", Method::Prop1a},
                                              {"prop1b", Method::Prop1b},
                                              {"prop2", Method::Prop2}};
  disentangle_cmd->add_option("--method", method, "auto, prop1a, prop1b or prop2")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  common(disentangle_cmd);
  eq3_flags(disentangle_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check marginals and separability of an output");
  verify_cmd->add_option("input_file", input_file, "state-set file with the original state")
      ->required();
  verify_cmd->add_option("output_file", output_file, "state-set file with the output state")
      ->required();
  verify_cmd->add_option("--state", label, "label to pick when a file holds several states");
  common(verify_cmd);

  auto* demo_cmd = app.add_subcommand("demo", "check every catalog set against its recorded claim");
  common(demo_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Tolerance tol = Tolerance::uniform(tol_value);
    const Format format = format_name == "structured" ? Format::Structured : Format::Text;
    Report report;
    int status = kOk;
    if (classify_cmd->parsed()) {
      report = cmd_classify(input, tol, eq3);
    } else if (disentangle_cmd->parsed()) {
      report = cmd_disentangle(input, label, method, tol, eq3);
    } else if (verify_cmd->parsed()) {
      report = cmd_verify(input_file, output_file, label, tol);
    } else {
      report = cmd_demo(tol);
      const bool mismatch = std::any_of(report.claims.begin(), report.claims.end(),
                                        [](const auto& c) { return c.verdict == Verdict::Mismatch; });
      if (mismatch) status = kDemoMismatch;
    }
    emit(report, format, output_path, out);
    return status;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const InvalidStateError& e) {
    err << "invalid state: " << e.what() << "\n";
    return kInvalidState;
  } catch (const PreconditionViolated& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPreconditionViolated;
  } catch (const IdentifyError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPreconditionViolated;
  } catch (const UnknownLabelError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << "\n";
    return kDimensionError;
  } catch (const UnsupportedDimsError& e) {
    err << "dimension error: " << e.what() << "\n";
    return kDimensionError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

} // namespace disent::cli
