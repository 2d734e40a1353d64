#pragma once

#include "disent/cli/report.hpp"
#include "disent/cli/state_file.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace disent::cli {

// Process exit statuses of the `disent` tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,                // bad flags, unknown state label
  kIoError = 2,              // missing or unreadable file, unwritable --output
  kParseError = 3,           // malformed state-set file
  kInvalidState = 4,         // a matrix that is not a density matrix
  kPreconditionViolated = 5, // requested machine does not apply to the set
  kDimensionError = 6,       // mismatched or unsupported dimensions
  kDemoMismatch = 7,         // demo verdict contradicts a recorded claim
  kInternalError = 10,
};

enum class Method { Auto, Prop1a, Prop1b, Prop2 };

struct Eq3Params {
  double theta = kEq3DefaultTheta;
  double phi = kEq3DefaultPhi;
};

class UnknownLabelError : public Error {
public:
  using Error::Error;
};

// Catalog names win over paths; "file:" forces a path.
LoadedSet resolve_input(const std::string& input, const Tolerance& tol = {},
                        const Eq3Params& eq3 = {});

Report cmd_classify(const std::string& input, const Tolerance& tol = {},
                    const Eq3Params& eq3 = {});

// Runs the machine on the labelled member, or on every member when label is empty.
Report cmd_disentangle(const std::string& input, const std::optional<std::string>& label,
                       Method method, const Tolerance& tol = {}, const Eq3Params& eq3 = {});

// Both files hold state sets of equal dims; the member is picked by label, or is
// the only member.
Report cmd_verify(const std::string& input_file, const std::string& output_file,
                  const std::optional<std::string>& label, const Tolerance& tol = {});

Report cmd_demo(const Tolerance& tol = {});

// Full command-line entry point; returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace disent::cli
