#pragma once

#include "disent/catalog.hpp"
#include "disent/disentangle.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace disent::cli {

enum class Format { Text, Structured };

// Outcome of checking one catalog claim.
//   Reproduced - the claimed disentanglement was carried out and verified.
//   Consistent - the claim is an impossibility and no sufficient condition applies.
//   Mismatch   - our verdict contradicts the claim.
enum class Verdict { Reproduced, Consistent, Mismatch };

const char* to_string(Verdict v);

struct ClaimCheck {
  std::string entry;
  std::string claim;
  ClaimKind kind;
  Classification classification;
  std::vector<DisentanglementReport> states;
  Verdict verdict;
  std::string detail;
};

struct Report {
  std::string set_name;
  std::optional<Classification> classification;
  std::vector<DisentanglementReport> states;
  std::vector<ClaimCheck> claims;
  std::vector<std::string> warnings;
};

nlohmann::ordered_json to_json(const Report& report);
nlohmann::ordered_json to_json(const ComplexMatrix& m);

// Human-readable rendering; matrices use fixed 6-decimal precision.
std::string render_text(const Report& report);

std::string render(const Report& report, Format format);

} // namespace disent::cli
