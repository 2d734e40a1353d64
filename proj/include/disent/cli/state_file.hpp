#pragma once

#include "disent/disentangle.hpp"
#include "disent/errors.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace disent::cli {

// Schema major version written by serialize_state_set and accepted by the parser.
inline constexpr const char* kSchemaVersion = "1.0";

// Malformed input. `where` is "line L, column C" for syntax errors and a JSON
// path such as "$.states[1].data[0]" for schema errors.
class ParseError : public Error {
public:
  ParseError(std::string source, std::string where, const std::string& message);

  const std::string& source() const { return source_; }
  const std::string& where() const { return where_; }

private:
  std::string source_;
  std::string where_;
};

class IoError : public Error {
public:
  using Error::Error;
};

struct LoadedSet {
  StateSet set;
  std::vector<std::string> warnings;
};

// Parses a state-set document. Pure states go through the renormalization
// policy of PureState::normalized; its warnings are collected. Members that are
// not density matrices raise InvalidStateError naming the member.
LoadedSet parse_state_set(const std::string& text, const std::string& source = "<input>",
                          const Tolerance& tol = {});

LoadedSet load_state_set(const std::filesystem::path& path, const Tolerance& tol = {});

// Every member is written as a mixed state at full double precision.
std::string serialize_state_set(const StateSet& set);

void save_state_set(const StateSet& set, const std::filesystem::path& path);

} // namespace disent::cli
