#include "disent/cli/state_file.hpp"

#include "disent/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace disent::cli {

using nlohmann::json;

ParseError::ParseError(std::string source, std::string where, const std::string& message)
    : Error(source + ": " + where + ": " + message), source_(std::move(source)),
      where_(std::move(where)) {}

namespace {

// Walks a parsed document and reports schema problems with their JSON path.
class Reader {
public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& message) const {
    throw ParseError(source_, path, message);
  }

  const json& field(const json& obj, const std::string& path, const char* key) const {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
  }

  std::string text(const json& node, const std::string& path) const {
    if (!node.is_string()) fail(path, "expected a string");
    return node.get<std::string>();
  }

  std::size_t count(const json& node, const std::string& path) const {
    if (!node.is_number_unsigned() || node.get<std::uint64_t>() == 0) {
      fail(path, "expected a positive integer");
    }
    return node.get<std::size_t>();
  }

  complex number(const json& node, const std::string& path) const {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number()) {
      fail(path, "expected a complex number [re, im]");
    }
    const double re = node[0].get<double>();
    const double im = node[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) fail(path, "non-finite complex number");
    return {re, im};
  }

  std::vector<complex> vector(const json& node, const std::string& path, std::size_t n) const {
    if (!node.is_array()) fail(path, "expected an array of complex numbers");
    if (node.size() != n) {
      fail(path, "expected " + std::to_string(n) + " amplitudes, got " +
                     std::to_string(node.size()));
    }
    std::vector<complex> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(number(node[i], path + "[" + std::to_string(i) + "]"));
    return out;
  }

  ComplexMatrix matrix(const json& node, const std::string& path, std::size_t n) const {
    if (!node.is_array() || node.size() != n) {
      fail(path, "expected " + std::to_string(n) + " rows");
    }
    std::vector<complex> entries;
    entries.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      const auto row = vector(node[r], path + "[" + std::to_string(r) + "]", n);
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return ComplexMatrix(n, n, std::move(entries));
  }

private:
  std::string source_;
};

std::string line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(byte > 0 ? byte - 1 : 0, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

} // namespace

LoadedSet parse_state_set(const std::string& text, const std::string& source,
                          const Tolerance& tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source, line_and_column(text, e.byte), "malformed JSON");
  }

  const Reader in(source);
  const std::string version = in.text(in.field(doc, "$", "schema_version"), "$.schema_version");
  if (version != "1" && version.rfind("1.", 0) != 0) {
    in.fail("$.schema_version", "unsupported schema version '" + version + "'");
  }
  const std::string name = in.text(in.field(doc, "$", "name"), "$.name");

  const json& dims_node = in.field(doc, "$", "dims");
  if (!dims_node.is_array() || dims_node.size() != 2) in.fail("$.dims", "expected [dA, dB]");
  const Dims dims{in.count(dims_node[0], "$.dims[0]"), in.count(dims_node[1], "$.dims[1]")};

  const json& states = in.field(doc, "$", "states");
  if (!states.is_array() || states.empty()) in.fail("$.states", "expected a non-empty array");

  std::vector<std::string> warnings;
  std::vector<Member> members;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::string path = "$.states[" + std::to_string(i) + "]";
    const json& entry = states[i];
    const std::string label = in.text(in.field(entry, path, "label"), path + ".label");
    if (!labels.insert(label).second) in.fail(path + ".label", "duplicate label '" + label + "'");
    const std::string kind = in.text(in.field(entry, path, "kind"), path + ".kind");
    const json& data = in.field(entry, path, "data");

    try {
      if (kind == "pure") {
        auto amplitudes = in.vector(data, path + ".data", dims.total());
        const auto p = PureState::normalized(std::move(amplitudes), dims);
        if (p.warning()) warnings.push_back(label + ": " + *p.warning());
        members.push_back({label, BipartiteState(p.density(), dims, tol)});
      } else if (kind == "mixed") {
        members.push_back({label, BipartiteState(in.matrix(data, path + ".data", dims.total()),
                                                 dims, tol)});
      } else {
        in.fail(path + ".kind", "expected 'pure' or 'mixed', got '" + kind + "'");
      }
    } catch (const InvalidStateError& e) {
      throw InvalidStateError(source + ": state '" + label + "': " + e.what());
    }
  }
  return LoadedSet{StateSet(name, dims, std::move(members)), std::move(warnings)};
}

LoadedSet load_state_set(const std::filesystem::path& path, const Tolerance& tol) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_state_set(buffer.str(), path.string(), tol);
}

std::string serialize_state_set(const StateSet& set) {
  using ordered = nlohmann::ordered_json;
  ordered states = ordered::array();
  for (const auto& m : set.members()) {
    const auto& rho = m.state.rho();
    ordered rows = ordered::array();
    for (std::size_t r = 0; r < rho.rows(); ++r) {
      ordered row = ordered::array();
      for (std::size_t c = 0; c < rho.cols(); ++c) row.push_back(ordered::array({rho(r, c).real(), rho(r, c).imag()}));
      rows.push_back(std::move(row));
    }
    ordered state;
    state["label"] = m.label;
    state["kind"] = "mixed";
    state["data"] = std::move(rows);
    states.push_back(std::move(state));
  }
  ordered doc;
  doc["schema_version"] = kSchemaVersion;
  doc["name"] = set.name();
  doc["dims"] = {set.dims().a, set.dims().b};
  doc["states"] = std::move(states);
  return doc.dump(2) + "\n";
}

void save_state_set(const StateSet& set, const std::filesystem::path& path) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot write '" + path.string() + "'");
  file << serialize_state_set(set);
  if (!file) throw IoError("write to '" + path.string() + "' failed");
}

} // namespace disent::cli
