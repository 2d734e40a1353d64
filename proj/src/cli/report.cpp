#include "disent/cli/report.hpp"

#include <cstdio>
#include <sstream>

namespace disent::cli {

using ordered = nlohmann::ordered_json;

const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::Reproduced: return "REPRODUCED";
  case Verdict::Consistent: return "CONSISTENT";
  case Verdict::Mismatch: return "MISMATCH";
  }
  return "?";
}

namespace {

ordered classification_json(const Classification& c) {
  ordered j;
  j["perfectly_distinguishable"] = c.perfectly_distinguishable;
  j["identical_marginals"] = c.identical_marginals;
  j["commuting_marginals_A"] = c.commuting_marginals_a;
  j["commuting_marginals_B"] = c.commuting_marginals_b;
  j["selected_machine"] = to_string(c.selected_machine);
  if (c.all_members_separable) {
    j["all_members_separable"] = *c.all_members_separable;
  } else {
    j["all_members_separable"] = nullptr;
  }
  return j;
}

ordered state_report_json(const DisentanglementReport& r) {
  ordered j;
  j["input_label"] = r.input_label;
  j["machine"] = to_string(r.machine);
  j["output"] = to_json(r.output.rho());
  j["marginal_deviation_A"] = r.marginal_deviation_a;
  j["marginal_deviation_B"] = r.marginal_deviation_b;
  j["output_is_product"] = r.output_is_product;
  j["output_is_separable"] = r.output_is_separable;
  j["ppt_margin"] = r.ppt_margin;
  return j;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x == 0.0 ? 0.0 : x);  // no "-0.000000"
  return buf;
}

std::string scientific(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string entry_text(complex z) {
  std::string re = fixed(z.real());
  std::string im = fixed(std::abs(z.imag()));
  if (re == "-0.000000") re = "0.000000";
  const bool negative_imag = z.imag() < 0.0 && im != "0.000000";
  if (re[0] != '-') re.insert(re.begin(), ' ');
  return re + (negative_imag ? "-" : "+") + im + "i";
}

void matrix_text(std::ostream& os, const ComplexMatrix& m, const std::string& indent) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "  " : " ") << entry_text(m(r, c));
    os << " ]\n";
  }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void classification_text(std::ostream& os, const Classification& c, const std::string& indent) {
  os << indent << "perfectly_distinguishable: " << yes_no(c.perfectly_distinguishable) << "\n"
     << indent << "identical_marginals:       " << yes_no(c.identical_marginals) << "\n"
     << indent << "commuting_marginals_A:     " << yes_no(c.commuting_marginals_a) << "\n"
     << indent << "commuting_marginals_B:     " << yes_no(c.commuting_marginals_b) << "\n"
     << indent << "selected_machine:          " << to_string(c.selected_machine) << "\n";
  if (c.all_members_separable) {
    os << indent << "note: all members "
       << (*c.all_members_separable ? "are already separable" : "separable: false") << "\n";
  }
}

void state_text(std::ostream& os, const DisentanglementReport& r, const std::string& indent) {
  os << indent << "state " << r.input_label << " -> " << to_string(r.machine) << "\n";
  os << indent << "  output:\n";
  matrix_text(os, r.output.rho(), indent + "    ");
  os << indent << "  marginal_deviation_A: " << scientific(r.marginal_deviation_a) << "\n"
     << indent << "  marginal_deviation_B: " << scientific(r.marginal_deviation_b) << "\n"
     << indent << "  output_is_product:    " << yes_no(r.output_is_product) << "\n"
     << indent << "  output_is_separable:  " << yes_no(r.output_is_separable) << "\n"
     << indent << "  ppt_margin:           " << scientific(r.ppt_margin) << "\n";
}

} // namespace

ordered to_json(const ComplexMatrix& m) {
  ordered rows = ordered::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered row = ordered::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered to_json(const Report& report) {
  ordered j;
  j["set"] = report.set_name;
  if (report.classification) {
    j["classification"] = classification_json(*report.classification);
  }
  if (!report.states.empty()) {
    ordered states = ordered::array();
    for (const auto& s : report.states) states.push_back(state_report_json(s));
    j["states"] = std::move(states);
  }
  if (!report.claims.empty()) {
    ordered claims = ordered::array();
    for (const auto& c : report.claims) {
      ordered cj;
      cj["entry"] = c.entry;
      cj["claim"] = c.claim;
      cj["claim_kind"] = to_string(c.kind);
      cj["classification"] = classification_json(c.classification);
      ordered states = ordered::array();
      for (const auto& s : c.states) states.push_back(state_report_json(s));
      cj["states"] = std::move(states);
      cj["verdict"] = to_string(c.verdict);
      cj["detail"] = c.detail;
      claims.push_back(std::move(cj));
    }
    j["claims"] = std::move(claims);
  }
  j["warnings"] = report.warnings;
  return j;
}

std::string render_text(const Report& report) {
  std::ostringstream os;
  if (!report.set_name.empty()) os << "set: " << report.set_name << "\n";
  if (report.classification) {
    os << "classification:\n";
    classification_text(os, *report.classification, "  ");
  }
  for (const auto& s : report.states) state_text(os, s, "");
  for (const auto& c : report.claims) {
    os << "[" << to_string(c.verdict) << "] " << c.entry << ": \"" << c.claim << "\"\n"
       << "  machine: " << to_string(c.classification.selected_machine) << "\n"
       << "  " << c.detail << "\n";
  }
  if (!report.warnings.empty()) {
    os << "warnings:\n";
    for (const auto& w : report.warnings) os << "  - " << w << "\n";
  }
  return os.str();
}

std::string render(const Report& report, Format format) {
  if (format == Format::Structured) return to_json(report).dump(2) + "\n";
  return render_text(report);
}

} // namespace disent::cli
