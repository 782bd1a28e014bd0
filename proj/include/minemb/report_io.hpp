#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "minemb/closed_forms.hpp"
#include "minemb/ledger.hpp"

namespace minemb {

// Catalog answer: named scalars (with optional string labels such as the
// coefficient field) or a sigma table.
struct ClosedFormReport {
  std::string kind;  // "product_closed_form" | "projective_closed_form" |
                     // "sigma_table"
  std::vector<std::pair<std::string, std::string>> labels;
  std::vector<std::pair<std::string, double>> values;
  std::vector<SigmaEntry> table;
};

// Envelope around every CLI answer. Exactly one payload is active; `status`
// is "ok" when every ledger record passed and "violation" otherwise.
struct ReportEnvelope {
  std::string tool_version;
  std::string command;  // echo of the invocation
  std::uint64_t seed = 0;
  bool with_timestamp = true;
  std::string timestamp;  // UTC, RFC 3339; unused when suppressed
  std::string status;
  bool has_closed_form = false;
  ClosedFormReport closed_form;
  bool has_ledger = false;
  DiscrepancyLedger ledger;
};

std::string current_utc_timestamp();

// Single JSON object, snake_case keys, reals at 17 significant digits.
// Identical inputs yield byte-identical output (suppress the timestamp for
// fully reproducible bytes).
std::string to_json(const ReportEnvelope& env);

// Ledgers flatten one record per row under the pinned header
// "name,params,lhs,rhs,relation,margin,pass"; catalog reports flatten to
// quantity/value rows; sigma tables keep their own columns.
std::string to_csv(const ReportEnvelope& env);

// Human-readable summary (the default CLI output).
std::string to_text(const ReportEnvelope& env);

}  // namespace minemb
