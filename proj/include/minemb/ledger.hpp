#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace minemb {

// One verified comparison. Every entry carries both sides and the signed
// margin so a report is auditable without rerunning; boolean-only results
// are not representable on purpose.
struct InequalityRecord {
  std::string name;      // what is compared, e.g. "aubin_dominance"
  std::string params;    // instance, e.g. "n=5 k=2"
  double lhs = 0.0;
  double rhs = 0.0;
  std::string relation;  // "<", "<=", ">", ">=", "in(0,1)", "approx"
  double margin = 0.0;   // slack in favor of the relation; negative = violated
  bool pass = false;
  std::string note;      // optional flag, e.g. an ambiguous-source reading

  // Slack granted to "<=" records whose two sides are analytically equal at
  // a boundary case; strict relations demand a plainly positive margin and
  // approx entries use their own tolerance (margin = tol - |lhs-rhs|).
  static constexpr double kStrictSlack = 1e-12;
};

inline InequalityRecord make_less(std::string name, std::string params,
                                  double lhs, double rhs,
                                  std::string note = {}) {
  InequalityRecord r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = "<";
  r.margin = rhs - lhs;
  r.pass = r.margin > 0.0;
  r.note = std::move(note);
  return r;
}

inline InequalityRecord make_greater(std::string name, std::string params,
                                     double lhs, double rhs,
                                     std::string note = {}) {
  InequalityRecord r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = ">";
  r.margin = lhs - rhs;
  r.pass = r.margin > 0.0;
  r.note = std::move(note);
  return r;
}

inline InequalityRecord make_less_equal(std::string name, std::string params,
                                        double lhs, double rhs,
                                        std::string note = {}) {
  InequalityRecord r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = "<=";
  r.margin = rhs - lhs;
  r.pass = r.margin >= -InequalityRecord::kStrictSlack;
  r.note = std::move(note);
  return r;
}

inline InequalityRecord make_approx(std::string name, std::string params,
                                    double lhs, double rhs, double tol,
                                    std::string note = {}) {
  InequalityRecord r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = "approx";
  r.margin = tol - std::abs(lhs - rhs);
  r.pass = r.margin >= 0.0;
  r.note = std::move(note);
  return r;
}

// Informational entry: publishes a measured quantity without judging it.
// Always passes; the value is surfaced so downstream readers can see it.
inline InequalityRecord make_reported(std::string name, std::string params,
                                      double value, std::string note = {}) {
  InequalityRecord r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.lhs = value;
  r.rhs = 0.0;
  r.relation = "reported";
  r.margin = 0.0;
  r.pass = true;
  r.note = std::move(note);
  return r;
}

// lhs must lie strictly inside (lo, hi).
inline InequalityRecord make_interval(std::string name, std::string params,
                                      double lhs, double lo, double hi,
                                      std::string note = {}) {
  InequalityRecord r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = hi;
  r.relation = "in(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
  r.margin = std::min(lhs - lo, hi - lhs);
  r.pass = r.margin > 0.0;
  r.note = std::move(note);
  return r;
}

struct LedgerSummary {
  std::size_t pass_count = 0;
  std::size_t fail_count = 0;
  double min_margin = 0.0;
  double max_abs_error = 0.0;  // over approx-type records
  std::string worst_case_id;   // record with the smallest margin
};

// Accumulates records for one campaign run. Summaries over an empty record
// set are forbidden: a campaign that verified nothing must not look green.
struct DiscrepancyLedger {
  std::string name;
  std::vector<InequalityRecord> records;

  void add(InequalityRecord r) { records.push_back(std::move(r)); }

  bool all_pass() const {
    if (records.empty())
      throw std::logic_error("ledger '" + name + "' holds no records");
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }

  LedgerSummary summary() const {
    if (records.empty())
      throw std::logic_error("ledger '" + name + "' holds no records");
    LedgerSummary s;
    s.min_margin = records.front().margin;
    s.worst_case_id = records.front().name + " " + records.front().params;
    for (const auto& r : records) {
      (r.pass ? s.pass_count : s.fail_count)++;
      if (r.margin < s.min_margin) {
        s.min_margin = r.margin;
        s.worst_case_id = r.name + " " + r.params;
      }
      if (r.relation == "approx")
        s.max_abs_error = std::max(s.max_abs_error, std::abs(r.lhs - r.rhs));
    }
    return s;
  }
};

}  // namespace minemb
