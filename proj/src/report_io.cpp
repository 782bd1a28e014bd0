#include "minemb/report_io.hpp"

#include <cstdio>
#include <ctime>
#include <sstream>

#include "json.hpp"  // vendored; used only for JSON string escaping

namespace minemb {

namespace {

std::string jnum(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s = buf;
  // Non-finite values are not valid JSON literals; they would signal a bug
  // upstream, so surface them as null rather than emitting broken syntax.
  if (s.find("inf") != std::string::npos ||
      s.find("nan") != std::string::npos)
    return "null";
  return s;
}

std::string jstr(const std::string& s) { return nlohmann::json(s).dump(); }

void ledger_json(std::ostringstream& out, const DiscrepancyLedger& led) {
  const LedgerSummary sum = led.summary();
  out << "{\"kind\":\"ledger\",\"name\":" << jstr(led.name)
      << ",\"summary\":{\"pass_count\":" << sum.pass_count
      << ",\"fail_count\":" << sum.fail_count
      << ",\"min_margin\":" << jnum(sum.min_margin)
      << ",\"max_abs_error\":" << jnum(sum.max_abs_error)
      << ",\"worst_case_id\":" << jstr(sum.worst_case_id) << "},\"records\":[";
  for (std::size_t i = 0; i < led.records.size(); ++i) {
    const InequalityRecord& r = led.records[i];
    if (i) out << ',';
    out << "{\"name\":" << jstr(r.name) << ",\"params\":" << jstr(r.params)
        << ",\"lhs\":" << jnum(r.lhs) << ",\"rhs\":" << jnum(r.rhs)
        << ",\"relation\":" << jstr(r.relation)
        << ",\"margin\":" << jnum(r.margin)
        << ",\"pass\":" << (r.pass ? "true" : "false");
    if (!r.note.empty()) out << ",\"note\":" << jstr(r.note);
    out << '}';
  }
  out << "]}";
}

void closed_form_json(std::ostringstream& out, const ClosedFormReport& rep) {
  out << "{\"kind\":" << jstr(rep.kind);
  if (rep.kind == "sigma_table") {
    out << ",\"entries\":[";
    for (std::size_t i = 0; i < rep.table.size(); ++i) {
      const SigmaEntry& e = rep.table[i];
      if (i) out << ',';
      out << "{\"manifold\":" << jstr(e.manifold)
          << ",\"dimension\":" << e.dimension
          << ",\"value\":" << jnum(e.value) << ",\"form\":" << jstr(e.form)
          << '}';
    }
    out << ']';
  } else {
    out << ",\"values\":{";
    bool first = true;
    for (const auto& kv : rep.labels) {
      if (!first) out << ',';
      first = false;
      out << jstr(kv.first) << ':' << jstr(kv.second);
    }
    for (const auto& kv : rep.values) {
      if (!first) out << ',';
      first = false;
      out << jstr(kv.first) << ':' << jnum(kv.second);
    }
    out << '}';
  }
  out << '}';
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"')
      quoted += "\"\"";
    else
      quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string current_utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string to_json(const ReportEnvelope& env) {
  std::ostringstream out;
  out << "{\"tool_version\":" << jstr(env.tool_version)
      << ",\"command\":" << jstr(env.command) << ",\"seed\":" << env.seed;
  if (env.with_timestamp) out << ",\"timestamp\":" << jstr(env.timestamp);
  out << ",\"status\":" << jstr(env.status) << ",\"payload\":";
  if (env.has_ledger)
    ledger_json(out, env.ledger);
  else if (env.has_closed_form)
    closed_form_json(out, env.closed_form);
  else
    out << "null";
  out << "}\n";
  return out.str();
}

std::string to_csv(const ReportEnvelope& env) {
  std::ostringstream out;
  if (env.has_ledger) {
    out << "name,params,lhs,rhs,relation,margin,pass\n";
    for (const InequalityRecord& r : env.ledger.records)
      out << csv_field(r.name) << ',' << csv_field(r.params) << ','
          << jnum(r.lhs) << ',' << jnum(r.rhs) << ',' << csv_field(r.relation)
          << ',' << jnum(r.margin) << ',' << (r.pass ? "true" : "false")
          << '\n';
  } else if (env.has_closed_form && env.closed_form.kind == "sigma_table") {
    out << "manifold,dimension,value,form\n";
    for (const SigmaEntry& e : env.closed_form.table)
      out << csv_field(e.manifold) << ',' << e.dimension << ','
          << jnum(e.value) << ',' << csv_field(e.form) << '\n';
  } else if (env.has_closed_form) {
    out << "quantity,value\n";
    for (const auto& kv : env.closed_form.labels)
      out << csv_field(kv.first) << ',' << csv_field(kv.second) << '\n';
    for (const auto& kv : env.closed_form.values)
      out << csv_field(kv.first) << ',' << jnum(kv.second) << '\n';
  }
  return out.str();
}

std::string to_text(const ReportEnvelope& env) {
  std::ostringstream out;
  out << env.tool_version << " | " << env.command << "\n";
  out << "status: " << env.status << "\n";
  if (env.has_ledger) {
    const LedgerSummary sum = env.ledger.summary();
    out << "ledger " << env.ledger.name << ": " << env.ledger.records.size()
        << " records, " << sum.pass_count << " pass, " << sum.fail_count
        << " fail\n";
    out << "min margin " << jnum(sum.min_margin) << " at "
        << sum.worst_case_id << "\n";
    for (const InequalityRecord& r : env.ledger.records)
      if (!r.pass)
        out << "FAIL " << r.name << " [" << r.params << "] lhs=" << jnum(r.lhs)
            << " " << r.relation << " rhs=" << jnum(r.rhs)
            << " margin=" << jnum(r.margin)
            << (r.note.empty() ? "" : " note: " + r.note) << "\n";
  } else if (env.has_closed_form && env.closed_form.kind == "sigma_table") {
    for (const SigmaEntry& e : env.closed_form.table)
      out << e.manifold << " (dim " << e.dimension << "): " << jnum(e.value)
          << "  [" << e.form << "]\n";
  } else if (env.has_closed_form) {
    for (const auto& kv : env.closed_form.labels)
      out << kv.first << " = " << kv.second << "\n";
    for (const auto& kv : env.closed_form.values)
      out << kv.first << " = " << jnum(kv.second) << "\n";
  }
  return out.str();
}

}  // namespace minemb
