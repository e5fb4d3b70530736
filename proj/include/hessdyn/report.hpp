#pragma once
// Structured verification reports: one record per check, grouped into named
// suites, with CSV serialization and the shared complex-number text format.

#include <complex>
#include <cstdio>
#include <string>
#include <vector>

namespace hessdyn {

enum class CheckStatus { Pass, Fail, Unresolved };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "unresolved";
  }
}

/// A single verified (or refuted, or open) claim.  The claim text is
/// self-contained: it states what was checked in mathematical language, and
/// the witness carries the values that substantiate the verdict.
struct CheckRecord {
  std::string id;
  std::string claim;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckRecord> checks;

  bool all_passed() const {
    for (const CheckRecord& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
  int fail_count() const {
    int n = 0;
    for (const CheckRecord& c : checks)
      if (c.status == CheckStatus::Fail) ++n;
    return n;
  }
};

// ----------------------------------------------------------- text formatting

/// 17-significant-digit decimal, enough to round-trip an IEEE double.
inline std::string format_double17(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

/// Complex values as "re+imi" / "re-imi" with 17 significant digits each.
inline std::string format_complex17(const std::complex<double>& z) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

/// Quote a CSV field when it contains a delimiter, quote, or newline.
inline std::string csv_escape(const std::string& s) {
  bool needs = false;
  for (char ch : s)
    if (ch == ',' || ch == '"' || ch == '\n') {
      needs = true;
      break;
    }
  if (!needs) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

/// One CSV document for a list of suites: header row plus one row per check.
inline std::string report_to_csv(const std::vector<SuiteReport>& suites) {
  std::string out = "suite,check,status,claim,witness\n";
  for (const SuiteReport& s : suites)
    for (const CheckRecord& c : s.checks) {
      out += csv_escape(s.name);
      out += ',';
      out += csv_escape(c.id);
      out += ',';
      out += to_string(c.status);
      out += ',';
      out += csv_escape(c.claim);
      out += ',';
      out += csv_escape(c.witness);
      out += '\n';
    }
  return out;
}

}  // namespace hessdyn
