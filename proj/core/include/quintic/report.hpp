#pragma once

#include <string>
#include <vector>

namespace quintic {

enum class Status { pass, fail, diag };

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

using Report = std::vector<CheckResult>;

inline CheckResult check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? Status::pass : Status::fail, std::move(detail)};
}

inline CheckResult diag(std::string name, std::string detail) {
  return {std::move(name), Status::diag, std::move(detail)};
}

inline bool all_pass(const Report& r) {
  for (const auto& c : r)
    if (c.status == Status::fail) return false;
  return true;
}

inline const char* status_str(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::diag: return "DIAG";
  }
  return "?";
}

// Printed-versus-computed discrepancy.
struct Erratum {
  std::string id;
  std::string location;
  std::string printed;
  std::string computed;
  std::string note;
};

}  // namespace quintic
