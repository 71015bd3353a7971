#include <iostream>

#include "quintic/suites.hpp"

using namespace quintic;

int main() {
  int failed = 0;
  for (const auto& c : acceptance()) {
    std::cout << "Criterion " << c.id << ": " << (c.passed() ? "PASS" : "FAIL") << " " << c.title << "\n";
    for (const auto& r : c.report) {
      if (r.status == Status::pass) continue;
      std::cout << "  " << status_str(r.status) << " " << r.name;
      if (!r.detail.empty()) std::cout << ": " << r.detail;
      std::cout << "\n";
    }
    if (!c.passed()) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
