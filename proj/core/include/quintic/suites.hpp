#pragma once

#include <string>
#include <vector>

#include "quintic/mirror.hpp"
#include "quintic/report.hpp"

namespace quintic {

struct RunConfig {
  int order_q = 20;
  int order_z = 10;
  int genus = 2;
};

// realize(du f) realize(L) = qdq(realize f) for every monomial Linv^a Z^b X1.. Y of degree <= max_degree
// with -1 <= a and b <= 2, plus the two explicit generator rules.
Report check_realization(const IData& data, int max_degree);

struct Criterion {
  int id = 0;
  std::string title;
  Report report;
  bool passed() const { return all_pass(report); }
};

// One criterion per entry, in order 1..10; suites run concurrently.
std::vector<Criterion> acceptance(const RunConfig& cfg = {});
Criterion acceptance_criterion(int id, const RunConfig& cfg = {});

}  // namespace quintic
