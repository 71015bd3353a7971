#include "quintic/suites.hpp"

#include <future>
#include <stdexcept>

#include "quintic/graphs.hpp"
#include "quintic/hae.hpp"
#include "quintic/oscpf.hpp"
#include "quintic/qde.hpp"

namespace quintic {

namespace {

void append(Report& r, const Report& more, const std::string& prefix = {}) {
  for (auto c : more) {
    if (!prefix.empty()) c.name = prefix + ": " + c.name;
    r.push_back(std::move(c));
  }
}

// Monomials of the given degree with Linv exponent >= -1 and Z exponent <= 2.
std::vector<Mono> monomials(int degree) {
  std::vector<Mono> out;
  for (int x3 = 0; 3 * x3 <= degree; ++x3)
    for (int x2 = 0; 3 * x3 + 2 * x2 <= degree; ++x2)
      for (int x1 = 0; 3 * x3 + 2 * x2 + x1 <= degree; ++x1)
        for (int y = 0; 3 * x3 + 2 * x2 + x1 + y <= degree + 1; ++y) {
          const int a = degree - 3 * x3 - 2 * x2 - x1 - y;
          if (a < -1) continue;
          for (int b = 0; b <= 2; ++b) out.push_back(Mono{{a, b, x1, x2, x3, y}});
        }
  return out;
}

Report realization_report(const IData& data, int max_degree) {
  Report rep;
  const Realizer re(data);
  const int N = data.order;
  int tested = 0, failed = 0;
  std::string first;
  for (int d = 0; d <= max_degree; ++d)
    for (const Mono& m : monomials(d)) {
      GenPoly f;
      f.add_term(m, Rat(1));
      QSeries lhs = re(du(f)) * re.L;
      QSeries rhs = qdq(re(f));
      ++tested;
      const int k = first_mismatch(lhs.truncated(N), rhs.truncated(N));
      if (k >= 0) {
        if (first.empty()) first = f.to_string() + " at q^" + std::to_string(k);
        ++failed;
      }
    }
  rep.push_back(check("du compatible with realization on " + std::to_string(tested) + " monomials of degree <= " +
                          std::to_string(max_degree),
                      failed == 0, failed ? std::to_string(failed) + " failures, first " + first : ""));
  rep.push_back(check("du Y rule under realization", re(du_Y()) * re.L == qdq(re.Y)));
  rep.push_back(check("du X3 rule under realization", re(du_X3()) * re.L == qdq(re.X3)));
  return rep;
}

Criterion run_criterion(int id, const RunConfig& cfg) {
  Criterion c;
  c.id = id;
  switch (id) {
    case 1: {
      c.title = "mirror identities to order q^" + std::to_string(cfg.order_q);
      append(c.report, check_diagonal(build_idata(cfg.order_q)));
      break;
    }
    case 2: {
      c.title = "generator realization to order q^15";
      append(c.report, realization_report(build_idata(15), 4));
      break;
    }
    case 3: {
      c.title = "divisor-equation fixtures";
      append(c.report, check_fixtures(fixtures()));
      break;
    }
    case 4: {
      c.title = "genus-2 holomorphic anomaly equation";
      Fixtures fx = fixtures();
      append(c.report, hae_check(fx));
      GenPoly lhs = partial(fx.f20, kY);
      // Spot coefficients of d_Y F2 on Y^2, XY and X Z_1.
      const Rat yy = lhs.coeff(Mono{{0, 0, 0, 0, 0, 2}});
      const Rat xy = lhs.coeff(Mono{{0, 0, 1, 0, 0, 1}});
      const Rat xz = lhs.coeff(Mono{{1, 1, 1, 0, 0, 0}}) * 5;
      c.report.push_back(check("d_Y F2 [Y^2] = -5/8", yy == rat(-5, 8), str(yy)));
      c.report.push_back(check("d_Y F2 [XY] = -115/12", xy == rat(-115, 12), str(xy)));
      c.report.push_back(check("d_Y F2 [X Z_1] = -875/9", xz == rat(-875, 9), str(xz)));
      break;
    }
    case 5: {
      c.title = "R-matrix structure to z^" + std::to_string(cfg.order_z);
      RMatrix R = r_matrix(cfg.order_z, row0_entries(cfg.order_z));
      append(c.report, check_r_matrix(R));
      const int kp = std::min(7, cfg.order_z);
      append(c.report, verify_r_pdes(R, kp));
      append(c.report, verify_v_pdes(R, kp));
      break;
    }
    case 6: {
      c.title = "row 4 two-route consistency to z^8";
      RMatrix R = r_matrix(8, row0_entries(8));
      append(c.report, check_two_route(R, row4_prediction(8), 8));
      break;
    }
    case 7: {
      c.title = "Picard-Fuchs route";
      append(c.report, certify_r_sequence(r_sequence(5, 0, 10)), "m=5");
      append(c.report, certify_m_polynomiality(3));
      RSequence s = r_sequence(5, 0, 1);
      // L r_1 = -(3/20) L^5, i.e. p_1 = (3/20)(X - 1).
      c.report.push_back(check("L r_1 = -(3/20) L^5", s.p.size() > 1 && s.p[1] == XPoly{rat(-3, 20), rat(3, 20)}));
      append(c.report, certify_zazi_corollary(10));
      break;
    }
    case 8: {
      c.title = "graph counts";
      const size_t b2 = enumerate_bipartite(2, 0, {}, true).size();
      const size_t b1 = enumerate_bipartite(1, 0, {1}, true).size();
      const size_t t2 = enumerate_tripartite(2, 0).size();
      c.report.push_back(check("bipartite g=2 count 6", b2 == 6, std::to_string(b2)));
      c.report.push_back(check("bipartite g=1 nu=(1) count 4", b1 == 4, std::to_string(b1)));
      c.report.push_back(check("tripartite g=2 count 20", t2 == 20, std::to_string(t2)));
      const std::vector<std::string> figure = {"AA", "BA", "BB", "CA", "CB", "CC", "DA", "DB", "DD", "EA",
                                               "EB", "EC", "ED", "EE", "EF", "FA", "FB", "FC", "FD", "FF"};
      std::vector<std::string> got = genus_two_letter_pairs();
      std::string s;
      for (const auto& p : got) s += p + " ";
      c.report.push_back(check("merge letter pairs", got == figure, s));
      break;
    }
    case 9: {
      c.title = "psi intersection table";
      c.report.push_back(check("<tau_0^3>_0 = 1", psi_integral(0, {0, 0, 0}) == 1));
      c.report.push_back(check("<tau_1>_1 = 1/24", psi_integral(1, {1}) == rat(1, 24)));
      c.report.push_back(check("<tau_4>_2 = 1/1152", psi_integral(2, {4}) == rat(1, 1152)));
      append(c.report, check_psi_table());
      break;
    }
    case 10: {
      c.title = "orbifold regularity, genus 2";
      append(c.report, orbifold_regularity(fixtures().f20, 2).report);
      break;
    }
    default: throw std::invalid_argument("acceptance: criterion id out of range");
  }
  return c;
}

}  // namespace

Report check_realization(const IData& data, int max_degree) { return realization_report(data, max_degree); }

Criterion acceptance_criterion(int id, const RunConfig& cfg) { return run_criterion(id, cfg); }

std::vector<Criterion> acceptance(const RunConfig& cfg) {
  std::vector<std::future<Criterion>> jobs;
  for (int id = 1; id <= 10; ++id) jobs.push_back(std::async(std::launch::async, run_criterion, id, cfg));
  std::vector<Criterion> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace quintic
