#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "quintic/graphs.hpp"
#include "quintic/hae.hpp"
#include "quintic/mirror.hpp"
#include "quintic/oscpf.hpp"
#include "quintic/qde.hpp"
#include "quintic/suites.hpp"

using namespace quintic;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  int order_q = 20;
  int order_z = 10;
  int genus = 2;
  int n = 0;
  int m = 5;
  std::string kind = "bipartite";
  std::vector<int> nu;
  bool as_json = false;
  std::string out;
};

json series_json(const QSeries& s) {
  json a = json::array();
  for (const auto& c : s.coeffs()) a.push_back(str(c));
  return a;
}

json poly_json(const GenPoly& f) {
  static const char* names[] = {"linv", "z", "x1", "x2", "x3", "y"};
  json a = json::array();
  for (const auto& [m, c] : f.terms()) {
    json t;
    t["coeff"] = str(c);
    for (int i = 0; i < 6; ++i) t[names[i]] = m.e[i];
    a.push_back(t);
  }
  return a;
}

json report_json(const Report& r) {
  json a = json::array();
  for (const auto& c : r) a.push_back({{"name", c.name}, {"status", status_str(c.status)}, {"detail", c.detail}});
  return a;
}

json graph_json(const DecoratedGraph& G) {
  json v = json::array(), e = json::array();
  for (const auto& x : G.vertices) {
    json legs = json::array();
    for (auto [id, d] : x.legs) legs.push_back({{"marking", id}, {"degree", d}});
    v.push_back({{"genus", x.genus}, {"level", x.level}, {"beta", x.beta}, {"legs", legs}, {"nu", x.nu}});
  }
  for (const auto& x : G.edges) e.push_back({{"u", x.u}, {"v", x.v}, {"du", x.du}, {"dv", x.dv}});
  return {{"vertices", v}, {"edges", e}, {"nu", G.nu}, {"automorphisms", automorphisms(G)}, {"text", to_string(G)}};
}

bool report_ok(const json& j) {
  if (j.is_object()) {
    if (j.contains("status") && j["status"] == "FAIL") return false;
    for (const auto& [k, v] : j.items())
      if (!report_ok(v)) return false;
  } else if (j.is_array()) {
    for (const auto& v : j)
      if (!report_ok(v)) return false;
  }
  return true;
}

bool is_poly(const json& v) { return v.is_array() && !v.empty() && v[0].is_object() && v[0].contains("coeff"); }

std::string poly_text(const json& v) {
  static const char* keys[] = {"linv", "z", "x1", "x2", "x3", "y"};
  static const char* names[] = {"Linv", "Z", "X", "X2", "X3", "Y"};
  std::string out;
  for (const auto& t : v) {
    if (!out.empty()) out += " + ";
    out += t["coeff"].get<std::string>();
    for (int i = 0; i < 6; ++i) {
      const int e = t[keys[i]].get<int>();
      if (e) out += std::string("*") + names[i] + (e > 1 ? "^" + std::to_string(e) : "");
    }
  }
  return out.empty() ? "0" : out;
}

void print_text(const json& j, int indent = 0) {
  const std::string pad(indent, ' ');
  for (const auto& [k, v] : j.items()) {
    if (is_poly(v)) {
      std::cout << pad << k << ": " << poly_text(v) << "\n";
    } else if (v.is_object() && v.contains("automorphisms")) {
      std::cout << pad << v["text"].get<std::string>() << "  aut " << v["automorphisms"].get<long>();
      if (v.contains("letter")) std::cout << "  " << v["letter"].get<std::string>();
      std::cout << "\n";
    } else if (v.is_object()) {
      if (v.contains("status")) {
        std::cout << pad << v["status"].get<std::string>() << " " << v["name"].get<std::string>();
        if (!v["detail"].get<std::string>().empty()) std::cout << ": " << v["detail"].get<std::string>();
        std::cout << "\n";
        continue;
      }
      std::cout << pad << k << ":\n";
      print_text(v, indent + 2);
    } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
      std::cout << pad << k << ":\n";
      print_text(v, indent + 2);
    } else {
      std::cout << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

json cmd_series(const Options& o) {
  IData D = build_idata(o.order_q);
  json s;
  s["I0"] = series_json(D.i0);
  s["I1"] = series_json(D.i1);
  s["tau"] = series_json(D.tau);
  s["L"] = series_json(D.lser);
  for (int k = 1; k <= 5; ++k) s["I" + std::to_string(k) + std::to_string(k)] = series_json(D.ikk[k]);
  return {{"series", s}, {"checks", report_json(check_diagonal(D))}};
}

json cmd_ring(const Options& o) {
  json g;
  g["du_Y"] = poly_json(du_Y());
  g["du_X3"] = poly_json(du_X3());
  for (int k = 1; k <= 4; ++k) g["Z" + std::to_string(k)] = poly_json(zcal(k));
  g["V"] = poly_json(yy_V());
  g["V2"] = poly_json(yy_V2());
  g["V3"] = poly_json(yy_V3());
  IData D = build_idata(o.order_q);
  return {{"generators", g}, {"checks", report_json(check_realization(D, 4))}};
}

json cmd_qde(const Options& o) {
  IData D = build_idata(o.order_q);
  AMatrix A = quantum_product(D);
  json j;
  j["quantum_product"] = report_json(check_quantum_product(A, D));
  j["s_matrix"] = report_json(check_s_matrix(s_matrix(A, 4), A));
  json sd = json::array();
  for (int d = 1; d <= 10; ++d) {
    SDelta s = s_delta(d);
    json row = json::array();
    for (const auto& e : s.s) row.push_back(poly_json(e));
    sd.push_back({{"delta", d}, {"row", row}, {"checks", report_json(check_s_delta(s))}});
  }
  j["s_delta"] = sd;
  j["state_bases"] = report_json(check_state_bases(D));
  return j;
}

json cmd_rmatrix(const Options& o) {
  RMatrix R = r_matrix(o.order_z, row0_entries(o.order_z));
  json ks = json::array();
  for (int k = 1; k <= o.order_z; ++k) {
    json entries = json::array();
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (!R.m[i][j][k].is_zero()) entries.push_back({{"row", i}, {"col", j}, {"terms", poly_json(R.m[i][j][k])}});
    ks.push_back({{"k", k}, {"entries", entries}});
  }
  return {{"order_z", o.order_z}, {"R", ks}, {"checks", report_json(check_r_matrix(R))}};
}

json cmd_pf(const Options& o) {
  json ops = json::array();
  for (const auto& op : pf_operators(o.m)) {
    json terms = json::array();
    for (const auto& [key, p] : op.terms) {
      json c = json::array();
      for (const auto& x : p) c.push_back(str(x));
      terms.push_back({{"lpow", key.first}, {"dpow", key.second}, {"xpoly", c}});
    }
    ops.push_back(terms);
  }
  const int kmax = std::min(o.order_z, o.m == 5 ? 10 : 4);
  RSequence s = r_sequence(o.m, 0, kmax);
  json ps = json::array();
  for (const auto& p : s.p) {
    json c = json::array();
    for (const auto& x : p) c.push_back(str(x));
    ps.push_back(c);
  }
  json j{{"m", o.m}, {"operators", ops}, {"r_k_numerators", ps}};
  j["certify"] = report_json(certify_r_sequence(s));
  if (o.m == 5) j["zazi"] = report_json(certify_zazi_corollary(kmax));
  j["hessian"] = report_json(hessian_psi_check(o.m).report);
  return j;
}

json cmd_hae(const Options& o) {
  (void)o;
  Fixtures fx = fixtures();
  json j;
  j["F12_recomputed"] = poly_json(fx.f12());
  j["fixtures"] = report_json(check_fixtures(fx));
  j["hae"] = report_json(hae_check(fx));
  j["yy"] = report_json(yy_reduced_hae(fx));
  OrbifoldResult orb = orbifold_regularity(fx.f20, 2);
  json a = json::array();
  for (const auto& x : orb.a) a.push_back(str(x));
  j["orbifold"] = {{"a", a}, {"checks", report_json(orb.report)}};
  json errata = json::array();
  for (const auto& e : erratum_ledger())
    errata.push_back(
        {{"id", e.id}, {"location", e.location}, {"printed", e.printed}, {"computed", e.computed}, {"note", e.note}});
  j["errata"] = errata;
  return j;
}

json cmd_graphs(const Options& o) {
  std::vector<DecoratedGraph> gs;
  if (o.kind == "bipartite")
    gs = enumerate_bipartite(o.genus, o.n, o.nu, true);
  else if (o.kind == "tripartite")
    gs = enumerate_tripartite(o.genus, o.n);
  else if (o.kind == "stable")
    gs = enumerate_stable(o.genus, o.n);
  else if (o.kind == "labeled")
    gs = enumerate_ginfty(o.genus, o.n);
  else
    throw CLI::ValidationError("--kind", "expected bipartite, tripartite, stable or labeled");
  json list = json::array();
  for (const auto& G : gs) {
    json g = graph_json(G);
    if (G.kind == GraphKind::bipartite && o.genus == 2 && o.n == 0 && o.nu.empty())
      g["letter"] = std::string(1, genus_two_letter(G));
    list.push_back(g);
  }
  if (!o.out.empty()) {
    std::filesystem::create_directories(o.out);
    for (size_t i = 0; i < gs.size(); ++i) {
      const std::string name = o.kind + "_g" + std::to_string(o.genus) + "_" + std::to_string(i);
      std::ofstream(std::filesystem::path(o.out) / (name + ".dot")) << to_dot(gs[i], name);
    }
  }
  return {{"kind", o.kind}, {"genus", o.genus}, {"n", o.n}, {"nu", o.nu}, {"count", gs.size()}, {"graphs", list}};
}

json cmd_verify_all(const Options& o) {
  RunConfig cfg;
  cfg.order_q = o.order_q;
  cfg.order_z = o.order_z;
  cfg.genus = o.genus;
  json a = json::array();
  for (const auto& c : acceptance(cfg))
    a.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed()}, {"checks", report_json(c.report)}});
  return {{"criteria", a}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for the quintic threefold"};
  app.require_subcommand(1, 1);
  Options o;
  auto common = [&](CLI::App* s) {
    s->add_option("--order-q", o.order_q, "q-series truncation order")->check(CLI::Range(0, 200));
    s->add_option("--order-z", o.order_z, "z-order of the R-matrix")->check(CLI::Range(1, 30));
    s->add_option("--genus", o.genus, "genus")->check(CLI::Range(0, 10));
    s->add_flag("--json", o.as_json, "print JSON");
    s->add_option("--out", o.out, "output directory");
  };
  struct Sub {
    const char* name;
    const char* help;
    json (*run)(const Options&);
  } subs[] = {{"series", "I-function and mirror series", cmd_series},
              {"ring", "generator ring and realization", cmd_ring},
              {"qde", "quantum product, S-matrix and specialized S", cmd_qde},
              {"rmatrix", "R-matrix coefficients", cmd_rmatrix},
              {"pf", "Picard-Fuchs operators and stationary-phase coefficients", cmd_pf},
              {"hae", "divisor equation, anomaly equation and orbifold regularity", cmd_hae},
              {"graphs", "decorated graph enumeration", cmd_graphs},
              {"verify-all", "run every acceptance suite", cmd_verify_all}};
  std::vector<std::pair<CLI::App*, const Sub*>> cmds;
  for (const auto& s : subs) {
    CLI::App* c = app.add_subcommand(s.name, s.help);
    common(c);
    cmds.push_back({c, &s});
  }
  for (auto& [c, s] : cmds) {
    std::string name = s->name;
    if (name == "graphs") {
      c->add_option("--kind", o.kind, "bipartite, tripartite, stable or labeled");
      c->add_option("--n", o.n, "number of markings")->check(CLI::Range(0, 8));
      c->add_option("--nu", o.nu, "partition nu (bipartite)");
    }
    if (name == "pf") c->add_option("--m", o.m, "number of variables")->check(CLI::Range(2, 12));
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  json result;
  std::string name;
  try {
    for (auto& [c, s] : cmds)
      if (c->parsed()) {
        name = s->name;
        result = json{{"command", name}, {"result", s->run(o)}};
      }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const bool ok = report_ok(result) && !(name == "verify-all" && [&] {
    for (const auto& c : result["result"]["criteria"])
      if (!c["passed"].get<bool>()) return true;
    return false;
  }());
  if (o.as_json) {
    std::cout << result.dump(2) << "\n";
  } else if (name == "verify-all") {
    for (const auto& c : result["result"]["criteria"]) {
      std::cout << "Criterion " << c["id"].get<int>() << ": " << (c["passed"].get<bool>() ? "PASS" : "FAIL") << " "
                << c["title"].get<std::string>() << "\n";
      for (const auto& r : c["checks"])
        if (r["status"] != "PASS")
          std::cout << "  " << r["status"].get<std::string>() << " " << r["name"].get<std::string>() << ": "
                    << r["detail"].get<std::string>() << "\n";
    }
  } else {
    print_text(result["result"]);
  }
  if (!o.out.empty() && o.as_json) {
    std::filesystem::create_directories(o.out);
    std::ofstream(std::filesystem::path(o.out) / (name + ".json")) << result.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}
