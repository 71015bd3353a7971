#include "doctest.h"
#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "quintic/graphs.hpp"
#include "quintic/oscpf.hpp"

using namespace quintic;

namespace {

// Vertex permutations times edge bijections with orientation flips that preserve every decoration.
long brute_automorphisms(const DecoratedGraph& G) {
  const int V = static_cast<int>(G.vertices.size()), E = static_cast<int>(G.edges.size());
  auto key = [&](int i) {
    auto v = G.vertices[i];
    std::sort(v.legs.begin(), v.legs.end());
    std::sort(v.nu.begin(), v.nu.end());
    return v;
  };
  std::vector<int> pv(V), pe(E);
  std::iota(pv.begin(), pv.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < V && ok; ++i) ok = key(i) == key(pv[i]);
    if (!ok) continue;
    std::iota(pe.begin(), pe.end(), 0);
    do {
      for (int flips = 0; flips < (1 << E); ++flips) {
        bool good = true;
        for (int k = 0; k < E && good; ++k) {
          const GEdge &a = G.edges[k], &b = G.edges[pe[k]];
          if ((flips >> k) & 1)
            good = pv[a.u] == b.v && pv[a.v] == b.u && a.du == b.dv && a.dv == b.du;
          else
            good = pv[a.u] == b.u && pv[a.v] == b.v && a.du == b.du && a.dv == b.dv;
        }
        if (good) ++count;
      }
    } while (std::next_permutation(pe.begin(), pe.end()));
  } while (std::next_permutation(pv.begin(), pv.end()));
  return count;
}

DecoratedGraph relabel(const DecoratedGraph& G, const std::vector<int>& perm) {
  DecoratedGraph H = G;
  for (size_t i = 0; i < perm.size(); ++i) H.vertices[perm[i]] = G.vertices[i];
  for (auto& e : H.edges) {
    e.u = perm[e.u];
    e.v = perm[e.v];
  }
  std::reverse(H.edges.begin(), H.edges.end());
  return H;
}

std::vector<int> random_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), qt::rng());
  return p;
}

std::multiset<long> aut_multiset(const std::vector<DecoratedGraph>& gs) {
  std::multiset<long> s;
  for (const auto& G : gs) s.insert(automorphisms(G));
  return s;
}

}  // namespace

TEST_CASE("stable graph counts and automorphisms") {
  CHECK(enumerate_stable(0, 3).size() == 1);
  CHECK(enumerate_stable(0, 4).size() == 4);
  CHECK(enumerate_stable(1, 1).size() == 2);
  CHECK(enumerate_stable(1, 2).size() == 5);
  CHECK(aut_multiset(enumerate_stable(2, 0)) == std::multiset<long>{1, 2, 2, 2, 8, 8, 12});
  CHECK(enumerate_stable(0, 2).empty());
}

TEST_CASE("property: automorphisms agree with brute force") {
  std::vector<DecoratedGraph> all;
  for (auto [g, n] : {std::pair{2, 0}, {1, 2}, {2, 1}, {0, 5}}) {
    auto s = enumerate_stable(g, n);
    all.insert(all.end(), s.begin(), s.end());
  }
  for (const auto& v : {enumerate_bipartite(2, 0, {}, true), enumerate_tripartite(2, 0), enumerate_ginfty(2, 0),
                        enumerate_ginfty(1, 2)})
    all.insert(all.end(), v.begin(), v.end());
  for (const auto& G : all) {
    if (G.edges.size() > 5) continue;
    INFO(to_string(G));
    CHECK(automorphisms(G) == brute_automorphisms(G));
  }
}

TEST_CASE("property: canonical form is invariant under relabeling") {
  auto gs = enumerate_tripartite(2, 0);
  auto more = enumerate_stable(2, 1);
  gs.insert(gs.end(), more.begin(), more.end());
  for (const auto& G : gs)
    for (int t = 0; t < 3; ++t) {
      DecoratedGraph H = relabel(G, random_perm(static_cast<int>(G.vertices.size())));
      CHECK(H == G);
      CHECK(H.canonical().code == G.canonical().code);
      CHECK(automorphisms(H) == automorphisms(G));
    }
  // Distinct graphs in an enumeration have distinct canonical codes.
  std::set<std::vector<long>> codes;
  for (const auto& G : gs) codes.insert(G.canonical().code);
  CHECK(codes.size() == gs.size());
}

TEST_CASE("bipartite genus two") {
  auto B = enumerate_bipartite(2, 0, {}, true);
  CHECK(B.size() == 6);
  std::string letters;
  for (const auto& G : B) {
    letters += genus_two_letter(G);
    CHECK(G.genus() == 2);
    for (const auto& v : G.vertices)
      if (v.level == 0) CHECK(v.beta == 0);
  }
  std::sort(letters.begin(), letters.end());
  CHECK(letters == "ABCDEF");
  for (const auto& G : B) {
    const char c = genus_two_letter(G);
    if (c == 'C' || c == 'D' || c == 'E') CHECK(automorphisms(G) == 2);
    if (c == 'A' || c == 'B' || c == 'F') CHECK(automorphisms(G) == 1);
  }
  CHECK(enumerate_bipartite(0, 3, {}, true).size() == 1);
  CHECK(enumerate_bipartite(0, 2, {}, true).empty());
}

TEST_CASE("bipartite genus one with nu = (1)") {
  // The balance gives five graphs; see the README for the comparison with the drawn list.
  auto B = enumerate_bipartite(1, 0, {1}, true);
  CHECK(B.size() == 5);
  for (const auto& G : B) {
    int nus = 0;
    for (const auto& v : G.vertices) {
      nus += static_cast<int>(v.nu.size());
      if (!v.nu.empty()) CHECK(v.level == 1);
    }
    CHECK(nus == 1);
  }
}

TEST_CASE("tripartite genus two") {
  auto T = enumerate_tripartite(2, 0);
  CHECK(T.size() == 20);
  CHECK(enumerate_tripartite(2, 0, 6).size() == 20);
  CHECK(enumerate_tripartite(2, 0, 7).size() == 20);
  CHECK(enumerate_tripartite(0, 3).size() == 1);
  for (const auto& G : T) {
    for (const auto& e : G.edges) CHECK(std::abs(G.vertices[e.u].level - G.vertices[e.v].level) == 1);
    CHECK(genus_two_letter(merge_upper(G)) != '?');
    CHECK(genus_two_letter(merge_lower(G)) != '?');
  }
  CHECK(genus_two_letter_pairs() == std::vector<std::string>{"AA", "BA", "BB", "CA", "CB", "CC", "DA",
                                                              "DB", "DD", "EA", "EB", "EC", "ED", "EE",
                                                              "EF", "FA", "FB", "FC", "FD", "FF"});
}

TEST_CASE("labeled graphs") {
  auto g11 = enumerate_ginfty(1, 1);
  CHECK(g11.size() == 2);
  auto g20 = enumerate_ginfty(2, 0);
  CHECK(g20.size() == 8);
  bool single = false;
  for (const auto& v : {g11, g20, enumerate_ginfty(1, 2)})
    for (const auto& G : v) {
      for (const auto& x : G.vertices)
        if (x.level == 1) CHECK(x.genus > 0);
      if (G.vertices.size() == 1 && G.vertices[0].level == 0) single = true;
      CHECK(parts_at_most_two(G));
    }
  CHECK(single);
}

TEST_CASE("psi integrals") {
  CHECK(psi_integral(0, {0, 0, 0}) == 1);
  CHECK(psi_integral(1, {1}) == rat(1, 24));
  CHECK(psi_integral(2, {4}) == rat(1, 1152));
  CHECK(psi_integral(3, {7}) == rat(1, 82944));
  CHECK(psi_integral(2, {2, 3}) == rat(29, 5760));
  CHECK(psi_integral(2, {3, 3}) == 0);
  // <tau_{3g-2}>_g = 1 / (24^g g!)
  for (int g = 1; g <= 5; ++g) CHECK(psi_integral(g, {3 * g - 2}) == 1 / (pow(Rat(24), g) * factorial(g)));
  CHECK_REPORT(check_psi_table());
}

TEST_CASE("property: string and dilaton equations") {
  for (int t = 0; t < 40; ++t) {
    const int g = qt::uniform(0, 3), n = qt::uniform(1, 4);
    if (2 * g - 2 + n <= 0) continue;
    // a sums to the dimension with one extra point, b to the dimension without it.
    std::vector<int> a(n, 0), b(n, 0);
    for (int k = 0; k < 3 * g - 2 + n; ++k) ++a[qt::uniform(0, n - 1)];
    for (int k = 0; k < 3 * g - 3 + n; ++k) ++b[qt::uniform(0, n - 1)];
    std::vector<int> with0 = a, with1 = b;
    with0.push_back(0);
    with1.push_back(1);
    Rat s = 0;
    for (int i = 0; i < n; ++i)
      if (a[i] > 0) {
        auto c = a;
        --c[i];
        s += psi_integral(g, c);
      }
    CHECK(psi_integral(g, with0) == s);
    CHECK(psi_integral(g, with0) != 0);
    CHECK(psi_integral(g, with1) == Rat(2 * g - 2 + n) * psi_integral(g, b));
  }
}

TEST_CASE("contribution skeletons") {
  RMatrix R = r_matrix(6, row0_entries(6));
  std::vector<SDelta> sd;
  for (int d = 1; d <= 6; ++d) sd.push_back(s_delta(d));
  ContributionInputs in{&R, &sd};
  const GenPoly X = GenPoly::var(kX1), Y = GenPoly::var(kY);
  int seen = 0;
  for (const auto& G : enumerate_ginfty(1, 1)) {
    ContributionSkeleton c = contribution_skeleton(G, {1}, in);
    CHECK(c.evaluated);
    CHECK_FALSE(c.zero);
    CHECK_REPORT(c.report);
    REQUIRE(c.value.count(0) == 1);
    if (G.edges.empty()) {
      CHECK(c.value.at(0) == rat(5, 24) * X);
      ++seen;
    } else {
      CHECK(c.value.at(0) == rat(-3, 8) * GenPoly::mono(1, 1, 1) - rat(3, 2) * X - rat(1, 2) * Y);
      ++seen;
    }
    CHECK(c.value.at(0).is_homogeneous(1));
  }
  CHECK(seen == 2);
  DecoratedGraph G = enumerate_ginfty(1, 1)[0];
  CHECK_THROWS_AS(contribution_skeleton(G, {1}, ContributionInputs{}), std::invalid_argument);
  // An infinity vertex with a part of size three.
  DecoratedGraph H;
  H.kind = GraphKind::labeled;
  H.vertices = {GVertex{0, 0, 0, {{1, 0}}, {}}, GVertex{3, 1, 0, {}, {}}};
  H.edges = {GEdge{0, 1, 0, 3}};
  ContributionSkeleton z = contribution_skeleton(H, {1}, in);
  CHECK(z.zero);
  CHECK_FALSE(to_string(z.tree).empty());
}
