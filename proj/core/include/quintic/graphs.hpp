#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quintic/genpoly.hpp"
#include "quintic/qde.hpp"
#include "quintic/rat.hpp"
#include "quintic/report.hpp"

namespace quintic {

// bipartite: level 0 = V0, 1 = Vinf. tripartite: 0 = lower, 1 = middle, 2 = upper.
// labeled: 0 or 1 (= infinity); plain: single level.
enum class GraphKind { plain, bipartite, tripartite, labeled };

struct GVertex {
  int genus = 0;
  int level = 0;
  int beta = 0;
  std::vector<std::pair<int, int>> legs;  // (marking id, flag degree); degree 0 where unused
  std::vector<int> nu;                    // 1-based indices into DecoratedGraph::nu
  bool operator==(const GVertex&) const = default;
};

// Edge degrees per flag: du at u, dv at v. Bi/tripartite edges carry du = dv = delta.
struct GEdge {
  int u = 0, v = 0;
  int du = 1, dv = 1;
  bool operator==(const GEdge&) const = default;
};

struct Canonical {
  std::vector<long> code;
  std::vector<int> order;  // order[p] = original index of the vertex placed at p
};

struct DecoratedGraph {
  GraphKind kind = GraphKind::plain;
  std::vector<GVertex> vertices;
  std::vector<GEdge> edges;
  std::vector<int> nu;  // ordered nu-markings

  int h1() const { return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1; }
  int genus() const;
  int valence(int i) const;  // half-edges at i, loops counted twice
  int n_at(int i) const;     // valence + legs + nu legs
  // Degrees of all flags at i (edges and legs).
  std::vector<int> flag_degrees(int i) const;
  int level_count(int level) const;

  Canonical canonical() const;
  // Relabel vertices into canonical order.
  DecoratedGraph canonical_relabel() const;
  friend bool operator==(const DecoratedGraph& a, const DecoratedGraph& b) {
    return a.canonical().code == b.canonical().code;
  }
};

long automorphisms(const DecoratedGraph& G);

std::vector<DecoratedGraph> enumerate_stable(int g, int n);
// max_beta bounds the total curve class when stable_quotient = false; vmax < 0 picks the default bound.
std::vector<DecoratedGraph> enumerate_bipartite(int g, int n, const std::vector<int>& nu, bool stable_quotient,
                                                int max_beta = 1, int vmax = -1);
std::vector<DecoratedGraph> enumerate_tripartite(int g, int n, int vmax = -1);
std::vector<DecoratedGraph> enumerate_ginfty(int g, int n);
// Every infinity-vertex flag has degree <= 2.
bool parts_at_most_two(const DecoratedGraph& G);

// Contract the upper two (or lower two) levels of a tripartite graph into a bipartite graph.
DecoratedGraph merge_upper(const DecoratedGraph& T);
DecoratedGraph merge_lower(const DecoratedGraph& T);
// Letter A..F of a genus-two stable-quotient bipartite graph, '?' otherwise.
char genus_two_letter(const DecoratedGraph& B);
// Letter pairs (upper merge, lower merge) of all genus-two tripartite graphs, sorted.
std::vector<std::string> genus_two_letter_pairs();

std::string to_dot(const DecoratedGraph& G, const std::string& name);
std::string to_string(const DecoratedGraph& G);

// int_{Mbar_{g,n}} psi_1^a_1 ... psi_n^a_n, memoized and thread safe.
Rat psi_integral(int g, std::vector<int> exponents);
struct PsiEntry {
  int g;
  std::vector<int> exponents;
  Rat value;
};
std::vector<PsiEntry> psi_table();
// String and dilaton equations on every stored entry.
Report check_psi_table();

struct SkeletonNode {
  std::string kind;  // contract, R-column, S-delta, J, edge-kernel, tqft-vertex, omega-infty, zero
  std::string label;
  std::vector<SkeletonNode> children;
};

struct ContributionInputs {
  const RMatrix* R = nullptr;
  const std::vector<SDelta>* sdeltas = nullptr;
};

struct ContributionSkeleton {
  DecoratedGraph graph;
  SkeletonNode tree;
  bool evaluated = false;
  bool zero = false;  // an infinity vertex carries a part >= 3
  // lambda exponent -> coefficient; the whole value carries (I_0/L)^i0l_pow and 1/|Aut| is included.
  std::map<int, GenPoly> value;
  int i0l_pow = 0;
  Report report;
};

// insertions[i] is the phi index at marking i + 1. Throws std::invalid_argument on missing inputs.
ContributionSkeleton contribution_skeleton(const DecoratedGraph& G, const std::vector<int>& insertions,
                                           const ContributionInputs& in);
std::string to_string(const SkeletonNode& node, int indent = 0);

}  // namespace quintic
