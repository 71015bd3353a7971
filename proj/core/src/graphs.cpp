#include "quintic/graphs.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "quintic/hae.hpp"

namespace quintic {

int DecoratedGraph::genus() const {
  int s = h1();
  for (const auto& v : vertices) s += v.genus;
  return s;
}

int DecoratedGraph::valence(int i) const {
  int c = 0;
  for (const auto& e : edges) c += (e.u == i) + (e.v == i);
  return c;
}

int DecoratedGraph::n_at(int i) const {
  return valence(i) + static_cast<int>(vertices[i].legs.size() + vertices[i].nu.size());
}

std::vector<int> DecoratedGraph::flag_degrees(int i) const {
  std::vector<int> d;
  for (const auto& e : edges) {
    if (e.u == i) d.push_back(e.du);
    if (e.v == i) d.push_back(e.dv);
  }
  for (const auto& l : vertices[i].legs) d.push_back(l.second);
  return d;
}

int DecoratedGraph::level_count(int level) const {
  int c = 0;
  for (const auto& v : vertices) c += v.level == level;
  return c;
}

namespace {

std::vector<long> vertex_key(const GVertex& v) {
  std::vector<long> k{v.level, v.genus, v.beta, static_cast<long>(v.legs.size())};
  auto legs = v.legs;
  std::sort(legs.begin(), legs.end());
  for (auto [id, d] : legs) {
    k.push_back(id);
    k.push_back(d);
  }
  auto nu = v.nu;
  std::sort(nu.begin(), nu.end());
  k.push_back(static_cast<long>(nu.size()));
  k.insert(k.end(), nu.begin(), nu.end());
  return k;
}

std::vector<int> rank_of(const std::vector<std::vector<long>>& keys) {
  auto sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> r(keys.size());
  for (size_t i = 0; i < keys.size(); ++i)
    r[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  return r;
}

std::array<long, 4> edge_code(long pu, long du, long pv, long dv) {
  if (std::make_pair(pv, dv) < std::make_pair(pu, du)) return {pv, dv, pu, du};
  return {pu, du, pv, dv};
}

struct CanonSearch {
  Canonical best;
  long matches = 0;
};

CanonSearch canon_search(const DecoratedGraph& G) {
  const int V = static_cast<int>(G.vertices.size());
  std::vector<std::vector<long>> keys(V);
  for (int i = 0; i < V; ++i) keys[i] = vertex_key(G.vertices[i]);
  std::vector<int> color = rank_of(keys);
  int classes = *std::max_element(color.begin(), color.end()) + 1;
  while (true) {
    std::vector<std::vector<long>> nk(V);
    for (int i = 0; i < V; ++i) {
      std::vector<std::array<long, 3>> nb;
      for (const auto& e : G.edges) {
        if (e.u == i) nb.push_back({color[e.v], e.du, e.dv});
        if (e.v == i) nb.push_back({color[e.u], e.dv, e.du});
      }
      std::sort(nb.begin(), nb.end());
      nk[i] = {color[i]};
      for (const auto& x : nb) nk[i].insert(nk[i].end(), x.begin(), x.end());
    }
    std::vector<int> nc = rank_of(nk);
    int ncl = *std::max_element(nc.begin(), nc.end()) + 1;
    color = nc;
    if (ncl == classes) break;
    classes = ncl;
  }
  std::vector<std::vector<int>> cls(classes);
  for (int i = 0; i < V; ++i) cls[color[i]].push_back(i);

  CanonSearch cs;
  std::vector<int> order;
  std::function<void(int)> rec = [&](int c) {
    if (c == classes) {
      std::vector<int> pos(V);
      for (int p = 0; p < V; ++p) pos[order[p]] = p;
      std::vector<long> code{V, static_cast<long>(G.edges.size())};
      for (int p = 0; p < V; ++p) {
        const auto& k = keys[order[p]];
        code.push_back(static_cast<long>(k.size()));
        code.insert(code.end(), k.begin(), k.end());
      }
      std::vector<std::array<long, 4>> es;
      for (const auto& e : G.edges) es.push_back(edge_code(pos[e.u], e.du, pos[e.v], e.dv));
      std::sort(es.begin(), es.end());
      for (const auto& x : es) code.insert(code.end(), x.begin(), x.end());
      if (cs.matches == 0 || code < cs.best.code) {
        cs.best.code = code;
        cs.best.order = order;
        cs.matches = 1;
      } else if (code == cs.best.code) {
        ++cs.matches;
      }
      return;
    }
    auto members = cls[c];
    do {
      for (int m : members) order.push_back(m);
      rec(c + 1);
      order.resize(order.size() - members.size());
    } while (std::next_permutation(members.begin(), members.end()));
  };
  if (V == 0) return cs;
  rec(0);
  return cs;
}

}  // namespace

Canonical DecoratedGraph::canonical() const { return canon_search(*this).best; }

DecoratedGraph DecoratedGraph::canonical_relabel() const {
  Canonical c = canonical();
  std::vector<int> pos(vertices.size());
  DecoratedGraph out;
  out.kind = kind;
  out.nu = nu;
  for (size_t p = 0; p < c.order.size(); ++p) {
    pos[c.order[p]] = static_cast<int>(p);
    out.vertices.push_back(vertices[c.order[p]]);
    std::sort(out.vertices.back().legs.begin(), out.vertices.back().legs.end());
    std::sort(out.vertices.back().nu.begin(), out.vertices.back().nu.end());
  }
  std::vector<std::array<long, 4>> es;
  for (const auto& e : edges) es.push_back(edge_code(pos[e.u], e.du, pos[e.v], e.dv));
  std::sort(es.begin(), es.end());
  for (const auto& x : es)
    out.edges.push_back({static_cast<int>(x[0]), static_cast<int>(x[2]), static_cast<int>(x[1]), static_cast<int>(x[3])});
  return out;
}

long automorphisms(const DecoratedGraph& G) {
  long a = canon_search(G).matches;
  if (G.vertices.empty()) return 1;
  std::map<std::array<long, 4>, int> mult;
  for (const auto& e : G.edges) {
    ++mult[edge_code(e.u, e.du, e.v, e.dv)];
    if (e.u == e.v && e.du == e.dv) a *= 2;
  }
  for (const auto& [k, m] : mult)
    for (int i = 2; i <= m; ++i) a *= i;
  return a;
}

namespace {

struct ShapeParams {
  GraphKind kind = GraphKind::plain;
  int levels = 1;
  std::function<bool(int, int)> allowed;
  bool loops = false;
  int g = 0;
  int vmax = 1;
  int dmax = 1;
  std::function<bool(const DecoratedGraph&)> ok;
};

int genus_used(const DecoratedGraph& G) { return G.genus(); }

// Connected shapes without legs, up to isomorphism, with genus + h1 <= g.
std::vector<DecoratedGraph> shapes(const ShapeParams& p) {
  std::set<std::vector<long>> seen;
  std::deque<DecoratedGraph> queue;
  std::vector<DecoratedGraph> out;
  auto push = [&](DecoratedGraph G) {
    if (genus_used(G) > p.g) return;
    if (p.ok && !p.ok(G)) return;
    auto code = G.canonical().code;
    if (!seen.insert(code).second) return;
    queue.push_back(std::move(G));
  };
  for (int l = 0; l < p.levels; ++l)
    for (int gg = 0; gg <= p.g; ++gg) {
      DecoratedGraph G;
      G.kind = p.kind;
      G.vertices.push_back({gg, l, 0, {}, {}});
      push(G);
    }
  while (!queue.empty()) {
    DecoratedGraph G = std::move(queue.front());
    queue.pop_front();
    const int V = static_cast<int>(G.vertices.size());
    const int room = p.g - genus_used(G);
    if (V < p.vmax)
      for (int l = 0; l < p.levels; ++l)
        for (int gg = 0; gg <= room; ++gg)
          for (int u = 0; u < V; ++u) {
            if (!p.allowed(G.vertices[u].level, l)) continue;
            for (int d = 1; d <= p.dmax; ++d) {
              DecoratedGraph H = G;
              H.vertices.push_back({gg, l, 0, {}, {}});
              H.edges.push_back({u, V, d, d});
              push(std::move(H));
            }
          }
    if (room >= 1)
      for (int u = 0; u < V; ++u)
        for (int v = u; v < V; ++v) {
          if (u == v && !p.loops) continue;
          if (!p.allowed(G.vertices[u].level, G.vertices[v].level)) continue;
          for (int d = 1; d <= p.dmax; ++d) {
            DecoratedGraph H = G;
            H.edges.push_back({u, v, d, d});
            push(std::move(H));
          }
        }
    out.push_back(std::move(G));
  }
  return out;
}

// Calls f for every assignment of k labelled items to the given targets.
void for_each_assignment(int k, const std::vector<int>& targets, const std::function<void(const std::vector<int>&)>& f) {
  if (k > 0 && targets.empty()) return;
  std::vector<int> idx(k, 0), val(k);
  while (true) {
    for (int i = 0; i < k; ++i) val[i] = targets[idx[i]];
    f(val);
    int i = 0;
    while (i < k && ++idx[i] == static_cast<int>(targets.size())) idx[i++] = 0;
    if (i == k) return;
  }
}

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

// Degrees of edges at i going to vertices of a lower (sign -1) or higher (+1) level.
int level_degree(const DecoratedGraph& G, int i, int sign) {
  int s = 0;
  for (const auto& e : G.edges) {
    int o = e.u == i ? e.v : e.v == i ? e.u : -1;
    if (o < 0) continue;
    int d = e.u == i ? e.du : e.dv;
    if ((G.vertices[o].level - G.vertices[i].level) * sign > 0) s += d;
  }
  return s;
}

int level_count_below(const DecoratedGraph& G, int i) {
  int c = 0;
  for (const auto& e : G.edges) {
    int o = e.u == i ? e.v : e.v == i ? e.u : -1;
    if (o >= 0 && G.vertices[o].level < G.vertices[i].level) ++c;
  }
  return c;
}

// The unique incident edge of a valence-one vertex.
int single_edge_degree(const DecoratedGraph& G, int i) {
  for (const auto& e : G.edges) {
    if (e.u == i) return e.du;
    if (e.v == i) return e.dv;
  }
  return 0;
}

bool unstable_01(const DecoratedGraph& G, int i) { return G.vertices[i].genus == 0 && G.n_at(i) == 1 && G.valence(i) == 1; }

// Solve beta on balanced vertices; validate the bipartite conditions.
bool finish_bipartite(DecoratedGraph& G, bool sq, int max_beta) {
  int used = 0;
  for (int i = 0; i < static_cast<int>(G.vertices.size()); ++i) {
    auto& v = G.vertices[i];
    if (v.level == 1) {
      int nus = 0;
      for (int k : v.nu) nus += G.nu[k - 1];
      int r = 2 * v.genus - 2 + G.n_at(i) - level_degree(G, i, -1) + nus;
      if (r < 0 || r % 5) return false;
      v.beta = r / 5;
      used += v.beta;
      if (unstable_01(G, i) && v.beta == 0 && single_edge_degree(G, i) == 1) return false;
    } else {
      v.beta = 0;
      if (unstable_01(G, i) && single_edge_degree(G, i) == 1) {
        if (sq) return false;
        v.beta = 1;
        ++used;
      }
      if (v.genus == 0 && G.n_at(i) == 0) return false;
    }
  }
  return sq || used <= max_beta;
}

bool finish_tripartite(DecoratedGraph& G) {
  for (int i = 0; i < static_cast<int>(G.vertices.size()); ++i) {
    auto& v = G.vertices[i];
    if (v.level == 0) {
      v.beta = 0;
      if (unstable_01(G, i) && single_edge_degree(G, i) == 1) return false;
      if (v.genus == 0 && G.n_at(i) == 0) return false;
      continue;
    }
    int r = 2 * v.genus - 2 + G.n_at(i) - level_degree(G, i, -1) + level_degree(G, i, +1);
    if (r < 0 || r % 5) return false;
    v.beta = r / 5;
    if (unstable_01(G, i) && v.beta == 0 && single_edge_degree(G, i) == 1) return false;
  }
  return true;
}

std::vector<DecoratedGraph> sorted_values(std::map<std::vector<long>, DecoratedGraph>& m) {
  std::vector<DecoratedGraph> out;
  for (auto& [k, G] : m) out.push_back(G.canonical_relabel());
  return out;
}

}  // namespace

std::vector<DecoratedGraph> enumerate_stable(int g, int n) {
  if (2 * g - 2 + n <= 0) return {};
  ShapeParams p;
  p.kind = GraphKind::plain;
  p.allowed = [](int, int) { return true; };
  p.loops = true;
  p.g = g;
  p.vmax = std::max(1, 2 * g - 2 + n);
  std::map<std::vector<long>, DecoratedGraph> found;
  for (const auto& S : shapes(p)) {
    if (S.genus() != g) continue;
    std::vector<int> all(S.vertices.size());
    std::iota(all.begin(), all.end(), 0);
    for_each_assignment(n, all, [&](const std::vector<int>& at) {
      DecoratedGraph G = S;
      for (int i = 0; i < n; ++i) G.vertices[at[i]].legs.push_back({i + 1, 0});
      for (int v = 0; v < static_cast<int>(G.vertices.size()); ++v)
        if (2 * G.vertices[v].genus - 2 + G.n_at(v) <= 0) return;
      found.emplace(G.canonical().code, G);
    });
  }
  return sorted_values(found);
}

std::vector<DecoratedGraph> enumerate_bipartite(int g, int n, const std::vector<int>& nu, bool stable_quotient,
                                                int max_beta, int vmax) {
  const int lnu = static_cast<int>(nu.size());
  const int snu = sum_of(nu);
  if (2 * g - 2 + n + snu <= 0) return {};
  const int W = 2 * g - 2 + n + lnu;
  ShapeParams p;
  p.kind = GraphKind::bipartite;
  p.levels = 2;
  p.allowed = [](int a, int b) { return a != b; };
  p.g = g;
  p.vmax = vmax > 0 ? vmax : 2 * (W + snu) + 2;
  p.dmax = std::max(1, 2 * g - 1 + n + lnu + snu);
  p.ok = [&](const DecoratedGraph& G) {
    for (int i = 0; i < static_cast<int>(G.vertices.size()); ++i) {
      if (G.vertices[i].level != 1) continue;
      int excess = 0;
      for (int d : G.flag_degrees(i)) excess += d - 1;
      if (excess > 2 * G.vertices[i].genus - 2 + lnu + snu) return false;
    }
    return true;
  };
  std::map<std::vector<long>, DecoratedGraph> found;
  for (const auto& S : shapes(p)) {
    if (S.genus() != g) continue;
    std::vector<int> zero, inf;
    for (int i = 0; i < static_cast<int>(S.vertices.size()); ++i) (S.vertices[i].level ? inf : zero).push_back(i);
    for_each_assignment(n, zero, [&](const std::vector<int>& at) {
      for_each_assignment(lnu, inf, [&](const std::vector<int>& nat) {
        DecoratedGraph G = S;
        G.nu = nu;
        for (int i = 0; i < n; ++i) G.vertices[at[i]].legs.push_back({i + 1, 0});
        for (int i = 0; i < lnu; ++i) G.vertices[nat[i]].nu.push_back(i + 1);
        if (!finish_bipartite(G, stable_quotient, max_beta)) return;
        found.emplace(G.canonical().code, G);
      });
    });
  }
  return sorted_values(found);
}

std::vector<DecoratedGraph> enumerate_tripartite(int g, int n, int vmax) {
  if (2 * g - 2 + n <= 0) return {};
  ShapeParams p;
  p.kind = GraphKind::tripartite;
  p.levels = 3;
  p.allowed = [](int a, int b) { return std::abs(a - b) == 1; };
  p.g = g;
  p.vmax = vmax > 0 ? vmax : 2 * (2 * g - 2 + n) + 2;
  p.dmax = std::max(1, 2 * g - 1 + n);
  // Monotone necessary conditions. Upper vertices: sum (delta - 1) <= 2g(v) - 2 + marks, and
  // 2g(v) - 2 + marks >= 0. Summing the balances over middle and upper vertices gives
  // sum_{E_lm} (delta - 1) + 2 c = 2 g_mu + marks - 5 sum beta, c the number of components above level l.
  p.ok = [&](const DecoratedGraph& G) {
    int upper_marks = 0, low_excess = 0;
    bool above = false;
    for (int i = 0; i < static_cast<int>(G.vertices.size()); ++i) {
      const auto& v = G.vertices[i];
      if (v.level == 2) {
        int excess = 0;
        for (int d : G.flag_degrees(i)) excess += d - 1;
        if (excess > 2 * v.genus - 2 + n) return false;
        upper_marks += std::max(0, 2 - 2 * v.genus);
      }
      if (v.level == 1) low_excess += level_degree(G, i, -1) - level_count_below(G, i);
      above = above || v.level > 0;
    }
    return upper_marks <= n && low_excess + (above ? 2 : 0) <= 2 * g + n;
  };
  std::map<std::vector<long>, DecoratedGraph> found;
  for (const auto& S : shapes(p)) {
    if (S.genus() != g) continue;
    // Markings sit on the lower level so that both merges are bipartite graphs.
    std::vector<int> lower;
    for (int i = 0; i < static_cast<int>(S.vertices.size()); ++i)
      if (S.vertices[i].level == 0) lower.push_back(i);
    for_each_assignment(n, lower, [&](const std::vector<int>& at) {
      DecoratedGraph G = S;
      for (int i = 0; i < n; ++i) G.vertices[at[i]].legs.push_back({i + 1, 0});
      if (!finish_tripartite(G)) return;
      found.emplace(G.canonical().code, G);
    });
  }
  return sorted_values(found);
}

namespace {

// Compositions of flags into degrees >= 1 with 5 * total <= budget.
void for_each_degrees(int flags, int budget, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> d(flags, 1);
  std::function<void(int, int)> rec = [&](int i, int total) {
    if (i == flags) {
      f(d);
      return;
    }
    for (int x = 1; 5 * (total + x + (flags - i - 1)) <= budget; ++x) {
      d[i] = x;
      rec(i + 1, total + x);
    }
  };
  if (5 * flags <= budget || flags == 0) rec(0, 0);
}

}  // namespace

std::vector<DecoratedGraph> enumerate_ginfty(int g, int n) {
  std::map<std::vector<long>, DecoratedGraph> found;
  for (const auto& S : enumerate_stable(g, n)) {
    const int V = static_cast<int>(S.vertices.size());
    for (int mask = 0; mask < (1 << V); ++mask) {
      DecoratedGraph base = S;
      base.kind = GraphKind::labeled;
      for (int i = 0; i < V; ++i) base.vertices[i].level = (mask >> i) & 1;
      // Flags at infinity vertices, each assigned a degree independently per vertex.
      std::vector<DecoratedGraph> cur{base};
      for (int i = 0; i < V && !cur.empty(); ++i) {
        if (!base.vertices[i].level) continue;
        std::vector<DecoratedGraph> next;
        const int m = base.n_at(i);
        const int budget = 2 * base.vertices[i].genus - 2 + m;
        if (budget < 0) {
          cur.clear();
          break;
        }
        for (const auto& G : cur)
          for_each_degrees(m, budget, [&](const std::vector<int>& d) {
            DecoratedGraph H = G;
            int k = 0;
            for (auto& e : H.edges) {
              if (e.u == i) e.du = d[k++];
              if (e.v == i) e.dv = d[k++];
            }
            for (auto& l : H.vertices[i].legs) l.second = d[k++];
            next.push_back(std::move(H));
          });
        cur = std::move(next);
      }
      for (auto& G : cur) {
        for (auto& e : G.edges) {
          if (!G.vertices[e.u].level) e.du = 0;
          if (!G.vertices[e.v].level) e.dv = 0;
        }
        found.emplace(G.canonical().code, G);
      }
    }
  }
  return sorted_values(found);
}

bool parts_at_most_two(const DecoratedGraph& G) {
  for (int i = 0; i < static_cast<int>(G.vertices.size()); ++i)
    if (G.vertices[i].level)
      for (int d : G.flag_degrees(i))
        if (d > 2) return false;
  return true;
}

namespace {

DecoratedGraph merge_levels(const DecoratedGraph& T, int lo, int hi, bool upper) {
  const int V = static_cast<int>(T.vertices.size());
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto inside = [&](int i) { return T.vertices[i].level >= lo && T.vertices[i].level <= hi; };
  for (const auto& e : T.edges)
    if (inside(e.u) && inside(e.v)) parent[find(e.u)] = find(e.v);
  std::map<int, int> comp;
  DecoratedGraph B;
  B.kind = GraphKind::bipartite;
  B.nu = T.nu;
  std::vector<int> id(V);
  for (int i = 0; i < V; ++i) {
    int r = find(i);
    if (!comp.count(r)) {
      comp[r] = static_cast<int>(B.vertices.size());
      int level = inside(i) ? (upper ? 1 : 0) : (upper ? 0 : 1);
      B.vertices.push_back({0, level, 0, {}, {}});
    }
    id[i] = comp[r];
    auto& v = B.vertices[id[i]];
    v.genus += T.vertices[i].genus;
    v.legs.insert(v.legs.end(), T.vertices[i].legs.begin(), T.vertices[i].legs.end());
  }
  std::map<int, int> inner_edges, members;
  for (int i = 0; i < V; ++i) ++members[id[i]];
  for (const auto& e : T.edges) {
    if (id[e.u] == id[e.v]) {
      ++inner_edges[id[e.u]];
      continue;
    }
    B.edges.push_back({id[e.u], id[e.v], e.du, e.dv});
  }
  for (auto& [c, k] : members) B.vertices[c].genus += inner_edges[c] - k + 1;
  return B;
}

DecoratedGraph strip_beta(DecoratedGraph G) {
  for (auto& v : G.vertices) v.beta = 0;
  return G;
}

}  // namespace

DecoratedGraph merge_upper(const DecoratedGraph& T) { return merge_levels(T, 1, 2, true); }
DecoratedGraph merge_lower(const DecoratedGraph& T) { return merge_levels(T, 0, 1, false); }

char genus_two_letter(const DecoratedGraph& B) {
  static const std::vector<std::pair<std::vector<long>, char>> table = [] {
    std::vector<std::pair<std::vector<long>, char>> t;
    for (const auto& G : enumerate_bipartite(2, 0, {}, true)) {
      char c = '?';
      const int V = static_cast<int>(G.vertices.size());
      const int E = static_cast<int>(G.edges.size());
      const int v0 = G.level_count(0);
      if (V == 1) c = 'A';
      else if (V == 2 && E == 2) c = 'D';
      else if (V == 2) {
        for (const auto& v : G.vertices)
          if (v.level == 0) c = v.genus == 1 ? 'B' : 'F';
      } else if (V == 3) c = v0 == 1 ? 'C' : 'E';
      t.push_back({strip_beta(G).canonical().code, c});
    }
    return t;
  }();
  auto code = strip_beta(B).canonical().code;
  for (const auto& [k, c] : table)
    if (k == code) return c;
  return '?';
}

std::vector<std::string> genus_two_letter_pairs() {
  std::vector<std::string> out;
  for (const auto& T : enumerate_tripartite(2, 0)) {
    std::string s{genus_two_letter(merge_upper(T)), genus_two_letter(merge_lower(T))};
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

const char* level_name(GraphKind k, int level) {
  switch (k) {
    case GraphKind::bipartite:
    case GraphKind::labeled: return level ? "inf" : "0";
    case GraphKind::tripartite: return level == 0 ? "l" : level == 1 ? "m" : "u";
    case GraphKind::plain: return "";
  }
  return "";
}

}  // namespace

std::string to_dot(const DecoratedGraph& G, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (size_t i = 0; i < G.vertices.size(); ++i) {
    const auto& v = G.vertices[i];
    os << "  v" << i << " [label=\"g=" << v.genus;
    if (G.kind != GraphKind::plain) os << " " << level_name(G.kind, v.level);
    if (v.beta) os << " b=" << v.beta;
    os << "\"";
    if (G.kind != GraphKind::plain) os << ", rank=" << v.level;
    os << "];\n";
    for (const auto& [id, d] : v.legs) {
      os << "  l" << id << " [shape=plaintext, label=\"" << id << "\"];\n";
      os << "  v" << i << " -- l" << id;
      if (d) os << " [label=\"" << d << "\"]";
      os << ";\n";
    }
    for (int k : v.nu) {
      os << "  n" << k << " [shape=plaintext, label=\"nu" << k << "=" << G.nu[k - 1] << "\"];\n";
      os << "  v" << i << " -- n" << k << ";\n";
    }
  }
  for (const auto& e : G.edges) {
    os << "  v" << e.u << " -- v" << e.v;
    if (G.kind == GraphKind::bipartite || G.kind == GraphKind::tripartite) os << " [label=\"" << e.du << "\"]";
    else if (G.kind == GraphKind::labeled && (e.du || e.dv))
      os << " [taillabel=\"" << e.du << "\", headlabel=\"" << e.dv << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_string(const DecoratedGraph& G) {
  std::ostringstream os;
  for (size_t i = 0; i < G.vertices.size(); ++i) {
    const auto& v = G.vertices[i];
    if (i) os << " ";
    os << "[" << i << ":g" << v.genus;
    if (G.kind != GraphKind::plain) os << "@" << level_name(G.kind, v.level);
    if (v.beta) os << ",b" << v.beta;
    for (const auto& [id, d] : v.legs) {
      os << ",m" << id;
      if (d) os << "/" << d;
    }
    for (int k : v.nu) os << ",nu" << k;
    os << "]";
  }
  for (const auto& e : G.edges) {
    os << " " << e.u << "-" << e.v;
    if (G.kind == GraphKind::bipartite || G.kind == GraphKind::tripartite) os << "(" << e.du << ")";
    else if (G.kind == GraphKind::labeled && (e.du || e.dv)) os << "(" << e.du << "," << e.dv << ")";
  }
  return os.str();
}

// psi integrals

namespace {

std::mutex psi_mutex;
std::map<std::pair<int, std::vector<int>>, Rat> psi_memo;

Rat dfact(int n) {
  Rat r(1);
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

Rat psi_compute(int g, std::vector<int> a) {
  const int n = static_cast<int>(a.size());
  std::sort(a.begin(), a.end(), std::greater<>());
  if (g == 0 && n == 3 && a[0] == 0) return Rat(1);
  if (g == 1 && n == 1) return rat(1, 24);
  if (a[0] == 0) return Rat(0);
  const int k = a[0] - 1;
  std::vector<int> S(a.begin() + 1, a.end());
  Rat sum(0);
  for (size_t j = 0; j < S.size(); ++j) {
    std::vector<int> T = S;
    T[j] = k + S[j];
    sum += dfact(2 * k + 2 * S[j] + 1) / dfact(2 * S[j] - 1) * psi_integral(g, T);
  }
  Rat half(0);
  for (int r = 0; r <= k - 1; ++r) {
    int s = k - 1 - r;
    Rat w = dfact(2 * r + 1) * dfact(2 * s + 1);
    std::vector<int> T = S;
    T.push_back(r);
    T.push_back(s);
    Rat inner = g >= 1 ? psi_integral(g - 1, T) : Rat(0);
    const int m = static_cast<int>(S.size());
    for (int g1 = 0; g1 <= g; ++g1)
      for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> I{r}, J{s};
        for (int i = 0; i < m; ++i) ((mask >> i) & 1 ? I : J).push_back(S[i]);
        Rat x = psi_integral(g1, I);
        if (x == 0) continue;
        inner += x * psi_integral(g - g1, J);
      }
    half += w * inner;
  }
  sum += half / 2;
  return sum / dfact(2 * k + 3);
}

}  // namespace

Rat psi_integral(int g, std::vector<int> exponents) {
  const int n = static_cast<int>(exponents.size());
  if (g < 0 || 2 * g - 2 + n <= 0) return Rat(0);
  for (int e : exponents)
    if (e < 0) return Rat(0);
  if (sum_of(exponents) != 3 * g - 3 + n) return Rat(0);
  std::sort(exponents.begin(), exponents.end());
  auto key = std::make_pair(g, exponents);
  {
    std::lock_guard<std::mutex> lock(psi_mutex);
    auto it = psi_memo.find(key);
    if (it != psi_memo.end()) return it->second;
  }
  Rat v = psi_compute(g, exponents);
  std::lock_guard<std::mutex> lock(psi_mutex);
  psi_memo.emplace(key, v);
  return v;
}

std::vector<PsiEntry> psi_table() {
  std::lock_guard<std::mutex> lock(psi_mutex);
  std::vector<PsiEntry> out;
  for (const auto& [k, v] : psi_memo) out.push_back({k.first, k.second, v});
  return out;
}

Report check_psi_table() {
  Report rep;
  auto table = psi_table();
  int str_checked = 0, dil_checked = 0;
  std::string bad;
  for (const auto& e : table) {
    const int n = static_cast<int>(e.exponents.size());
    auto it0 = std::find(e.exponents.begin(), e.exponents.end(), 0);
    if (it0 != e.exponents.end() && !(e.g == 0 && n == 3)) {
      std::vector<int> rest(e.exponents.begin(), e.exponents.end());
      rest.erase(rest.begin() + (it0 - e.exponents.begin()));
      Rat s(0);
      for (size_t j = 0; j < rest.size(); ++j) {
        auto t = rest;
        --t[j];
        s += psi_integral(e.g, t);
      }
      ++str_checked;
      if (s != e.value && bad.empty()) bad = "string at g=" + std::to_string(e.g);
    }
    auto it1 = std::find(e.exponents.begin(), e.exponents.end(), 1);
    if (it1 != e.exponents.end() && !(e.g == 1 && n == 1)) {
      std::vector<int> rest(e.exponents.begin(), e.exponents.end());
      rest.erase(rest.begin() + (it1 - e.exponents.begin()));
      ++dil_checked;
      if (Rat(2 * e.g - 2 + n - 1) * psi_integral(e.g, rest) != e.value && bad.empty())
        bad = "dilaton at g=" + std::to_string(e.g);
    }
  }
  rep.push_back(check("psi table string and dilaton equations", bad.empty(),
                      bad.empty() ? std::to_string(table.size()) + " entries, " + std::to_string(str_checked) +
                                        " string and " + std::to_string(dil_checked) + " dilaton checks"
                                  : bad));
  return rep;
}

// contribution skeletons

namespace {

using Graded = std::map<int, GenPoly>;  // lambda exponent -> coefficient

void add_to(Graded& a, int e, const GenPoly& p) {
  if (p.is_zero()) return;
  a[e] += p;
  if (a[e].is_zero()) a.erase(e);
}

Graded mul(const Graded& a, const Graded& b) {
  Graded r;
  for (const auto& [e1, p1] : a)
    for (const auto& [e2, p2] : b) add_to(r, e1 + e2, p1 * p2);
  return r;
}

std::string mu_string(const std::vector<int>& mu) {
  std::string s = "(";
  for (size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
  return s + ")";
}

struct Evaluator {
  const DecoratedGraph& G;
  const RMatrix& R;
  EdgeKernel ek;
  std::map<std::pair<int, std::vector<std::pair<int, int>>>, Graded> vcache;

  // [z^k] Rbar^{-1}(z) phi_a has phi_b component tcoef(k, b, a), lambda power a - b - k.
  GenPoly tcoef(int k, int b, int a) const {
    if (k > R.zorder) throw std::invalid_argument("contribution_skeleton: R matrix order too small");
    const GenPoly& m = R.m[a][b][k];
    return k % 2 ? -m : m;
  }

  int dim(int v) const { return 3 * G.vertices[v].genus - 3 + G.n_at(v); }

  // T omega at v with flag data (phi index, psi power), integrated.
  Graded vertex(int v, const std::vector<std::pair<int, int>>& flags) {
    auto key = std::make_pair(v, flags);
    auto it = vcache.find(key);
    if (it != vcache.end()) return it->second;
    const int g = G.vertices[v].genus;
    int s = dim(v);
    for (const auto& f : flags) s -= f.second;
    Graded out;
    if (s >= 0) {
      std::vector<int> ls, bs;
      std::function<void(int)> rec = [&](int left) {
        if (left == 0) {
          const int j = static_cast<int>(ls.size());
          std::vector<int> ins, psi;
          for (const auto& f : flags) {
            ins.push_back(f.first);
            psi.push_back(f.second);
          }
          GenPoly c(1);
          int e = 0;
          for (int i = 0; i < j; ++i) {
            c = c * -tcoef(ls[i], bs[i], 0);
            e += -bs[i] - ls[i];
            ins.push_back(bs[i]);
            psi.push_back(ls[i] + 1);
          }
          if (c.is_zero()) return;
          Rat integral = psi_integral(g, psi);
          if (integral == 0) return;
          TqftValue w = tqft_omega(g, ins);
          if (w.coeff == 0) return;
          add_to(out, e + w.lambda_pow, integral * w.coeff / factorial(j) * c);
          return;
        }
        for (int l = 1; l <= left; ++l)
          for (int b = 0; b < 5; ++b) {
            if (R.m[0][b][l].is_zero()) continue;
            ls.push_back(l);
            bs.push_back(b);
            rec(left - l);
            ls.pop_back();
            bs.pop_back();
          }
      };
      rec(s);
    }
    vcache[key] = out;
    return out;
  }
};

}  // namespace

std::string to_string(const SkeletonNode& node, int indent) {
  std::string s(indent * 2, ' ');
  s += node.kind;
  if (!node.label.empty()) s += ": " + node.label;
  s += "\n";
  for (const auto& c : node.children) s += to_string(c, indent + 1);
  return s;
}

ContributionSkeleton contribution_skeleton(const DecoratedGraph& G, const std::vector<int>& insertions,
                                           const ContributionInputs& in) {
  if (!in.R) throw std::invalid_argument("contribution_skeleton: missing R matrix");
  const int V = static_cast<int>(G.vertices.size());
  int nlegs = 0;
  for (const auto& v : G.vertices) nlegs += static_cast<int>(v.legs.size());
  if (static_cast<int>(insertions.size()) != nlegs)
    throw std::invalid_argument("contribution_skeleton: insertion count does not match the legs");
  auto is_inf = [&](int i) { return G.vertices[i].level == 1; };
  auto need_s = [&](int d) {
    if (!in.sdeltas) throw std::invalid_argument("contribution_skeleton: missing S_delta matrices");
    for (const auto& s : *in.sdeltas)
      if (s.delta == d) return;
    throw std::invalid_argument("contribution_skeleton: missing S_delta for delta = " + std::to_string(d));
  };

  ContributionSkeleton cs;
  cs.graph = G;
  cs.tree = {"contract", to_string(G), {}};
  bool any_inf = false;
  for (int i = 0; i < V; ++i) {
    const auto& v = G.vertices[i];
    SkeletonNode vn;
    if (is_inf(i)) {
      any_inf = true;
      auto mu = G.flag_degrees(i);
      int sz = sum_of(mu);
      bool big = std::any_of(mu.begin(), mu.end(), [](int d) { return d >= 3; });
      std::string lab = "Omega^{inf,c}_{" + std::to_string(v.genus) + "," + mu_string(mu) + "}";
      int slack = 2 * v.genus - 2 + static_cast<int>(mu.size()) - 5 * sz;
      SkeletonNode om{big ? "zero" : "omega-infty",
                      lab + (slack < 0 ? " = 0 (2g-2+l(mu)-5|mu| < 0)" : " (vanishes if 2g-2+l(mu)-5|mu| < 0)"),
                      {}};
      if (big) cs.zero = true;
      vn = {"J", "J " + lab + " at v" + std::to_string(i), {om}};
      for (const auto& [id, d] : v.legs) {
        need_s(d);
        vn.children.push_back({"S-delta", "L^-" + std::to_string(d) + " Sbar_" + std::to_string(d) + " phi_" +
                                              std::to_string(insertions[id - 1]) + " at leg " + std::to_string(id),
                               {}});
      }
    } else {
      vn = {"tqft-vertex", "T omega_{" + std::to_string(v.genus) + "," + std::to_string(G.n_at(i)) + "} at v" +
                               std::to_string(i),
            {}};
      for (const auto& [id, d] : v.legs)
        vn.children.push_back({"R-column", "Rbar^{-1}(psi_" + std::to_string(id) + ") phi_" +
                                               std::to_string(insertions[id - 1]),
                               {}});
    }
    cs.tree.children.push_back(vn);
  }
  for (const auto& e : G.edges) {
    std::string ends = "v" + std::to_string(e.u) + "-v" + std::to_string(e.v);
    bool iu = is_inf(e.u), iv = is_inf(e.v);
    if (!iu && !iv) {
      cs.tree.children.push_back({"edge-kernel", "V(z1,z2) " + ends, {}});
    } else if (iu && iv) {
      need_s(e.du);
      need_s(e.dv);
      cs.tree.children.push_back({"edge-kernel",
                                  "(H_" + std::to_string(e.du) + " + H_" + std::to_string(e.dv) + ")^{-1} Sbar Sbar " + ends,
                                  {{"S-delta", "Sbar_" + std::to_string(e.du), {}},
                                   {"S-delta", "Sbar_" + std::to_string(e.dv), {}}}});
    } else {
      int d = iu ? e.du : e.dv;
      need_s(d);
      cs.tree.children.push_back({"contract", "mixed edge " + ends,
                                  {{"R-column", "Rbar^{-1}(psi)", {}},
                                   {"S-delta", "L^-" + std::to_string(d) + " Sbar_" + std::to_string(d), {}},
                                   {"J", "J_t(H_" + std::to_string(d) + ")", {}}}});
    }
  }
  const int g = G.genus();
  cs.i0l_pow = 2 * static_cast<int>(G.edges.size());
  for (const auto& v : G.vertices) cs.i0l_pow += 2 * v.genus - 2;
  if (any_inf) return cs;

  // All vertices labeled 0: evaluate.
  Evaluator ev{G, *in.R, edge_kernel(*in.R), {}};
  cs.report.push_back(check("edge kernel divisible by z1 + z2", ev.ek.divisible, ev.ek.remainder));
  struct FlagRef {
    int vertex;
    int slot;
  };
  std::vector<std::vector<std::pair<int, int>>> fl(V);  // per vertex flag data (phi, psi)
  std::vector<FlagRef> legref;
  std::vector<int> leg_a;
  for (int i = 0; i < V; ++i)
    for (const auto& [id, d] : G.vertices[i].legs) {
      legref.push_back({i, static_cast<int>(fl[i].size())});
      leg_a.push_back(insertions[id - 1]);
      fl[i].push_back({0, 0});
    }
  std::vector<std::pair<FlagRef, FlagRef>> edgeref;
  for (const auto& e : G.edges) {
    FlagRef a{e.u, static_cast<int>(fl[e.u].size())};
    fl[e.u].push_back({0, 0});
    FlagRef b{e.v, static_cast<int>(fl[e.v].size())};
    fl[e.v].push_back({0, 0});
    edgeref.push_back({a, b});
  }
  Graded total;
  const int L = static_cast<int>(legref.size());
  const int E = static_cast<int>(edgeref.size());
  std::function<void(int, const GenPoly&, int)> rec = [&](int step, const GenPoly& c, int e) {
    if (step < L) {
      auto [v, slot] = legref[step];
      const int a = leg_a[step];
      for (int k = 0; k <= ev.dim(v); ++k)
        for (int b = 0; b < 5; ++b) {
          GenPoly t = ev.tcoef(k, b, a);
          if (t.is_zero()) continue;
          fl[v][slot] = {b, k};
          rec(step + 1, c * t, e + a - b - k);
        }
      return;
    }
    if (step < L + E) {
      auto [fa, fb] = edgeref[step - L];
      for (int k1 = 0; k1 <= ev.dim(fa.vertex); ++k1)
        for (int k2 = 0; k2 <= ev.dim(fb.vertex); ++k2) {
          if (k1 + k2 > ev.ek.max_degree)
            throw std::invalid_argument("contribution_skeleton: R matrix order too small");
          const MatG& m = ev.ek.v.at({k1, k2});
          for (int b1 = 0; b1 < 5; ++b1)
            for (int b2 = 0; b2 < 5; ++b2) {
              if (m[b1][b2].is_zero()) continue;
              fl[fa.vertex][fa.slot] = {b1, k1};
              fl[fb.vertex][fb.slot] = {b2, k2};
              rec(step + 1, c * m[b1][b2], e + 2 - k1 - k2 - b1 - b2);
            }
        }
      return;
    }
    Graded acc{{e, c}};
    for (int v = 0; v < V && !acc.empty(); ++v) acc = mul(acc, ev.vertex(v, fl[v]));
    for (const auto& [k, p] : acc) add_to(total, k, p);
  };
  rec(0, GenPoly(1), 0);
  const Rat aut = rat(1, automorphisms(G));
  for (auto& [k, p] : total) p *= aut;
  cs.value = total;
  cs.evaluated = true;

  const int suma = sum_of(insertions);
  const int deg = 3 * g - 3 + nlegs;
  bool homog = true, combined = true, mod5 = true, inR = true;
  for (const auto& [k, p] : total) {
    homog = homog && p.is_homogeneous(deg);
    combined = combined && deg + k == 3 * g - 3 + suma;
    mod5 = mod5 && k % 5 == 0;
    inR = inR && in_R(p).ok;
  }
  cs.report.push_back(check("global (I0/L)^(2g-2) prefactor", cs.i0l_pow == 2 * g - 2, std::to_string(cs.i0l_pow)));
  cs.report.push_back(check("homogeneous of degree 3g-3+n", homog, std::to_string(deg)));
  cs.report.push_back(check("degree plus lambda power equals 3g-3+sum a", combined, std::to_string(3 * g - 3 + suma)));
  cs.report.push_back(check("only lambda^(5k) terms", mod5));
  cs.report.push_back(check("coefficients in R", inR));
  return cs;
}

}  // namespace quintic
