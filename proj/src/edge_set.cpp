#include "bip/edge_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "bip/errors.hpp"

namespace bip {

namespace {

// Adjacency lists over values 1..n.
std::vector<std::vector<int>> adjacency(const std::vector<ValuePair>& edges, int n) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(n) + 1);
  for (auto [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("edge endpoint out of range");
    adj[static_cast<size_t>(a)].push_back(b);
  }
  return adj;
}

bool is_acyclic(const std::vector<std::vector<int>>& adj, int n) {
  std::vector<int> indeg(static_cast<size_t>(n) + 1, 0);
  for (int a = 1; a <= n; ++a)
    for (int b : adj[static_cast<size_t>(a)]) ++indeg[static_cast<size_t>(b)];
  std::vector<int> queue;
  for (int v = 1; v <= n; ++v)
    if (indeg[static_cast<size_t>(v)] == 0) queue.push_back(v);
  int removed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++removed;
    for (int b : adj[static_cast<size_t>(v)])
      if (--indeg[static_cast<size_t>(b)] == 0) queue.push_back(b);
  }
  return removed == n;
}

bool reachable_avoiding_edge(const std::vector<std::vector<int>>& adj, int from, int to,
                             int skip_a, int skip_b, int n) {
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  std::vector<int> stack{from};
  seen[static_cast<size_t>(from)] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int b : adj[static_cast<size_t>(v)]) {
      if (v == skip_a && b == skip_b) continue;
      if (b == to) return true;
      if (!seen[static_cast<size_t>(b)]) {
        seen[static_cast<size_t>(b)] = 1;
        stack.push_back(b);
      }
    }
  }
  return false;
}

}  // namespace

std::vector<ValuePair> raw_edges(const Permutation& u, const Permutation& w) {
  if (!bruhat_leq(u, w)) throw std::invalid_argument("raw_edges: u is not <= w");
  const int n = u.n();
  const int lu = u.length();
  std::vector<ValuePair> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int p = u(i), q = u(j);
      const Permutation v = u.swap_values(p, q);
      if (std::abs(v.length() - lu) != 1) continue;
      if (!bruhat_leq(v, w)) continue;
      out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ValuePair> transitive_reduction(const std::vector<ValuePair>& edges, int n) {
  auto adj = adjacency(edges, n);
  if (!is_acyclic(adj, n))
    throw HypothesisError("transitive_reduction: input digraph has a cycle");
  std::vector<ValuePair> out;
  for (auto [a, b] : edges)
    if (!reachable_avoiding_edge(adj, a, b, a, b, n)) out.emplace_back(a, b);
  std::sort(out.begin(), out.end());
  return out;
}

BruhatEdgeSet edge_set(const Permutation& u, const Permutation& w) {
  BruhatEdgeSet es{u, w, raw_edges(u, w), {}, {}, {}};
  es.reduced = transitive_reduction(es.raw, u.n());
  for (auto [p, q] : es.reduced) {
    // (p,q) = (u(i),u(j)) with i < j; the edge ascends exactly when p < q.
    if (p < q)
      es.plus.emplace_back(p, q);
    else
      es.minus.emplace_back(p, q);
  }
  return es;
}

int ascent_count(const Permutation& u, const Permutation& w) {
  return static_cast<int>(edge_set(u, w).plus.size());
}

AscentGraph ascent_graph(const BruhatEdgeSet& es) {
  const int n = es.u.n();
  AscentGraph g{es.u, {}, {}};
  std::vector<std::vector<int>> nbr(static_cast<size_t>(n) + 1);
  for (auto [p, q] : es.plus) {
    int i = es.u.position_of(p), j = es.u.position_of(q);
    g.position_edges.emplace_back(std::min(i, j), std::max(i, j));
    nbr[static_cast<size_t>(i)].push_back(j);
    nbr[static_cast<size_t>(j)].push_back(i);
  }
  std::sort(g.position_edges.begin(), g.position_edges.end());

  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<int> comp;
    std::vector<int> stack{start};
    seen[static_cast<size_t>(start)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int b : nbr[static_cast<size_t>(v)])
        if (!seen[static_cast<size_t>(b)]) {
          seen[static_cast<size_t>(b)] = 1;
          stack.push_back(b);
        }
    }
    std::sort(comp.begin(), comp.end());
    // Path check: degrees within the component must be <= 2 with exactly
    // two endpoints of degree <= 1 (or a singleton).
    int deg_sum = 0, endpoints = 0;
    for (int v : comp) {
      int d = static_cast<int>(nbr[static_cast<size_t>(v)].size());
      if (d > 2) throw HypothesisError("ascent graph component is not a path: degree > 2");
      deg_sum += d;
      if (d <= 1) ++endpoints;
    }
    const int edges_in_comp = deg_sum / 2;
    if (edges_in_comp != static_cast<int>(comp.size()) - 1 || (comp.size() > 1 && endpoints != 2))
      throw HypothesisError("ascent graph component is not a path");
    g.components.push_back(std::move(comp));
  }
  return g;
}

std::vector<int> level_function(const BruhatEdgeSet& es) {
  const int n = es.u.n();
  const Permutation& u = es.u;
  AscentGraph g = ascent_graph(es);
  const int m = static_cast<int>(g.components.size());

  // Order maximal ascents: component A is above B when some position i in A
  // precedes a position i' in B with u(i) > u(i').  Both directions holding
  // at once would be a crossing, which the reduction forbids.
  std::vector<std::vector<char>> above(static_cast<size_t>(m), std::vector<char>(static_cast<size_t>(m), 0));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      for (int i : g.components[static_cast<size_t>(a)]) {
        for (int ip : g.components[static_cast<size_t>(b)]) {
          if (i < ip && u(i) > u(ip)) {
            above[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
            goto next_pair;
          }
        }
      }
    next_pair:;
    }
  }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (above[static_cast<size_t>(a)][static_cast<size_t>(b)] &&
          above[static_cast<size_t>(b)][static_cast<size_t>(a)])
        throw HypothesisError("level_function: crossing maximal ascents");

  // Topological order, largest first, ties broken by smallest position.
  std::vector<int> indeg(static_cast<size_t>(m), 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (above[static_cast<size_t>(a)][static_cast<size_t>(b)]) ++indeg[static_cast<size_t>(b)];
  std::vector<int> order;
  std::vector<char> used(static_cast<size_t>(m), 0);
  for (int step = 0; step < m; ++step) {
    int pick = -1;
    for (int c = 0; c < m; ++c) {
      if (used[static_cast<size_t>(c)] || indeg[static_cast<size_t>(c)] != 0) continue;
      if (pick < 0 || g.components[static_cast<size_t>(c)].front() <
                          g.components[static_cast<size_t>(pick)].front())
        pick = c;
    }
    if (pick < 0) throw HypothesisError("level_function: ascent order contains a cycle");
    used[static_cast<size_t>(pick)] = 1;
    order.push_back(pick);
    for (int b = 0; b < m; ++b)
      if (above[static_cast<size_t>(pick)][static_cast<size_t>(b)]) --indeg[static_cast<size_t>(b)];
  }

  std::vector<int> f(static_cast<size_t>(n) + 1, 0);
  for (int rank = 0; rank < m; ++rank) {
    const int level = m - rank;  // m down to 1
    for (int pos : g.components[static_cast<size_t>(order[static_cast<size_t>(rank)])])
      f[static_cast<size_t>(u(pos))] = level;
  }

  for (auto [p, q] : es.plus)
    if (f[static_cast<size_t>(p)] != f[static_cast<size_t>(q)])
      throw HypothesisError("level_function: ascending constraint violated");
  for (auto [p, q] : es.minus)
    if (f[static_cast<size_t>(p)] <= f[static_cast<size_t>(q)])
      throw HypothesisError("level_function: descending constraint violated");
  return f;
}

}  // namespace bip
