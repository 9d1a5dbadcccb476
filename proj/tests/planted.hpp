#pragma once

// Random graphs with a planted complete bipartite subgraph.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "triff/graphs.hpp"

namespace triff::testing {

/// Simple graph on n vertices: G(n, p) plus all edges between a random
/// s-set and a disjoint random t-set.
inline DerivedGraph planted_simple(std::size_t n, double p, std::size_t s,
                                   std::size_t t, std::mt19937_64 &rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  auto add = [&](std::size_t u, std::size_t v) {
    edges.insert({std::min(u, v), std::max(u, v)});
  };
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = s; b < s + t; ++b)
      add(perm[a], perm[b]);
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng))
        add(u, v);
  return DerivedGraph::simple(n, {edges.begin(), edges.end()});
}

/// Bipartite left×right graph: random edges with probability p plus a
/// planted K_{s,t} on random vertices.
inline DerivedGraph planted_bipartite(std::size_t left, std::size_t right,
                                      double p, std::size_t s, std::size_t t,
                                      std::mt19937_64 &rng) {
  std::vector<std::size_t> lp(left), rp(right);
  std::iota(lp.begin(), lp.end(), std::size_t{0});
  std::iota(rp.begin(), rp.end(), std::size_t{0});
  std::shuffle(lp.begin(), lp.end(), rng);
  std::shuffle(rp.begin(), rp.end(), rng);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < t; ++b)
      edges.insert({lp[a], rp[b]});
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < left; ++u)
    for (std::size_t v = 0; v < right; ++v)
      if (coin(rng))
        edges.insert({u, v});
  std::vector<std::pair<std::size_t, std::size_t>> labels;
  for (std::size_t j = 0; j < right; ++j)
    labels.emplace_back(j, j + 1);
  return DerivedGraph::bipartite(left, std::move(labels),
                                 {edges.begin(), edges.end()});
}

} // namespace triff::testing
