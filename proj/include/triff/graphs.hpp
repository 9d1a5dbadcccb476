#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triff/code.hpp"

namespace triff {

class DerivedGraph;
DerivedGraph build_graph_r3(const Code &code);

/// Graph recording the 2-locations of an r-bounded code.
///
/// simple: vertices are coordinates, one edge {i, j} per 2-location pair
/// (r = 2). Left and right vertex sets are both [n] and adjacency is
/// symmetric.
/// bipartite: left vertices are coordinates, right vertices are coordinate
/// pairs {j, k}; a word with 2s at i < j < k adds (i, {j, k}) (r = 3). Only
/// pairs that occur in some edge are materialized on the right.
class DerivedGraph {
public:
  enum class Kind { simple, bipartite };

  struct Edge {
    std::size_t left = 0;
    std::size_t right = 0; ///< Index into right_labels().
    std::vector<std::size_t> origins; ///< Codeword indices adding the edge.
  };

  /// Simple graph on n vertices from an edge list (u ≠ v). Duplicate edges
  /// merge their origin lists.
  static DerivedGraph simple(std::size_t n,
                             const std::vector<std::pair<std::size_t, std::size_t>> &edges,
                             const std::vector<std::vector<std::size_t>> &origins = {});

  /// Bipartite graph with `left` vertices and the given right labels.
  static DerivedGraph bipartite(std::size_t left,
                                std::vector<std::pair<std::size_t, std::size_t>> right_labels,
                                const std::vector<std::pair<std::size_t, std::size_t>> &edges);

  Kind kind() const { return kind_; }
  std::size_t left_count() const { return left_count_; }
  std::size_t right_count() const { return right_labels_.size(); }
  /// For the simple kind, right vertex j has label (j, j).
  const std::vector<std::pair<std::size_t, std::size_t>> &right_labels() const {
    return right_labels_;
  }
  const std::vector<Edge> &edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(std::size_t left, std::size_t right) const;
  const std::vector<Word> &neighbors(std::size_t left) const {
    return adjacency_.at(left);
  }
  std::size_t degree(std::size_t left) const;

  /// Number of edges with each origin multiplicity.
  std::map<std::size_t, std::size_t> multiplicity_histogram() const;
  std::size_t max_multiplicity() const;

  /// "u v" per line, 1-based; bipartite right vertices as "j,k".
  std::string edge_list() const;

private:
  friend DerivedGraph build_graph_r3(const Code &code);

  DerivedGraph(Kind kind, std::size_t left,
               std::vector<std::pair<std::size_t, std::size_t>> right_labels);
  void add_edge(std::size_t left, std::size_t right, std::size_t origin,
                bool record_origin);

  Kind kind_;
  std::size_t left_count_;
  std::vector<std::pair<std::size_t, std::size_t>> right_labels_;
  std::vector<Edge> edges_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index_;
  std::vector<std::vector<Word>> adjacency_;
};

/// Requires a 2-bounded code.
DerivedGraph build_graph_r2(const Code &code);
/// Requires a 3-bounded code.
DerivedGraph build_graph_r3(const Code &code);

struct KstWitness {
  std::vector<std::size_t> left;  ///< s vertices.
  std::vector<std::size_t> right; ///< t right-vertex indices.
};

/// Looks for s left vertices with at least t common neighbours, visiting
/// s-subsets in lexicographic order. Left vertices of degree below t are
/// skipped. For the simple kind common neighbours of a set never include
/// the set itself, so the two sides of a witness are disjoint.
std::optional<KstWitness> contains_kst(const DerivedGraph &g, std::size_t s,
                                       std::uint64_t t);

bool validate_witness(const DerivedGraph &g, const KstWitness &w);

struct BipartitionStats {
  bool applicable = false; ///< False for a graph without edges.
  std::uint64_t trials = 0;
  double mean_crossing_fraction = 0.0;
  double min_crossing_fraction = 0.0;
  double max_crossing_fraction = 0.0;
  /// 2·⌈n/2⌉·⌊n/2⌋ / (n(n−1)), the crossing probability of one edge.
  double exact_expectation = 0.0;
};

/// Fraction of edges crossing random equi-bipartitions of a simple graph.
BipartitionStats random_bipartition_check(const DerivedGraph &g,
                                          std::uint64_t seed,
                                          std::uint64_t trials);

/// Same statistics over every ⌊n/2⌋-subset taken as one side; capped at n ≤ 24.
BipartitionStats exhaustive_bipartition_check(const DerivedGraph &g);

} // namespace triff
