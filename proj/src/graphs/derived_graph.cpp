#include "triff/graphs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

namespace triff {

DerivedGraph::DerivedGraph(Kind kind, std::size_t left,
                           std::vector<std::pair<std::size_t, std::size_t>> right_labels)
    : kind_(kind), left_count_(left), right_labels_(std::move(right_labels)),
      adjacency_(left, std::vector<Word>(words_for(right_labels_.size()), 0)) {}

void DerivedGraph::add_edge(std::size_t left, std::size_t right,
                            std::size_t origin, bool record_origin) {
  if (left >= left_count_ || right >= right_labels_.size())
    throw std::out_of_range("edge endpoint out of range");
  auto [it, inserted] = edge_index_.try_emplace({left, right}, edges_.size());
  if (inserted) {
    edges_.push_back({left, right, {}});
    adjacency_[left][right / kWordBits] |= Word{1} << (right % kWordBits);
    if (kind_ == Kind::simple)
      adjacency_[right][left / kWordBits] |= Word{1} << (left % kWordBits);
  }
  if (record_origin)
    edges_[it->second].origins.push_back(origin);
}

DerivedGraph DerivedGraph::simple(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &edges,
    const std::vector<std::vector<std::size_t>> &origins) {
  std::vector<std::pair<std::size_t, std::size_t>> labels(n);
  for (std::size_t v = 0; v < n; ++v)
    labels[v] = {v, v};
  DerivedGraph g(Kind::simple, n, std::move(labels));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (u == v)
      throw std::invalid_argument("self-loop in simple graph");
    if (u > v)
      std::swap(u, v);
    if (origins.empty()) {
      g.add_edge(u, v, 0, false);
    } else {
      for (std::size_t o : origins.at(e))
        g.add_edge(u, v, o, true);
    }
  }
  return g;
}

DerivedGraph DerivedGraph::bipartite(
    std::size_t left, std::vector<std::pair<std::size_t, std::size_t>> right_labels,
    const std::vector<std::pair<std::size_t, std::size_t>> &edges) {
  DerivedGraph g(Kind::bipartite, left, std::move(right_labels));
  for (auto [u, v] : edges)
    g.add_edge(u, v, 0, false);
  return g;
}

bool DerivedGraph::has_edge(std::size_t left, std::size_t right) const {
  if (kind_ == Kind::simple && left > right)
    std::swap(left, right);
  return edge_index_.contains({left, right});
}

std::size_t DerivedGraph::degree(std::size_t left) const {
  std::size_t d = 0;
  for (Word w : adjacency_.at(left))
    d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::map<std::size_t, std::size_t> DerivedGraph::multiplicity_histogram() const {
  std::map<std::size_t, std::size_t> hist;
  for (const auto &e : edges_)
    ++hist[e.origins.size()];
  return hist;
}

std::size_t DerivedGraph::max_multiplicity() const {
  std::size_t m = 0;
  for (const auto &e : edges_)
    m = std::max(m, e.origins.size());
  return m;
}

std::string DerivedGraph::edge_list() const {
  std::vector<const Edge *> order;
  for (const auto &e : edges_)
    order.push_back(&e);
  std::sort(order.begin(), order.end(), [](const Edge *a, const Edge *b) {
    return std::pair(a->left, a->right) < std::pair(b->left, b->right);
  });
  std::string out;
  for (const Edge *p : order) {
    const auto &e = *p;
    out += std::to_string(e.left + 1) + " ";
    if (kind_ == Kind::simple) {
      out += std::to_string(e.right + 1);
    } else {
      const auto [j, k] = right_labels_[e.right];
      out += std::to_string(j + 1) + "," + std::to_string(k + 1);
    }
    out += "\n";
  }
  return out;
}

namespace {

void require_bounded(const Code &code, std::size_t r) {
  if (code.r_bound() != r)
    throw std::invalid_argument("derived graph needs a " + std::to_string(r) +
                                "-bounded code");
}

} // namespace

DerivedGraph build_graph_r2(const Code &code) {
  require_bounded(code, 2);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> origins;
  for (std::size_t c = 0; c < code.size(); ++c) {
    const auto loc = code[c].two_locations();
    edges.emplace_back(loc[0], loc[1]);
    origins.push_back({c});
  }
  return DerivedGraph::simple(code.block_length(), edges, origins);
}

DerivedGraph build_graph_r3(const Code &code) {
  require_bounded(code, 3);
  // Right vertices: the pairs {j, k} that occur, in sorted order.
  std::vector<std::pair<std::size_t, std::size_t>> labels;
  for (const auto &w : code) {
    const auto loc = w.two_locations();
    labels.emplace_back(loc[1], loc[2]);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  DerivedGraph g(DerivedGraph::Kind::bipartite, code.block_length(), labels);
  for (std::size_t c = 0; c < code.size(); ++c) {
    const auto loc = code[c].two_locations();
    const auto right = static_cast<std::size_t>(
        std::lower_bound(labels.begin(), labels.end(),
                         std::pair{loc[1], loc[2]}) -
        labels.begin());
    g.add_edge(loc[0], right, c, true);
  }
  return g;
}

std::optional<KstWitness> contains_kst(const DerivedGraph &g, std::size_t s,
                                       std::uint64_t t) {
  if (s == 0 || t == 0)
    throw std::invalid_argument("contains_kst needs s, t >= 1");
  if (t > g.right_count())
    return std::nullopt;
  std::vector<std::size_t> eligible;
  for (std::size_t v = 0; v < g.left_count(); ++v)
    if (g.degree(v) >= t)
      eligible.push_back(v);
  if (eligible.size() < s)
    return std::nullopt;

  const std::size_t words = words_for(g.right_count());
  // Depth-first over s-subsets of eligible vertices, carrying the running
  // intersection so that hopeless prefixes are cut early.
  std::vector<std::vector<Word>> common(s + 1, std::vector<Word>(words, ~Word{0}));
  std::vector<std::size_t> chosen;
  std::optional<KstWitness> found;

  auto count = [&](const std::vector<Word> &bits) {
    std::uint64_t c = 0;
    for (Word w : bits)
      c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  };

  auto rec = [&](auto &&self, std::size_t start) -> void {
    const std::size_t depth = chosen.size();
    if (depth == s) {
      KstWitness w{chosen, {}};
      const auto &bits = common[depth];
      for (std::size_t k = 0; k < words && w.right.size() < t; ++k) {
        Word x = bits[k];
        while (x && w.right.size() < t) {
          w.right.push_back(k * kWordBits +
                            static_cast<std::size_t>(std::countr_zero(x)));
          x &= x - 1;
        }
      }
      found = std::move(w);
      return;
    }
    for (std::size_t idx = start;
         idx + (s - depth) <= eligible.size() && !found; ++idx) {
      const auto &nb = g.neighbors(eligible[idx]);
      for (std::size_t k = 0; k < words; ++k)
        common[depth + 1][k] = common[depth][k] & nb[k];
      if (count(common[depth + 1]) < t)
        continue;
      chosen.push_back(eligible[idx]);
      self(self, idx + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return found;
}

bool validate_witness(const DerivedGraph &g, const KstWitness &w) {
  for (std::size_t u : w.left)
    for (std::size_t v : w.right) {
      if (u >= g.left_count() || v >= g.right_count() || !g.has_edge(u, v))
        return false;
      if (g.kind() == DerivedGraph::Kind::simple && u == v)
        return false;
    }
  auto distinct = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  return distinct(w.left) && distinct(w.right);
}

namespace {

double crossing_fraction(const DerivedGraph &g, const std::vector<bool> &side) {
  std::size_t crossing = 0;
  for (const auto &e : g.edges())
    crossing += side[e.left] != side[e.right];
  return static_cast<double>(crossing) / static_cast<double>(g.edge_count());
}

BipartitionStats prepare(const DerivedGraph &g) {
  if (g.kind() != DerivedGraph::Kind::simple)
    throw std::invalid_argument("bipartition check needs a simple graph");
  BipartitionStats st;
  const auto n = static_cast<double>(g.left_count());
  st.applicable = g.edge_count() > 0 && g.left_count() >= 2;
  if (g.left_count() >= 2) {
    const double hi = static_cast<double>((g.left_count() + 1) / 2);
    const double lo = static_cast<double>(g.left_count() / 2);
    st.exact_expectation = 2.0 * hi * lo / (n * (n - 1.0));
  }
  return st;
}

void accumulate(BipartitionStats &st, double f) {
  if (st.trials == 0) {
    st.min_crossing_fraction = st.max_crossing_fraction = f;
  } else {
    st.min_crossing_fraction = std::min(st.min_crossing_fraction, f);
    st.max_crossing_fraction = std::max(st.max_crossing_fraction, f);
  }
  st.mean_crossing_fraction += f;
  ++st.trials;
}

} // namespace

BipartitionStats random_bipartition_check(const DerivedGraph &g,
                                          std::uint64_t seed,
                                          std::uint64_t trials) {
  if (trials == 0)
    throw std::invalid_argument("trials must be positive");
  BipartitionStats st = prepare(g);
  if (!st.applicable)
    return st;
  const std::size_t n = g.left_count();
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(n);
  std::vector<bool> side(n);
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < n; ++i)
      side[order[i]] = i < n / 2;
    accumulate(st, crossing_fraction(g, side));
  }
  st.mean_crossing_fraction /= static_cast<double>(st.trials);
  return st;
}

BipartitionStats exhaustive_bipartition_check(const DerivedGraph &g) {
  BipartitionStats st = prepare(g);
  if (!st.applicable)
    return st;
  const std::size_t n = g.left_count();
  if (n > 24)
    throw std::out_of_range("exhaustive bipartition is capped at n = 24");
  std::vector<bool> side(n, false);
  std::fill(side.begin(), side.begin() + static_cast<std::ptrdiff_t>(n / 2), true);
  // prev_permutation walks every arrangement of n/2 trues exactly once.
  do {
    accumulate(st, crossing_fraction(g, side));
  } while (std::prev_permutation(side.begin(), side.end()));
  st.mean_crossing_fraction /= static_cast<double>(st.trials);
  return st;
}

} // namespace triff
