#include "triff/search.hpp"

#include <stdexcept>

namespace triff {

BadTripleOracleInstance enumerate_bad_triples(std::vector<Codeword> universe) {
  BadTripleOracleInstance inst;
  inst.universe = std::move(universe);
  const auto &u = inst.universe;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      for (std::size_t k = j + 1; k < u.size(); ++k)
        if (!is_trifferent_triple_naive(u[i], u[j], u[k]))
          inst.bad_triples.push_back({i, j, k});
  return inst;
}

namespace {

struct PlainSearch {
  // closing[k]: pairs (i, j), i < j < k, forming a bad triple with k.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> closing;
  std::vector<bool> in;
  std::size_t size = 0;
  std::size_t best = 0;

  void rec(std::size_t k) {
    if (k == in.size()) {
      best = std::max(best, size);
      return;
    }
    bool ok = true;
    for (auto [i, j] : closing[k])
      if (in[i] && in[j]) {
        ok = false;
        break;
      }
    if (ok) {
      in[k] = true;
      ++size;
      rec(k + 1);
      --size;
      in[k] = false;
    }
    rec(k + 1);
  }
};

} // namespace

std::size_t oracle_max(const BadTripleOracleInstance &instance, std::size_t cap) {
  const std::size_t m = instance.universe.size();
  if (m > cap)
    throw std::out_of_range("oracle universe of " + std::to_string(m) +
                            " words exceeds the cap of " + std::to_string(cap));
  PlainSearch s;
  s.closing.resize(m);
  s.in.assign(m, false);
  for (const auto &t : instance.bad_triples)
    s.closing[t[2]].emplace_back(t[0], t[1]);
  s.rec(0);
  return s.best;
}

void confirm_with_oracle(SearchCertificate &cert, std::size_t cap) {
  auto universe = cert.r ? bounded_universe(cert.n, *cert.r)
                         : full_universe(cert.n);
  const auto inst = enumerate_bad_triples(std::move(universe));
  cert.oracle_value = oracle_max(inst, cap);
  cert.oracle_checked = true;
}

} // namespace triff
