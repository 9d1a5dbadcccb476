#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "test_support.hpp"
#include "triff/constructions.hpp"
#include "triff/search.hpp"

using namespace triff;
using namespace triff::testing;

namespace {

SearchConfig plain_config() {
  SearchConfig c;
  c.symmetry_breaking = false;
  c.group_bound = false;
  return c;
}

} // namespace

TEST(Universe, OrderAndSize) {
  const auto full = full_universe(2);
  ASSERT_EQ(full.size(), 9u);
  EXPECT_EQ(full.front().to_string(), "00");
  EXPECT_EQ(full.back().to_string(), "22");
  EXPECT_TRUE(std::is_sorted(full.begin(), full.end()));
  const auto a = bounded_universe(4, 2);
  EXPECT_EQ(a.size(), 24u);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  for (const auto &w : a)
    EXPECT_EQ(w.count_twos(), 2u);
  EXPECT_THROW(bounded_universe(3, 4), std::out_of_range);
}

TEST(Oracle, BadTripleEnumeration) {
  const auto words = [](std::vector<std::string> s) {
    std::vector<Codeword> out;
    for (const auto &x : s)
      out.push_back(Codeword::from_string(x));
    return out;
  };
  const auto inst = enumerate_bad_triples(words({"00", "01", "10"}));
  ASSERT_EQ(inst.bad_triples.size(), 1u);
  EXPECT_EQ(inst.bad_triples[0], (std::array<std::size_t, 3>{0, 1, 2}));
  EXPECT_TRUE(enumerate_bad_triples(one_bounded(3).words()).bad_triples.empty());
  EXPECT_TRUE(enumerate_bad_triples(words({"0", "1"})).bad_triples.empty());
}

TEST(Oracle, SmallValues) {
  EXPECT_EQ(oracle_max(enumerate_bad_triples(full_universe(1))), 3u);
  EXPECT_EQ(oracle_max(enumerate_bad_triples({})), 0u);
  EXPECT_EQ(oracle_max(enumerate_bad_triples(bounded_universe(2, 1))), 4u);
  EXPECT_THROW(oracle_max(enumerate_bad_triples(bounded_universe(4, 1))),
               std::out_of_range);
}

TEST(Oracle, MatchesBruteForceOverSubsets) {
  // Every subset of the 9-element universe, checked with string predicates.
  const auto strings = all_strings(2);
  std::size_t best = 0;
  for (unsigned mask = 0; mask < (1u << 9); ++mask) {
    std::vector<std::string> pick;
    for (unsigned i = 0; i < 9; ++i)
      if (mask >> i & 1)
        pick.push_back(strings[i]);
    if (pick.size() > best && naive_trifferent(pick))
      best = pick.size();
  }
  EXPECT_EQ(oracle_max(enumerate_bad_triples(full_universe(2))), best);
}

TEST(Search, UnrestrictedSmallLengths) {
  const std::size_t expected[] = {0, 3, 4, 6, 9};
  for (std::size_t n = 1; n <= 4; ++n) {
    auto cert = max_trifferent(n);
    EXPECT_EQ(cert.best_size, expected[n]) << n;
    EXPECT_EQ(cert.status, SearchCertificate::Status::optimal);
    EXPECT_EQ(cert.best_code.size(), cert.best_size);
    EXPECT_TRUE(verify_trifferent(cert.best_code).ok());
    if (n <= 3) {
      confirm_with_oracle(cert);
      EXPECT_TRUE(cert.oracle_checked);
      EXPECT_EQ(cert.oracle_value, cert.best_size);
    }
  }
  EXPECT_THROW(max_trifferent(5), std::out_of_range);
  EXPECT_THROW(max_trifferent(0), std::invalid_argument);
}

TEST(Search, BoundedTable) {
  struct Case {
    std::size_t n, r, value;
  };
  // Frozen from exhaustive runs; the oracle cross-check below re-derives
  // every entry whose universe fits the oracle cap.
  for (const Case c : {Case{2, 0, 2}, Case{2, 1, 4}, Case{2, 2, 1}, Case{3, 0, 2},
                       Case{3, 1, 6}, Case{3, 2, 4}, Case{3, 3, 1}, Case{4, 1, 8},
                       Case{4, 2, 6}, Case{4, 3, 4}, Case{4, 4, 1}, Case{5, 1, 10},
                       Case{5, 2, 10}, Case{5, 3, 6}, Case{5, 4, 4}, Case{6, 3, 10},
                       Case{6, 4, 8}, Case{6, 5, 4}}) {
    auto cert = max_r_bounded(c.n, c.r);
    EXPECT_EQ(cert.best_size, c.value) << c.n << "," << c.r;
    EXPECT_EQ(cert.best_code.r_bound(), c.r);
    EXPECT_TRUE(verify_trifferent(cert.best_code).ok());
    EXPECT_LE(max_two_location_multiplicity(cert.best_code), 2u);
    if (cert.universe_size <= kOracleDefaultCap) {
      confirm_with_oracle(cert);
      EXPECT_EQ(cert.oracle_value, cert.best_size) << c.n << "," << c.r;
    }
  }
}

TEST(Search, ZeroTwosGivesTwoWords) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto cert = max_r_bounded(n, 0);
    EXPECT_EQ(cert.best_size, 2u);
    EXPECT_TRUE(verify_trifferent(cert.best_code).ok());
  }
}

TEST(Search, PruningFlagsDoNotChangeResult) {
  struct Case {
    std::size_t n, r;
  };
  for (const Case c : {Case{3, 1}, Case{3, 2}, Case{4, 2}, Case{4, 3}, Case{5, 3}}) {
    const auto fast = max_r_bounded(c.n, c.r);
    for (int flags = 0; flags < 4; ++flags) {
      SearchConfig cfg;
      cfg.symmetry_breaking = flags & 1;
      cfg.group_bound = flags & 2;
      const auto other = max_r_bounded(c.n, c.r, cfg);
      EXPECT_EQ(other.best_size, fast.best_size);
      EXPECT_EQ(other.best_code, fast.best_code);
    }
  }
  for (std::size_t n = 1; n <= 3; ++n)
    EXPECT_EQ(max_trifferent(n, plain_config()).best_code,
              max_trifferent(n).best_code);
}

TEST(Search, DeterministicCertificates) {
  const auto a = max_r_bounded(4, 2).to_json();
  const auto b = max_r_bounded(4, 2).to_json();
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["status"], "optimal");
  EXPECT_EQ(a["best_size"], 6);
}

TEST(Search, ConfigHashTracksFlags) {
  SearchConfig off;
  off.group_bound = false;
  const auto a = max_r_bounded(3, 1);
  const auto b = max_r_bounded(3, 1, off);
  EXPECT_NE(a.config_hash(), b.config_hash());
  EXPECT_EQ(a.config_hash(), max_r_bounded(3, 1).config_hash());
}

TEST(Search, BudgetGivesLowerBound) {
  SearchConfig cfg;
  cfg.budget = 10;
  const auto cert = max_trifferent(4, cfg);
  EXPECT_EQ(cert.status, SearchCertificate::Status::lower_bound);
  EXPECT_LE(cert.best_size, 9u);
  EXPECT_TRUE(verify_trifferent(cert.best_code).ok());
  ExactTable t;
  record(t, cert);
  EXPECT_FALSE(t.t(4).has_value());
  record(t, max_trifferent(3));
  EXPECT_EQ(t.t(3), 6u);
}

TEST(Search, UniverseCap) {
  EXPECT_THROW(max_r_bounded(7, 2), std::out_of_range);
  SearchConfig cfg;
  cfg.max_universe = 10;
  EXPECT_THROW(max_r_bounded(4, 2, cfg), std::out_of_range);
  cfg.override_caps = true;
  EXPECT_EQ(max_r_bounded(4, 2, cfg).best_size, 6u);
}

TEST(Search, MonotoneInLength) {
  // Appending a fixed symbol keeps a code trifferent, so values never drop.
  std::size_t prev = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto v = max_trifferent(n).best_size;
    EXPECT_GE(v, prev);
    prev = v;
  }
  for (std::size_t n = 2; n <= 5; ++n)
    EXPECT_GE(max_r_bounded(n + 1, 1).best_size, max_r_bounded(n, 1).best_size);
}

TEST(Search, OneBoundedIsOptimal) {
  for (std::size_t n = 2; n <= 5; ++n)
    EXPECT_EQ(max_r_bounded(n, 1).best_size, one_bounded(n).size());
}
