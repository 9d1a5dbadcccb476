#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "triff/bounds.hpp"
#include "triff/code.hpp"

namespace triff {

struct SearchConfig {
  /// Node limit; the search stops with a lower bound once it is exceeded.
  std::uint64_t budget = 2'000'000'000;
  /// Fix the first codeword to the smallest universe element.
  bool symmetry_breaking = true;
  /// Add the "at most two words per 2-location set" cap to the node bound.
  bool group_bound = true;
  /// Largest unrestricted block length searched without override.
  std::size_t max_length = 4;
  /// Largest r-bounded universe searched without override.
  std::size_t max_universe = 256;
  bool override_caps = false;
};

struct SearchCertificate {
  enum class Status { optimal, lower_bound };

  std::size_t n = 0;
  std::optional<std::size_t> r; ///< Unset for unrestricted search.
  std::size_t best_size = 0;
  Code best_code{1};
  Status status = Status::optimal;
  std::uint64_t nodes_explored = 0;
  bool oracle_checked = false;
  std::optional<std::size_t> oracle_value;
  std::size_t universe_size = 0;
  SearchConfig config;

  /// Canonical text of everything that determines the result.
  std::string config_string() const;
  std::uint64_t config_hash() const;

  nlohmann::json to_json() const;
};

/// All length-n ternary strings in lexicographic order.
std::vector<Codeword> full_universe(std::size_t n);
/// All length-n strings with exactly r twos, in lexicographic order.
std::vector<Codeword> bounded_universe(std::size_t n, std::size_t r);

/// Maximum trifferent code of block length n by branch and bound over the
/// lexicographically ordered universe. The reported code is the
/// lexicographically smallest optimum, independent of the bound flags.
SearchCertificate max_trifferent(std::size_t n, const SearchConfig &config = {});

/// Maximum r-bounded trifferent code of block length n.
SearchCertificate max_r_bounded(std::size_t n, std::size_t r,
                                const SearchConfig &config = {});

/// Candidate words and every 3-subset that is not trifferent.
struct BadTripleOracleInstance {
  std::vector<Codeword> universe;
  std::vector<std::array<std::size_t, 3>> bad_triples; ///< i < j < k.
};

/// Uses the symbol-by-symbol predicate, not the bitplane kernel.
BadTripleOracleInstance enumerate_bad_triples(std::vector<Codeword> universe);

inline constexpr std::size_t kOracleDefaultCap = 30;

/// Maximum independent set of the bad-triple hypergraph by plain
/// include/exclude recursion. Throws std::out_of_range above `cap`.
std::size_t oracle_max(const BadTripleOracleInstance &instance,
                       std::size_t cap = kOracleDefaultCap);

/// Runs the oracle on the certificate's universe and records the result.
void confirm_with_oracle(SearchCertificate &cert,
                         std::size_t cap = kOracleDefaultCap);

/// Adds an optimal certificate's value to the table; ignores lower bounds.
void record(ExactTable &table, const SearchCertificate &cert);

} // namespace triff
