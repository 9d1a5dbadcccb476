#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "triff/code.hpp"

namespace triff {

/// t of the forbidden K_{5,t} in the r = 3 derived graph.
inline constexpr std::uint64_t kR3ForbiddenRight = std::uint64_t{1} << 21;

/// (t−1)^{1/s}·(u−s+1)·v^{1−1/s} + (s−1)·v, an upper bound on the number
/// of edges of a u×v bipartite graph without K_{s,t} (s on the u side).
/// The bound is attained when s = 1. Throws std::invalid_argument unless
/// u ≥ s ≥ 1, v ≥ 1 and t ≥ 1.
double zarankiewicz_bound(double u, double v, std::uint64_t s, std::uint64_t t);

/// 2·(3/2)^n.
double elias_bound(std::size_t n);
double log2_elias_bound(std::size_t n);

/// 0.6937·(3/2)^n, only for n ≥ 10.
inline constexpr double kKurzConstant = 0.6937;
inline constexpr std::size_t kKurzMinLength = 10;
std::optional<double> kurz_bound(std::size_t n);

/// log2 of C(n, r), accurate for small r and any n.
double log2_binomial(std::size_t n, std::size_t r);

enum class TbSource { zero, trivial, kst, one_bounded };

struct TbUpper {
  double value = 0.0;
  TbSource source = TbSource::trivial;
};

/// Upper bound on T_b(n, r) for r ∈ {0,1,2,3}:
///   r = 0: 2;  r = 1: 2n (1 when n = 1);
///   r = 2: min(2·C(n,2), 4·z(⌈n/2⌉, ⌊n/2⌋; 3, 9));
///   r = 3: min(2·C(n,3), 2·z(n, C(n,2); 5, 2^21)).
/// Returns 0 when n < r. Throws std::invalid_argument for r > 3 or n = 0.
TbUpper tb_upper_detail(std::size_t n, std::size_t r);
double tb_upper(std::size_t n, std::size_t r);

/// 2^{r−n}·T_b/C(n, r). Throws unless 0 ≤ r ≤ n and tb > 0.
double rho_b(std::size_t n, std::size_t r, double tb_value);

/// rho_b·3^n: an upper bound on T(n) when tb_value ≥ T_b(n, r).
double transfer_bound(std::size_t n, std::size_t r, double tb_value);
double log2_transfer_bound(std::size_t n, std::size_t r, double tb_value);

/// log2(transfer_bound / elias_bound) = r − 1 + log2 T_b − log2 C(n, r).
/// Free of the (3/2)^n factor, so it stays exact for huge n.
double log2_transfer_over_elias(std::size_t n, std::size_t r, double tb_value);

/// True iff T · C(n,r) · 2^{n−r} ≤ T_b · 3^n in exact integer arithmetic.
/// Throws std::overflow_error when the products do not fit 128 bits.
bool transfer_holds_exactly(std::size_t n, std::size_t r, std::uint64_t t_value,
                            std::uint64_t tb_value);

enum class ValueKind { exact, lower_bound, upper_bound };

struct DeficitEstimate {
  std::size_t r = 0;
  std::size_t n = 0;
  double tb_value = 0.0;
  ValueKind tb_kind = ValueKind::exact;
  /// r − log T_b / log n.
  double delta = 0.0;

  /// A lower bound on T_b gives an upper bound on the deficit and vice versa.
  ValueKind delta_kind() const;
};

DeficitEstimate deficit(std::size_t n, std::size_t r, double tb_value,
                        ValueKind kind = ValueKind::exact);

/// α = 1 − log_3 2.
double deficit_exponent();

/// r − r^α for r a power of 3; throws std::invalid_argument otherwise.
double deficit_upper(std::uint64_t r);

/// (1/n)·log2(|C|/2), or nullopt when |C| < 3.
std::optional<double> rate(const Code &code);

// ---------------------------------------------------------------------------
// Exact values table

/// Exact T(n) and T_b(n, r) values certified by search.
struct ExactTable {
  std::map<std::size_t, std::uint64_t> unrestricted;
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> bounded;

  std::optional<std::uint64_t> t(std::size_t n) const;
  std::optional<std::uint64_t> tb(std::size_t n, std::size_t r) const;

  /// Adds a value; throws std::invalid_argument on a conflicting entry.
  void set_t(std::size_t n, std::uint64_t value);
  void set_tb(std::size_t n, std::size_t r, std::uint64_t value);
  void merge(const ExactTable &other);

  /// {"schema": 1, "T": [{"n","value"}], "Tb": [{"n","r","value"}]}
  nlohmann::json to_json() const;
  static ExactTable from_json(const nlohmann::json &j);
};

// ---------------------------------------------------------------------------
// Reports

struct BoundEntry {
  std::string name;
  /// Unset when the value is not applicable or overflows a double.
  std::optional<double> value;
  std::optional<double> log2_value;
  bool valid = false;
  std::string validity;
  std::string provenance;
};

struct RateEntry {
  std::string name;
  std::size_t block_length = 0;
  std::size_t size = 0;
  std::optional<double> rate;
};

struct CrossoverPoint {
  double n = 0.0;
  double log2_ratio = 0.0; ///< log2(KST-r3 transfer / Elias).
  bool kst_active = false;
};

struct Crossover {
  std::vector<CrossoverPoint> grid;
  /// Smallest grid point from which the KST-r3 transfer stays strictly
  /// below Elias on the rest of the grid.
  std::optional<double> grid_n0;
  /// Smallest integer n with ratio < 1, by bisection below grid_n0.
  std::optional<std::uint64_t> exact_n0;
};

/// Log-spaced grid: `per_decade` points per decade from 10 to max_n.
std::vector<std::uint64_t> log_grid(std::uint64_t max_n, unsigned per_decade);

/// log2(KST-r3 transfer / Elias) at block length n.
double log2_kst_r3_ratio(std::uint64_t n);

Crossover kst_r3_crossover(std::uint64_t max_n = 1'000'000'000,
                           unsigned per_decade = 10);

struct BoundReport {
  std::size_t n = 0;
  std::vector<BoundEntry> entries;
  std::string best;
  std::vector<RateEntry> rates;
  Crossover crossover;

  const BoundEntry *find(const std::string &name) const;
  const BoundEntry &best_entry() const;

  nlohmann::json to_json() const;
  std::string to_table() const;
};

/// Elias, Kurz, the KST r = 2 and r = 3 transfers, and one transfer per
/// exact T_b(n, r) in the table. Ties for the minimum go to the later
/// entry, so exact-search transfers win over formula bounds of equal value.
BoundReport bound_report(std::size_t n, const ExactTable &table = {},
                         const std::vector<std::pair<std::string, Code>> &codes = {});

} // namespace triff
