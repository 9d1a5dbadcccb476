#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triff/codeword.hpp"

namespace triff {

/// A duplicate-free set of equal-length ternary words, kept sorted
/// lexicographically.
class Code {
public:
  /// Empty code of block length n.
  explicit Code(std::size_t n);

  /// Sorts the words. Throws std::invalid_argument on a length mismatch
  /// or a duplicate. The r-bound is inferred: set iff the code is
  /// non-empty and every word has the same number of twos.
  Code(std::size_t n, std::vector<Codeword> words);

  /// As above, but declares the r-bound explicitly (also for an empty
  /// code). Throws if some word does not have exactly r twos.
  static Code bounded(std::size_t n, std::vector<Codeword> words,
                      std::size_t r);

  static Code from_strings(const std::vector<std::string> &words);

  std::size_t block_length() const { return n_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const std::vector<Codeword> &words() const { return words_; }
  const Codeword &operator[](std::size_t i) const { return words_[i]; }
  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  std::optional<std::size_t> r_bound() const { return r_; }
  bool contains(const Codeword &w) const;

  bool operator==(const Code &other) const = default;

private:
  std::size_t n_;
  std::vector<Codeword> words_;
  std::optional<std::size_t> r_;
};

// ---------------------------------------------------------------------------
// Verification

using IndexTriple = std::array<std::size_t, 3>;

struct VerificationResult {
  enum class Status { trifferent, not_trifferent };

  Status status = Status::trifferent;
  /// Lexicographically smallest violating triple i < j < k.
  std::optional<IndexTriple> witness;

  bool ok() const { return status == Status::trifferent; }
};

/// Checks every triple. With workers > 1 the first index is split across
/// threads; the reported witness is the same for any worker count.
VerificationResult verify_trifferent(const Code &code, unsigned workers = 1);

/// Largest number of words sharing the same set of 2-locations. A
/// trifferent code never exceeds 2.
std::size_t max_two_location_multiplicity(const Code &code);

// ---------------------------------------------------------------------------
// Counting and shifts

/// Number of length-n ternary strings with exactly r twos: C(n,r)·2^(n−r).
/// Throws std::out_of_range if r > n or the value overflows 64 bits.
std::uint64_t count_A_r(std::size_t n, std::size_t r);

/// Binomial coefficient in 64-bit integers; throws std::overflow_error.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// {x + v : x ∈ C} with coordinatewise addition mod 3.
Code shift(const Code &code, const Codeword &v);

/// |(C + v) ∩ A_r| without materializing the shifted code.
std::size_t shifted_count_with_twos(const Code &code, const Codeword &v,
                                    std::size_t r);

struct ShiftSample {
  std::uint64_t trials = 0;
  double mean = 0.0;
  std::size_t max = 0;
  /// |A_r|·|C|/3^n.
  double exact_expectation = 0.0;
};

/// Monte-Carlo estimate over `trials` uniform shifts. The observed max is a
/// certified lower bound on T_b(n, r) when C is trifferent.
ShiftSample shift_density_sample(const Code &code, std::size_t r,
                                 std::uint64_t trials, std::uint64_t seed);

struct ShiftExhaustive {
  /// Sum over all 3^n shifts of |(C+v) ∩ A_r|.
  std::uint64_t total = 0;
  std::uint64_t shifts = 0;
  std::size_t max = 0;
  /// count_A_r(n, r)·|C|; equals total for every code.
  std::uint64_t expected_total = 0;

  double mean() const { return static_cast<double>(total) / static_cast<double>(shifts); }
};

/// Enumerates every shift; n is capped at 16.
ShiftExhaustive shift_density_exhaustive(const Code &code, std::size_t r);

// ---------------------------------------------------------------------------
// Pruning and projection

struct PruneStep {
  std::size_t coordinate = 0;
  int removed_symbol = 0;
  std::array<std::size_t, 3> symbol_counts{};
};

struct PruneChain {
  std::vector<Code> codes; ///< C_0 = input, ..., C_n.
  std::vector<PruneStep> steps;
};

/// Iteratively deletes the codewords carrying a least-occurring symbol at
/// each coordinate (ties go to the smallest symbol). Throws
/// std::invalid_argument if the final code has more than two words, which
/// proves the input was not trifferent.
PruneChain prune(const Code &code);

/// Keeps the words with a 2 at coordinate i and deletes that coordinate.
/// Requires an r-bounded input with r ≥ 1 and block length ≥ 2; the output
/// is declared (r−1)-bounded.
Code project(const Code &code, std::size_t i);

/// Number of words with a 2 at each coordinate.
std::vector<std::size_t> two_counts_per_coordinate(const Code &code);

/// Coordinate maximizing the projected size (smallest on ties).
std::size_t best_project(const Code &code);

} // namespace triff
