#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace triff {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t n) {
  return (n + kWordBits - 1) / kWordBits;
}

/// A ternary string stored as three disjoint bitplanes.
///
/// Bit i of plane s is set iff coordinate i (0-based) carries symbol s.
/// Coordinates are displayed and compared left to right, so coordinate 0
/// is the most significant position for lexicographic order.
class Codeword {
public:
  Codeword() = default;

  /// All-zeros word of length n.
  explicit Codeword(std::size_t n);

  /// Parses a string over '0','1','2'. Throws std::invalid_argument on
  /// foreign characters or an empty string.
  static Codeword from_string(std::string_view text);
  static Codeword from_symbols(std::span<const int> symbols);

  std::size_t length() const { return n_; }
  std::size_t word_count() const { return words_; }

  int at(std::size_t i) const;
  void set(std::size_t i, int symbol);

  std::span<const Word> plane(int symbol) const {
    return {planes_.data() + static_cast<std::size_t>(symbol) * words_, words_};
  }

  std::size_t count(int symbol) const;
  std::size_t count_twos() const { return count(2); }

  /// Coordinates holding symbol 2, ascending.
  std::vector<std::size_t> two_locations() const;

  std::string to_string() const;

  /// Coordinatewise sum modulo 3.
  Codeword operator+(const Codeword &other) const;

  /// Copy with coordinate i removed.
  Codeword without(std::size_t i) const;

  /// Concatenation this ‖ other.
  Codeword concat(const Codeword &other) const;

  bool operator==(const Codeword &other) const = default;
  /// Lexicographic order of the symbol strings (shorter strings first).
  std::strong_ordering operator<=>(const Codeword &other) const;

  /// Checks the three-plane partition invariant.
  bool well_formed() const;

private:
  Word *plane_mut(int symbol) {
    return planes_.data() + static_cast<std::size_t>(symbol) * words_;
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> planes_;
};

/// True iff some coordinate carries {0,1,2} across the three words.
/// Throws std::invalid_argument on length mismatch or repeated arguments.
bool is_trifferent_triple(const Codeword &x, const Codeword &y,
                          const Codeword &z);

/// Same predicate evaluated one symbol at a time. Used to cross-check
/// the bitplane form.
bool is_trifferent_triple_naive(const Codeword &x, const Codeword &y,
                                const Codeword &z);

/// For a pair (x, y), the per-symbol masks of coordinates where x and y
/// differ and the missing symbol is s. A third word z completes a
/// trifferent coordinate iff it hits one of these masks in plane s.
struct PairMasks {
  std::vector<Word> need[3];

  PairMasks() = default;
  PairMasks(const Codeword &x, const Codeword &y);

  bool completed_by(const Codeword &z) const;
};

} // namespace triff
