#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "triff/affine_plane.hpp"
#include "triff/code.hpp"

namespace triff {

/// The 2n words u_i, v_i with a single 2 at coordinate i, followed by 1s
/// (u_i) or preceded by 1s (v_i), zeros elsewhere. For n = 1 only the word
/// "2" exists, so the result has size 1.
Code one_bounded(std::size_t n);

/// Injective map from an index set into the words of a verified r-bounded
/// trifferent code.
class Encoder {
public:
  /// Uses the first `count` words of `base` in sorted order.
  Encoder(const Code &base, std::size_t count);

  const Codeword &operator()(std::size_t index) const { return table_.at(index); }
  std::size_t size() const { return table_.size(); }
  std::size_t twos() const { return twos_; }

private:
  std::vector<Codeword> table_;
  std::size_t twos_;
};

/// Flag code over the affine plane of order q: each flag (p, l) becomes
/// φ(p) ‖ ψ(l) ‖ φ(σ_l(p)). The result has q³ + q² words, block length
/// 3n and exactly 3r twos per word.
///
/// Throws std::invalid_argument when base is not r-bounded, not
/// trifferent, or has fewer than q² + q words.
Code triple_construction(const AffinePlane &plane, const Code &base);
Code triple_construction(std::size_t q, const Code &base);

struct RecursiveConstruction {
  Code code;
  std::size_t depth = 0;
  /// Field order of each layer, innermost first.
  std::vector<std::size_t> primes;
  /// Block length of the one-bounded seed code.
  std::size_t seed_length = 0;
};

/// A 3^t-bounded trifferent code with at least target_size words. Depth 0
/// is a one-bounded code; each further layer picks the smallest prime q
/// with q³ + q² ≥ target and recurses for a base of size q² + q.
RecursiveConstruction recursive_construction(std::size_t t,
                                             std::size_t target_size,
                                             SigmaChoice sigma = {});

/// '#'-comment metadata describing a construction.
std::vector<std::string> describe(const RecursiveConstruction &rc,
                                  const SigmaChoice &sigma);

} // namespace triff
