#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace triff {

bool is_prime(std::uint64_t q);
std::uint64_t smallest_prime_at_least(std::uint64_t lo);

struct Point {
  std::size_t x = 0;
  std::size_t y = 0;
  bool operator==(const Point &) const = default;
};

/// y = slope·x + intercept, or x = intercept when vertical.
struct Line {
  bool vertical = false;
  std::size_t slope = 0;
  std::size_t intercept = 0;
  bool operator==(const Line &) const = default;
};

struct Flag {
  std::size_t point = 0;
  std::size_t line = 0;
};

/// How the per-line fixed-point-free permutations are chosen.
struct SigmaChoice {
  enum class Kind { cyclic, random };
  Kind kind = Kind::cyclic;
  std::uint64_t seed = 0;
};

/// Points, lines and flags of the affine plane over F_q (q prime).
///
/// Points are enumerated row-major (x, then y); lines by (slope,
/// intercept) lexicographically, followed by the verticals by intercept.
/// The points of a line are listed by x (by y for verticals), and flags
/// are ordered by line, then by position on the line.
class AffinePlane {
public:
  explicit AffinePlane(std::size_t q, SigmaChoice sigma = {});

  std::size_t order() const { return q_; }
  std::size_t point_count() const { return q_ * q_; }
  std::size_t line_count() const { return q_ * q_ + q_; }

  Point point(std::size_t p) const { return {p / q_, p % q_}; }
  std::size_t point_index(Point pt) const { return pt.x * q_ + pt.y; }
  const Line &line(std::size_t l) const { return lines_.at(l); }
  std::optional<std::size_t> line_index(const Line &line) const;

  /// Points on line l in canonical order.
  const std::vector<std::size_t> &points_on(std::size_t l) const {
    return line_points_.at(l);
  }
  const std::vector<std::size_t> &lines_through(std::size_t p) const {
    return point_lines_.at(p);
  }
  bool incident(std::size_t p, std::size_t l) const;

  const std::vector<Flag> &flags() const { return flags_; }

  /// σ_l(p) for a point p on line l. Throws if p is not on l.
  std::size_t sigma(std::size_t l, std::size_t p) const;

  const SigmaChoice &sigma_choice() const { return sigma_choice_; }

private:
  std::size_t q_;
  SigmaChoice sigma_choice_;
  std::vector<Line> lines_;
  std::vector<std::vector<std::size_t>> line_points_;
  std::vector<std::vector<std::size_t>> point_lines_;
  // sigma_[l][k]: position on l of the image of the k-th point of l.
  std::vector<std::vector<std::size_t>> sigma_;
  std::vector<Flag> flags_;
};

/// Throws std::invalid_argument unless q is a prime.
AffinePlane affine_plane(std::size_t q, SigmaChoice sigma = {});

/// The permutation of the points of line l as (point, image) pairs, in the
/// line's canonical point order. Throws std::out_of_range for a bad line.
std::vector<std::pair<std::size_t, std::size_t>>
fpf_permutation(const AffinePlane &plane, std::size_t l);

} // namespace triff
