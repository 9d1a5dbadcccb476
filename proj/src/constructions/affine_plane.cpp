#include "triff/affine_plane.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace triff {

bool is_prime(std::uint64_t q) {
  if (q < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0)
      return false;
  return true;
}

std::uint64_t smallest_prime_at_least(std::uint64_t lo) {
  std::uint64_t q = std::max<std::uint64_t>(lo, 2);
  while (!is_prime(q))
    ++q;
  return q;
}

namespace {

std::vector<std::size_t> random_derangement(std::size_t q, std::mt19937_64 &rng) {
  std::vector<std::size_t> perm(q);
  for (;;) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    bool fixed = false;
    for (std::size_t k = 0; k < q; ++k)
      fixed |= perm[k] == k;
    if (!fixed)
      return perm;
  }
}

} // namespace

AffinePlane::AffinePlane(std::size_t q, SigmaChoice sigma)
    : q_(q), sigma_choice_(sigma) {
  if (!is_prime(q))
    throw std::invalid_argument("affine plane order must be prime, got " +
                                std::to_string(q));
  point_lines_.resize(q * q);
  for (std::size_t m = 0; m < q; ++m)
    for (std::size_t c = 0; c < q; ++c) {
      lines_.push_back({false, m, c});
      std::vector<std::size_t> pts;
      for (std::size_t x = 0; x < q; ++x)
        pts.push_back(point_index({x, (m * x + c) % q}));
      line_points_.push_back(std::move(pts));
    }
  for (std::size_t c = 0; c < q; ++c) {
    lines_.push_back({true, 0, c});
    std::vector<std::size_t> pts;
    for (std::size_t y = 0; y < q; ++y)
      pts.push_back(point_index({c, y}));
    line_points_.push_back(std::move(pts));
  }

  std::mt19937_64 rng(sigma.seed);
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    for (std::size_t p : line_points_[l]) {
      point_lines_[p].push_back(l);
      flags_.push_back({p, l});
    }
    if (sigma.kind == SigmaChoice::Kind::cyclic) {
      std::vector<std::size_t> perm(q);
      for (std::size_t k = 0; k < q; ++k)
        perm[k] = (k + 1) % q;
      sigma_.push_back(std::move(perm));
    } else {
      sigma_.push_back(random_derangement(q, rng));
    }
  }
}

std::optional<std::size_t> AffinePlane::line_index(const Line &line) const {
  if (line.intercept >= q_ || (!line.vertical && line.slope >= q_))
    return std::nullopt;
  if (line.vertical)
    return q_ * q_ + line.intercept;
  return line.slope * q_ + line.intercept;
}

bool AffinePlane::incident(std::size_t p, std::size_t l) const {
  const auto &pts = points_on(l);
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

std::size_t AffinePlane::sigma(std::size_t l, std::size_t p) const {
  const auto &pts = points_on(l);
  auto it = std::find(pts.begin(), pts.end(), p);
  if (it == pts.end())
    throw std::invalid_argument("point is not on the line");
  return pts[sigma_[l][static_cast<std::size_t>(it - pts.begin())]];
}

AffinePlane affine_plane(std::size_t q, SigmaChoice sigma) {
  return AffinePlane(q, sigma);
}

std::vector<std::pair<std::size_t, std::size_t>>
fpf_permutation(const AffinePlane &plane, std::size_t l) {
  if (l >= plane.line_count())
    throw std::out_of_range("line index out of range");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t p : plane.points_on(l))
    out.emplace_back(p, plane.sigma(l, p));
  return out;
}

} // namespace triff
