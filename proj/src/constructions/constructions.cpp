#include "triff/constructions.hpp"

#include <stdexcept>

namespace triff {

Code one_bounded(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("one_bounded needs n >= 1");
  if (n == 1)
    return Code::from_strings({"2"});
  std::vector<Codeword> words;
  words.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    Codeword u(n), v(n);
    for (std::size_t j = 0; j < n; ++j) {
      u.set(j, j == i ? 2 : (i < j ? 1 : 0));
      v.set(j, j == i ? 2 : (i > j ? 1 : 0));
    }
    words.push_back(std::move(u));
    words.push_back(std::move(v));
  }
  return Code::bounded(n, std::move(words), 1);
}

Encoder::Encoder(const Code &base, std::size_t count) {
  if (count > base.size())
    throw std::invalid_argument("encoder needs " + std::to_string(count) +
                                " words, base has " +
                                std::to_string(base.size()));
  const auto r = base.r_bound();
  if (!r)
    throw std::invalid_argument("encoder base must be r-bounded");
  twos_ = *r;
  table_.assign(base.words().begin(),
                base.words().begin() + static_cast<std::ptrdiff_t>(count));
}

Code triple_construction(const AffinePlane &plane, const Code &base) {
  const std::size_t q = plane.order();
  if (base.size() < plane.line_count())
    throw std::invalid_argument(
        "base code has " + std::to_string(base.size()) + " words, need q^2+q = " +
        std::to_string(plane.line_count()));
  if (!base.r_bound())
    throw std::invalid_argument("base code is not r-bounded");
  if (!verify_trifferent(base).ok())
    throw std::invalid_argument("base code is not trifferent");

  const Encoder phi(base, q * q);
  const Encoder psi(base, plane.line_count());
  std::vector<Codeword> words;
  words.reserve(plane.flags().size());
  for (const Flag &f : plane.flags()) {
    const Codeword &theta = phi(plane.sigma(f.line, f.point));
    words.push_back(phi(f.point).concat(psi(f.line)).concat(theta));
  }
  return Code::bounded(3 * base.block_length(), std::move(words),
                       3 * *base.r_bound());
}

Code triple_construction(std::size_t q, const Code &base) {
  return triple_construction(affine_plane(q), base);
}

namespace {

std::size_t flag_count(std::size_t q) { return q * q * q + q * q; }

} // namespace

RecursiveConstruction recursive_construction(std::size_t t,
                                             std::size_t target_size,
                                             SigmaChoice sigma) {
  if (target_size == 0)
    throw std::invalid_argument("target size must be positive");
  if (t == 0) {
    // one_bounded(1) has a single word, so targets of 2 need n = 2.
    std::size_t n = (target_size + 1) / 2;
    if (target_size >= 2)
      n = std::max<std::size_t>(n, 2);
    RecursiveConstruction rc{one_bounded(n), 0, {}, n};
    return rc;
  }
  std::size_t q = 2;
  while (flag_count(q) < target_size)
    q = smallest_prime_at_least(q + 1);
  RecursiveConstruction inner =
      recursive_construction(t - 1, q * q + q, sigma);
  RecursiveConstruction rc{
      triple_construction(affine_plane(q, sigma), inner.code), t,
      std::move(inner.primes), inner.seed_length};
  rc.primes.push_back(q);
  return rc;
}

std::vector<std::string> describe(const RecursiveConstruction &rc,
                                  const SigmaChoice &sigma) {
  std::vector<std::string> out;
  out.push_back(" construction: " + std::string(rc.depth == 0 ? "one-bounded"
                                                              : "recursive"));
  out.push_back(" t=" + std::to_string(rc.depth));
  std::string primes = " q=";
  for (std::size_t i = 0; i < rc.primes.size(); ++i)
    primes += (i ? "," : "") + std::to_string(rc.primes[i]);
  if (!rc.primes.empty())
    out.push_back(primes + " (innermost first)");
  if (!rc.primes.empty())
    out.push_back(sigma.kind == SigmaChoice::Kind::cyclic
                      ? std::string(" sigma=cyclic")
                      : " sigma=random seed=" + std::to_string(sigma.seed));
  out.push_back(" base=one_bounded(" + std::to_string(rc.seed_length) + ")");
  out.push_back(" size=" + std::to_string(rc.code.size()));
  return out;
}

} // namespace triff
