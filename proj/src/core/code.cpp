#include "triff/code.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace triff {

Code::Code(std::size_t n) : n_(n) {
  if (n == 0)
    throw std::invalid_argument("block length must be positive");
}

Code::Code(std::size_t n, std::vector<Codeword> words)
    : n_(n), words_(std::move(words)) {
  if (n == 0)
    throw std::invalid_argument("block length must be positive");
  for (const auto &w : words_)
    if (w.length() != n_)
      throw std::invalid_argument("codeword " + w.to_string() +
                                  " does not have block length " +
                                  std::to_string(n_));
  std::sort(words_.begin(), words_.end());
  auto dup = std::adjacent_find(words_.begin(), words_.end());
  if (dup != words_.end())
    throw std::invalid_argument("duplicate codeword " + dup->to_string());
  if (!words_.empty()) {
    const std::size_t twos = words_.front().count_twos();
    if (std::all_of(words_.begin(), words_.end(),
                    [&](const Codeword &w) { return w.count_twos() == twos; }))
      r_ = twos;
  }
}

Code Code::bounded(std::size_t n, std::vector<Codeword> words, std::size_t r) {
  Code c(n, std::move(words));
  if (!c.empty() && c.r_ != r)
    throw std::invalid_argument("code is not " + std::to_string(r) +
                                "-bounded");
  c.r_ = r;
  return c;
}

Code Code::from_strings(const std::vector<std::string> &words) {
  if (words.empty())
    throw std::invalid_argument("from_strings needs at least one word");
  std::vector<Codeword> cw;
  cw.reserve(words.size());
  for (const auto &s : words)
    cw.push_back(Codeword::from_string(s));
  const std::size_t n = cw.front().length();
  return Code(n, std::move(cw));
}

bool Code::contains(const Codeword &w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

namespace {

// First violating (j, k) for a fixed i, if any.
std::optional<IndexTriple> first_violation_at(const Code &code, std::size_t i) {
  const auto &w = code.words();
  for (std::size_t j = i + 1; j < w.size(); ++j) {
    const PairMasks masks(w[i], w[j]);
    for (std::size_t k = j + 1; k < w.size(); ++k)
      if (!masks.completed_by(w[k]))
        return IndexTriple{i, j, k};
  }
  return std::nullopt;
}

} // namespace

VerificationResult verify_trifferent(const Code &code, unsigned workers) {
  VerificationResult result;
  const std::size_t m = code.size();
  if (m < 3)
    return result;

  std::optional<IndexTriple> best;
  if (workers <= 1) {
    for (std::size_t i = 0; i + 2 < m && !best; ++i)
      best = first_violation_at(code, i);
  } else {
    // Workers claim first indices in increasing order and stop once a
    // smaller first index is known to be violating.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best_i{std::numeric_limits<std::size_t>::max()};
    std::mutex mu;
    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i + 2 >= m || i > best_i.load())
          return;
        if (auto v = first_violation_at(code, i)) {
          std::lock_guard lock(mu);
          if (!best || *v < *best) {
            best = v;
            best_i.store((*v)[0]);
          }
        }
      }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back(work);
  }
  if (best) {
    result.status = VerificationResult::Status::not_trifferent;
    result.witness = best;
  }
  return result;
}

std::size_t max_two_location_multiplicity(const Code &code) {
  std::map<std::vector<std::size_t>, std::size_t> groups;
  std::size_t best = 0;
  for (const auto &w : code)
    best = std::max(best, ++groups[w.two_locations()]);
  return best;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t count_A_r(std::size_t n, std::size_t r) {
  if (r > n)
    throw std::out_of_range("count_A_r: r must lie in [0, n]");
  if (n - r >= 64)
    throw std::overflow_error("count_A_r overflows 64 bits");
  const unsigned __int128 v =
      static_cast<unsigned __int128>(binomial(n, r)) << (n - r);
  if (v > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("count_A_r overflows 64 bits");
  return static_cast<std::uint64_t>(v);
}

Code shift(const Code &code, const Codeword &v) {
  if (v.length() != code.block_length())
    throw std::invalid_argument("shift vector length mismatch");
  std::vector<Codeword> out;
  out.reserve(code.size());
  for (const auto &x : code)
    out.push_back(x + v);
  return Code(code.block_length(), std::move(out));
}

std::size_t shifted_count_with_twos(const Code &code, const Codeword &v,
                                    std::size_t r) {
  if (v.length() != code.block_length())
    throw std::invalid_argument("shift vector length mismatch");
  std::size_t hits = 0;
  const std::size_t words = v.word_count();
  for (const auto &x : code) {
    std::size_t twos = 0;
    for (std::size_t k = 0; k < words; ++k) {
      // (x + v)(i) = 2 for (x, v) ∈ {(2,0), (1,1), (0,2)}.
      const Word t = (x.plane(2)[k] & v.plane(0)[k]) |
                     (x.plane(1)[k] & v.plane(1)[k]) |
                     (x.plane(0)[k] & v.plane(2)[k]);
      twos += static_cast<std::size_t>(std::popcount(t));
    }
    hits += twos == r;
  }
  return hits;
}

namespace {

void check_shift_args(const Code &code, std::size_t r) {
  if (r > code.block_length())
    throw std::out_of_range("r must lie in [0, n]");
}

double pow3(std::size_t n) {
  double p = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    p *= 3.0;
  return p;
}

} // namespace

ShiftSample shift_density_sample(const Code &code, std::size_t r,
                                 std::uint64_t trials, std::uint64_t seed) {
  check_shift_args(code, r);
  if (trials == 0)
    throw std::invalid_argument("trials must be positive");
  const std::size_t n = code.block_length();
  ShiftSample s;
  s.trials = trials;
  s.exact_expectation = static_cast<double>(count_A_r(n, r)) *
                        static_cast<double>(code.size()) / pow3(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> symbol(0, 2);
  Codeword v(n);
  double sum = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (std::size_t i = 0; i < n; ++i)
      v.set(i, symbol(rng));
    const std::size_t hits = shifted_count_with_twos(code, v, r);
    sum += static_cast<double>(hits);
    s.max = std::max(s.max, hits);
  }
  s.mean = sum / static_cast<double>(trials);
  return s;
}

ShiftExhaustive shift_density_exhaustive(const Code &code, std::size_t r) {
  check_shift_args(code, r);
  const std::size_t n = code.block_length();
  if (n > 16)
    throw std::out_of_range("exhaustive shift enumeration is capped at n = 16");
  ShiftExhaustive e;
  e.expected_total = count_A_r(n, r) * code.size();
  std::vector<int> digits(n, 0);
  Codeword v(n);
  for (;;) {
    const std::size_t hits = shifted_count_with_twos(code, v, r);
    e.total += hits;
    e.max = std::max(e.max, hits);
    ++e.shifts;
    // Odometer over {0,1,2}^n.
    std::size_t i = 0;
    while (i < n && digits[i] == 2) {
      digits[i] = 0;
      v.set(i, 0);
      ++i;
    }
    if (i == n)
      break;
    v.set(i, ++digits[i]);
  }
  return e;
}

PruneChain prune(const Code &code) {
  PruneChain chain;
  chain.codes.push_back(code);
  const std::size_t n = code.block_length();
  for (std::size_t k = 0; k < n; ++k) {
    const Code &prev = chain.codes.back();
    PruneStep step;
    step.coordinate = k;
    for (const auto &w : prev)
      ++step.symbol_counts[static_cast<std::size_t>(w.at(k))];
    step.removed_symbol = static_cast<int>(
        std::min_element(step.symbol_counts.begin(), step.symbol_counts.end()) -
        step.symbol_counts.begin());
    std::vector<Codeword> kept;
    for (const auto &w : prev)
      if (w.at(k) != step.removed_symbol)
        kept.push_back(w);
    chain.steps.push_back(step);
    chain.codes.emplace_back(n, std::move(kept));
  }
  if (chain.codes.back().size() > 2)
    throw std::invalid_argument(
        "pruning ended with " + std::to_string(chain.codes.back().size()) +
        " codewords; the input is not trifferent");
  return chain;
}

std::vector<std::size_t> two_counts_per_coordinate(const Code &code) {
  std::vector<std::size_t> counts(code.block_length(), 0);
  for (const auto &w : code)
    for (std::size_t i : w.two_locations())
      ++counts[i];
  return counts;
}

std::size_t best_project(const Code &code) {
  const auto counts = two_counts_per_coordinate(code);
  return static_cast<std::size_t>(
      std::max_element(counts.begin(), counts.end()) - counts.begin());
}

Code project(const Code &code, std::size_t i) {
  const std::size_t n = code.block_length();
  if (i >= n)
    throw std::out_of_range("projection coordinate out of range");
  if (n < 2)
    throw std::invalid_argument("projection needs block length at least 2");
  const auto r = code.r_bound();
  if (!r)
    throw std::invalid_argument("projection needs an r-bounded code");
  if (*r == 0)
    throw std::invalid_argument("projection needs r >= 1");
  std::vector<Codeword> kept;
  for (const auto &w : code)
    if (w.at(i) == 2)
      kept.push_back(w.without(i));
  return Code::bounded(n - 1, std::move(kept), *r - 1);
}

} // namespace triff
