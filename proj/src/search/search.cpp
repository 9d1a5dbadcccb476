#include "triff/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

#include "triff/triff_io.hpp"

namespace triff {

std::vector<Codeword> full_universe(std::size_t n) {
  if (n == 0 || n > 20)
    throw std::out_of_range("full universe needs 1 <= n <= 20");
  std::vector<Codeword> out;
  std::vector<int> digits(n, 0);
  for (;;) {
    out.push_back(Codeword::from_symbols(digits));
    // Odometer with the last coordinate fastest gives lexicographic order.
    std::size_t i = n;
    while (i > 0 && digits[i - 1] == 2)
      digits[--i] = 0;
    if (i == 0)
      break;
    ++digits[i - 1];
  }
  return out;
}

std::vector<Codeword> bounded_universe(std::size_t n, std::size_t r) {
  if (r > n)
    throw std::out_of_range("bounded universe needs r <= n");
  const std::uint64_t total = count_A_r(n, r);
  if (total > (std::uint64_t{1} << 24))
    throw std::out_of_range("bounded universe too large to enumerate");
  std::vector<Codeword> out;
  out.reserve(total);
  std::vector<bool> twos(n, false);
  std::fill(twos.begin(), twos.begin() + static_cast<std::ptrdiff_t>(r), true);
  do {
    const std::size_t free = n - r;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free); ++bits) {
      Codeword w(n);
      std::size_t f = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (twos[i])
          w.set(i, 2);
        else
          w.set(i, static_cast<int>((bits >> f++) & 1));
      }
      out.push_back(std::move(w));
    }
  } while (std::prev_permutation(twos.begin(), twos.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::string SearchCertificate::config_string() const {
  std::ostringstream os;
  os << "n=" << n << ";r=" << (r ? std::to_string(*r) : "none")
     << ";budget=" << config.budget
     << ";symmetry=" << (config.symmetry_breaking ? 1 : 0)
     << ";group_bound=" << (config.group_bound ? 1 : 0)
     << ";universe=" << universe_size;
  return os.str();
}

std::uint64_t SearchCertificate::config_hash() const {
  // FNV-1a, 64 bit.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : config_string()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

nlohmann::json SearchCertificate::to_json() const {
  std::ostringstream hash;
  hash << std::hex << config_hash();
  nlohmann::json j;
  j["schema"] = 1;
  j["n"] = n;
  j["r"] = r ? nlohmann::json(*r) : nlohmann::json(nullptr);
  j["best_size"] = best_size;
  j["status"] = status == Status::optimal ? "optimal" : "lower-bound";
  j["nodes_explored"] = nodes_explored;
  j["oracle_checked"] = oracle_checked;
  j["oracle_value"] =
      oracle_value ? nlohmann::json(*oracle_value) : nlohmann::json(nullptr);
  j["universe_size"] = universe_size;
  j["config"] = {{"budget", config.budget},
                 {"symmetry_breaking", config.symmetry_breaking},
                 {"group_bound", config.group_bound}};
  j["config_hash"] = hash.str();
  j["best_code"] = format_triff({best_code, {}});
  return j;
}

namespace {

using Bits = std::vector<Word>;

std::size_t popcount(const Bits &b) {
  std::size_t c = 0;
  for (Word w : b)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

class BranchAndBound {
public:
  BranchAndBound(const std::vector<Codeword> &universe, const SearchConfig &cfg)
      : u_(universe), cfg_(cfg), size_(universe.size()), words_(words_for(size_)) {
    // compat_[i*size+j] bit k: (u_i, u_j, u_k) is trifferent.
    compat_.assign(size_ * size_ * words_, 0);
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = i + 1; j < size_; ++j) {
        const PairMasks masks(u_[i], u_[j]);
        for (std::size_t k = 0; k < size_; ++k)
          if (k != i && k != j && masks.completed_by(u_[k])) {
            compat_[(i * size_ + j) * words_ + k / kWordBits] |=
                Word{1} << (k % kWordBits);
          }
        std::copy_n(&compat_[(i * size_ + j) * words_], words_,
                    &compat_[(j * size_ + i) * words_]);
      }
    // Groups of words sharing a 2-location set.
    std::map<std::vector<std::size_t>, std::size_t> ids;
    group_of_.resize(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      auto [it, inserted] = ids.try_emplace(u_[i].two_locations(), ids.size());
      if (inserted)
        group_masks_.emplace_back(words_, 0);
      group_of_[i] = it->second;
      group_masks_[it->second][i / kWordBits] |= Word{1} << (i % kWordBits);
    }
    group_used_.assign(group_masks_.size(), 0);
  }

  void run() {
    Bits cand(words_, 0);
    for (std::size_t i = 0; i < size_; ++i)
      cand[i / kWordBits] |= Word{1} << (i % kWordBits);
    if (cfg_.symmetry_breaking && size_ > 0) {
      // Only the branch containing universe element 0.
      ++nodes_;
      Bits next = cand;
      next[0] &= ~Word{1};
      chosen_.push_back(0);
      ++group_used_[group_of_[0]];
      update_incumbent();
      extend(next);
    } else {
      extend(cand);
    }
  }

  std::vector<std::size_t> best;
  bool aborted = false;
  std::uint64_t nodes() const { return nodes_; }

private:
  std::size_t upper_bound(const Bits &cand) const {
    if (!cfg_.group_bound)
      return popcount(cand);
    std::size_t ub = 0;
    for (std::size_t g = 0; g < group_masks_.size(); ++g) {
      const std::size_t room = 2 - std::min<std::size_t>(2, group_used_[g]);
      if (room == 0)
        continue;
      std::size_t avail = 0;
      for (std::size_t k = 0; k < words_; ++k)
        avail += static_cast<std::size_t>(
            std::popcount(cand[k] & group_masks_[g][k]));
      ub += std::min(room, avail);
    }
    return ub;
  }

  void update_incumbent() {
    if (chosen_.size() > best.size())
      best = chosen_;
  }

  // cand: compatible candidates with index above the last chosen element.
  void extend(Bits cand) {
    Bits next(words_);
    for (std::size_t k = 0; k < words_; ++k) {
      while (cand[k]) {
        if (chosen_.size() + upper_bound(cand) <= best.size())
          return;
        const std::size_t idx =
            k * kWordBits + static_cast<std::size_t>(std::countr_zero(cand[k]));
        cand[k] &= cand[k] - 1;
        if (++nodes_ > cfg_.budget) {
          aborted = true;
          return;
        }
        // Candidates after idx that stay trifferent with every pair
        // {x, idx}. The copy of cand already excludes indices <= idx.
        next = cand;
        for (std::size_t x : chosen_) {
          const Word *row = &compat_[(x * size_ + idx) * words_];
          for (std::size_t w = 0; w < words_; ++w)
            next[w] &= row[w];
        }
        chosen_.push_back(idx);
        ++group_used_[group_of_[idx]];
        update_incumbent();
        extend(next);
        --group_used_[group_of_[idx]];
        chosen_.pop_back();
        if (aborted)
          return;
      }
    }
  }

  const std::vector<Codeword> &u_;
  const SearchConfig &cfg_;
  std::size_t size_;
  std::size_t words_;
  std::vector<Word> compat_;
  std::vector<std::size_t> group_of_;
  std::vector<Bits> group_masks_;
  std::vector<std::size_t> group_used_;
  std::vector<std::size_t> chosen_;
  std::uint64_t nodes_ = 0;
};

SearchCertificate run_search(std::size_t n, std::optional<std::size_t> r,
                             const std::vector<Codeword> &universe,
                             const SearchConfig &config) {
  SearchCertificate cert;
  cert.n = n;
  cert.r = r;
  cert.config = config;
  cert.universe_size = universe.size();

  std::vector<Codeword> words;
  if (r == 0 && universe.size() >= 2) {
    // Without any 2 no coordinate can separate three words.
    words = {universe[0], universe[1]};
    cert.status = SearchCertificate::Status::optimal;
  } else {
    BranchAndBound bb(universe, config);
    bb.run();
    cert.nodes_explored = bb.nodes();
    cert.status = bb.aborted ? SearchCertificate::Status::lower_bound
                             : SearchCertificate::Status::optimal;
    for (std::size_t i : bb.best)
      words.push_back(universe[i]);
  }
  cert.best_size = words.size();
  cert.best_code = r ? Code::bounded(n, std::move(words), *r)
                     : Code(n, std::move(words));
  return cert;
}

} // namespace

SearchCertificate max_trifferent(std::size_t n, const SearchConfig &config) {
  if (n == 0)
    throw std::invalid_argument("search needs n >= 1");
  if (n > config.max_length && !config.override_caps)
    throw std::out_of_range("unrestricted search is capped at n = " +
                            std::to_string(config.max_length));
  return run_search(n, std::nullopt, full_universe(n), config);
}

SearchCertificate max_r_bounded(std::size_t n, std::size_t r,
                                const SearchConfig &config) {
  if (n == 0)
    throw std::invalid_argument("search needs n >= 1");
  if (r > n)
    throw std::out_of_range("r-bounded search needs r <= n");
  if (r == 0) {
    // Closed form, so no universe cap applies: the two smallest binary words.
    Codeword one(n);
    one.set(n - 1, 1);
    auto cert = run_search(n, r, {Codeword(n), one}, config);
    cert.universe_size = count_A_r(n, 0);
    return cert;
  }
  if (count_A_r(n, r) > config.max_universe && !config.override_caps)
    throw std::out_of_range("universe of " + std::to_string(count_A_r(n, r)) +
                            " words exceeds the cap of " +
                            std::to_string(config.max_universe));
  return run_search(n, r, bounded_universe(n, r), config);
}

void record(ExactTable &table, const SearchCertificate &cert) {
  if (cert.status != SearchCertificate::Status::optimal)
    return;
  if (cert.r)
    table.set_tb(cert.n, *cert.r, cert.best_size);
  else
    table.set_t(cert.n, cert.best_size);
}

} // namespace triff
