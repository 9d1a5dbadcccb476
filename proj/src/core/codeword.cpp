#include "triff/codeword.hpp"

#include <bit>
#include <stdexcept>

namespace triff {

namespace {

void require_same_length(const Codeword &a, const Codeword &b) {
  if (a.length() != b.length())
    throw std::invalid_argument("codeword length mismatch: " +
                                std::to_string(a.length()) + " vs " +
                                std::to_string(b.length()));
}

} // namespace

Codeword::Codeword(std::size_t n)
    : n_(n), words_(words_for(n)), planes_(3 * words_for(n), 0) {
  Word *zero = plane_mut(0);
  for (std::size_t i = 0; i < n; ++i)
    zero[i / kWordBits] |= Word{1} << (i % kWordBits);
}

Codeword Codeword::from_string(std::string_view text) {
  if (text.empty())
    throw std::invalid_argument("empty codeword");
  Codeword w(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '2')
      throw std::invalid_argument(std::string("invalid symbol '") + c +
                                  "' at position " + std::to_string(i + 1));
    w.set(i, c - '0');
  }
  return w;
}

Codeword Codeword::from_symbols(std::span<const int> symbols) {
  if (symbols.empty())
    throw std::invalid_argument("empty codeword");
  Codeword w(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i] < 0 || symbols[i] > 2)
      throw std::invalid_argument("symbol out of range at position " +
                                  std::to_string(i + 1));
    w.set(i, symbols[i]);
  }
  return w;
}

int Codeword::at(std::size_t i) const {
  if (i >= n_)
    throw std::out_of_range("coordinate out of range");
  const std::size_t word = i / kWordBits;
  const Word bit = Word{1} << (i % kWordBits);
  if (planes_[word] & bit)
    return 0;
  if (planes_[words_ + word] & bit)
    return 1;
  return 2;
}

void Codeword::set(std::size_t i, int symbol) {
  if (i >= n_)
    throw std::out_of_range("coordinate out of range");
  const std::size_t word = i / kWordBits;
  const Word bit = Word{1} << (i % kWordBits);
  for (int s = 0; s < 3; ++s)
    plane_mut(s)[word] &= ~bit;
  plane_mut(symbol)[word] |= bit;
}

std::size_t Codeword::count(int symbol) const {
  std::size_t total = 0;
  for (Word w : plane(symbol))
    total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<std::size_t> Codeword::two_locations() const {
  std::vector<std::size_t> out;
  auto twos = plane(2);
  for (std::size_t k = 0; k < words_; ++k) {
    Word w = twos[k];
    while (w) {
      out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::string Codeword::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    s[i] = static_cast<char>('0' + at(i));
  return s;
}

Codeword Codeword::operator+(const Codeword &v) const {
  require_same_length(*this, v);
  Codeword out(n_);
  for (std::size_t k = 0; k < words_; ++k) {
    const Word x0 = plane(0)[k], x1 = plane(1)[k], x2 = plane(2)[k];
    const Word v0 = v.plane(0)[k], v1 = v.plane(1)[k], v2 = v.plane(2)[k];
    out.plane_mut(0)[k] = (x0 & v0) | (x1 & v2) | (x2 & v1);
    out.plane_mut(1)[k] = (x0 & v1) | (x1 & v0) | (x2 & v2);
    out.plane_mut(2)[k] = (x0 & v2) | (x1 & v1) | (x2 & v0);
  }
  return out;
}

Codeword Codeword::without(std::size_t i) const {
  if (i >= n_)
    throw std::out_of_range("coordinate out of range");
  if (n_ == 1)
    throw std::invalid_argument("cannot delete the only coordinate");
  Codeword out(n_ - 1);
  for (std::size_t j = 0, k = 0; j < n_; ++j)
    if (j != i)
      out.set(k++, at(j));
  return out;
}

Codeword Codeword::concat(const Codeword &other) const {
  Codeword out(n_ + other.n_);
  for (std::size_t j = 0; j < n_; ++j)
    out.set(j, at(j));
  for (std::size_t j = 0; j < other.n_; ++j)
    out.set(n_ + j, other.at(j));
  return out;
}

std::strong_ordering Codeword::operator<=>(const Codeword &other) const {
  if (n_ != other.n_)
    return n_ <=> other.n_;
  for (std::size_t k = 0; k < words_; ++k) {
    const Word diff = (plane(0)[k] ^ other.plane(0)[k]) |
                      (plane(1)[k] ^ other.plane(1)[k]);
    if (diff) {
      const std::size_t i =
          k * kWordBits + static_cast<std::size_t>(std::countr_zero(diff));
      return at(i) <=> other.at(i);
    }
  }
  return std::strong_ordering::equal;
}

bool Codeword::well_formed() const {
  for (std::size_t k = 0; k < words_; ++k) {
    const Word a = plane(0)[k], b = plane(1)[k], c = plane(2)[k];
    if ((a & b) | (a & c) | (b & c))
      return false;
    const std::size_t width =
        (k + 1 == words_ && n_ % kWordBits) ? n_ % kWordBits : kWordBits;
    const Word full = width == kWordBits ? ~Word{0} : (Word{1} << width) - 1;
    if ((a | b | c) != full)
      return false;
  }
  return true;
}

PairMasks::PairMasks(const Codeword &x, const Codeword &y) {
  require_same_length(x, y);
  const std::size_t words = x.word_count();
  for (auto &m : need)
    m.resize(words);
  for (std::size_t k = 0; k < words; ++k) {
    const Word x0 = x.plane(0)[k], x1 = x.plane(1)[k], x2 = x.plane(2)[k];
    const Word y0 = y.plane(0)[k], y1 = y.plane(1)[k], y2 = y.plane(2)[k];
    need[0][k] = (x1 & y2) | (x2 & y1);
    need[1][k] = (x0 & y2) | (x2 & y0);
    need[2][k] = (x0 & y1) | (x1 & y0);
  }
}

bool PairMasks::completed_by(const Codeword &z) const {
  const std::size_t words = need[0].size();
  for (std::size_t k = 0; k < words; ++k)
    if ((need[0][k] & z.plane(0)[k]) | (need[1][k] & z.plane(1)[k]) |
        (need[2][k] & z.plane(2)[k]))
      return true;
  return false;
}

bool is_trifferent_triple(const Codeword &x, const Codeword &y,
                          const Codeword &z) {
  require_same_length(x, y);
  require_same_length(x, z);
  if (x == y || x == z || y == z)
    throw std::invalid_argument("is_trifferent_triple needs distinct words");
  // OR over the six assignments of symbols to (x, y, z).
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (std::size_t k = 0; k < x.word_count(); ++k) {
    Word hit = 0;
    for (const auto &p : kPerms)
      hit |= x.plane(p[0])[k] & y.plane(p[1])[k] & z.plane(p[2])[k];
    if (hit)
      return true;
  }
  return false;
}

bool is_trifferent_triple_naive(const Codeword &x, const Codeword &y,
                                const Codeword &z) {
  require_same_length(x, y);
  require_same_length(x, z);
  if (x == y || x == z || y == z)
    throw std::invalid_argument("is_trifferent_triple needs distinct words");
  for (std::size_t i = 0; i < x.length(); ++i) {
    const int a = x.at(i), b = y.at(i), c = z.at(i);
    if (a != b && b != c && a != c)
      return true;
  }
  return false;
}

} // namespace triff
