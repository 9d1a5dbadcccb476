#include "triff/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace triff {

double zarankiewicz_bound(double u, double v, std::uint64_t s, std::uint64_t t) {
  if (s < 1 || t < 1 || v < 1.0)
    throw std::invalid_argument("zarankiewicz_bound needs s, t, v >= 1");
  const double sd = static_cast<double>(s);
  if (u < sd)
    throw std::invalid_argument("zarankiewicz_bound needs u >= s");
  return std::pow(static_cast<double>(t - 1), 1.0 / sd) * (u - sd + 1.0) *
             std::pow(v, 1.0 - 1.0 / sd) +
         (sd - 1.0) * v;
}

double elias_bound(std::size_t n) {
  return 2.0 * std::pow(1.5, static_cast<double>(n));
}

double log2_elias_bound(std::size_t n) {
  return 1.0 + static_cast<double>(n) * std::log2(1.5);
}

std::optional<double> kurz_bound(std::size_t n) {
  if (n < kKurzMinLength)
    return std::nullopt;
  return kKurzConstant * std::pow(1.5, static_cast<double>(n));
}

double log2_binomial(std::size_t n, std::size_t r) {
  if (r > n)
    return -std::numeric_limits<double>::infinity();
  r = std::min(r, n - r);
  double acc = 0.0;
  for (std::size_t i = 0; i < r; ++i)
    acc += std::log2(static_cast<double>(n - i)) -
           std::log2(static_cast<double>(i + 1));
  return acc;
}

namespace {

double binom_real(std::size_t n, std::size_t r) {
  try {
    return static_cast<double>(binomial(n, r));
  } catch (const std::overflow_error &) {
    return std::exp2(log2_binomial(n, r));
  }
}

// Exact for the small r used here and n up to ~2^20; beyond that the
// relative error stays at machine precision.
double choose2(double n) { return n * (n - 1.0) / 2.0; }
double choose3(double n) { return n * (n - 1.0) * (n - 2.0) / 6.0; }

} // namespace

TbUpper tb_upper_detail(std::size_t n, std::size_t r) {
  if (n == 0)
    throw std::invalid_argument("tb_upper needs n >= 1");
  if (r > 3)
    throw std::invalid_argument("tb_upper supports r in {0,1,2,3}");
  if (n < r)
    return {0.0, TbSource::zero};
  const double nd = static_cast<double>(n);
  switch (r) {
  case 0:
    return {2.0, TbSource::trivial};
  case 1:
    return {n == 1 ? 1.0 : 2.0 * nd, TbSource::one_bounded};
  case 2: {
    TbUpper best{2.0 * choose2(nd), TbSource::trivial};
    const std::size_t hi = (n + 1) / 2, lo = n / 2;
    if (hi >= 3) {
      const double kst = 4.0 * zarankiewicz_bound(static_cast<double>(hi),
                                                  static_cast<double>(lo), 3, 9);
      if (kst < best.value)
        best = {kst, TbSource::kst};
    }
    return best;
  }
  default: {
    TbUpper best{2.0 * choose3(nd), TbSource::trivial};
    if (n >= 5) {
      const double kst =
          2.0 * zarankiewicz_bound(nd, choose2(nd), 5, kR3ForbiddenRight);
      if (kst < best.value)
        best = {kst, TbSource::kst};
    }
    return best;
  }
  }
}

double tb_upper(std::size_t n, std::size_t r) {
  return tb_upper_detail(n, r).value;
}

namespace {

void check_density_args(std::size_t n, std::size_t r, double tb_value) {
  if (r > n)
    throw std::invalid_argument("density needs 0 <= r <= n");
  if (!(tb_value > 0.0))
    throw std::invalid_argument("density needs a positive T_b value");
}

} // namespace

double rho_b(std::size_t n, std::size_t r, double tb_value) {
  check_density_args(n, r, tb_value);
  return std::exp2(static_cast<double>(r) - static_cast<double>(n)) * tb_value /
         binom_real(n, r);
}

double log2_transfer_bound(std::size_t n, std::size_t r, double tb_value) {
  check_density_args(n, r, tb_value);
  return static_cast<double>(r) - static_cast<double>(n) +
         std::log2(tb_value) - log2_binomial(n, r) +
         static_cast<double>(n) * std::log2(3.0);
}

double transfer_bound(std::size_t n, std::size_t r, double tb_value) {
  check_density_args(n, r, tb_value);
  // 2^{r−n}·3^n = 2^r·(3/2)^n keeps the computation exact for r = 0.
  return std::exp2(static_cast<double>(r)) *
         std::pow(1.5, static_cast<double>(n)) * tb_value / binom_real(n, r);
}

double log2_transfer_over_elias(std::size_t n, std::size_t r, double tb_value) {
  check_density_args(n, r, tb_value);
  return static_cast<double>(r) - 1.0 + std::log2(tb_value) -
         log2_binomial(n, r);
}

bool transfer_holds_exactly(std::size_t n, std::size_t r, std::uint64_t t_value,
                            std::uint64_t tb_value) {
  using u128 = unsigned __int128;
  const u128 limit = ~u128{0};
  auto mul = [&](u128 a, u128 b) {
    if (a != 0 && b > limit / a)
      throw std::overflow_error("exact transfer check overflows 128 bits");
    return a * b;
  };
  if (r > n)
    throw std::invalid_argument("transfer needs 0 <= r <= n");
  const u128 lhs = mul(t_value, count_A_r(n, r));
  u128 rhs = tb_value;
  for (std::size_t i = 0; i < n; ++i)
    rhs = mul(rhs, 3);
  return lhs <= rhs;
}

ValueKind DeficitEstimate::delta_kind() const {
  switch (tb_kind) {
  case ValueKind::lower_bound:
    return ValueKind::upper_bound;
  case ValueKind::upper_bound:
    return ValueKind::lower_bound;
  default:
    return ValueKind::exact;
  }
}

DeficitEstimate deficit(std::size_t n, std::size_t r, double tb_value,
                        ValueKind kind) {
  if (n < 2)
    throw std::invalid_argument("deficit needs n >= 2");
  if (!(tb_value >= 1.0))
    throw std::invalid_argument("deficit needs T_b >= 1");
  DeficitEstimate d{r, n, tb_value, kind, 0.0};
  d.delta = static_cast<double>(r) -
            std::log(tb_value) / std::log(static_cast<double>(n));
  return d;
}

double deficit_exponent() { return 1.0 - std::log(2.0) / std::log(3.0); }

double deficit_upper(std::uint64_t r) {
  if (r == 0)
    throw std::invalid_argument("deficit_upper needs a power of 3");
  std::uint64_t x = r;
  while (x % 3 == 0)
    x /= 3;
  if (x != 1)
    throw std::invalid_argument("deficit_upper needs a power of 3, got " +
                                std::to_string(r));
  const double rd = static_cast<double>(r);
  return rd - std::pow(rd, deficit_exponent());
}

std::optional<double> rate(const Code &code) {
  if (code.size() < 3)
    return std::nullopt;
  return std::log2(static_cast<double>(code.size()) / 2.0) /
         static_cast<double>(code.block_length());
}

} // namespace triff
