#include "triff/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace triff {

std::optional<std::uint64_t> ExactTable::t(std::size_t n) const {
  auto it = unrestricted.find(n);
  if (it == unrestricted.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::uint64_t> ExactTable::tb(std::size_t n, std::size_t r) const {
  auto it = bounded.find({n, r});
  if (it == bounded.end())
    return std::nullopt;
  return it->second;
}

void ExactTable::set_t(std::size_t n, std::uint64_t value) {
  auto [it, inserted] = unrestricted.try_emplace(n, value);
  if (!inserted && it->second != value)
    throw std::invalid_argument("conflicting exact value for T(" +
                                std::to_string(n) + ")");
}

void ExactTable::set_tb(std::size_t n, std::size_t r, std::uint64_t value) {
  auto [it, inserted] = bounded.try_emplace({n, r}, value);
  if (!inserted && it->second != value)
    throw std::invalid_argument("conflicting exact value for T_b(" +
                                std::to_string(n) + "," + std::to_string(r) +
                                ")");
}

void ExactTable::merge(const ExactTable &other) {
  for (auto [n, v] : other.unrestricted)
    set_t(n, v);
  for (auto [key, v] : other.bounded)
    set_tb(key.first, key.second, v);
}

nlohmann::json ExactTable::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["T"] = nlohmann::json::array();
  for (auto [n, v] : unrestricted)
    j["T"].push_back({{"n", n}, {"value", v}});
  j["Tb"] = nlohmann::json::array();
  for (auto [key, v] : bounded)
    j["Tb"].push_back({{"n", key.first}, {"r", key.second}, {"value", v}});
  return j;
}

ExactTable ExactTable::from_json(const nlohmann::json &j) {
  if (j.value("schema", 0) != 1)
    throw std::invalid_argument("exact table: unsupported schema");
  ExactTable t;
  for (const auto &e : j.value("T", nlohmann::json::array()))
    t.set_t(e.at("n").get<std::size_t>(), e.at("value").get<std::uint64_t>());
  for (const auto &e : j.value("Tb", nlohmann::json::array()))
    t.set_tb(e.at("n").get<std::size_t>(), e.at("r").get<std::size_t>(),
             e.at("value").get<std::uint64_t>());
  return t;
}

std::vector<std::uint64_t> log_grid(std::uint64_t max_n, unsigned per_decade) {
  if (per_decade == 0)
    throw std::invalid_argument("log_grid needs at least one point per decade");
  std::vector<std::uint64_t> grid;
  for (unsigned k = 0;; ++k) {
    const double x = std::pow(10.0, 1.0 + static_cast<double>(k) / per_decade);
    const auto n = static_cast<std::uint64_t>(std::llround(x));
    if (n > max_n)
      break;
    if (grid.empty() || grid.back() != n)
      grid.push_back(n);
  }
  return grid;
}

double log2_kst_r3_ratio(std::uint64_t n) {
  const auto tb = tb_upper(static_cast<std::size_t>(n), 3);
  return log2_transfer_over_elias(static_cast<std::size_t>(n), 3, tb);
}

Crossover kst_r3_crossover(std::uint64_t max_n, unsigned per_decade) {
  Crossover c;
  for (std::uint64_t n : log_grid(max_n, per_decade)) {
    const auto detail = tb_upper_detail(static_cast<std::size_t>(n), 3);
    c.grid.push_back({static_cast<double>(n), log2_kst_r3_ratio(n),
                      detail.source == TbSource::kst});
  }
  // Scan from the top for the longest suffix strictly below Elias.
  std::size_t first = c.grid.size();
  while (first > 0 && c.grid[first - 1].log2_ratio < 0.0)
    --first;
  if (first == c.grid.size())
    return c;
  c.grid_n0 = c.grid[first].n;

  auto hi = static_cast<std::uint64_t>(c.grid[first].n);
  std::uint64_t lo = first > 0 ? static_cast<std::uint64_t>(c.grid[first - 1].n) : 3;
  // Invariant: ratio(lo) >= 1 (or lo is below the domain), ratio(hi) < 1.
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (log2_kst_r3_ratio(mid) < 0.0)
      hi = mid;
    else
      lo = mid;
  }
  c.exact_n0 = hi;
  return c;
}

const BoundEntry *BoundReport::find(const std::string &name) const {
  for (const auto &e : entries)
    if (e.name == name)
      return &e;
  return nullptr;
}

const BoundEntry &BoundReport::best_entry() const {
  const BoundEntry *e = find(best);
  if (!e)
    throw std::logic_error("bound report has no best entry");
  return *e;
}

namespace {

BoundEntry make_entry(std::string name, std::optional<double> log2_value,
                      std::string validity, std::string provenance) {
  BoundEntry e;
  e.name = std::move(name);
  e.validity = std::move(validity);
  e.provenance = std::move(provenance);
  e.valid = log2_value.has_value();
  e.log2_value = log2_value;
  if (log2_value && *log2_value < std::log2(std::numeric_limits<double>::max()))
    e.value = std::exp2(*log2_value);
  return e;
}

nlohmann::json optional_number(const std::optional<double> &v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string fmt_number(const std::optional<double> &v) {
  if (!v)
    return "-";
  std::ostringstream os;
  os << std::setprecision(10) << *v;
  return os.str();
}

} // namespace

BoundReport bound_report(std::size_t n, const ExactTable &table,
                         const std::vector<std::pair<std::string, Code>> &codes) {
  if (n == 0)
    throw std::invalid_argument("bound_report needs n >= 1");
  BoundReport rep;
  rep.n = n;

  {
    // Elias and the r = 0 transfer coincide; use the direct formula so the
    // value is exact where it fits a double.
    auto e = make_entry("elias", log2_elias_bound(n), "n >= 0",
                        "pruning argument: T(n) <= 2*(3/2)^n");
    if (auto v = elias_bound(n); std::isfinite(v))
      e.value = v;
    rep.entries.push_back(std::move(e));
  }
  rep.entries.push_back(make_entry(
      "kurz",
      n >= kKurzMinLength
          ? std::optional<double>(std::log2(kKurzConstant) +
                                  static_cast<double>(n) * std::log2(1.5))
          : std::nullopt,
      "n >= 10", "literature constant: T(n) <= 0.6937*(3/2)^n"));

  for (std::size_t r : {2u, 3u}) {
    std::optional<double> lv;
    std::string prov;
    if (n >= r) {
      const auto tb = tb_upper_detail(n, r);
      lv = log2_transfer_bound(n, r, tb.value);
      prov = "transfer of T_b(n," + std::to_string(r) + ") <= " +
             (tb.source == TbSource::kst ? std::string("KST formula")
                                         : std::string("2*C(n,") +
                                               std::to_string(r) + ")");
    }
    rep.entries.push_back(make_entry("kst-r" + std::to_string(r) + "-transfer",
                                     lv, "n >= " + std::to_string(r), prov));
  }

  for (auto [key, value] : table.bounded) {
    if (key.first != n || value == 0)
      continue;
    const std::size_t r = key.second;
    auto e = make_entry(
        "exact-transfer-r" + std::to_string(r),
        log2_transfer_bound(n, r, static_cast<double>(value)), "exact search",
        "transfer of exact T_b(" + std::to_string(n) + "," + std::to_string(r) +
            ") = " + std::to_string(value));
    if (auto v = transfer_bound(n, r, static_cast<double>(value)); std::isfinite(v))
      e.value = v;
    rep.entries.push_back(std::move(e));
  }

  // Compare plain values where both fit a double so that exact ties are
  // seen as ties; fall back to log2 otherwise.
  auto not_worse = [](const BoundEntry &a, const BoundEntry &b) {
    if (a.value && b.value)
      return *a.value <= *b.value;
    return *a.log2_value <= *b.log2_value;
  };
  const BoundEntry *best = nullptr;
  for (const auto &e : rep.entries)
    if (e.valid && (!best || not_worse(e, *best)))
      best = &e;
  rep.best = best->name;

  for (const auto &[name, code] : codes)
    rep.rates.push_back({name, code.block_length(), code.size(), rate(code)});

  rep.crossover = kst_r3_crossover();
  return rep;
}

nlohmann::json BoundReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["n"] = n;
  j["entries"] = nlohmann::json::array();
  for (const auto &e : entries)
    j["entries"].push_back({{"name", e.name},
                            {"value", optional_number(e.value)},
                            {"log2_value", optional_number(e.log2_value)},
                            {"valid", e.valid},
                            {"validity", e.validity},
                            {"provenance", e.provenance}});
  j["best"] = best;
  j["rates"] = nlohmann::json::array();
  for (const auto &r : rates)
    j["rates"].push_back({{"name", r.name},
                          {"n", r.block_length},
                          {"size", r.size},
                          {"rate", optional_number(r.rate)}});
  j["crossover_N0"] = optional_number(crossover.grid_n0);
  j["crossover_exact_N0"] = crossover.exact_n0
                                ? nlohmann::json(*crossover.exact_n0)
                                : nlohmann::json(nullptr);
  return j;
}

std::string BoundReport::to_table() const {
  std::ostringstream os;
  os << "bounds on T(n) for n = " << n << "\n";
  os << std::left << std::setw(20) << "name" << std::setw(20) << "value"
     << std::setw(20) << "log2" << std::setw(7) << "valid"
     << "provenance\n";
  for (const auto &e : entries) {
    os << std::left << std::setw(20) << (e.name + (e.name == best ? " *" : ""))
       << std::setw(20) << fmt_number(e.value) << std::setw(20)
       << fmt_number(e.log2_value) << std::setw(7) << (e.valid ? "yes" : "no")
       << e.provenance << "\n";
  }
  for (const auto &r : rates)
    os << "rate " << r.name << " (n=" << r.block_length << ", |C|=" << r.size
       << "): " << fmt_number(r.rate) << "\n";
  os << "KST-r3 transfer below Elias from N0 = " << fmt_number(crossover.grid_n0)
     << " on the log grid";
  if (crossover.exact_n0)
    os << " (exact crossover n = " << *crossover.exact_n0 << ")";
  os << "\n";
  return os.str();
}

} // namespace triff
