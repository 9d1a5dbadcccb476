#include "triff/triff_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace triff {

ParseError::ParseError(std::size_t line, const std::string &message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

std::size_t parse_header_value(std::string_view line, std::string_view key,
                               std::size_t lineno) {
  if (line.substr(0, key.size()) != key)
    throw ParseError(lineno, "expected '" + std::string(key) + "<int>'");
  const auto digits = line.substr(key.size());
  std::size_t value = 0;
  auto [end, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || end != digits.data() + digits.size() ||
      digits.empty())
    throw ParseError(lineno, "malformed integer in '" + std::string(line) + "'");
  return value;
}

} // namespace

TriffFile parse_triff(std::string_view text) {
  if (text.empty())
    throw ParseError(1, "empty input");
  if (text.back() != '\n') {
    const auto lines = static_cast<std::size_t>(
        std::count(text.begin(), text.end(), '\n'));
    throw ParseError(lines + 1, "missing trailing newline");
  }

  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t nl = text.find('\n', pos);
    auto line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }

  std::size_t idx = 0;
  const std::size_t n = parse_header_value(lines[idx], "n=", 1);
  if (n == 0)
    throw ParseError(1, "block length must be positive");
  ++idx;
  std::optional<std::size_t> r;
  if (idx < lines.size() && lines[idx].starts_with("r=")) {
    r = parse_header_value(lines[idx], "r=", idx + 1);
    if (*r > n)
      throw ParseError(idx + 1, "r exceeds block length");
    ++idx;
  }

  TriffFile out{Code(n), {}};
  std::vector<Codeword> words;
  std::set<std::string_view> seen;
  for (; idx < lines.size(); ++idx) {
    const auto line = lines[idx];
    const std::size_t lineno = idx + 1;
    if (line.starts_with('#')) {
      out.comments.emplace_back(line.substr(1));
      continue;
    }
    if (line.size() != n)
      throw ParseError(lineno, "codeword has length " +
                                   std::to_string(line.size()) +
                                   ", expected " + std::to_string(n));
    for (std::size_t i = 0; i < line.size(); ++i)
      if (line[i] < '0' || line[i] > '2')
        throw ParseError(lineno, std::string("invalid symbol '") + line[i] +
                                     "' at column " + std::to_string(i + 1));
    if (!seen.insert(line).second)
      throw ParseError(lineno, "duplicate codeword " + std::string(line));
    Codeword w = Codeword::from_string(line);
    if (r && w.count_twos() != *r)
      throw ParseError(lineno, "codeword has " +
                                   std::to_string(w.count_twos()) +
                                   " twos, header declares r=" +
                                   std::to_string(*r));
    words.push_back(std::move(w));
  }
  out.code = r ? Code::bounded(n, std::move(words), *r)
               : Code(n, std::move(words));
  return out;
}

TriffFile read_triff(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_triff(buf.str());
}

std::string format_triff(const TriffFile &file) {
  std::string out = "n=" + std::to_string(file.code.block_length()) + "\n";
  if (auto r = file.code.r_bound())
    out += "r=" + std::to_string(*r) + "\n";
  for (const auto &c : file.comments)
    out += "#" + c + "\n";
  for (const auto &w : file.code)
    out += w.to_string() + "\n";
  return out;
}

void write_triff(const std::filesystem::path &path, const TriffFile &file) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out << format_triff(file);
}

} // namespace triff
