#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "triff/code.hpp"

namespace triff {

/// Malformed ".triff" input. what() carries "line N: ...".
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &message);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// A code together with its '#' metadata lines (stored without the '#').
struct TriffFile {
  Code code;
  std::vector<std::string> comments;
};

/// Format:
///   n=<int>
///   r=<int>          (optional)
///   # comment lines  (anywhere after the header)
///   one codeword per line
/// The text must end with a newline. Duplicate codewords are rejected.
TriffFile parse_triff(std::string_view text);
TriffFile read_triff(const std::filesystem::path &path);

/// Writes n=, then r= when the code is r-bounded, then the comments, then
/// the codewords in sorted order.
std::string format_triff(const TriffFile &file);
void write_triff(const std::filesystem::path &path, const TriffFile &file);

} // namespace triff
