#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rcp {

// Raised for malformed input files and violated format invariants.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

std::vector<std::string> split_ws(const std::string& s);
std::vector<std::string> split_lines(const std::string& s);

// Strips a trailing '#'-comment and surrounding whitespace.
std::string strip_comment(const std::string& line);

bool parse_int(const std::string& tok, int& out);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace rcp
