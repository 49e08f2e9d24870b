#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hardsat/cnf.hpp"

namespace hardsat {

class DimacsError : public std::runtime_error {
public:
  DimacsError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Parses DIMACS CNF. Clause bodies may span lines; `c` lines are comments.
/// Throws DimacsError on a malformed or missing header, a literal outside the
/// declared variable range, a complementary pair within one clause, or an
/// unterminated final clause.
Formula parse_dimacs(std::string_view text);

/// Canonical DIMACS text. `comments` are emitted as `c ` lines before the
/// header. The header's variable count is the largest occurring index.
std::string write_dimacs(const Formula& f, const std::vector<std::string>& comments = {});

Formula read_dimacs_file(const std::string& path);

}  // namespace hardsat
