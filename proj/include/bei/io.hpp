#pragma once

// Line-oriented text formats shared by the command-line tools.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bei/polynomial.hpp"

namespace bei {

class ParseError : public std::runtime_error {
 public:
  enum class Kind {
    malformed_line,
    vertex_out_of_range,
    duplicate_edge,
    loop,
    count_mismatch,
    bad_polynomial,
  };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// A line with its 1-based number, comments (`#` to end of line) and
/// surrounding whitespace removed. Blank lines are dropped.
struct DataLine {
  std::size_t number;
  std::string text;
};

std::vector<DataLine> data_lines(std::string_view text);
std::string read_file(const std::string& path);

/// Ideal file: `vars N` then one polynomial per line.
struct PolynomialList {
  std::size_t nvars = 0;
  std::vector<Polynomial<Rational>> polynomials;
};

PolynomialList parse_polynomial_list(std::string_view text);
std::string format_polynomial_list(const PolynomialList& list,
                                   const std::vector<std::string>& header_comments = {});

}  // namespace bei
