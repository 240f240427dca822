#include "bei/io.hpp"

#include <fstream>
#include <sstream>

namespace bei {

std::vector<DataLine> data_lines(std::string_view text) {
  std::vector<DataLine> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      const auto last = line.find_last_not_of(" \t\r");
      out.push_back({number, std::string(line.substr(first, last - first + 1))});
    }
    pos = end + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PolynomialList parse_polynomial_list(std::string_view text) {
  auto lines = data_lines(text);
  if (lines.empty()) throw ParseError(ParseError::Kind::malformed_line, 1, "missing 'vars N' line");
  PolynomialList list;
  {
    std::istringstream header(lines.front().text);
    std::string word;
    long long n = 0;
    std::string extra;
    if (!(header >> word >> n) || word != "vars" || n < 1 || (header >> extra)) {
      throw ParseError(ParseError::Kind::malformed_line, lines.front().number,
                       "expected 'vars N' with N >= 1");
    }
    list.nvars = static_cast<std::size_t>(n);
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    try {
      list.polynomials.push_back(parse_rational_polynomial(lines[i].text, list.nvars));
    } catch (const PolynomialParseError& e) {
      throw ParseError(ParseError::Kind::bad_polynomial, lines[i].number, e.what());
    }
  }
  return list;
}

std::string format_polynomial_list(const PolynomialList& list,
                                   const std::vector<std::string>& header_comments) {
  std::string out;
  for (const auto& c : header_comments) out += "# " + c + "\n";
  out += "vars " + std::to_string(list.nvars) + "\n";
  for (const auto& p : list.polynomials) out += to_string(p) + "\n";
  return out;
}

}  // namespace bei
