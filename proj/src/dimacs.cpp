#include "hardsat/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace hardsat {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
      ++j;
    if (j > i)
      words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

long parse_int(std::string_view word, std::size_t line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size())
    throw DimacsError(line, "expected an integer, got '" + std::string(word) + "'");
  return value;
}

}  // namespace

Formula parse_dimacs(std::string_view text) {
  bool have_header = false;
  long declared_vars = 0;
  long declared_clauses = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;
  std::size_t pending_line = 0;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    auto words = split_words(line);
    if (words.empty())
      continue;
    if (words[0].front() == 'c')
      continue;
    if (words[0] == "%")  // SATLIB end marker
      break;
    if (words[0] == "p") {
      if (have_header)
        throw DimacsError(line_no, "duplicate header");
      if (words.size() != 4 || words[1] != "cnf")
        throw DimacsError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      declared_vars = parse_int(words[2], line_no);
      declared_clauses = parse_int(words[3], line_no);
      if (declared_vars < 0 || declared_clauses < 0)
        throw DimacsError(line_no, "negative count in header");
      have_header = true;
      continue;
    }
    if (!have_header)
      throw DimacsError(line_no, "clause data before 'p cnf' header");

    for (std::string_view w : words) {
      if (w == "-0" || w == "+0")
        throw DimacsError(line_no, "literal index 0 inside a clause body");
      const long value = parse_int(w, line_no);
      if (pending.empty())
        pending_line = line_no;
      if (value == 0) {
        try {
          clauses.emplace_back(std::move(pending));
        } catch (const std::invalid_argument& e) {
          throw DimacsError(pending_line, e.what());
        }
        pending.clear();
        continue;
      }
      if ((value < 0 ? -value : value) > declared_vars)
        throw DimacsError(line_no, "literal " + std::to_string(value) +
                                       " exceeds declared variable count " +
                                       std::to_string(declared_vars));
      pending.push_back(Literal::from_dimacs(value));
    }
  }
  if (!have_header)
    throw DimacsError(line_no, "missing 'p cnf' header");
  if (!pending.empty())
    throw DimacsError(pending_line, "clause not terminated by 0");
  return Formula(std::move(clauses));
}

std::string write_dimacs(const Formula& f, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments)
    out << "c " << c << '\n';
  out << "p cnf " << f.max_variable() << ' ' << f.size() << '\n';
  for (const Clause& c : f) {
    for (Literal l : c)
      out << l.to_dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

Formula read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dimacs(buffer.str());
}

}  // namespace hardsat
