#include "twinperm/text_format.hpp"

#include <charconv>
#include <sstream>

namespace twinperm {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

std::optional<Permutation> parse_permutation_line(std::string_view line) {
  std::size_t i = 0;
  while (i < line.size() && is_blank(line[i])) ++i;
  if (i == line.size() || line[i] == '#') return std::nullopt;

  std::vector<Value> values;
  bool expect_number = true;
  while (i < line.size()) {
    const char c = line[i];
    if (is_blank(c)) {
      ++i;
      continue;
    }
    if (c == ',') {
      if (expect_number) throw InvalidInput("empty field in permutation line");
      expect_number = true;
      ++i;
      continue;
    }
    Value v = 0;
    const char* first = line.data() + i;
    const char* last = line.data() + line.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr == first) {
      throw InvalidInput("malformed integer in permutation line: '" + std::string(line) + "'");
    }
    values.push_back(v);
    expect_number = false;
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && !is_blank(line[i]) && line[i] != ',') {
      throw InvalidInput("unexpected character in permutation line: '" + std::string(line) + "'");
    }
  }
  if (expect_number) throw InvalidInput("trailing separator in permutation line");
  return Permutation(std::move(values));
}

std::vector<Permutation> parse_permutations(std::istream& in) {
  std::vector<Permutation> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto p = parse_permutation_line(line)) out.push_back(std::move(*p));
  }
  return out;
}

std::string format_permutation(std::span<const Value> values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ' ';
    os << values[i];
  }
  return os.str();
}

}  // namespace twinperm
