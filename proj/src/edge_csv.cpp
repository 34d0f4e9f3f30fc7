#include <charconv>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "iwn/error.hpp"
#include "iwn/network.hpp"

namespace iwn {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  s = s.substr(b, e - b + 1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(Errc::ParseError, fmt::format("line {}: {}", line, what));
}

double parse_real(std::string_view s, std::size_t line, std::string_view column) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    fail(line, fmt::format("{} is not a real number: '{}'", column, s));
  }
  return value;
}

}  // namespace

std::vector<DirectedFlowRecord> read_edge_csv(std::istream& in) {
  std::vector<DirectedFlowRecord> records;
  std::string raw;
  std::size_t line = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (line == 1 && text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
    if (trim(text).empty()) continue;
    const auto fields = split(text);
    if (!header) {
      if (fields.size() != 4 || fields[0] != "src" || fields[1] != "dst" || fields[2] != "lo" ||
          fields[3] != "hi") {
        fail(line, "expected header 'src,dst,lo,hi'");
      }
      header = true;
      continue;
    }
    if (fields.size() != 4) fail(line, fmt::format("expected 4 fields, got {}", fields.size()));
    if (fields[0].empty() || fields[1].empty()) fail(line, "empty vertex label");
    DirectedFlowRecord r{std::string(fields[0]), std::string(fields[1]),
                         parse_real(fields[2], line, "lo"), parse_real(fields[3], line, "hi")};
    if (r.lo < 0.0) {
      throw Error(Errc::NegativeWeight, fmt::format("line {}: negative weight {}", line, r.lo));
    }
    if (r.lo > r.hi) {
      throw Error(Errc::InvalidInterval,
                  fmt::format("line {}: lo {} greater than hi {}", line, r.lo, r.hi));
    }
    records.push_back(std::move(r));
  }
  if (!header) fail(line + 1, "missing header 'src,dst,lo,hi'");
  return records;
}

std::vector<DirectedFlowRecord> read_edge_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, fmt::format("cannot open '{}'", path));
  return read_edge_csv(in);
}

}  // namespace iwn
