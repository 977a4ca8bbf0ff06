#include "gdens/iset_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "gdens/errors.hpp"

namespace gdens {

namespace text {

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace text

IntegerSet parse_iset(std::istream& in, const std::string& source) {
  IntervalList runs;
  bool all_singletons = true;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = text::split_ws(text::strip_comment(line));
    if (tokens.empty()) continue;
    if (tokens.size() > 2) throw ParseError(source, lineno, "expected 'x' or 'a b'");
    ClosedInterval r;
    try {
      r.lo = parse_natural(tokens[0]);
      r.hi = tokens.size() == 2 ? parse_natural(tokens[1]) : r.lo;
    } catch (const InvalidArgument& e) {
      throw ParseError(source, lineno, e.what());
    }
    if (r.lo > r.hi) throw ParseError(source, lineno, "interval with a > b");
    if (!runs.empty()) {
      if (r.lo <= runs.back().hi) {
        throw ParseError(source, lineno,
                         r.lo < runs.back().lo ? "unsorted input" : "overlaps previous line");
      }
    }
    if (r.lo != r.hi) all_singletons = false;
    runs.push_back(std::move(r));
  }
  if (all_singletons) {
    std::vector<Natural> values;
    values.reserve(runs.size());
    for (auto& r : runs) values.push_back(std::move(r.lo));
    return IntegerSet::from_sorted(std::move(values));
  }
  return IntegerSet::from_intervals(std::move(runs));
}

IntegerSet read_iset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open set file '" + path.string() + "'");
  return parse_iset(in, path.string());
}

void write_iset(std::ostream& out, const IntegerSet& set) {
  if (!set.finite_support()) {
    throw InvalidArgument("cannot write unbounded set '" + set.describe() + "' as .iset");
  }
  if (set.kind() == SetKind::ExplicitFinite) {
    for (const auto& v : set.elements()) out << v << '\n';
    return;
  }
  for (const auto& r : set.intervals()) {
    if (r.lo == r.hi) {
      out << r.lo << '\n';
    } else {
      out << r.lo << ' ' << r.hi << '\n';
    }
  }
}

void write_iset_file(const std::filesystem::path& path, const IntegerSet& set) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write set file '" + path.string() + "'");
  write_iset(out, set);
}

}  // namespace gdens
