#ifndef GDENS_ISET_IO_HPP
#define GDENS_ISET_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gdens/integer_set.hpp"

namespace gdens {

// ".iset" text format: one element "x" or one inclusive interval "a b" per
// line, sorted and non-overlapping; '#' starts a comment; blank lines ignored.

IntegerSet parse_iset(std::istream& in, const std::string& source = "<iset>");
IntegerSet read_iset(const std::filesystem::path& path);

/// Finite-support sets only; throws InvalidArgument for unbounded or
/// generator-backed sets (restrict them first).
void write_iset(std::ostream& out, const IntegerSet& set);
void write_iset_file(const std::filesystem::path& path, const IntegerSet& set);

namespace text {

/// Line content with any '#' comment removed.
std::string_view strip_comment(std::string_view line);
std::vector<std::string_view> split_ws(std::string_view line);

}  // namespace text

}  // namespace gdens

#endif
