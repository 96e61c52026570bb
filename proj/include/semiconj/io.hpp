#ifndef SEMICONJ_IO_HPP_
#define SEMICONJ_IO_HPP_

#include <string>

#include "semiconj/semigroup.hpp"

namespace semiconj {

// Text format: optional '#' comment lines; first data line is n; then n lines
// of n whitespace-separated entries in [0, n). A document whose first
// non-space character is '{' is read as the structured format
// {"n": int, "table": [[int]]} instead.
Semigroup parse_table(std::string const& text);

std::string serialize(Semigroup const& s);
std::string serialize_json(Semigroup const& s);

}  // namespace semiconj

#endif  // SEMICONJ_IO_HPP_
