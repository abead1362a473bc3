#pragma once

#include <string>
#include <string_view>

#include "globwb/globset.hpp"

namespace globwb {

// expr := atom (glue atom)* ; atom := "D" nat ; glue := "*" nat
// or the table form "[i1 i2 .. / j1 j2 ..]".
Table parse_expr(std::string_view text);
std::string print_expr(const Table& t);

}  // namespace globwb
