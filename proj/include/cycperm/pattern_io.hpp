#pragma once

#include <string>

#include "cycperm/pattern.hpp"

namespace cycperm {

// Text form: digits 1-9 in one-line order; a parenthesized block glues
// its entries into consecutive positions ("13(24)"); square brackets
// mark a cyclic pattern ("[1324]", "[13(24)]").  Sets are comma-
// separated lists of patterns.
VincularPattern parse_pattern(const std::string& text);
PatternSet parse_pattern_set(const std::string& text);

// Inverse of the parser on canonical spellings; supports lengths up to 9.
std::string print_pattern(const VincularPattern& p);
std::string print_pattern_set(const PatternSet& s);

}  // namespace cycperm
