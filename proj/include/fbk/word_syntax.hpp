#pragma once

// Text form of braid words: "s1 s2^-1 t3^2". ASCII s (sigma) and t (twist)
// only, separated by spaces or tabs.

#include <string>
#include <string_view>

#include "fbk/braid_word.hpp"

namespace fbk {

// Throws ParseError (with byte offset) on malformed text or a zero exponent,
// IndexOutOfRange when an index does not fit n strands.
BraidWord parse_word(std::string_view text, int n);

// Canonical spacing: single spaces, exponent omitted when it is 1.
std::string print_word(const BraidWord& w);

}  // namespace fbk
