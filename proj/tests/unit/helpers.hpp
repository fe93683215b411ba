#pragma once

#include "fbk/braid_word.hpp"
#include "fbk/framed.hpp"
#include "fbk/word_syntax.hpp"

namespace fbk::test {

inline BraidWord w(int n, const char* text) { return parse_word(text, n); }
inline FramedBraid fb(int n, const char* text) { return normalize(parse_word(text, n)); }

}  // namespace fbk::test
