#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace compkb {

// Whitespace tokenization with punctuation detachment: leading and trailing
// punctuation characters become their own tokens, word-internal ones
// (hyphens, apostrophes) stay attached. Throws Error on empty input.
std::vector<std::string> word_tokenize(std::string_view text);

// Inverse of word_tokenize up to whitespace: joins tokens with single spaces.
std::string join_tokens(const std::vector<std::string>& tokens);

std::string to_lower(std::string_view s);

}  // namespace compkb
