#pragma once

#include <span>
#include <string>

namespace compkb {

// Extracts the comparative relation phrase from a generated sentence: the
// first token that is a lexicon adjective, or a "more/less/fewer + content
// word" pattern. Empty result when nothing matches.
std::string extract_relation(const std::string& text, std::span<const std::string> adjectives);

// Aux verbs, adverbs, hedges and similar glue that cannot begin a relation
// and cannot be part of an entity mention.
bool is_function_word(const std::string& lowered);

}  // namespace compkb
