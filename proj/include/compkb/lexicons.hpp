#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace compkb {

// Built-in constraint lexicons. Each has a file-based override loaded with
// load_phrase_list (one phrase per line, '#' comments and blank lines skipped).

// Auxiliary verbs for the positive constraint set.
std::span<const std::string> builtin_aux_verbs();

// Adverbs of frequency for the positive constraint set.
std::span<const std::string> builtin_adverbs();

// Comparative adjectives promoted during decoding (290 entries).
std::span<const std::string> builtin_comparative_adjectives();

// Phrases whose appearance anywhere invalidates a generation.
std::span<const std::string> builtin_negative_phrases();

// Symmetric antonym pairs for the reference NLI rule engine.
std::span<const std::pair<std::string, std::string>> builtin_antonym_pairs();

std::vector<std::string> load_phrase_list(const std::filesystem::path& path);

// phrase<TAB>antonym rows.
std::vector<std::pair<std::string, std::string>> load_antonym_pairs(
    const std::filesystem::path& path);

}  // namespace compkb
