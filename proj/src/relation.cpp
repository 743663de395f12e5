#include "compkb/relation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "compkb/text.hpp"

namespace compkb {

namespace {

const std::set<std::string>& function_words() {
    static const std::set<std::string> words = {
        // aux verbs and modals
        "have", "has", "had", "need", "needs", "may", "might", "are", "is", "was", "were",
        "would", "will", "can", "could", "should", "must", "do", "does", "tend", "tends",
        // adverbs of frequency and degree
        "typically", "often", "always", "generally", "normally", "usually", "sometimes",
        "rarely", "slightly", "somewhat", "far", "also",
        // hedges
        "considered", "be", "been", "being", "to", "a", "an", "the", "of", "in", "on", "at",
        "more", "less", "fewer"};
    return words;
}

bool is_content_word(const std::string& tok) {
    if (tok.empty() || !std::isalpha(static_cast<unsigned char>(tok[0]))) return false;
    return !is_function_word(to_lower(tok));
}

}  // namespace

bool is_function_word(const std::string& lowered) { return function_words().count(lowered) > 0; }

std::string extract_relation(const std::string& text, std::span<const std::string> adjectives) {
    if (text.empty()) return "";
    std::vector<std::string> tokens;
    try {
        tokens = word_tokenize(text);
    } catch (...) {
        return "";
    }
    std::set<std::string> lexicon;
    for (const auto& adj : adjectives) lexicon.insert(to_lower(adj));

    for (size_t i = 0; i < tokens.size(); ++i) {
        const std::string tok = to_lower(tokens[i]);
        if (tok == "more" || tok == "less" || tok == "fewer") {
            if (i + 1 < tokens.size() && is_content_word(tokens[i + 1]))
                return tok + " " + to_lower(tokens[i + 1]);
            if (lexicon.count(tok)) return tok;
            continue;
        }
        if (lexicon.count(tok)) return tok;
    }
    return "";
}

}  // namespace compkb
