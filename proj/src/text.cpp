#include "compkb/text.hpp"

#include <algorithm>
#include <cctype>

#include "compkb/errors.hpp"

namespace compkb {

namespace {

bool is_detachable(char c) {
    switch (c) {
        case '.': case ',': case ';': case ':': case '!': case '?':
        case '(': case ')': case '[': case ']': case '"':
            return true;
        default:
            return false;
    }
}

}  // namespace

std::vector<std::string> word_tokenize(std::string_view text) {
    if (text.empty()) throw Error("cannot tokenize empty text");
    std::vector<std::string> out;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        std::string_view chunk = text.substr(i, j - i);
        i = j;

        size_t lead = 0;
        while (lead < chunk.size() && is_detachable(chunk[lead])) ++lead;
        size_t trail = chunk.size();
        while (trail > lead && is_detachable(chunk[trail - 1])) --trail;

        for (size_t k = 0; k < lead; ++k) out.emplace_back(1, chunk[k]);
        if (trail > lead) out.emplace_back(chunk.substr(lead, trail - lead));
        for (size_t k = trail; k < chunk.size(); ++k) out.emplace_back(1, chunk[k]);
    }
    if (out.empty()) throw Error("cannot tokenize whitespace-only text");
    return out;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i];
    }
    return out;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace compkb
