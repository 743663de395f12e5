#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace compkb {

using TokenId = int32_t;

// Closed token inventory with two reserved entries: <unk> for out-of-vocabulary
// tokens and </s> for end of sequence.
class Vocabulary {
public:
    static constexpr TokenId kUnk = 0;
    static constexpr TokenId kEos = 1;

    Vocabulary() {
        add("<unk>");
        add("</s>");
    }

    TokenId add(std::string_view token) {
        auto it = index_.find(std::string(token));
        if (it != index_.end()) return it->second;
        TokenId id = static_cast<TokenId>(tokens_.size());
        tokens_.emplace_back(token);
        index_.emplace(tokens_.back(), id);
        return id;
    }

    std::optional<TokenId> find(std::string_view token) const {
        auto it = index_.find(std::string(token));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const std::string& text(TokenId id) const { return tokens_.at(static_cast<size_t>(id)); }

    size_t size() const { return tokens_.size(); }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, TokenId> index_;
};

}  // namespace compkb
