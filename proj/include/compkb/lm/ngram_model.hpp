#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "compkb/lm/backend.hpp"

namespace compkb {

struct NgramOptions {
    int order = 3;
    double add_k = 1.0;
};

// Word-level add-k n-gram model with backoff to shorter contexts. Fully
// deterministic: the same corpus yields the same model byte-for-byte when
// serialized. Serves as the desk-scale stand-in for a neural LM.
class NgramLm final : public LmBackend {
public:
    static NgramLm train(std::istream& corpus, const NgramOptions& opts = {});
    static NgramLm train_file(const std::filesystem::path& corpus, const NgramOptions& opts = {});

    void save(std::ostream& out) const;
    void save_file(const std::filesystem::path& path) const;
    static NgramLm load(std::istream& in);
    static NgramLm load_file(const std::filesystem::path& path);

    const Vocabulary& vocab() const override { return vocab_; }
    TokenSeq tokenize(const std::string& text) const override;
    std::string detokenize(std::span<const TokenId> ids) const override;
    std::vector<double> next_logprobs(std::span<const TokenId> prefix) const override;

    int order() const { return opts_.order; }
    double add_k() const { return opts_.add_k; }

private:
    NgramLm() = default;

    struct ContextCounts {
        std::map<TokenId, uint64_t> next;  // ordered for deterministic serialization
        uint64_t total = 0;
    };
    using ContextKey = std::vector<TokenId>;

    struct KeyHash {
        size_t operator()(const ContextKey& k) const {
            size_t h = 1469598103934665603ull;
            for (TokenId id : k) {
                h ^= static_cast<size_t>(id);
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    const ContextCounts* find_context(std::span<const TokenId> ctx) const;

    NgramOptions opts_;
    Vocabulary vocab_;
    // counts_[len] maps a length-len context to its successor counts.
    std::vector<std::unordered_map<ContextKey, ContextCounts, KeyHash>> counts_;
};

}  // namespace compkb
