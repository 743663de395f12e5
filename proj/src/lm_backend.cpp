#include "compkb/lm/backend.hpp"

#include <cmath>

#include "compkb/errors.hpp"
#include "compkb/text.hpp"

namespace compkb {

std::optional<std::vector<TokenId>> LmBackend::lookup_tokens(const std::string& text) const {
    std::vector<TokenId> ids;
    for (const auto& tok : word_tokenize(text)) {
        auto id = vocab().find(tok);
        if (!id) return std::nullopt;
        ids.push_back(*id);
    }
    return ids;
}

SequenceScore LmBackend::score_sequence(std::span<const TokenId> seq, double alpha,
                                        std::span<const TokenId> context) const {
    if (seq.empty()) throw Error("score_sequence requires a non-empty sequence");
    if (alpha < 0.0) throw Error("score_sequence requires alpha >= 0");

    SequenceScore score;
    score.alpha = alpha;
    score.length = static_cast<int>(seq.size());
    std::vector<TokenId> prefix(context.begin(), context.end());
    prefix.reserve(context.size() + seq.size());
    for (TokenId tok : seq) {
        const auto lp = next_logprobs(prefix);
        score.token_logprobs.push_back(lp.at(static_cast<size_t>(tok)));
        score.logprob_sum += score.token_logprobs.back();
        prefix.push_back(tok);
    }
    score.value = score.logprob_sum / std::pow(static_cast<double>(score.length), alpha);
    return score;
}

double LmBackend::length_penalized_perplexity(const std::string& text, double alpha) const {
    const TokenSeq seq = tokenize(text);
    return std::exp(-score_sequence(seq.ids, alpha).value);
}

}  // namespace compkb
