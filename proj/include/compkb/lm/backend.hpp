#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "compkb/lm/vocab.hpp"

namespace compkb {

struct TokenSeq {
    std::vector<TokenId> ids;
    std::string surface;
};

// Length-penalized sequence score: value = logprob_sum / length^alpha.
struct SequenceScore {
    double logprob_sum = 0.0;
    int length = 0;
    double alpha = 0.0;
    double value = 0.0;
    std::vector<double> token_logprobs;  // per-token, for audit
};

// Language-model abstraction the decoder and filters run against. Backends
// must tolerate concurrent read-only queries.
class LmBackend {
public:
    virtual ~LmBackend() = default;

    virtual const Vocabulary& vocab() const = 0;

    // Deterministic tokenization; unknown tokens map to the reserved unk id.
    virtual TokenSeq tokenize(const std::string& text) const = 0;

    virtual std::string detokenize(std::span<const TokenId> ids) const = 0;

    // Log-probability over the full vocabulary for the next token. The vector
    // has vocab().size() entries and exp-sums to 1 for the reference backend.
    virtual std::vector<double> next_logprobs(std::span<const TokenId> prefix) const = 0;

    // Strict token lookup used when compiling constraint literals: returns
    // nullopt if any token is out of vocabulary.
    std::optional<std::vector<TokenId>> lookup_tokens(const std::string& text) const;

    // Scores `seq` conditioned on `context` (empty context scores from
    // scratch). value = sum(logprob) / N^alpha.
    SequenceScore score_sequence(std::span<const TokenId> seq, double alpha,
                                 std::span<const TokenId> context = {}) const;

    // exp(-score.value); used for prompt filtering and surrogate ranking.
    double length_penalized_perplexity(const std::string& text, double alpha) const;
};

}  // namespace compkb
