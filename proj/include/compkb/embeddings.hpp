#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

namespace compkb {

// Sparse unit-norm feature vector keyed by feature string.
using Embedding = std::map<std::string, double>;

double cosine(const Embedding& a, const Embedding& b);

class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;
    // Returns one L2-normalized vector per input text.
    virtual std::vector<Embedding> embed(std::span<const std::string> texts) = 0;
};

struct EmbedOptions {
    bool bigrams = true;
};

// Reference provider: L2-normalized unigram (+ bigram) count vectors.
class NgramEmbedder final : public EmbeddingProvider {
public:
    explicit NgramEmbedder(EmbedOptions opts = {}) : opts_(opts) {}
    std::vector<Embedding> embed(std::span<const std::string> texts) override;

private:
    EmbedOptions opts_;
};

}  // namespace compkb
