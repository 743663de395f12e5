#include "compkb/embeddings.hpp"

#include <cmath>

#include "compkb/errors.hpp"
#include "compkb/text.hpp"

namespace compkb {

double cosine(const Embedding& a, const Embedding& b) {
    const Embedding& small = a.size() <= b.size() ? a : b;
    const Embedding& large = a.size() <= b.size() ? b : a;
    double dot = 0.0;
    for (const auto& [feat, val] : small) {
        auto it = large.find(feat);
        if (it != large.end()) dot += val * it->second;
    }
    return dot;
}

std::vector<Embedding> NgramEmbedder::embed(std::span<const std::string> texts) {
    if (texts.empty()) throw Error("embed requires at least one text");
    std::vector<Embedding> out;
    out.reserve(texts.size());
    for (const auto& text : texts) {
        const auto tokens = word_tokenize(text);
        Embedding vec;
        for (const auto& tok : tokens) vec["1:" + to_lower(tok)] += 1.0;
        if (opts_.bigrams) {
            for (size_t i = 0; i + 1 < tokens.size(); ++i)
                vec["2:" + to_lower(tokens[i]) + " " + to_lower(tokens[i + 1])] += 1.0;
        }
        double norm = 0.0;
        for (const auto& [_, v] : vec) norm += v * v;
        norm = std::sqrt(norm);
        for (auto& [_, v] : vec) v /= norm;
        out.push_back(std::move(vec));
    }
    return out;
}

}  // namespace compkb
