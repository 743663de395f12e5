#include "compkb/lm/ngram_model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "compkb/errors.hpp"
#include "compkb/text.hpp"

namespace compkb {

using nlohmann::json;

NgramLm NgramLm::train(std::istream& corpus, const NgramOptions& opts) {
    if (opts.order < 1) throw TrainError("n-gram order must be >= 1");
    if (opts.add_k < 0.0) throw TrainError("add-k smoothing requires k >= 0");

    NgramLm lm;
    lm.opts_ = opts;
    lm.counts_.resize(static_cast<size_t>(opts.order));

    std::string line;
    uint64_t total_tokens = 0;
    while (std::getline(corpus, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::vector<TokenId> toks;
        for (const auto& word : word_tokenize(line)) toks.push_back(lm.vocab_.add(word));
        toks.push_back(Vocabulary::kEos);
        for (size_t i = 0; i < toks.size(); ++i) {
            ++total_tokens;
            const size_t max_ctx = std::min<size_t>(static_cast<size_t>(opts.order) - 1, i);
            for (size_t len = 0; len <= max_ctx; ++len) {
                ContextKey key(toks.begin() + static_cast<long>(i - len),
                               toks.begin() + static_cast<long>(i));
                auto& cc = lm.counts_[len][key];
                ++cc.next[toks[i]];
                ++cc.total;
            }
        }
    }
    if (total_tokens == 0) throw TrainError("training corpus is empty");
    return lm;
}

NgramLm NgramLm::train_file(const std::filesystem::path& corpus, const NgramOptions& opts) {
    std::ifstream in(corpus);
    if (!in) throw TrainError("cannot open corpus file: " + corpus.string());
    return train(in, opts);
}

TokenSeq NgramLm::tokenize(const std::string& text) const {
    TokenSeq seq;
    std::vector<std::string> words = word_tokenize(text);
    for (const auto& w : words) {
        auto id = vocab_.find(w);
        seq.ids.push_back(id ? *id : Vocabulary::kUnk);
    }
    seq.surface = join_tokens(words);
    return seq;
}

std::string NgramLm::detokenize(std::span<const TokenId> ids) const {
    std::vector<std::string> words;
    words.reserve(ids.size());
    for (TokenId id : ids) words.push_back(vocab_.text(id));
    return join_tokens(words);
}

const NgramLm::ContextCounts* NgramLm::find_context(std::span<const TokenId> ctx) const {
    ContextKey key(ctx.begin(), ctx.end());
    const auto& table = counts_[ctx.size()];
    auto it = table.find(key);
    if (it == table.end() || it->second.total == 0) return nullptr;
    return &it->second;
}

std::vector<double> NgramLm::next_logprobs(std::span<const TokenId> prefix) const {
    const size_t vocab_size = vocab_.size();
    const size_t max_ctx = std::min<size_t>(static_cast<size_t>(opts_.order) - 1, prefix.size());

    // Back off to the longest observed context; the empty context (unigram
    // counts over the whole corpus) always exists after training.
    const ContextCounts* cc = nullptr;
    for (size_t len = max_ctx; ; --len) {
        cc = find_context(prefix.subspan(prefix.size() - len, len));
        if (cc || len == 0) break;
    }
    if (!cc) throw BackendError("n-gram model has no unigram counts (untrained model)");

    const double k = opts_.add_k;
    const double denom = static_cast<double>(cc->total) + k * static_cast<double>(vocab_size);
    std::vector<double> out(vocab_size, k > 0.0 ? std::log(k / denom)
                                                : -std::numeric_limits<double>::infinity());
    for (const auto& [tok, count] : cc->next) {
        out[static_cast<size_t>(tok)] = std::log((static_cast<double>(count) + k) / denom);
    }
    return out;
}

void NgramLm::save(std::ostream& out) const {
    json j;
    j["order"] = opts_.order;
    j["add_k"] = opts_.add_k;
    json vocab = json::array();
    for (size_t i = 0; i < vocab_.size(); ++i) vocab.push_back(vocab_.text(static_cast<TokenId>(i)));
    j["vocab"] = std::move(vocab);

    json levels = json::array();
    for (const auto& table : counts_) {
        // Sort contexts for byte-identical output.
        std::vector<const ContextKey*> keys;
        keys.reserve(table.size());
        for (const auto& [key, _] : table) keys.push_back(&key);
        std::sort(keys.begin(), keys.end(),
                  [](const ContextKey* a, const ContextKey* b) { return *a < *b; });
        json level = json::array();
        for (const ContextKey* key : keys) {
            const auto& cc = table.at(*key);
            json nexts = json::array();
            for (const auto& [tok, count] : cc.next) nexts.push_back({tok, count});
            level.push_back({{"ctx", *key}, {"next", std::move(nexts)}});
        }
        levels.push_back(std::move(level));
    }
    j["counts"] = std::move(levels);
    out << j.dump() << '\n';
}

void NgramLm::save_file(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot write model file: " + path.string());
    save(out);
}

NgramLm NgramLm::load(std::istream& in) {
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw IngestError(std::string("malformed n-gram model: ") + e.what());
    }
    NgramLm lm;
    lm.opts_.order = j.at("order").get<int>();
    lm.opts_.add_k = j.at("add_k").get<double>();
    const auto vocab = j.at("vocab").get<std::vector<std::string>>();
    for (size_t i = 2; i < vocab.size(); ++i) lm.vocab_.add(vocab[i]);
    lm.counts_.resize(static_cast<size_t>(lm.opts_.order));
    const auto& levels = j.at("counts");
    for (size_t len = 0; len < levels.size() && len < lm.counts_.size(); ++len) {
        for (const auto& entry : levels[len]) {
            ContextKey key = entry.at("ctx").get<ContextKey>();
            auto& cc = lm.counts_[len][key];
            for (const auto& pair : entry.at("next")) {
                TokenId tok = pair.at(0).get<TokenId>();
                uint64_t count = pair.at(1).get<uint64_t>();
                cc.next[tok] = count;
                cc.total += count;
            }
        }
    }
    return lm;
}

NgramLm NgramLm::load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read model file: " + path.string());
    return load(in);
}

}  // namespace compkb
