#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "compkb/embeddings.hpp"
#include "compkb/nli.hpp"

namespace compkb {

// Filter-cascade stages in execution order. stage_flags on a record are
// monotone: a later flag implies all earlier ones.
enum class StageFlag : uint8_t {
    deduped = 1 << 0,
    group_selected = 1 << 1,
    contradiction_ok = 1 << 2,
    topk = 1 << 3,
    discriminator_kept = 1 << 4,
};

constexpr uint8_t stage_bit(StageFlag f) { return static_cast<uint8_t>(f); }

bool stage_flags_monotone(uint8_t flags);
std::vector<std::string> stage_flag_names(uint8_t flags);
std::optional<uint8_t> stage_flags_from_names(const std::vector<std::string>& names);

struct KnowledgeRecord {
    std::string record_id;
    std::string class_id;
    std::string entity_a;
    std::string entity_b;
    std::string text;
    std::string aux;
    std::string adverb;
    std::string adjective;
    double decode_score = 0.0;  // S, or a length-penalized-perplexity surrogate
    std::optional<int> cluster_id;
    uint8_t stage_flags = 0;
    std::optional<double> discriminator_score;
    std::string source_model;

    std::pair<std::string, std::string> pair_key() const { return {entity_a, entity_b}; }
};

// Average-linkage agglomerative clustering with distance = 1 - cosine,
// merging while the minimum inter-cluster distance <= threshold. Within each
// cluster only the best decode_score survives (ties by record_id). All input
// records must share one entity pair. Survivors carry cluster_id + flag.
std::vector<KnowledgeRecord> dedup_cluster(std::vector<KnowledgeRecord> records,
                                           EmbeddingProvider& provider, double distance_threshold);

// One survivor per (aux, adverb, adjective) key, best decode_score. Records
// with no adjective are excluded with a diagnostic.
std::vector<KnowledgeRecord> group_select(std::vector<KnowledgeRecord> records,
                                          std::vector<std::string>* diagnostics = nullptr);

// Pairwise NLI in both directions within one entity pair's records; a record
// is discarded iff it contradicts more than half of its compared pairs.
// Provider failures count as neutral and are logged as diagnostics.
std::vector<KnowledgeRecord> contradiction_filter(std::vector<KnowledgeRecord> records,
                                                  NliProvider& nli,
                                                  const NliThresholds& thresholds = {},
                                                  std::vector<std::string>* diagnostics = nullptr);

// Top k by decode_score, ties by record_id.
std::vector<KnowledgeRecord> topk_per_pair(std::vector<KnowledgeRecord> records, int k = 5);

class KnowledgeScorer {
public:
    virtual ~KnowledgeScorer() = default;
    virtual double score(const std::string& text) = 0;  // accept probability in [0,1]
};

struct DiscriminatorFilterResult {
    std::vector<KnowledgeRecord> survivors;
    double realized_threshold = 0.0;  // lowest score among the kept records
};

// Keeps the top ceil(keep_fraction * N) records by discriminator score.
// A scorer failure aborts the stage with the cascade state unchanged.
DiscriminatorFilterResult discriminator_filter(std::vector<KnowledgeRecord> records,
                                               KnowledgeScorer& scorer, double keep_fraction);

// Groups records by entity pair preserving first-seen pair order.
std::vector<std::vector<KnowledgeRecord>> partition_by_pair(std::vector<KnowledgeRecord> records);

}  // namespace compkb
