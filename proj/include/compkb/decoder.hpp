#pragma once

#include <span>
#include <string>
#include <vector>

#include "compkb/constraints.hpp"
#include "compkb/lm/backend.hpp"

namespace compkb {

struct DecodeParams {
    int beam_size = 15;
    double alpha = 0.1;       // length penalty on the final score S
    int no_repeat_ngram = 3;  // 0 disables
    double beta = 1.25;       // in-progress reward factor (mirrored into ConstraintSet)
    int tolerance = 3;        // allowed satisfied-count gap before pruning
    int max_length = 32;      // continuation token budget
    int num_return = 10;
    int expand_top_v = 128;   // candidate tokens taken from the raw distribution
    std::vector<std::string> eos_punct = {"."};

    void validate() const;
};

struct Hypothesis {
    std::vector<TokenId> tokens;  // prompt + continuation
    int prompt_len = 0;
    double logprob_sum = 0.0;  // continuation only
    ConstraintState state;
    bool finished = false;
};

// A banked generation with its satisfied-constraint tuple and final score S.
struct GenerationRecord {
    std::string text;          // prompt + continuation, terminator stripped
    std::string continuation;  // continuation only, terminator stripped
    std::string aux;
    std::string adverb;
    std::string adjective;  // lexicon entry that satisfied the adjective clause
    double score = 0.0;     // S = logprob_sum / N^alpha over the continuation
    std::vector<TokenId> tokens;  // full sequence including terminator
    int prompt_len = 0;
    int combo_index = -1;  // pass index when produced by run_pass_schedule
};

struct DecodeStats {
    uint64_t steps = 0;       // beam expansion steps executed
    uint64_t candidates = 0;  // candidate extensions scored
};

struct DecodeResult {
    std::vector<GenerationRecord> records;
    std::vector<std::string> diagnostics;
    DecodeStats stats;
};

// score = logprob_sum + [beta if made_progress] * lambda * progress(state).
double step_score(const Hypothesis& h, const ConstraintSet& set, bool made_progress);

// Constrained beam search: expand, prune (negative completion / order
// violation / n-gram repeat), drop candidates more than `tolerance` satisfied
// clauses behind the best, keep the best candidate of every satisfied-count
// group, fill the beam by global score. Finished hypotheses satisfying all
// positive clauses are banked and the top num_return by S are returned.
DecodeResult decode(const std::string& prompt, const ConstraintSet& set,
                    const DecodeParams& params, const LmBackend& lm);

struct PassCombo {
    std::string aux_verb;
    std::string adverb;
};

struct SharedConstraintConfig {
    std::vector<std::string> negatives;
    std::vector<std::string> adjectives;
    ClauseOrdering ordering;
    double lambda = 10.0;
    int k_adjectives = 5;
};

// One decode per (aux, adverb) combo; per-pass failures become diagnostics and
// the remaining passes continue. Records are tagged with their combo index.
DecodeResult run_pass_schedule(const std::string& prompt, std::span<const PassCombo> combos,
                               const SharedConstraintConfig& shared, const DecodeParams& params,
                               const LmBackend& lm);

}  // namespace compkb
