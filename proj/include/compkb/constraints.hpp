#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "compkb/lm/backend.hpp"

namespace compkb {

enum class Polarity { positive, negative };
enum class ClauseKind { fixed, dynamic_adjective };

// A phrase whose presence (positive) or absence (negative) is constrained.
struct Literal {
    std::string surface;
    std::vector<TokenId> phrase;
    std::vector<uint16_t> fail;  // KMP failure links over `phrase`
    Polarity polarity = Polarity::positive;
    uint16_t clause = 0;
    bool feasible = true;  // false when a token fell outside the vocabulary
};

struct Clause {
    ClauseKind kind = ClauseKind::fixed;
    Polarity polarity = Polarity::positive;
    std::vector<uint32_t> literal_ids;
    // Satisfaction positions (1-based) at which this clause may be fulfilled.
    // Empty for negative clauses.
    std::vector<uint8_t> order_indices;
};

// Per-role order-index overrides; an empty set keeps the default
// (aux at position 1, adverb anywhere, adjective at the final position).
struct ClauseOrdering {
    std::vector<int> aux;
    std::vector<int> adverb;
    std::vector<int> adjective;
};

class ConstraintState;

// Immutable after compile; shared read-only across decode workers.
class ConstraintSet {
public:
    double lambda = 10.0;
    double beta = 1.25;
    int k_adjectives = 5;

    std::vector<Clause> clauses;
    std::vector<Literal> literals;
    std::vector<uint32_t> adjective_literals;  // sorted by surface
    int positive_clause_count = 0;             // P: positions run 1..P
    int aux_clause = -1;
    int adverb_clause = -1;
    int adjective_clause = -1;

    bool satisfiable = true;
    std::string infeasibility_reason;

    ConstraintState initial_state() const;

    const std::vector<uint32_t>* literals_starting_with(TokenId token) const {
        auto it = first_token_.find(token);
        return it == first_token_.end() ? nullptr : &it->second;
    }

    bool clause_is_positive(uint16_t clause) const {
        return clauses[clause].polarity == Polarity::positive;
    }

    friend ConstraintSet compile_constraints(const LmBackend& lm, const std::string& aux_verb,
                                             const std::string& adverb,
                                             std::span<const std::string> negatives,
                                             std::span<const std::string> adjectives,
                                             const ClauseOrdering& ordering, double lambda,
                                             double beta, int k_adjectives);

private:
    std::unordered_map<TokenId, std::vector<uint32_t>> first_token_;
};

// One positive single-literal clause per aux verb and adverb, one dynamic
// adjective clause over the lexicon, one negative clause per negative phrase.
ConstraintSet compile_constraints(const LmBackend& lm, const std::string& aux_verb,
                                  const std::string& adverb,
                                  std::span<const std::string> negatives,
                                  std::span<const std::string> adjectives,
                                  const ClauseOrdering& ordering = {}, double lambda = 10.0,
                                  double beta = 1.25, int k_adjectives = 5);

struct ActiveMatch {
    uint32_t literal;
    uint16_t matched;  // tokens of the literal phrase currently matched (>= 1)
};

// What the latest token did, for reward gating in the decoder.
struct AdvanceInfo {
    bool fixed_positive_progress = false;           // extended or completed a fixed positive literal
    std::vector<uint32_t> adjective_progress;       // adjective literals extended or completed
};

// Per-hypothesis satisfaction/progress tracking. Copied on beam expansion,
// never shared mutably.
class ConstraintState {
public:
    static constexpr uint8_t kUnsatisfied = 0;

    std::vector<uint8_t> clause_pos;  // 0 = unsatisfied, else 1-based position
    std::vector<ActiveMatch> active;  // sorted by literal id
    uint8_t satisfied_count = 0;      // positive clauses satisfied so far
    bool negative_violated = false;
    int32_t satisfied_adjective = -1;  // literal id that satisfied the adjective clause

    bool clause_satisfied(uint16_t clause) const { return clause_pos[clause] != kUnsatisfied; }
};

// Feeds one token through every literal automaton. Completing a positive
// literal assigns its clause the next satisfaction position; completing a
// negative literal flags violation. Uses KMP failure links so overlapping
// occurrences are never missed.
ConstraintState advance(const ConstraintState& state, const ConstraintSet& set, TokenId token,
                        AdvanceInfo* info = nullptr);

// Max over positive literals of |matched| / |phrase|, counting any fully
// satisfied positive clause as 1. Pure; in [0, 1].
double progress(const ConstraintState& state, const ConstraintSet& set);

// False once a satisfied clause sits outside its order indices or an
// unsatisfied positive clause has no feasible position left.
bool order_valid(const ConstraintState& state, const ConstraintSet& set);

// The k_adjectives lexicon entries whose first tokens currently score highest;
// empty once the adjective clause is satisfied. Ties broken lexicographically.
std::vector<uint32_t> dynamic_topk(const ConstraintState& state, const ConstraintSet& set,
                                   std::span<const double> next_logprobs);

bool all_positive_satisfied(const ConstraintState& state, const ConstraintSet& set);

}  // namespace compkb
