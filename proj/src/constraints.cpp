#include "compkb/constraints.hpp"

#include <algorithm>

#include "compkb/errors.hpp"

namespace compkb {

namespace {

std::vector<uint16_t> kmp_failure(const std::vector<TokenId>& phrase) {
    std::vector<uint16_t> fail(phrase.size(), 0);
    for (size_t i = 1; i < phrase.size(); ++i) {
        uint16_t l = fail[i - 1];
        while (l > 0 && phrase[i] != phrase[l]) l = fail[l - 1];
        if (phrase[i] == phrase[l]) ++l;
        fail[i] = l;
    }
    return fail;
}

std::vector<uint8_t> make_order_set(const std::vector<int>& requested, int positions,
                                    std::vector<uint8_t> fallback) {
    if (requested.empty()) return fallback;
    std::vector<uint8_t> out;
    for (int p : requested) {
        if (p < 1 || p > positions)
            throw Error("order index " + std::to_string(p) + " outside 1.." +
                        std::to_string(positions));
        out.push_back(static_cast<uint8_t>(p));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

ConstraintState ConstraintSet::initial_state() const {
    ConstraintState state;
    state.clause_pos.assign(clauses.size(), ConstraintState::kUnsatisfied);
    return state;
}

ConstraintSet compile_constraints(const LmBackend& lm, const std::string& aux_verb,
                                  const std::string& adverb,
                                  std::span<const std::string> negatives,
                                  std::span<const std::string> adjectives,
                                  const ClauseOrdering& ordering, double lambda, double beta,
                                  int k_adjectives) {
    if (lambda <= 0.0) throw Error("lambda must be > 0");
    if (beta < 1.0) throw Error("beta must be >= 1");
    if (k_adjectives < 1) throw Error("k_adjectives must be >= 1");

    ConstraintSet set;
    set.lambda = lambda;
    set.beta = beta;
    set.k_adjectives = k_adjectives;

    auto add_literal = [&](const std::string& surface, Polarity polarity, uint16_t clause,
                           bool required) -> std::optional<uint32_t> {
        if (surface.empty() ||
            surface.find_first_not_of(" \t\r\n") == std::string::npos)
            throw Error("constraint phrase tokenizes to empty");
        Literal lit;
        lit.surface = surface;
        lit.polarity = polarity;
        lit.clause = clause;
        auto ids = lm.lookup_tokens(surface);
        if (ids) {
            lit.phrase = std::move(*ids);
            lit.fail = kmp_failure(lit.phrase);
        } else {
            lit.feasible = false;
            if (required) return std::nullopt;
        }
        set.literals.push_back(std::move(lit));
        return static_cast<uint32_t>(set.literals.size() - 1);
    };

    // Positive clauses: aux verb, adverb, dynamic adjective. Positions 1..3.
    set.aux_clause = 0;
    set.adverb_clause = 1;
    set.adjective_clause = 2;
    set.positive_clause_count = 3;
    const int P = set.positive_clause_count;

    std::vector<uint8_t> all_positions;
    for (int p = 1; p <= P; ++p) all_positions.push_back(static_cast<uint8_t>(p));

    Clause aux;
    aux.order_indices = make_order_set(ordering.aux, P, {1});
    set.clauses.push_back(aux);
    Clause adv;
    adv.order_indices = make_order_set(ordering.adverb, P, all_positions);
    set.clauses.push_back(adv);
    Clause adj;
    adj.kind = ClauseKind::dynamic_adjective;
    adj.order_indices = make_order_set(ordering.adjective, P, {static_cast<uint8_t>(P)});
    set.clauses.push_back(adj);

    if (auto id = add_literal(aux_verb, Polarity::positive, 0, false))
        set.clauses[0].literal_ids.push_back(*id);
    if (auto id = add_literal(adverb, Polarity::positive, 1, false))
        set.clauses[1].literal_ids.push_back(*id);
    for (const auto& phrase : adjectives) {
        if (auto id = add_literal(phrase, Polarity::positive, 2, false)) {
            set.clauses[2].literal_ids.push_back(*id);
            if (set.literals[*id].feasible) set.adjective_literals.push_back(*id);
        }
    }
    std::sort(set.adjective_literals.begin(), set.adjective_literals.end(),
              [&](uint32_t a, uint32_t b) {
                  return set.literals[a].surface < set.literals[b].surface;
              });

    for (const auto& phrase : negatives) {
        Clause neg;
        neg.polarity = Polarity::negative;
        const auto clause_idx = static_cast<uint16_t>(set.clauses.size());
        set.clauses.push_back(neg);
        if (auto id = add_literal(phrase, Polarity::negative, clause_idx, false))
            set.clauses[clause_idx].literal_ids.push_back(*id);
    }

    // A positive clause with no in-vocabulary literal can never be satisfied.
    auto check_feasible = [&](int clause, const std::string& what) {
        bool any = false;
        for (uint32_t id : set.clauses[static_cast<size_t>(clause)].literal_ids)
            if (set.literals[id].feasible) any = true;
        if (!any) {
            set.satisfiable = false;
            if (!set.infeasibility_reason.empty()) set.infeasibility_reason += "; ";
            set.infeasibility_reason += what + " has no in-vocabulary literal";
        }
    };
    check_feasible(set.aux_clause, "aux verb clause ('" + aux_verb + "')");
    check_feasible(set.adverb_clause, "adverb clause ('" + adverb + "')");
    check_feasible(set.adjective_clause, "adjective clause");

    for (uint32_t id = 0; id < set.literals.size(); ++id) {
        const Literal& lit = set.literals[id];
        if (lit.feasible && !lit.phrase.empty())
            set.first_token_[lit.phrase[0]].push_back(id);
    }
    for (auto& [_, ids] : set.first_token_) std::sort(ids.begin(), ids.end());
    return set;
}

namespace {

// Completion bookkeeping shared by both match paths in advance().
void complete_literal(const ConstraintSet& set, uint32_t literal_id, ConstraintState& state) {
    const Literal& lit = set.literals[literal_id];
    if (lit.polarity == Polarity::negative) {
        state.negative_violated = true;
        return;
    }
    if (state.clause_satisfied(lit.clause)) return;
    ++state.satisfied_count;
    state.clause_pos[lit.clause] = state.satisfied_count;
    if (set.clauses[lit.clause].kind == ClauseKind::dynamic_adjective)
        state.satisfied_adjective = static_cast<int32_t>(literal_id);
}

}  // namespace

ConstraintState advance(const ConstraintState& state, const ConstraintSet& set, TokenId token,
                        AdvanceInfo* info) {
    ConstraintState next = state;
    next.active.clear();

    auto note_progress = [&](uint32_t literal_id) {
        if (!info) return;
        const Literal& lit = set.literals[literal_id];
        if (lit.polarity != Polarity::positive) return;
        if (set.clauses[lit.clause].kind == ClauseKind::dynamic_adjective)
            info->adjective_progress.push_back(literal_id);
        else
            info->fixed_positive_progress = true;
    };

    auto track = [&](uint32_t literal_id, uint16_t matched) {
        const Literal& lit = set.literals[literal_id];
        if (matched == lit.phrase.size()) {
            note_progress(literal_id);
            complete_literal(set, literal_id, next);
            // Keep matching after a completed negative so later overlapping
            // occurrences of other literals still see a consistent automaton;
            // satisfied positive clauses stop being tracked below.
            uint16_t cont = lit.fail.empty() ? 0 : lit.fail[matched - 1];
            if (cont > 0) next.active.push_back({literal_id, cont});
        } else if (matched > 0) {
            note_progress(literal_id);
            next.active.push_back({literal_id, matched});
        }
    };

    std::vector<uint32_t> touched;
    for (const ActiveMatch& am : state.active) {
        const Literal& lit = set.literals[am.literal];
        if (lit.polarity == Polarity::positive && next.clause_satisfied(lit.clause)) continue;
        touched.push_back(am.literal);
        uint16_t l = am.matched;
        while (l > 0 && lit.phrase[l] != token) l = lit.fail[l - 1];
        if (lit.phrase[l] == token) ++l;
        track(am.literal, l);
    }

    if (const auto* starters = set.literals_starting_with(token)) {
        for (uint32_t id : *starters) {
            if (std::find(touched.begin(), touched.end(), id) != touched.end()) continue;
            const Literal& lit = set.literals[id];
            if (lit.polarity == Polarity::positive && next.clause_satisfied(lit.clause)) continue;
            track(id, 1);
        }
    }

    // Drop stale matches for clauses satisfied during this step.
    std::erase_if(next.active, [&](const ActiveMatch& am) {
        const Literal& lit = set.literals[am.literal];
        return lit.polarity == Polarity::positive && next.clause_satisfied(lit.clause);
    });
    std::sort(next.active.begin(), next.active.end(),
              [](const ActiveMatch& a, const ActiveMatch& b) { return a.literal < b.literal; });
    return next;
}

double progress(const ConstraintState& state, const ConstraintSet& set) {
    if (state.satisfied_count > 0) return 1.0;
    double best = 0.0;
    for (const ActiveMatch& am : state.active) {
        const Literal& lit = set.literals[am.literal];
        if (lit.polarity != Polarity::positive) continue;
        best = std::max(best, static_cast<double>(am.matched) /
                                  static_cast<double>(lit.phrase.size()));
    }
    return best;
}

bool order_valid(const ConstraintState& state, const ConstraintSet& set) {
    const int P = set.positive_clause_count;
    for (size_t c = 0; c < set.clauses.size(); ++c) {
        const Clause& clause = set.clauses[c];
        if (clause.polarity != Polarity::positive) continue;
        const uint8_t pos = state.clause_pos[c];
        if (pos != ConstraintState::kUnsatisfied) {
            if (!std::binary_search(clause.order_indices.begin(), clause.order_indices.end(), pos))
                return false;
        } else {
            // Remaining feasible positions are satisfied_count+1 .. P.
            bool feasible = false;
            for (uint8_t p : clause.order_indices)
                if (p > state.satisfied_count && p <= P) feasible = true;
            if (!feasible) return false;
        }
    }
    return true;
}

std::vector<uint32_t> dynamic_topk(const ConstraintState& state, const ConstraintSet& set,
                                   std::span<const double> next_logprobs) {
    if (set.adjective_clause < 0 ||
        state.clause_satisfied(static_cast<uint16_t>(set.adjective_clause)))
        return {};
    std::vector<uint32_t> ranked = set.adjective_literals;
    const size_t k = std::min<size_t>(static_cast<size_t>(set.k_adjectives), ranked.size());
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<long>(k), ranked.end(),
                      [&](uint32_t a, uint32_t b) {
                          const double la =
                              next_logprobs[static_cast<size_t>(set.literals[a].phrase[0])];
                          const double lb =
                              next_logprobs[static_cast<size_t>(set.literals[b].phrase[0])];
                          if (la != lb) return la > lb;
                          return set.literals[a].surface < set.literals[b].surface;
                      });
    ranked.resize(k);
    return ranked;
}

bool all_positive_satisfied(const ConstraintState& state, const ConstraintSet& set) {
    return static_cast<int>(state.satisfied_count) == set.positive_clause_count;
}

}  // namespace compkb
