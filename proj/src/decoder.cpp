#include "compkb/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "compkb/errors.hpp"

namespace compkb {

void DecodeParams::validate() const {
    if (beam_size < 1) throw Error("beam_size must be >= 1");
    if (alpha < 0.0) throw Error("alpha must be >= 0");
    if (no_repeat_ngram < 0) throw Error("no_repeat_ngram must be >= 0");
    if (beta < 1.0) throw Error("beta must be >= 1");
    if (tolerance < 0) throw Error("tolerance must be >= 0");
    if (max_length < 1) throw Error("max_length must be >= 1");
    if (num_return < 1) throw Error("num_return must be >= 1");
    if (expand_top_v < 1) throw Error("expand_top_v must be >= 1");
}

double step_score(const Hypothesis& h, const ConstraintSet& set, bool made_progress) {
    const double reward = set.lambda * progress(h.state, set);
    return h.logprob_sum + (made_progress ? set.beta : 1.0) * reward;
}

namespace {

// Would appending `token` recreate an n-gram already present in `tokens`?
bool repeats_ngram(const std::vector<TokenId>& tokens, TokenId token, int n) {
    if (n <= 0) return false;
    const size_t len = tokens.size() + 1;
    if (len < static_cast<size_t>(n) + 1) return false;
    const size_t m = static_cast<size_t>(n);
    // The new n-gram is tokens[len-m .. len-2] + token.
    for (size_t start = 0; start + m < len; ++start) {
        bool match = true;
        for (size_t k = 0; k + 1 < m; ++k) {
            if (tokens[start + k] != tokens[len - m + k]) {
                match = false;
                break;
            }
        }
        if (match && tokens[start + m - 1] == token) return true;
    }
    return false;
}

struct Candidate {
    size_t parent;
    TokenId token;
    double logprob_sum;
    double score;
    ConstraintState state;
    int satisfied;
    bool finished;
};

struct Banked {
    std::vector<TokenId> tokens;
    double logprob_sum;
    double final_score;
    int32_t satisfied_adjective;
};

bool candidate_better(const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.logprob_sum != b.logprob_sum) return a.logprob_sum > b.logprob_sum;
    if (a.parent != b.parent) return a.parent < b.parent;
    return a.token < b.token;
}

}  // namespace

DecodeResult decode(const std::string& prompt, const ConstraintSet& set,
                    const DecodeParams& params, const LmBackend& lm) {
    params.validate();
    DecodeResult result;
    if (!set.satisfiable) {
        result.diagnostics.push_back("constraints unsatisfiable: " + set.infeasibility_reason);
        return result;
    }

    const TokenSeq prompt_seq = lm.tokenize(prompt);
    const int prompt_len = static_cast<int>(prompt_seq.ids.size());

    std::set<TokenId> terminators;
    terminators.insert(Vocabulary::kEos);
    for (const auto& punct : params.eos_punct)
        if (auto id = lm.vocab().find(punct)) terminators.insert(*id);

    std::vector<Hypothesis> live;
    {
        Hypothesis root;
        root.tokens = prompt_seq.ids;
        root.prompt_len = prompt_len;
        root.state = set.initial_state();
        live.push_back(std::move(root));
    }

    std::vector<Banked> banked;

    for (int step = 0; step < params.max_length && !live.empty(); ++step) {
        ++result.stats.steps;
        std::vector<Candidate> candidates;

        for (size_t hi = 0; hi < live.size(); ++hi) {
            const Hypothesis& h = live[hi];
            const std::vector<double> lp = lm.next_logprobs(h.tokens);
            const std::vector<uint32_t> promoted = dynamic_topk(h.state, set, lp);

            // Candidate tokens: the top of the raw distribution plus every
            // token that can extend a positive constraint, so constraint-
            // relevant tokens are never truncated away.
            std::set<TokenId> cand_tokens;
            {
                std::vector<TokenId> order(lp.size());
                for (size_t i = 0; i < lp.size(); ++i) order[i] = static_cast<TokenId>(i);
                const size_t top = std::min<size_t>(static_cast<size_t>(params.expand_top_v),
                                                    order.size());
                std::partial_sort(order.begin(), order.begin() + static_cast<long>(top),
                                  order.end(), [&](TokenId a, TokenId b) {
                                      if (lp[static_cast<size_t>(a)] != lp[static_cast<size_t>(b)])
                                          return lp[static_cast<size_t>(a)] >
                                                 lp[static_cast<size_t>(b)];
                                      return a < b;
                                  });
                cand_tokens.insert(order.begin(), order.begin() + static_cast<long>(top));
            }
            cand_tokens.insert(Vocabulary::kEos);
            for (const ActiveMatch& am : h.state.active) {
                const Literal& lit = set.literals[am.literal];
                if (lit.polarity == Polarity::positive && am.matched < lit.phrase.size())
                    cand_tokens.insert(lit.phrase[am.matched]);
            }
            for (size_t ci = 0; ci < set.clauses.size(); ++ci) {
                const Clause& clause = set.clauses[ci];
                if (clause.polarity != Polarity::positive ||
                    clause.kind == ClauseKind::dynamic_adjective)
                    continue;
                if (h.state.clause_satisfied(static_cast<uint16_t>(ci))) continue;
                for (uint32_t id : clause.literal_ids)
                    if (set.literals[id].feasible) cand_tokens.insert(set.literals[id].phrase[0]);
            }
            for (uint32_t id : promoted) cand_tokens.insert(set.literals[id].phrase[0]);

            for (TokenId tok : cand_tokens) {
                if (repeats_ngram(h.tokens, tok, params.no_repeat_ngram)) continue;
                ++result.stats.candidates;

                AdvanceInfo info;
                ConstraintState st = advance(h.state, set, tok, &info);
                if (st.negative_violated) continue;
                if (!order_valid(st, set)) continue;

                bool made_progress = info.fixed_positive_progress;
                if (!made_progress) {
                    for (uint32_t adj : info.adjective_progress) {
                        if (std::find(promoted.begin(), promoted.end(), adj) != promoted.end()) {
                            made_progress = true;
                            break;
                        }
                    }
                }

                Candidate c;
                c.parent = hi;
                c.token = tok;
                c.logprob_sum = h.logprob_sum + lp[static_cast<size_t>(tok)];
                c.state = std::move(st);
                c.satisfied = c.state.satisfied_count;
                const int cont_len = static_cast<int>(h.tokens.size()) - prompt_len + 1;
                c.finished = terminators.count(tok) > 0 || cont_len >= params.max_length;
                {
                    Hypothesis scored;
                    scored.logprob_sum = c.logprob_sum;
                    scored.state = c.state;
                    c.score = step_score(scored, set, made_progress);
                }

                if (c.finished) {
                    if (all_positive_satisfied(c.state, set)) {
                        Banked b;
                        b.tokens = h.tokens;
                        b.tokens.push_back(tok);
                        b.logprob_sum = c.logprob_sum;
                        b.final_score = c.logprob_sum /
                                        std::pow(static_cast<double>(cont_len), params.alpha);
                        b.satisfied_adjective = c.state.satisfied_adjective;
                        banked.push_back(std::move(b));
                    }
                    continue;
                }
                candidates.push_back(std::move(c));
            }
        }

        if (candidates.empty()) break;

        // Tolerance pruning against the best satisfied count this step.
        int max_sat = 0;
        for (const Candidate& c : candidates) max_sat = std::max(max_sat, c.satisfied);
        std::erase_if(candidates,
                      [&](const Candidate& c) { return c.satisfied < max_sat - params.tolerance; });

        std::sort(candidates.begin(), candidates.end(), candidate_better);

        // One winner per satisfied-count group, then fill by global score.
        std::vector<size_t> chosen;
        std::set<int> groups_taken;
        for (size_t i = 0; i < candidates.size(); ++i) {
            if (groups_taken.insert(candidates[i].satisfied).second) chosen.push_back(i);
        }
        for (size_t i = 0; i < candidates.size() &&
                           chosen.size() < static_cast<size_t>(params.beam_size);
             ++i) {
            if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) chosen.push_back(i);
        }
        std::sort(chosen.begin(), chosen.end());
        if (chosen.size() > static_cast<size_t>(params.beam_size)) {
            // More groups than beam slots: keep the best-scoring group winners.
            chosen.resize(static_cast<size_t>(params.beam_size));
        }

        std::vector<Hypothesis> next_live;
        next_live.reserve(chosen.size());
        for (size_t idx : chosen) {
            Candidate& c = candidates[idx];
            Hypothesis h;
            h.tokens = live[c.parent].tokens;
            h.tokens.push_back(c.token);
            h.prompt_len = prompt_len;
            h.logprob_sum = c.logprob_sum;
            h.state = std::move(c.state);
            next_live.push_back(std::move(h));
        }
        live = std::move(next_live);
    }

    if (banked.empty()) {
        result.diagnostics.push_back("no generation satisfied all positive clauses for prompt: " +
                                     prompt);
        return result;
    }

    std::sort(banked.begin(), banked.end(), [](const Banked& a, const Banked& b) {
        if (a.final_score != b.final_score) return a.final_score > b.final_score;
        return a.tokens < b.tokens;
    });

    const size_t n_out = std::min<size_t>(static_cast<size_t>(params.num_return), banked.size());
    for (size_t i = 0; i < n_out; ++i) {
        const Banked& b = banked[i];
        GenerationRecord rec;
        rec.tokens = b.tokens;
        rec.prompt_len = prompt_len;
        rec.score = b.final_score;
        if (b.satisfied_adjective >= 0)
            rec.adjective = set.literals[static_cast<size_t>(b.satisfied_adjective)].surface;
        std::span<const TokenId> cont(b.tokens.data() + prompt_len, b.tokens.size() - prompt_len);
        // Strip the terminator token from the rendered text.
        std::span<const TokenId> body = cont;
        if (!body.empty() && terminators.count(body.back())) body = body.subspan(0, body.size() - 1);
        rec.continuation = body.empty() ? "" : lm.detokenize(body);
        rec.text = rec.continuation.empty() ? prompt_seq.surface
                                            : prompt_seq.surface + " " + rec.continuation;
        result.records.push_back(std::move(rec));
    }
    return result;
}

DecodeResult run_pass_schedule(const std::string& prompt, std::span<const PassCombo> combos,
                               const SharedConstraintConfig& shared, const DecodeParams& params,
                               const LmBackend& lm) {
    if (combos.empty()) throw Error("run_pass_schedule requires at least one combo");
    DecodeResult out;
    for (size_t i = 0; i < combos.size(); ++i) {
        const PassCombo& combo = combos[i];
        try {
            ConstraintSet set =
                compile_constraints(lm, combo.aux_verb, combo.adverb, shared.negatives,
                                    shared.adjectives, shared.ordering, shared.lambda, params.beta,
                                    shared.k_adjectives);
            DecodeResult pass = decode(prompt, set, params, lm);
            for (auto& rec : pass.records) {
                rec.aux = combo.aux_verb;
                rec.adverb = combo.adverb;
                rec.combo_index = static_cast<int>(i);
                out.records.push_back(std::move(rec));
            }
            for (auto& d : pass.diagnostics)
                out.diagnostics.push_back("pass " + std::to_string(i) + ": " + d);
            out.stats.steps += pass.stats.steps;
            out.stats.candidates += pass.stats.candidates;
        } catch (const std::exception& e) {
            out.diagnostics.push_back("pass " + std::to_string(i) + " failed: " + e.what());
        }
    }
    return out;
}

}  // namespace compkb
