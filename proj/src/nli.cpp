#include "compkb/nli.hpp"

#include <algorithm>

#include "compkb/relation.hpp"
#include "compkb/text.hpp"

namespace compkb {

std::string to_string(NliLabel label) {
    switch (label) {
        case NliLabel::entailment: return "entailment";
        case NliLabel::contradiction: return "contradiction";
        case NliLabel::neutral: return "neutral";
    }
    return "neutral";
}

std::optional<NliLabel> nli_label_from_string(const std::string& s) {
    if (s == "entailment") return NliLabel::entailment;
    if (s == "contradiction") return NliLabel::contradiction;
    if (s == "neutral") return NliLabel::neutral;
    return std::nullopt;
}

NliLabel thresholded_label(const NliVerdict& verdict, const NliThresholds& thresholds) {
    if (verdict.label == NliLabel::contradiction && verdict.probability >= thresholds.contradiction)
        return NliLabel::contradiction;
    if (verdict.label == NliLabel::entailment && verdict.probability >= thresholds.entailment)
        return NliLabel::entailment;
    return NliLabel::neutral;
}

std::optional<ParsedComparative> parse_comparative(const std::string& text,
                                                   std::span<const std::string> adjectives) {
    static const std::string kPrefix = "Compared to ";
    if (text.rfind(kPrefix, 0) != 0) return std::nullopt;
    const size_t comma = text.find(", ", kPrefix.size());
    if (comma == std::string::npos) return std::nullopt;

    ParsedComparative parsed;
    parsed.entity_a = text.substr(kPrefix.size(), comma - kPrefix.size());
    if (parsed.entity_a.empty()) return std::nullopt;

    const std::string rest = text.substr(comma + 2);
    std::vector<std::string> tokens;
    try {
        tokens = word_tokenize(rest);
    } catch (...) {
        return std::nullopt;
    }

    // entity_b runs up to the first function word or lexicon adjective.
    std::vector<std::string> lowered_lexicon;
    for (const auto& adj : adjectives) lowered_lexicon.push_back(to_lower(adj));
    size_t split = tokens.size();
    for (size_t i = 0; i < tokens.size(); ++i) {
        const std::string low = to_lower(tokens[i]);
        if (is_function_word(low) ||
            std::find(lowered_lexicon.begin(), lowered_lexicon.end(), low) !=
                lowered_lexicon.end()) {
            split = i;
            break;
        }
    }
    if (split == 0 || split == tokens.size()) return std::nullopt;
    parsed.entity_b = tokens[0];
    for (size_t i = 1; i < split; ++i) parsed.entity_b += " " + tokens[i];

    std::string predicate = tokens[split];
    for (size_t i = split + 1; i < tokens.size(); ++i) predicate += " " + tokens[i];
    parsed.relation = extract_relation(predicate, adjectives);
    if (parsed.relation.empty()) return std::nullopt;
    return parsed;
}

AntonymNli::AntonymNli(std::span<const std::pair<std::string, std::string>> antonyms,
                       std::span<const std::string> adjectives)
    : adjectives_(adjectives.begin(), adjectives.end()) {
    for (const auto& [a, b] : antonyms) {
        antonyms_.emplace(to_lower(a), to_lower(b));
        antonyms_.emplace(to_lower(b), to_lower(a));
    }
}

bool AntonymNli::antonymous(const std::string& rel_a, const std::string& rel_b) const {
    const std::string a = to_lower(rel_a);
    const std::string b = to_lower(rel_b);
    if (antonyms_.count({a, b})) return true;
    // Structural rule: "more X" vs "less X" / "fewer X" are antonyms.
    auto head_tail = [](const std::string& rel) -> std::pair<std::string, std::string> {
        auto space = rel.find(' ');
        if (space == std::string::npos) return {rel, ""};
        return {rel.substr(0, space), rel.substr(space + 1)};
    };
    const auto [ha, ta] = head_tail(a);
    const auto [hb, tb] = head_tail(b);
    if (!ta.empty() && ta == tb) {
        const bool a_up = ha == "more";
        const bool a_down = ha == "less" || ha == "fewer";
        const bool b_up = hb == "more";
        const bool b_down = hb == "less" || hb == "fewer";
        return (a_up && b_down) || (a_down && b_up);
    }
    return false;
}

NliVerdict AntonymNli::classify(const std::string& premise, const std::string& hypothesis) {
    const auto p = parse_comparative(premise, adjectives_);
    const auto h = parse_comparative(hypothesis, adjectives_);
    if (!p || !h) return {NliLabel::neutral, 1.0};

    const std::string pa = to_lower(p->entity_a), pb = to_lower(p->entity_b);
    const std::string ha = to_lower(h->entity_a), hb = to_lower(h->entity_b);
    const bool same_orientation = pa == ha && pb == hb;
    const bool swapped = pa == hb && pb == ha;
    if (!same_orientation && !swapped) return {NliLabel::neutral, 1.0};

    const bool equal_rel = to_lower(p->relation) == to_lower(h->relation);
    const bool anto = antonymous(p->relation, h->relation);
    if (same_orientation) {
        if (equal_rel) return {NliLabel::entailment, 1.0};
        if (anto) return {NliLabel::contradiction, 1.0};
    } else {
        if (equal_rel) return {NliLabel::contradiction, 1.0};
        if (anto) return {NliLabel::entailment, 1.0};
    }
    return {NliLabel::neutral, 1.0};
}

}  // namespace compkb
