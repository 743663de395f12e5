#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace compkb {

enum class NliLabel { entailment, contradiction, neutral };

std::string to_string(NliLabel label);
std::optional<NliLabel> nli_label_from_string(const std::string& s);

struct NliVerdict {
    NliLabel label = NliLabel::neutral;
    double probability = 1.0;
};

// High-precision cutoffs: a raw verdict only counts as contradiction or
// entailment above these probabilities.
struct NliThresholds {
    double contradiction = 0.99;
    double entailment = 0.85;
};

NliLabel thresholded_label(const NliVerdict& verdict, const NliThresholds& thresholds);

class NliProvider {
public:
    virtual ~NliProvider() = default;
    virtual NliVerdict classify(const std::string& premise, const std::string& hypothesis) = 0;
};

// Parse of a templated comparative: "Compared to {a}, {b} {predicate}".
struct ParsedComparative {
    std::string entity_a;
    std::string entity_b;
    std::string relation;  // extracted comparative phrase
};

// Best-effort parse used by the reference NLI provider; nullopt when the text
// does not follow the template or no relation is extractable. The entity_b
// boundary is taken at the first function word (aux/adverb/hedge/adjective).
std::optional<ParsedComparative> parse_comparative(const std::string& text,
                                                   std::span<const std::string> adjectives);

// Rule engine over extracted relations and an antonym lexicon, emitting
// probability-1.0 verdicts. Neural NLI attaches through the same interface.
class AntonymNli final : public NliProvider {
public:
    AntonymNli(std::span<const std::pair<std::string, std::string>> antonyms,
               std::span<const std::string> adjectives);

    NliVerdict classify(const std::string& premise, const std::string& hypothesis) override;

    bool antonymous(const std::string& rel_a, const std::string& rel_b) const;

private:
    std::set<std::pair<std::string, std::string>> antonyms_;
    std::vector<std::string> adjectives_;
};

}  // namespace compkb
