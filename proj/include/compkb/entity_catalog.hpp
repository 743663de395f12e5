#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "compkb/lm/backend.hpp"

namespace compkb {

enum class Provenance { taxonomy, expanded };

struct Entity {
    std::string text;
    Provenance provenance = Provenance::taxonomy;
};

struct EntityClass {
    std::string class_id;
    std::string label;
    std::vector<Entity> entities;
    int depth = 0;  // levels below the seed root

    bool has_entity(const std::string& text) const;  // case-insensitive
};

struct EntityPair {
    std::string class_id;
    std::string entity_a;  // the "Compared to" entity
    std::string entity_b;
};

struct ComparativePrompt {
    EntityPair pair;
    std::string text;
    std::optional<double> ppl;  // length-penalized perplexity, set by scoring
};

struct ExpansionParams {
    int n = 100;       // terms to append
    double rho = 3.0;  // context-weight exponent
};

// (item, context) -> count table for set expansion.
struct CooccurrenceTable {
    std::map<std::pair<std::string, std::string>, uint64_t> counts;

    static CooccurrenceTable load(const std::filesystem::path& path);
    static CooccurrenceTable parse(std::istream& in, const std::string& origin);
};

// token -> corpus frequency.
struct FrequencyTable {
    std::map<std::string, uint64_t> counts;

    static FrequencyTable load(const std::filesystem::path& path);
    static FrequencyTable parse(std::istream& in, const std::string& origin);
};

// Reads a line-delimited taxonomy dump and returns every class reachable from
// the roots within max_depth subclass edges (roots themselves excluded),
// BFS order with ties broken by class id.
std::vector<EntityClass> load_taxonomy(std::istream& dump, const std::vector<std::string>& roots,
                                       int max_depth);
std::vector<EntityClass> load_taxonomy_file(const std::filesystem::path& path,
                                            const std::vector<std::string>& roots, int max_depth);

// Appends up to params.n non-member items ranked by
// score(i) = sum_c sel(c)^rho * pmi(i, c), ties broken lexicographically.
EntityClass expand_class(const EntityClass& cls, const CooccurrenceTable& table,
                         const ExpansionParams& params);

// Removes entities whose corpus frequency is below threshold (absent => 0).
EntityClass filter_by_frequency(const EntityClass& cls, const FrequencyTable& counts,
                                uint64_t threshold);

std::vector<EntityClass> drop_small_classes(std::vector<EntityClass> classes,
                                            size_t min_size = 2);

// All ordered pairs (a, b), a != b, when directed; otherwise each unordered
// pair once with lexicographic orientation.
std::vector<EntityPair> enumerate_pairs(const EntityClass& cls, bool directed);

// "Compared to {entity_a}, {entity_b}" with exact spacing.
ComparativePrompt render_prompt(const EntityPair& pair);

// Scores every prompt and drops exactly floor(drop_fraction * N) of the
// highest-perplexity ones; ties broken by prompt text. Input order preserved.
std::vector<ComparativePrompt> perplexity_filter(std::vector<ComparativePrompt> prompts,
                                                 const LmBackend& lm, double drop_fraction = 0.30,
                                                 double alpha = 0.1);

}  // namespace compkb
