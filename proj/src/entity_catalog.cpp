#include "compkb/entity_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "compkb/errors.hpp"
#include "compkb/text.hpp"

namespace compkb {

using nlohmann::json;

bool EntityClass::has_entity(const std::string& text) const {
    const std::string lowered = to_lower(text);
    return std::any_of(entities.begin(), entities.end(),
                       [&](const Entity& e) { return to_lower(e.text) == lowered; });
}

namespace {

struct TaxonomyRecord {
    std::string id;
    std::string label;
    std::vector<std::string> parents;
    std::vector<std::string> entities;
};

std::vector<TaxonomyRecord> parse_dump(std::istream& dump) {
    std::vector<TaxonomyRecord> records;
    std::string line;
    int lineno = 0;
    while (std::getline(dump, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        json j;
        try {
            j = json::parse(line);
            TaxonomyRecord rec;
            rec.id = j.at("id").get<std::string>();
            rec.label = j.at("label").get<std::string>();
            rec.parents = j.at("subclass_of").get<std::vector<std::string>>();
            rec.entities = j.at("entities").get<std::vector<std::string>>();
            records.push_back(std::move(rec));
        } catch (const json::exception& e) {
            throw IngestError("taxonomy dump line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return records;
}

}  // namespace

std::vector<EntityClass> load_taxonomy(std::istream& dump, const std::vector<std::string>& roots,
                                       int max_depth) {
    const auto records = parse_dump(dump);
    std::unordered_map<std::string, const TaxonomyRecord*> by_id;
    std::unordered_map<std::string, std::vector<std::string>> children;
    for (const auto& rec : records) {
        by_id.emplace(rec.id, &rec);
        for (const auto& parent : rec.parents) children[parent].push_back(rec.id);
    }
    for (auto& [_, kids] : children) std::sort(kids.begin(), kids.end());

    for (const auto& root : roots) {
        if (!by_id.count(root)) throw ConfigError("taxonomy root not found in dump: " + root);
    }

    std::unordered_map<std::string, int> depth;
    std::deque<std::string> frontier;
    std::vector<std::string> sorted_roots = roots;
    std::sort(sorted_roots.begin(), sorted_roots.end());
    for (const auto& root : sorted_roots) {
        if (!depth.count(root)) {
            depth[root] = 0;
            frontier.push_back(root);
        }
    }

    std::vector<EntityClass> out;
    while (!frontier.empty()) {
        const std::string id = frontier.front();
        frontier.pop_front();
        const int d = depth[id];
        if (d > 0) {
            const TaxonomyRecord* rec = by_id.at(id);
            EntityClass cls;
            cls.class_id = rec->id;
            cls.label = rec->label;
            cls.depth = d;
            std::unordered_set<std::string> seen;
            for (const auto& entity : rec->entities) {
                if (seen.insert(to_lower(entity)).second)
                    cls.entities.push_back({entity, Provenance::taxonomy});
            }
            out.push_back(std::move(cls));
        }
        if (d == max_depth) continue;
        auto it = children.find(id);
        if (it == children.end()) continue;
        for (const auto& child : it->second) {
            if (!depth.count(child)) {
                depth[child] = d + 1;
                frontier.push_back(child);
            }
        }
    }
    return out;
}

std::vector<EntityClass> load_taxonomy_file(const std::filesystem::path& path,
                                            const std::vector<std::string>& roots,
                                            int max_depth) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open taxonomy dump: " + path.string());
    return load_taxonomy(in, roots, max_depth);
}

CooccurrenceTable CooccurrenceTable::parse(std::istream& in, const std::string& origin) {
    CooccurrenceTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string item, context, count_str;
        if (!std::getline(row, item, '\t') || !std::getline(row, context, '\t') ||
            !std::getline(row, count_str)) {
            throw IngestError(origin + " line " + std::to_string(lineno) +
                              ": expected item<TAB>context<TAB>count");
        }
        uint64_t count = 0;
        try {
            count = std::stoull(count_str);
        } catch (const std::exception&) {
            throw IngestError(origin + " line " + std::to_string(lineno) + ": bad count");
        }
        if (count < 1)
            throw IngestError(origin + " line " + std::to_string(lineno) + ": count must be >= 1");
        table.counts[{item, context}] += count;
    }
    return table;
}

CooccurrenceTable CooccurrenceTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open co-occurrence table: " + path.string());
    return parse(in, path.string());
}

FrequencyTable FrequencyTable::parse(std::istream& in, const std::string& origin) {
    FrequencyTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw IngestError(origin + " line " + std::to_string(lineno) +
                              ": expected token<TAB>count");
        try {
            table.counts[line.substr(0, tab)] = std::stoull(line.substr(tab + 1));
        } catch (const std::exception&) {
            throw IngestError(origin + " line " + std::to_string(lineno) + ": bad count");
        }
    }
    return table;
}

FrequencyTable FrequencyTable::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open frequency table: " + path.string());
    return parse(in, path.string());
}

EntityClass expand_class(const EntityClass& cls, const CooccurrenceTable& table,
                         const ExpansionParams& params) {
    if (params.n < 0) throw Error("expansion n must be >= 0");
    if (params.rho < 0.0) throw Error("expansion rho must be >= 0");
    if (params.n == 0 || table.counts.empty()) return cls;

    std::unordered_set<std::string> members;
    for (const auto& e : cls.entities) members.insert(to_lower(e.text));

    // Aggregate marginals.
    std::unordered_map<std::string, uint64_t> item_total, context_total;
    std::unordered_map<std::string, std::set<std::string>> context_items;
    uint64_t grand_total = 0;
    for (const auto& [key, count] : table.counts) {
        item_total[key.first] += count;
        context_total[key.second] += count;
        context_items[key.second].insert(key.first);
        grand_total += count;
    }

    // sel(c): fraction of seed entities co-occurring with context c.
    std::unordered_map<std::string, double> selectivity;
    for (const auto& [context, items] : context_items) {
        size_t hits = 0;
        for (const auto& item : items)
            if (members.count(to_lower(item))) ++hits;
        selectivity[context] = static_cast<double>(hits) / static_cast<double>(cls.entities.size());
    }

    std::map<std::string, double> scores;
    for (const auto& [key, count] : table.counts) {
        const auto& [item, context] = key;
        if (members.count(to_lower(item))) continue;
        const double sel = selectivity.at(context);
        if (sel <= 0.0) {
            scores.try_emplace(item, 0.0);
            continue;
        }
        const double p_joint = static_cast<double>(count) / static_cast<double>(grand_total);
        const double p_item =
            static_cast<double>(item_total.at(item)) / static_cast<double>(grand_total);
        const double p_context =
            static_cast<double>(context_total.at(context)) / static_cast<double>(grand_total);
        const double pmi = std::log(p_joint / (p_item * p_context));
        scores[item] += std::pow(sel, params.rho) * pmi;
    }

    std::vector<std::pair<std::string, double>> ranked(scores.begin(), scores.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    EntityClass out = cls;
    for (const auto& [item, _] : ranked) {
        if (out.entities.size() >= cls.entities.size() + static_cast<size_t>(params.n)) break;
        if (!out.has_entity(item)) out.entities.push_back({item, Provenance::expanded});
    }
    return out;
}

EntityClass filter_by_frequency(const EntityClass& cls, const FrequencyTable& counts,
                                uint64_t threshold) {
    EntityClass out = cls;
    std::erase_if(out.entities, [&](const Entity& e) {
        auto it = counts.counts.find(e.text);
        const uint64_t freq = it == counts.counts.end() ? 0 : it->second;
        return freq < threshold;
    });
    return out;
}

std::vector<EntityClass> drop_small_classes(std::vector<EntityClass> classes, size_t min_size) {
    std::erase_if(classes,
                  [min_size](const EntityClass& c) { return c.entities.size() < min_size; });
    return classes;
}

std::vector<EntityPair> enumerate_pairs(const EntityClass& cls, bool directed) {
    if (cls.entities.size() < 2)
        throw Error("enumerate_pairs requires a class with at least 2 entities: " + cls.class_id);
    std::vector<EntityPair> pairs;
    const auto& ents = cls.entities;
    if (directed) {
        for (size_t i = 0; i < ents.size(); ++i)
            for (size_t j = 0; j < ents.size(); ++j)
                if (i != j) pairs.push_back({cls.class_id, ents[i].text, ents[j].text});
    } else {
        for (size_t i = 0; i < ents.size(); ++i)
            for (size_t j = i + 1; j < ents.size(); ++j) {
                const std::string& a = std::min(ents[i].text, ents[j].text);
                const std::string& b = std::max(ents[i].text, ents[j].text);
                pairs.push_back({cls.class_id, a, b});
            }
    }
    return pairs;
}

ComparativePrompt render_prompt(const EntityPair& pair) {
    if (pair.entity_a == pair.entity_b)
        throw Error("cannot render a prompt comparing an entity to itself: " + pair.entity_a);
    ComparativePrompt prompt;
    prompt.pair = pair;
    prompt.text = "Compared to " + pair.entity_a + ", " + pair.entity_b;
    return prompt;
}

std::vector<ComparativePrompt> perplexity_filter(std::vector<ComparativePrompt> prompts,
                                                 const LmBackend& lm, double drop_fraction,
                                                 double alpha) {
    if (drop_fraction < 0.0 || drop_fraction >= 1.0)
        throw Error("drop_fraction must be in [0, 1)");
    for (size_t i = 0; i < prompts.size(); ++i) {
        try {
            prompts[i].ppl = lm.length_penalized_perplexity(prompts[i].text, alpha);
        } catch (const std::exception& e) {
            throw BackendError("perplexity scoring failed for prompt " + std::to_string(i) + ": " +
                               e.what());
        }
    }
    const size_t drop = static_cast<size_t>(drop_fraction * static_cast<double>(prompts.size()));
    if (drop == 0) return prompts;

    std::vector<size_t> order(prompts.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (*prompts[a].ppl != *prompts[b].ppl) return *prompts[a].ppl > *prompts[b].ppl;
        return prompts[a].text < prompts[b].text;
    });
    std::vector<bool> dropped(prompts.size(), false);
    for (size_t i = 0; i < drop; ++i) dropped[order[i]] = true;

    std::vector<ComparativePrompt> out;
    out.reserve(prompts.size() - drop);
    for (size_t i = 0; i < prompts.size(); ++i)
        if (!dropped[i]) out.push_back(std::move(prompts[i]));
    return out;
}

}  // namespace compkb
