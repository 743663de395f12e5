#include "compkb/lexicons.hpp"

#include <fstream>

#include "compkb/errors.hpp"

namespace compkb {

namespace {

const std::vector<std::string> kAuxVerbs = {"have", "need", "may", "are", "would"};

const std::vector<std::string> kAdverbs = {"typically", "often", "always", "generally",
                                           "normally"};

// 290 comparative adjectives.
const std::vector<std::string> kComparativeAdjectives = {
    "littler", "denser", "sweeter", "dumber", "itchier", "rawer", "skinnier", "righter",
    "bloodier", "harder",
    "wider", "creepier", "cheaper", "sorrier", "sillier", "hairier", "odder", "worthier",
    "idler", "cooler",
    "higher", "sourer", "softener", "unhappier", "sadder", "stingier", "hotter", "busier",
    "slimmer", "narrower",
    "subtler", "sharper", "shorter", "sparser", "lesser", "needier", "drier", "greasier",
    "pricklier", "neater",
    "lighter", "cuter", "shyer", "sweatier", "floppier", "shadier", "fitter", "lazier",
    "crazier", "muddier",
    "purer", "sooner", "nearer", "fresher", "further", "louder", "chubbier", "whiter",
    "crueler", "thirstier",
    "slighter", "flakier", "clumsier", "greener", "rougher", "fatter", "prettier", "calmer",
    "damper", "politer",
    "fiercer", "messier", "darker", "poorer", "lovelier", "lower", "handier", "steeper",
    "deadlier", "jointer",
    "greedier", "cleverer", "steadier", "headier", "blunter", "blander", "outer", "younger",
    "dirtier", "wiser",
    "direr", "graver", "greater", "riper", "milder", "noisier", "likelier", "meaner",
    "sneakier", "unlikelier",
    "tougher", "upper", "angrier", "stronger", "shinier", "stricter", "smoother", "fuzzier",
    "tenther", "sorer",
    "classier", "fairer", "gentler", "brighter", "trickier", "grainier", "looser", "harsher",
    "extremer", "grander",
    "juicier", "guiltier", "colder", "ruder", "tighter", "sunnier", "newer", "stickier",
    "wealthier", "crankier",
    "quicker", "dustier", "trendier", "cleaner", "rosier", "richer", "braver", "prouder",
    "shaggier", "earlier",
    "larger", "lengthier", "windier", "fonder", "sleepier", "heartier", "bluer", "filthier",
    "worser", "taller",
    "worse", "spicier", "heavier", "quirkier", "stockier", "scarier", "creamier", "roomier",
    "smarter", "curlier",
    "clearer", "goofier", "hardier", "breezier", "grosser", "laster", "firmer", "mushier",
    "quieter", "chewier",
    "plainer", "jumpier", "lonelier", "madder", "touchier", "readier", "smokier", "mightier",
    "bitterer", "sexier",
    "unhealthier", "snowier", "wilder", "norther", "closer", "later", "saner", "crispier",
    "flatter", "nastier",
    "deeper", "briefer", "finer", "smaller", "cozier", "hungrier", "curvier", "tastier",
    "bigger", "happier",
    "smellier", "faster", "simpler", "easter", "tinier", "kinder", "fainter", "thinner",
    "blacker", "bolder",
    "funnier", "holier", "weightier", "poppier", "sturdier", "nobler", "livelier", "hipper",
    "duller", "fuller",
    "slower", "cloudier", "rustier", "rarer", "wetter", "coarser", "better", "leaner",
    "firer", "crunchier",
    "gloomier", "speedier", "abler", "riskier", "warmer", "blanker", "soggier", "nicer",
    "keener", "moister",
    "shallower", "yellower", "stranger", "weirder", "stiffer", "stupider", "lousier",
    "humbler", "friendlier",
    "stealthier", "straighter", "softer", "bossier", "icier", "fancier", "broader", "uglier",
    "nexter", "loftier", "naughtier",
    "scarcer", "worldlier", "tanner", "luckier", "sincerer", "bulkier", "oilier", "easier",
    "warier", "healthier",
    "earthier", "wobblier", "less", "more", "choppier", "swifter", "longer", "saltier",
    "truer", "weaker",
    "older", "fussier", "steepler", "fewer", "safer", "slimier", "fattier", "chillier",
    "thicker", "nimbler"};

const std::vector<std::string> kNegativePhrases = {
    // punctuation and stray characters
    ";", ":", "(", ")", "?", "!", "\"", ",",
    // pronouns
    "I", "think", "you", "You", "He", "he", "They", "they", "she", "She", "my", "We", "we",
    // discourse connectives and relative-clause markers
    "without", "between", "much", "either", "neither", "and", "when", "while", "although",
    "am", "no", "nor", "not", "as", "because", "since", "finally", "however", "therefore",
    "consequently", "furthermore", "nonetheless", "moreover", "alternatively",
    "henceforward", "nevertheless", "whereas", "meanwhile", "this", "there", "here", "same",
    "few", "similar", "the following", "by now", "into", "than"};

const std::vector<std::pair<std::string, std::string>> kAntonymPairs = {
    {"larger", "smaller"},   {"bigger", "smaller"},  {"bigger", "littler"},
    {"bigger", "tinier"},    {"heavier", "lighter"}, {"faster", "slower"},
    {"quicker", "slower"},   {"longer", "shorter"},  {"taller", "shorter"},
    {"higher", "lower"},     {"stronger", "weaker"}, {"hotter", "colder"},
    {"warmer", "cooler"},    {"warmer", "colder"},   {"older", "younger"},
    {"older", "newer"},      {"better", "worse"},    {"harder", "softer"},
    {"darker", "brighter"},  {"thicker", "thinner"}, {"wider", "narrower"},
    {"broader", "narrower"}, {"deeper", "shallower"}, {"louder", "quieter"},
    {"noisier", "quieter"},  {"cleaner", "dirtier"}, {"richer", "poorer"},
    {"wetter", "drier"},     {"smoother", "rougher"}, {"sweeter", "sourer"},
    {"healthier", "unhealthier"}, {"cheaper", "pricier"}, {"safer", "riskier"},
    {"easier", "harder"},    {"fatter", "skinnier"}, {"fatter", "leaner"},
    {"denser", "sparser"},   {"more", "less"},       {"more", "fewer"},
    {"earlier", "later"},    {"nearer", "further"},  {"closer", "further"},
    {"smarter", "dumber"},   {"happier", "sadder"},  {"nicer", "meaner"},
    {"fuller", "emptier"},   {"sharper", "duller"},  {"tighter", "looser"},
    {"greater", "lesser"}};

}  // namespace

std::span<const std::string> builtin_aux_verbs() { return kAuxVerbs; }
std::span<const std::string> builtin_adverbs() { return kAdverbs; }
std::span<const std::string> builtin_comparative_adjectives() { return kComparativeAdjectives; }
std::span<const std::string> builtin_negative_phrases() { return kNegativePhrases; }

std::span<const std::pair<std::string, std::string>> builtin_antonym_pairs() {
    return kAntonymPairs;
}

std::vector<std::string> load_phrase_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open lexicon file: " + path.string());
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.push_back(line);
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> load_antonym_pairs(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("cannot open antonym file: " + path.string());
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw IngestError("antonym file line " + std::to_string(lineno) +
                              ": expected phrase<TAB>antonym");
        out.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
    return out;
}

}  // namespace compkb
