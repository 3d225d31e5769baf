#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace styloai {

struct SentimentEntry {
    double valence = 0.0;      // [-4, 4]
    double polarity = 0.0;     // [-1, 1]
    double subjectivity = 0.0; // [0, 1]
};

// Immutable lexical resources. Loaded once and shared (read-only) across all
// annotation and feature extraction; safe for concurrent use.
struct Lexicons {
    std::unordered_set<std::string> stop_words;
    std::unordered_set<std::string> common_5000;           // membership
    std::vector<std::string> common_5000_ranked;           // file order
    std::unordered_map<std::string, std::string> emotion_words;  // word -> category
    std::unordered_map<std::string, SentimentEntry> sentiment;
    std::unordered_set<std::string> gazetteer;              // places/orgs, lowercase

    // Fixed sets; part of the feature contract rather than swappable data.
    static const std::vector<std::string>& abstract_suffixes();
    static const std::vector<std::string>& sophisticated_adjective_suffixes();
    static const std::unordered_set<std::string>& first_person();
    static const std::unordered_set<std::string>& second_person();
    static const std::unordered_set<std::string>& negators();
    static const std::unordered_set<std::string>& boosters();
    static const std::vector<std::string>& emotion_categories();

    struct Overrides {
        std::optional<std::string> dir;  // directory holding the five files
        std::optional<std::string> stop_words;
        std::optional<std::string> common_5000;
        std::optional<std::string> emotion_words;
        std::optional<std::string> sentiment;
        std::optional<std::string> gazetteer;

        bool any() const {
            return dir || stop_words || common_5000 || emotion_words ||
                   sentiment || gazetteer;
        }
    };

    // Compiled-in resources; verifies the pinned fingerprints.
    static Lexicons embedded();

    // Embedded resources with files swapped per `overrides` (and the
    // STYLOAI_LEXICON_DIR environment variable when no explicit dir is set).
    static Lexicons load(const Overrides& overrides);

    // FNV-1a fingerprint of all five resource texts, for run manifests.
    static std::string embedded_fingerprint();
};

}  // namespace styloai
