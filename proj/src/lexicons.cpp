#include "styloai/lexicons.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "styloai/error.hpp"
#include "styloai/lexicon_data.hpp"
#include "styloai/rng.hpp"
#include "styloai/text.hpp"

namespace styloai {

namespace {

// Fingerprints of the embedded resource texts. Bump when a lexicon changes.
constexpr std::uint64_t kStopWordsHash = 0x02024cde651fbd52ull;
constexpr std::uint64_t kCommon5000Hash = 0x8e0e097536ba1cf9ull;
constexpr std::uint64_t kEmotionWordsHash = 0x9577e629203b984bull;
constexpr std::uint64_t kSentimentHash = 0xc489773a3f2e219full;
constexpr std::uint64_t kGazetteerHash = 0xdf91d94ac9bee7e3ull;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open lexicon file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Iterate non-empty, non-comment lines.
template <typename Fn>
void for_each_line(std::string_view data, Fn&& fn) {
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= data.size()) {
        std::size_t nl = data.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos)
                                    ? data.substr(pos)
                                    : data.substr(pos, nl - pos);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty() && line.front() != '#') fn(line, line_no);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> cols;
    std::size_t pos = 0;
    while (true) {
        std::size_t tab = line.find('\t', pos);
        if (tab == std::string_view::npos) {
            cols.push_back(line.substr(pos));
            break;
        }
        cols.push_back(line.substr(pos, tab - pos));
        pos = tab + 1;
    }
    return cols;
}

double parse_value(std::string_view s, const std::string& what, int line_no) {
    try {
        return std::stod(std::string(s));
    } catch (const std::exception&) {
        throw DataError("bad " + what + " value at line " + std::to_string(line_no) +
                        ": \"" + std::string(s) + "\"");
    }
}

void parse_word_set(std::string_view data, std::unordered_set<std::string>& out,
                    std::vector<std::string>* ranked = nullptr) {
    for_each_line(data, [&](std::string_view line, int) {
        std::string w(line);
        if (out.insert(w).second && ranked) ranked->push_back(std::move(w));
    });
}

void parse_emotions(std::string_view data,
                    std::unordered_map<std::string, std::string>& out) {
    std::unordered_set<std::string> valid(Lexicons::emotion_categories().begin(),
                                          Lexicons::emotion_categories().end());
    for_each_line(data, [&](std::string_view line, int line_no) {
        auto cols = split_tabs(line);
        if (cols.size() != 2) {
            throw DataError("emotion lexicon line " + std::to_string(line_no) +
                            ": expected word<TAB>category");
        }
        std::string cat(cols[1]);
        if (!valid.count(cat)) {
            throw DataError("emotion lexicon line " + std::to_string(line_no) +
                            ": unknown category \"" + cat + "\"");
        }
        out.emplace(std::string(cols[0]), std::move(cat));
    });
}

void parse_sentiment(std::string_view data,
                     std::unordered_map<std::string, SentimentEntry>& out) {
    for_each_line(data, [&](std::string_view line, int line_no) {
        auto cols = split_tabs(line);
        if (cols.size() != 4) {
            throw DataError("sentiment lexicon line " + std::to_string(line_no) +
                            ": expected word<TAB>valence<TAB>polarity<TAB>subjectivity");
        }
        SentimentEntry e;
        e.valence = parse_value(cols[1], "valence", line_no);
        e.polarity = parse_value(cols[2], "polarity", line_no);
        e.subjectivity = parse_value(cols[3], "subjectivity", line_no);
        if (e.valence < -4.0 || e.valence > 4.0 || e.polarity < -1.0 ||
            e.polarity > 1.0 || e.subjectivity < 0.0 || e.subjectivity > 1.0) {
            throw DataError("sentiment lexicon line " + std::to_string(line_no) +
                            ": value out of range");
        }
        out.emplace(std::string(cols[0]), e);
    });
}

struct RawTexts {
    std::string stop_words{detail::kStopWordsTxt};
    std::string common_5000{detail::kCommon5000Txt};
    std::string emotion_words{detail::kEmotionWordsTxt};
    std::string sentiment{detail::kSentimentTxt};
    std::string gazetteer{detail::kGazetteerTxt};
};

Lexicons build(const RawTexts& raw) {
    Lexicons lex;
    parse_word_set(raw.stop_words, lex.stop_words);
    parse_word_set(raw.common_5000, lex.common_5000, &lex.common_5000_ranked);
    parse_emotions(raw.emotion_words, lex.emotion_words);
    parse_sentiment(raw.sentiment, lex.sentiment);
    parse_word_set(raw.gazetteer, lex.gazetteer);

    if (lex.common_5000.size() != 5000) {
        throw DataError("common_5000 lexicon must have exactly 5000 entries, got " +
                        std::to_string(lex.common_5000.size()));
    }
    if (lex.stop_words.empty() || lex.emotion_words.empty() ||
        lex.sentiment.empty() || lex.gazetteer.empty()) {
        throw DataError("lexicon resource is empty");
    }
    return lex;
}

void check_pin(std::string_view data, std::uint64_t expected, const char* name) {
    if (fnv1a64(data.data(), data.size()) != expected) {
        throw DataError(std::string("embedded lexicon fingerprint mismatch: ") + name);
    }
}

}  // namespace

const std::vector<std::string>& Lexicons::abstract_suffixes() {
    static const std::vector<std::string> v = {"ness", "tion", "sion", "ity",
                                               "ment", "ance", "ence", "ship",
                                               "ism"};
    return v;
}

const std::vector<std::string>& Lexicons::sophisticated_adjective_suffixes() {
    static const std::vector<std::string> v = {"ive", "ous", "ic"};
    return v;
}

const std::unordered_set<std::string>& Lexicons::first_person() {
    static const std::unordered_set<std::string> v = {
        "i", "me", "my", "mine", "we", "us", "our", "ours", "myself", "ourselves"};
    return v;
}

const std::unordered_set<std::string>& Lexicons::second_person() {
    static const std::unordered_set<std::string> v = {"you", "your", "yours",
                                                      "yourself", "yourselves"};
    return v;
}

const std::unordered_set<std::string>& Lexicons::negators() {
    static const std::unordered_set<std::string> v = {
        "not",    "no",      "never",  "none",   "nobody", "nothing",
        "neither", "nor",    "nowhere", "hardly", "scarcely", "barely",
        "cannot", "without", "rarely", "seldom", "lack",   "lacking", "lacks"};
    return v;
}

const std::unordered_set<std::string>& Lexicons::boosters() {
    static const std::unordered_set<std::string> v = {
        "very",       "really",      "extremely",   "incredibly", "absolutely",
        "completely", "totally",     "utterly",     "highly",     "remarkably",
        "exceptionally", "especially", "particularly", "deeply",   "enormously",
        "hugely",     "immensely",   "intensely",   "thoroughly", "tremendously",
        "unbelievably", "amazingly", "extraordinarily", "exceedingly", "super"};
    return v;
}

const std::vector<std::string>& Lexicons::emotion_categories() {
    static const std::vector<std::string> v = {"fear",    "joy",      "sadness",
                                               "anger",   "disgust",  "surprise",
                                               "trust",   "anticipation"};
    return v;
}

Lexicons Lexicons::embedded() {
    check_pin(detail::kStopWordsTxt, kStopWordsHash, "stop_words");
    check_pin(detail::kCommon5000Txt, kCommon5000Hash, "common_5000");
    check_pin(detail::kEmotionWordsTxt, kEmotionWordsHash, "emotion_words");
    check_pin(detail::kSentimentTxt, kSentimentHash, "sentiment");
    check_pin(detail::kGazetteerTxt, kGazetteerHash, "gazetteer");
    return build(RawTexts{});
}

Lexicons Lexicons::load(const Overrides& overrides) {
    Overrides o = overrides;
    if (!o.dir) {
        if (const char* env = std::getenv("STYLOAI_LEXICON_DIR")) {
            if (*env) o.dir = std::string(env);
        }
    }
    if (!o.any()) return embedded();

    RawTexts raw;
    auto pick = [&](const std::optional<std::string>& file, const char* name,
                    std::string& slot) {
        if (file) {
            slot = read_file(*file);
        } else if (o.dir) {
            slot = read_file(*o.dir + "/" + name);
        }
    };
    pick(o.stop_words, "stop_words.txt", raw.stop_words);
    pick(o.common_5000, "common_5000.txt", raw.common_5000);
    pick(o.emotion_words, "emotion_words.txt", raw.emotion_words);
    pick(o.sentiment, "sentiment.txt", raw.sentiment);
    pick(o.gazetteer, "gazetteer.txt", raw.gazetteer);
    return build(raw);
}

std::string Lexicons::embedded_fingerprint() {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::string_view part :
         {detail::kStopWordsTxt, detail::kCommon5000Txt, detail::kEmotionWordsTxt,
          detail::kSentimentTxt, detail::kGazetteerTxt}) {
        std::uint64_t ph = fnv1a64(part.data(), part.size());
        h ^= ph;
        h *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace styloai
