#include "styloai/text.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "styloai/error.hpp"

namespace styloai::text {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool is_apostrophe(char32_t c) { return c == U'\'' || c == 0x2019; }
bool is_hyphen(char32_t c) { return c == U'-' || c == 0x2010 || c == 0x2011; }

}  // namespace

std::u32string decode_utf8(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    const auto n = s.size();
    while (i < n) {
        const unsigned char b0 = static_cast<unsigned char>(s[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int len = 0;
        char32_t cp = 0;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        if (i + len > n) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        bool ok = true;
        for (int k = 1; k < len; ++k) {
            const unsigned char bk = static_cast<unsigned char>(s[i + k]);
            if ((bk & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (bk & 0x3F);
        }
        // reject overlong encodings and surrogates
        if (ok && ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                   (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
                   (cp >= 0xD800 && cp <= 0xDFFF))) {
            ok = false;
        }
        if (!ok) {
            out.push_back(kReplacement);
            ++i;
        } else {
            out.push_back(cp);
            i += len;
        }
    }
    return out;
}

std::string encode_utf8(std::u32string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char32_t cp : s) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

std::size_t codepoint_count(std::string_view s) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < s.size();) {
        const unsigned char b = static_cast<unsigned char>(s[i]);
        std::size_t len = 1;
        if ((b & 0xE0) == 0xC0) len = 2;
        else if ((b & 0xF0) == 0xE0) len = 3;
        else if ((b & 0xF8) == 0xF0) len = 4;
        // trailing-byte validity is handled by decode_utf8; for counting we
        // only need the same stride it would take
        if (len > 1) {
            for (std::size_t k = 1; k < len; ++k) {
                if (i + k >= s.size() ||
                    (static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) {
                    len = 1;
                    break;
                }
            }
        }
        i += len;
        ++count;
    }
    return count;
}

char32_t simple_lower(char32_t c) {
    if (c >= U'A' && c <= U'Z') return c + 0x20;
    if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;  // Latin-1
    if (c == 0x178) return 0xFF;                               // Y with diaeresis
    if (c >= 0x100 && c <= 0x137 && (c % 2) == 0) return c + 1;  // Latin Ext-A pairs
    if (c >= 0x139 && c <= 0x148 && (c % 2) == 1) return c + 1;
    if (c >= 0x14A && c <= 0x177 && (c % 2) == 0) return c + 1;
    if (c >= 0x179 && c <= 0x17E && (c % 2) == 1) return c + 1;
    if (c >= 0x391 && c <= 0x3A9 && c != 0x3A2) return c + 0x20;  // Greek
    if (c >= 0x410 && c <= 0x42F) return c + 0x20;                // Cyrillic
    if (c >= 0x400 && c <= 0x40F) return c + 0x50;
    return c;
}

std::string lowercase(std::string_view s) {
    // fast path: pure ASCII
    bool ascii = true;
    for (char ch : s) {
        if (static_cast<unsigned char>(ch) >= 0x80) {
            ascii = false;
            break;
        }
    }
    if (ascii) {
        std::string out(s);
        for (char& ch : out) {
            if (ch >= 'A' && ch <= 'Z') ch += 0x20;
        }
        return out;
    }
    std::u32string cps = decode_utf8(s);
    for (char32_t& c : cps) c = simple_lower(c);
    return encode_utf8(cps);
}

bool is_whitespace(char32_t c) {
    switch (c) {
        case U' ': case U'\t': case U'\n': case U'\r': case 0x0B: case 0x0C:
        case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
        case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return c >= 0x2000 && c <= 0x200A;
    }
}

bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool is_letter(char32_t c) {
    if (c < 0x80) return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
    if (c == 0xAA || c == 0xB5 || c == 0xBA) return true;
    if (c >= 0xC0 && c <= 0xFF) return c != 0xD7 && c != 0xF7;
    if (c < 0x100) return false;
    if (is_whitespace(c) || c == kReplacement) return false;
    // carve the common punctuation/symbol blocks out; the rest of the BMP and
    // beyond (Latin Ext, Greek, Cyrillic, CJK, ...) counts as letters
    if (c >= 0x2000 && c <= 0x206F) return false;   // general punctuation
    if (c >= 0x2070 && c <= 0x2BFF) return false;   // symbols, arrows, math
    if (c >= 0x2E00 && c <= 0x2E7F) return false;   // supplemental punctuation
    if (c >= 0x3000 && c <= 0x303F) return false;   // CJK punctuation
    if (c >= 0xFE30 && c <= 0xFE6F) return false;   // compat punctuation
    if (c >= 0xFF01 && c <= 0xFF20) return false;   // fullwidth punct/digits
    if (c >= 0x1F000 && c <= 0x1FAFF) return false; // emoji
    return true;
}

bool is_uppercase(char32_t c) { return is_letter(c) && simple_lower(c) != c; }

namespace {

TokenKind punct_or_symbol(char32_t c) {
    static const std::unordered_set<char32_t> punct = {
        U'.', U',', U';', U':', U'!', U'?', U'\'', U'"', U'(', U')', U'[',
        U']', U'{', U'}', U'-', U'/', U'\\', U'`', U'~', U'_', 0x2010, 0x2011,
        0x2012, 0x2013, 0x2014, 0x2015, 0x2018, 0x2019, 0x201C, 0x201D,
        0x2026, 0x00AB, 0x00BB, 0x00A1, 0x00BF, 0x2039, 0x203A};
    return punct.count(c) ? TokenKind::Punctuation : TokenKind::Symbol;
}

}  // namespace

std::vector<Token> tokenize(const std::string& text) {
    const std::u32string cps = decode_utf8(text);
    const std::size_t n = cps.size();
    std::vector<Token> tokens;

    auto emit = [&](std::size_t start, std::size_t end, TokenKind kind) {
        Token t;
        t.start = start;
        t.end = end;
        t.surface = encode_utf8(std::u32string_view(cps).substr(start, end - start));
        t.lowercase = lowercase(t.surface);
        t.kind = kind;
        tokens.push_back(std::move(t));
    };

    std::size_t i = 0;
    while (i < n) {
        const char32_t c = cps[i];
        if (is_whitespace(c)) {
            ++i;
            continue;
        }
        if (is_letter(c) || is_digit(c)) {
            std::size_t j = i;
            bool has_letter = false;
            while (j < n) {
                const char32_t cj = cps[j];
                if (is_letter(cj) || is_digit(cj)) {
                    has_letter = has_letter || is_letter(cj);
                    ++j;
                } else if ((is_apostrophe(cj) || is_hyphen(cj)) && j > i &&
                           (is_letter(cps[j - 1]) || is_digit(cps[j - 1])) &&
                           j + 1 < n && (is_letter(cps[j + 1]) || is_digit(cps[j + 1]))) {
                    ++j;  // internal apostrophe/hyphen stays attached
                } else {
                    break;
                }
            }
            emit(i, j, has_letter ? TokenKind::Word : TokenKind::Number);
            i = j;
        } else {
            emit(i, i + 1, punct_or_symbol(c));
            ++i;
        }
    }
    return tokens;
}

namespace {

bool is_closing_quote(char32_t c) {
    switch (c) {
        case U'"': case U'\'': case U')': case U']': case U'}':
        case 0x2019: case 0x201D: case 0x00BB: case 0x203A:
            return true;
        default:
            return false;
    }
}

const std::unordered_set<std::string>& abbreviations() {
    static const std::unordered_set<std::string> abbr = {
        "mr", "mrs", "ms", "dr", "prof", "st", "jr", "sr", "vs",
        "etc", "fig", "vol", "al", "inc", "ltd", "co", "gen", "rep",
        "sen", "gov", "capt", "sgt", "lt", "col", "approx"};
    return abbr;
}

}  // namespace

std::vector<SentenceSpan> split_sentences(const std::string& text,
                                          const std::vector<Token>& tokens) {
    std::vector<SentenceSpan> spans;
    if (tokens.empty()) return spans;

    const std::u32string cps = decode_utf8(text);
    const std::size_t n = cps.size();

    auto emit = [&](std::size_t first, std::size_t last) {  // [first, last)
        SentenceSpan s;
        s.first_token = first;
        s.last_token = last;
        s.start = tokens[first].start;
        s.end = tokens[last - 1].end;
        spans.push_back(s);
    };

    std::size_t cur = 0;
    for (std::size_t ti = 0; ti < tokens.size(); ++ti) {
        const Token& t = tokens[ti];
        if (t.kind != TokenKind::Punctuation) continue;
        if (t.surface != "." && t.surface != "!" && t.surface != "?") continue;

        bool boundary = false;
        std::size_t p = t.end;
        while (p < n && is_closing_quote(cps[p])) ++p;
        if (p >= n) {
            boundary = true;
        } else if (is_whitespace(cps[p])) {
            while (p < n && is_whitespace(cps[p])) ++p;
            boundary = (p >= n) || is_uppercase(cps[p]);
        }

        if (boundary && t.surface == "." && ti > 0) {
            const Token& prev = tokens[ti - 1];
            if (prev.is_word()) {
                const bool single_letter = prev.end - prev.start == 1;
                if (single_letter || abbreviations().count(prev.lowercase)) {
                    boundary = false;  // "Dr.", "e.g.", initials
                }
            }
        }

        if (boundary) {
            emit(cur, ti + 1);
            cur = ti + 1;
        }
    }
    if (cur < tokens.size()) emit(cur, tokens.size());
    return spans;
}

int count_syllables(const std::string& word) {
    std::u32string letters;
    for (char32_t c : decode_utf8(word)) {
        if (is_letter(c)) letters.push_back(simple_lower(c));
    }
    if (letters.empty()) {
        throw UsageError("count_syllables: word contains no letters: \"" + word + "\"");
    }

    auto is_vowel = [](char32_t c) {
        switch (c) {
            case U'a': case U'e': case U'i': case U'o': case U'u': case U'y':
            case 0xE0: case 0xE1: case 0xE2: case 0xE3: case 0xE4: case 0xE5:
            case 0xE8: case 0xE9: case 0xEA: case 0xEB: case 0xEC: case 0xED:
            case 0xEE: case 0xEF: case 0xF2: case 0xF3: case 0xF4: case 0xF5:
            case 0xF6: case 0xF9: case 0xFA: case 0xFB: case 0xFC: case 0xFF:
                return true;
            default:
                return false;
        }
    };

    int groups = 0;
    bool in_group = false;
    for (char32_t c : letters) {
        if (is_vowel(c)) {
            if (!in_group) ++groups;
            in_group = true;
        } else {
            in_group = false;
        }
    }

    const std::size_t len = letters.size();
    if (len >= 2 && letters[len - 1] == U'e' && !is_vowel(letters[len - 2])) {
        // trailing silent e, except the syllabic -le after a consonant
        const bool consonant_le = len >= 3 && letters[len - 2] == U'l' &&
                                  !is_vowel(letters[len - 3]);
        if (!consonant_le) --groups;
    }
    return std::max(groups, 1);
}

std::vector<std::vector<std::string>> ngrams(const std::vector<Token>& tokens, int n) {
    if (n != 2 && n != 3) throw UsageError("ngrams: n must be 2 or 3");
    std::vector<const std::string*> words;
    for (const Token& t : tokens) {
        if (t.is_word()) words.push_back(&t.lowercase);
    }
    std::vector<std::vector<std::string>> out;
    if (static_cast<int>(words.size()) < n) return out;
    out.reserve(words.size() - n + 1);
    for (std::size_t i = 0; i + n <= words.size(); ++i) {
        std::vector<std::string> gram;
        gram.reserve(n);
        for (int k = 0; k < n; ++k) gram.push_back(*words[i + k]);
        out.push_back(std::move(gram));
    }
    return out;
}

}  // namespace styloai::text
