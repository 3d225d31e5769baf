#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace styloai::text {

// ---------------------------------------------------------------- utf8 layer
//
// Inputs are UTF-8; all offsets in this module are codepoint offsets.
// Decoding is tolerant: malformed bytes decode to U+FFFD so every operation
// stays total over arbitrary byte strings.

std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);
std::size_t codepoint_count(std::string_view s);

char32_t simple_lower(char32_t c);  // ASCII / Latin-1 / Latin Ext-A / Greek / Cyrillic
std::string lowercase(std::string_view s);

bool is_whitespace(char32_t c);
bool is_letter(char32_t c);
bool is_digit(char32_t c);
bool is_uppercase(char32_t c);

// ------------------------------------------------------------------- tokens

enum class TokenKind { Word, Punctuation, Number, Symbol };

struct Token {
    std::string surface;    // exact slice of the input
    std::string lowercase;  // simple-lowercased surface
    std::size_t start = 0;  // codepoint offsets, [start, end)
    std::size_t end = 0;
    TokenKind kind = TokenKind::Word;

    bool is_word() const { return kind == TokenKind::Word; }
};

struct SentenceSpan {
    std::size_t start = 0;        // codepoint offsets, [start, end)
    std::size_t end = 0;
    std::size_t first_token = 0;  // token index range [first_token, last_token)
    std::size_t last_token = 0;
};

// Words are maximal runs of letters/digits with internal apostrophes or
// hyphens kept attached ("don't", "well-known"). Every other non-whitespace
// character becomes its own Punctuation or Symbol token; digit-only runs are
// Number tokens. Concatenating surfaces recovers all non-whitespace input.
std::vector<Token> tokenize(const std::string& text);

// Sentence boundaries sit at . ! ? followed by whitespace plus a capital (or
// end of text). A short embedded abbreviation list (Mr., Dr., etc., vs., and
// single-letter initials, which also covers "e.g."/"i.e.") suppresses the
// split. Text with tokens but no terminator forms one sentence.
std::vector<SentenceSpan> split_sentences(const std::string& text,
                                          const std::vector<Token>& tokens);

// Vowel-group heuristic: counts maximal runs of a/e/i/o/u/y in the word's
// letters, subtracts a silent trailing 'e' (unless the word ends in
// consonant + "le"), minimum 1. Throws UsageError if the word has no letter.
int count_syllables(const std::string& word);

// Sliding n-gram window over Word tokens only (lowercase forms); sentence
// boundaries are ignored. Length is max(0, word_count - n + 1).
std::vector<std::vector<std::string>> ngrams(const std::vector<Token>& tokens, int n);

}  // namespace styloai::text
