#pragma once
// Lexical substrate: tokenization, sentence segmentation, corpus count
// statistics and TF-IDF scoring.
//
// Tokenizer contract: NFC-style composition of common Latin combining
// marks, curly apostrophes mapped to ASCII, then lowercased alphabetic
// tokens; apostrophe-internal contractions stay one token; digits and
// punctuation are separators. Stop-word removal is optional per config.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace paudit::textproc {

struct TokenizerConfig {
    bool remove_stopwords = false;
    std::shared_ptr<const std::unordered_set<std::string>> stopwords;
};

std::unordered_set<std::string> load_stopwords(
    const std::filesystem::path& path);

// Latin-focused NFC composition (combining marks U+0300..U+036F onto
// ASCII base letters where a precomposed Latin-1 letter exists) plus
// U+2019 -> '\''. Everything else passes through unchanged.
std::string normalize_text(std::string_view text);

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& config = {});

// Splits on '.', '!', '?' followed by whitespace or end of input, with
// an abbreviation guard: no split when the word before a '.' is a known
// abbreviation or a single letter.
std::vector<std::string> split_sentences(std::string_view text);

struct TokenStats {
    std::map<std::string, std::int64_t> counts;  // no zero-count entries
    std::int64_t total = 0;

    void add(const std::string& token, std::int64_t n = 1);
    std::int64_t count(const std::string& token) const;
};

TokenStats count_stats(const std::vector<std::vector<std::string>>& docs);

struct TfIdfTable {
    std::vector<std::string> vocabulary;  // sorted
    std::unordered_map<std::string, std::uint32_t> vocab_index;
    // Per document, (vocabulary index, score) sorted by index; absent
    // tokens are unstored (score 0).
    std::vector<std::vector<std::pair<std::uint32_t, double>>> doc_scores;
    std::size_t doc_count = 0;

    double score(std::size_t doc, std::string_view token) const;
    // Mean tf-idf over the document's distinct tokens (0 for empty docs).
    double mean_token_score(std::size_t doc) const;
};

// tf(t,d) = count(t,d)/|d|; idf(t) = ln((1+D)/(1+df(t))) + 1.
// Throws EmptyCorpus unless at least one document is non-empty.
TfIdfTable tfidf(const std::vector<std::vector<std::string>>& docs);

// Tokens ranked by score summed over the given documents, descending,
// ties broken lexicographically; at most k results. Requires k >= 1.
std::vector<std::pair<std::string, double>> top_terms(
    const TfIdfTable& table, const std::vector<std::size_t>& group_docs,
    std::size_t k);

}  // namespace paudit::textproc
