#include "paudit/textproc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>

#include "paudit/errors.hpp"

namespace paudit::textproc {

namespace {

struct Decoded {
    char32_t cp;
    std::size_t len;
};

Decoded decode_utf8(std::string_view s, std::size_t i) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) return {b0, 1};
    auto cont = [&](std::size_t k) {
        return i + k < s.size() &&
               (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(1)) {
        char32_t cp = (b0 & 0x1Fu) << 6 |
                      (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
        return {cp, 2};
    }
    if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
        char32_t cp = (b0 & 0x0Fu) << 12 |
                      (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6 |
                      (static_cast<unsigned char>(s[i + 2]) & 0x3Fu);
        return {cp, 3};
    }
    if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
        char32_t cp = (b0 & 0x07u) << 18 |
                      (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12 |
                      (static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6 |
                      (static_cast<unsigned char>(s[i + 3]) & 0x3Fu);
        return {cp, 4};
    }
    return {b0, 1};  // invalid byte: pass through
}

void encode_utf8(char32_t cp, std::string& out) {
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

struct Composition {
    char base;
    char32_t mark;
    char32_t composed;
};

// Latin-1 precomposed letters reachable from an ASCII base plus one
// combining mark. 0x300 grave, 0x301 acute, 0x302 circumflex,
// 0x303 tilde, 0x308 diaeresis, 0x30A ring, 0x327 cedilla.
constexpr std::array<Composition, 54> kCompositions{{
    {'a', 0x300, 0xE0}, {'a', 0x301, 0xE1}, {'a', 0x302, 0xE2},
    {'a', 0x303, 0xE3}, {'a', 0x308, 0xE4}, {'a', 0x30A, 0xE5},
    {'e', 0x300, 0xE8}, {'e', 0x301, 0xE9}, {'e', 0x302, 0xEA},
    {'e', 0x308, 0xEB}, {'i', 0x300, 0xEC}, {'i', 0x301, 0xED},
    {'i', 0x302, 0xEE}, {'i', 0x308, 0xEF}, {'o', 0x300, 0xF2},
    {'o', 0x301, 0xF3}, {'o', 0x302, 0xF4}, {'o', 0x303, 0xF5},
    {'o', 0x308, 0xF6}, {'u', 0x300, 0xF9}, {'u', 0x301, 0xFA},
    {'u', 0x302, 0xFB}, {'u', 0x308, 0xFC}, {'n', 0x303, 0xF1},
    {'c', 0x327, 0xE7}, {'y', 0x301, 0xFD}, {'y', 0x308, 0xFF},
    {'A', 0x300, 0xC0}, {'A', 0x301, 0xC1}, {'A', 0x302, 0xC2},
    {'A', 0x303, 0xC3}, {'A', 0x308, 0xC4}, {'A', 0x30A, 0xC5},
    {'E', 0x300, 0xC8}, {'E', 0x301, 0xC9}, {'E', 0x302, 0xCA},
    {'E', 0x308, 0xCB}, {'I', 0x300, 0xCC}, {'I', 0x301, 0xCD},
    {'I', 0x302, 0xCE}, {'I', 0x308, 0xCF}, {'O', 0x300, 0xD2},
    {'O', 0x301, 0xD3}, {'O', 0x302, 0xD4}, {'O', 0x303, 0xD5},
    {'O', 0x308, 0xD6}, {'U', 0x300, 0xD9}, {'U', 0x301, 0xDA},
    {'U', 0x302, 0xDB}, {'U', 0x308, 0xDC}, {'N', 0x303, 0xD1},
    {'C', 0x327, 0xC7}, {'Y', 0x301, 0xDD}, {'Y', 0x308, 0xD8},
}};

bool compose(char base, char32_t mark, char32_t& out) {
    for (const auto& c : kCompositions) {
        if (c.base == base && c.mark == mark) {
            out = c.composed;
            return true;
        }
    }
    return false;
}

bool is_ascii_alpha(char32_t cp) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
}

bool is_word_codepoint(char32_t cp) {
    if (is_ascii_alpha(cp) || cp == '\'') return true;
    if (cp < 0x80) return false;                  // ASCII digits/punct
    if (cp == 0xD7 || cp == 0xF7) return false;   // multiply/divide signs
    if (cp >= 0x2000 && cp <= 0x206F) return false;  // general punctuation
    return cp >= 0xC0;  // Latin-1 letters, combining marks, and beyond
}

char32_t lower_cp(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    return cp;
}

const std::unordered_set<std::string>& abbreviation_guard() {
    static const std::unordered_set<std::string> guard = {
        "mr",   "mrs",  "ms",   "dr",   "prof", "sr",   "jr",   "st",
        "ave",  "blvd", "inc",  "ltd",  "co",   "corp", "vs",   "etc",
        "eg",   "ie",   "al",   "approx", "dept", "est", "fig",  "gen",
        "gov",  "hon",  "jan",  "feb",  "mar",  "apr",  "jun",  "jul",
        "aug",  "sep",  "sept", "oct",  "nov",  "dec",  "no",   "vol",
    };
    return guard;
}

}  // namespace

std::unordered_set<std::string> load_stopwords(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open stop-word list: " + path.string());
    std::unordered_set<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string word;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                word.push_back(static_cast<char>(
                    std::tolower(static_cast<unsigned char>(c))));
        if (!word.empty()) out.insert(word);
    }
    return out;
}

std::string normalize_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const auto [cp, len] = decode_utf8(text, i);
        i += len;
        if (cp == 0x2019) {  // right single quotation mark
            out.push_back('\'');
            continue;
        }
        if (cp >= 0x300 && cp <= 0x36F && !out.empty()) {
            const char prev = out.back();
            char32_t composed;
            if (compose(prev, cp, composed)) {
                out.pop_back();
                encode_utf8(composed, out);
                continue;
            }
        }
        encode_utf8(cp, out);
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& config) {
    const std::string norm = normalize_text(text);
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        // apostrophes are only kept inside a token
        std::size_t b = 0, e = current.size();
        while (b < e && current[b] == '\'') ++b;
        while (e > b && current[e - 1] == '\'') --e;
        if (e > b) {
            std::string tok = current.substr(b, e - b);
            if (!config.remove_stopwords || !config.stopwords ||
                !config.stopwords->count(tok))
                tokens.push_back(std::move(tok));
        }
        current.clear();
    };
    std::size_t i = 0;
    while (i < norm.size()) {
        const auto [cp, len] = decode_utf8(norm, i);
        i += len;
        if (is_word_codepoint(cp)) {
            encode_utf8(lower_cp(cp), current);
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

std::vector<std::string> split_sentences(std::string_view text) {
    const std::string norm = normalize_text(text);
    std::vector<std::string> out;
    std::string current;

    auto preceding_word = [&]() {
        std::size_t e = current.size();
        while (e > 0 && !is_ascii_alpha(
                            static_cast<unsigned char>(current[e - 1]) < 0x80
                                ? static_cast<char32_t>(current[e - 1])
                                : U'a'))
            --e;
        std::size_t b = e;
        while (b > 0 &&
               is_ascii_alpha(static_cast<char32_t>(
                   static_cast<unsigned char>(current[b - 1]))))
            --b;
        std::string word = current.substr(b, e - b);
        std::transform(word.begin(), word.end(), word.begin(), [](char c) {
            return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        });
        return word;
    };

    auto flush = [&] {
        std::size_t b = current.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) {
            current.clear();
            return;
        }
        std::size_t e = current.find_last_not_of(" \t\r\n");
        out.push_back(current.substr(b, e - b + 1));
        current.clear();
    };

    for (std::size_t i = 0; i < norm.size(); ++i) {
        const char c = norm[i];
        current.push_back(c);
        if (c != '.' && c != '!' && c != '?') continue;
        const bool at_end = i + 1 >= norm.size();
        const bool before_space =
            !at_end && std::isspace(static_cast<unsigned char>(norm[i + 1]));
        if (!at_end && !before_space) continue;
        if (c == '.') {
            current.pop_back();
            const std::string word = preceding_word();
            current.push_back('.');
            if (word.size() == 1 || abbreviation_guard().count(word)) continue;
        }
        flush();
    }
    flush();
    return out;
}

void TokenStats::add(const std::string& token, std::int64_t n) {
    if (n == 0) return;
    counts[token] += n;
    total += n;
}

std::int64_t TokenStats::count(const std::string& token) const {
    auto it = counts.find(token);
    return it == counts.end() ? 0 : it->second;
}

TokenStats count_stats(const std::vector<std::vector<std::string>>& docs) {
    TokenStats stats;
    for (const auto& doc : docs)
        for (const auto& token : doc) stats.add(token);
    return stats;
}

double TfIdfTable::score(std::size_t doc, std::string_view token) const {
    auto vit = vocab_index.find(std::string(token));
    if (vit == vocab_index.end() || doc >= doc_scores.size()) return 0.0;
    const auto& row = doc_scores[doc];
    auto it = std::lower_bound(
        row.begin(), row.end(), vit->second,
        [](const auto& entry, std::uint32_t idx) { return entry.first < idx; });
    if (it != row.end() && it->first == vit->second) return it->second;
    return 0.0;
}

double TfIdfTable::mean_token_score(std::size_t doc) const {
    if (doc >= doc_scores.size() || doc_scores[doc].empty()) return 0.0;
    double sum = 0.0;
    for (const auto& [idx, s] : doc_scores[doc]) sum += s;
    return sum / static_cast<double>(doc_scores[doc].size());
}

TfIdfTable tfidf(const std::vector<std::vector<std::string>>& docs) {
    bool any = false;
    for (const auto& d : docs) any = any || !d.empty();
    if (!any) throw EmptyCorpus("tfidf requires at least one non-empty document");

    TfIdfTable table;
    table.doc_count = docs.size();

    std::map<std::string, std::uint32_t> df;
    std::vector<std::map<std::string, std::int64_t>> doc_counts(docs.size());
    for (std::size_t d = 0; d < docs.size(); ++d) {
        for (const auto& t : docs[d]) ++doc_counts[d][t];
        for (const auto& [t, c] : doc_counts[d]) ++df[t];
    }

    table.vocabulary.reserve(df.size());
    for (const auto& [t, c] : df) {
        table.vocab_index.emplace(t, static_cast<std::uint32_t>(
                                         table.vocabulary.size()));
        table.vocabulary.push_back(t);
    }

    const double d_total = static_cast<double>(docs.size());
    table.doc_scores.resize(docs.size());
    for (std::size_t d = 0; d < docs.size(); ++d) {
        const double len = static_cast<double>(docs[d].size());
        auto& row = table.doc_scores[d];
        row.reserve(doc_counts[d].size());
        for (const auto& [t, c] : doc_counts[d]) {
            const double tf = static_cast<double>(c) / len;
            const double idf =
                std::log((1.0 + d_total) /
                         (1.0 + static_cast<double>(df[t]))) + 1.0;
            row.emplace_back(table.vocab_index.at(t), tf * idf);
        }
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return table;
}

std::vector<std::pair<std::string, double>> top_terms(
    const TfIdfTable& table, const std::vector<std::size_t>& group_docs,
    std::size_t k) {
    if (k < 1) throw ValidationError("top_terms requires k >= 1");
    std::map<std::string, double> agg;
    for (std::size_t d : group_docs) {
        if (d >= table.doc_scores.size()) continue;
        for (const auto& [idx, s] : table.doc_scores[d])
            agg[table.vocabulary[idx]] += s;
    }
    std::vector<std::pair<std::string, double>> ranked(agg.begin(), agg.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (ranked.size() > k) ranked.resize(k);
    return ranked;
}

}  // namespace paudit::textproc
