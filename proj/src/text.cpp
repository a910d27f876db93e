#include "rtv/text.hpp"

#include "rtv/error.hpp"
#include "rtv/kernels.hpp"

#include <algorithm>
#include <cstdint>

namespace rtv {

namespace {

// Decodes one code point; input is assumed to be valid UTF-8 but stray bytes
// are passed through as single-byte code points.
char32_t next_code_point(std::string_view s, std::size_t& i) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = c < 0x80 ? 1 : (c & 0xE0) == 0xC0 ? 2 : (c & 0xF0) == 0xE0 ? 3 : (c & 0xF8) == 0xF0 ? 4 : 1;
    if (i + len > s.size()) len = 1;
    char32_t cp = len == 1 ? c : len == 2 ? (c & 0x1F) : len == 3 ? (c & 0x0F) : (c & 0x07);
    for (std::size_t k = 1; k < len; ++k) cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    i += len;
    return cp;
}

void append_utf8(std::string& out, char32_t cp) {
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

// ASCII is classified exactly. Beyond ASCII, the common punctuation, symbol,
// arrow, box-drawing and emoji blocks separate words; everything else is a
// letter.
bool is_word_char(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= '0' && cp <= '9');
    }
    if (cp <= 0xBF) return false;
    if (cp == 0xD7 || cp == 0xF7) return false;
    if (cp >= 0x2000 && cp <= 0x206F) return false;
    if (cp >= 0x20A0 && cp <= 0x20CF) return false;
    if (cp >= 0x2190 && cp <= 0x2BFF) return false;
    if (cp >= 0x3000 && cp <= 0x303F) return false;
    if (cp >= 0xFE30 && cp <= 0xFE4F) return false;
    if (cp == 0xFEFF) return false;
    if ((cp >= 0xFF00 && cp <= 0xFF0F) || (cp >= 0xFF1A && cp <= 0xFF20) ||
        (cp >= 0xFF3B && cp <= 0xFF40) || (cp >= 0xFF5B && cp <= 0xFF65)) {
        return false;
    }
    if (cp >= 0x1F000 && cp <= 0x1FAFF) return false;
    return true;
}

// Simple case mapping for ASCII, Latin-1, Latin Extended-A, Greek and Cyrillic.
char32_t to_lower(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 32;
    if (cp < 0x80) return cp;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    if (cp >= 0x100 && cp <= 0x17F) {
        if (cp == 0x178) return 0xFF;
        bool even_upper = (cp <= 0x12F) || (cp >= 0x132 && cp <= 0x137) || (cp >= 0x14A && cp <= 0x177);
        bool odd_upper = (cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E);
        if (even_upper && cp % 2 == 0) return cp + 1;
        if (odd_upper && cp % 2 == 1) return cp + 1;
        return cp;
    }
    if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
    if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
    if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
    return cp;
}

bool all_ascii_digits(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

std::vector<std::string> tokenize(std::string_view text, const StopwordSet& stop) {
    std::vector<std::string> out;
    std::string cur;
    std::size_t cur_len = 0;

    auto flush = [&] {
        if (cur_len >= 2 && !all_ascii_digits(cur) && !stop.contains(cur)) out.push_back(cur);
        cur.clear();
        cur_len = 0;
    };

    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp = next_code_point(text, i);
        if (is_word_char(cp)) {
            append_utf8(cur, to_lower(cp));
            ++cur_len;
        } else {
            flush();
        }
    }
    flush();
    return out;
}

BucketWordCounts bucket_word_counts(std::span<const PaperRecord> records, Granularity g,
                                    const StopwordSet& stop) {
    BucketWordCounts counts = kernels::count_words_omp(records, g, stop);
    if (records.empty()) return counts;
    auto [lo, hi] = std::minmax_element(records.begin(), records.end(),
                                        [](const auto& a, const auto& b) { return a.pub_date < b.pub_date; });
    for (auto& b : bucket_span(lo->pub_date, hi->pub_date, g)) counts.try_emplace(std::move(b));
    return counts;
}

std::optional<RaceMode> parse_race_mode(std::string_view text) {
    if (text == "cumulative") return RaceMode::cumulative;
    if (text == "per_bucket") return RaceMode::per_bucket;
    return std::nullopt;
}

std::string_view to_string(RaceMode m) {
    return m == RaceMode::cumulative ? "cumulative" : "per_bucket";
}

std::vector<RaceEntry> top_entries(const WordCounts& counts, int k) {
    std::vector<RaceEntry> entries;
    entries.reserve(counts.size());
    for (const auto& [word, count] : counts) {
        if (count > 0) entries.push_back({word, count});
    }
    auto by_rank = [](const RaceEntry& a, const RaceEntry& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.word < b.word;
    };
    const auto keep = std::min(entries.size(), static_cast<std::size_t>(std::max(k, 0)));
    std::partial_sort(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(keep),
                      entries.end(), by_rank);
    entries.resize(keep);
    return entries;
}

RaceSeries race_frames(const BucketWordCounts& counts, int k, RaceMode mode) {
    if (k < 1) throw Error("InvalidK", "k must be a positive integer");
    RaceSeries race;
    race.mode = mode;
    race.k = k;
    race.frames.reserve(counts.size());

    WordCounts running;
    for (const auto& [bucket, words] : counts) {
        if (mode == RaceMode::cumulative) {
            for (const auto& [w, c] : words) running[w] += c;
            race.frames.push_back({bucket, top_entries(running, k)});
        } else {
            race.frames.push_back({bucket, top_entries(words, k)});
        }
    }
    return race;
}

} // namespace rtv
