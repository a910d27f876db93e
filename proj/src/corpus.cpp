#include "rtv/corpus.hpp"

#include "ingest.hpp"
#include "rtv/csv.hpp"
#include "rtv/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

namespace rtv {

namespace detail {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n\f\v";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

std::optional<PaperRecord> validate(RawRecord raw, const std::string& locator,
                                    std::vector<IngestIssue>& issues) {
    std::vector<IngestIssue> warnings;
    auto reject = [&](std::string reason) -> std::optional<PaperRecord> {
        issues.push_back({locator, Severity::rejected, std::move(reason)});
        return std::nullopt;
    };
    auto warn = [&](std::string reason) {
        warnings.push_back({locator, Severity::warning, std::move(reason)});
    };

    PaperRecord rec;
    rec.title = std::string(trim(raw.title));
    if (rec.title.empty()) return reject("empty title");

    for (const auto& a : raw.authors) {
        std::string name;
        try {
            name = normalize_author(a);
        } catch (const Error&) {
            warn("empty author entry dropped");
            continue;
        }
        if (std::find(rec.authors.begin(), rec.authors.end(), name) != rec.authors.end()) {
            warn("duplicate author '" + name + "' removed");
            continue;
        }
        rec.authors.push_back(std::move(name));
    }
    if (rec.authors.empty()) return reject("no authors");

    auto date_text = trim(raw.date);
    auto date = parse_date(date_text);
    if (!date) return reject("invalid date '" + std::string(date_text) + "'");
    if (raw.date_is_year_only) {
        *date = Date{date->year(), std::chrono::July, std::chrono::day{1}};
        warn("publicationDate missing, using July 1 of year " + std::string(date_text));
    }
    rec.pub_date = *date;

    auto cites = trim(raw.citations);
    if (cites.empty()) {
        warn("missing citation count, using 0");
        rec.citation_count = 0;
    } else {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(cites.data(), cites.data() + cites.size(), v);
        if (ec != std::errc{} || ptr != cites.data() + cites.size() || v < 0) {
            return reject("invalid citation count '" + std::string(cites) + "'");
        }
        rec.citation_count = v;
    }

    rec.abstract = std::string(trim(raw.abstract));
    rec.venue = std::string(trim(raw.venue));
    if (rec.venue.empty()) rec.venue = std::string(kUnknownVenue);

    for (const auto& f : raw.fields) {
        std::string label(trim(f));
        if (label.empty()) continue;
        if (std::find(rec.fields_of_study.begin(), rec.fields_of_study.end(), label) !=
            rec.fields_of_study.end()) {
            warn("duplicate field '" + label + "' removed");
            continue;
        }
        rec.fields_of_study.push_back(std::move(label));
    }

    issues.insert(issues.end(), warnings.begin(), warnings.end());
    return rec;
}

void assign_ids(std::vector<PaperRecord>& records) {
    std::unordered_map<std::string, int> seen;
    for (auto& r : records) {
        std::string base = derive_paper_id(r);
        int& count = seen[base];
        ++count;
        r.id = count == 1 ? base : base + "-" + std::to_string(count);
    }
}

} // namespace detail

using detail::trim;

std::string_view to_string(Severity s) {
    return s == Severity::warning ? "warning" : "rejected";
}

std::size_t IngestResult::rejected_count() const {
    return static_cast<std::size_t>(std::count_if(issues.begin(), issues.end(), [](const auto& i) {
        return i.severity == Severity::rejected;
    }));
}

Corpus::Corpus(std::vector<PaperRecord> records, std::string source_label,
               std::vector<IngestIssue> ingest_report)
    : records_(std::move(records)),
      source_label_(std::move(source_label)),
      ingest_report_(std::move(ingest_report)) {
    std::unordered_map<std::string_view, int> ids;
    for (const auto& r : records_) {
        if (++ids[r.id] > 1) throw Error("DuplicateId", "duplicate paper id '" + r.id + "'");
    }
    fingerprint_ = detail::hex64(detail::fnv1a(write_corpus_csv(records_)));
}

std::optional<TimeRange> Corpus::date_bounds() const {
    if (records_.empty()) return std::nullopt;
    auto [lo, hi] = std::minmax_element(records_.begin(), records_.end(),
                                        [](const auto& a, const auto& b) { return a.pub_date < b.pub_date; });
    return TimeRange{lo->pub_date, hi->pub_date};
}

std::string normalize_author(std::string_view raw) {
    std::string out;
    bool pending_space = false;
    for (char c : raw) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out.push_back(' ');
        pending_space = false;
        out.push_back(c);
    }
    if (out.empty()) throw Error("EmptyAuthor", "author name is empty");
    return out;
}

bool is_valid_utf8(std::string_view bytes) {
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        auto c = static_cast<unsigned char>(bytes[i]);
        if (c < 0x80) {
            ++i;
            continue;
        }
        std::size_t len;
        std::uint32_t cp;
        if ((c & 0xE0) == 0xC0) { len = 2; cp = c & 0x1F; }
        else if ((c & 0xF0) == 0xE0) { len = 3; cp = c & 0x0F; }
        else if ((c & 0xF8) == 0xF0) { len = 4; cp = c & 0x07; }
        else return false;
        if (i + len > n) return false;
        for (std::size_t k = 1; k < len; ++k) {
            auto cc = static_cast<unsigned char>(bytes[i + k]);
            if ((cc & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        static constexpr std::array<std::uint32_t, 5> min_cp{0, 0, 0x80, 0x800, 0x10000};
        if (cp < min_cp[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
        i += len;
    }
    return true;
}

namespace {

constexpr std::array<std::string_view, 7> kRequiredColumns{
    "title", "authors", "abstract", "date", "citations", "venue", "fields"};

std::string_view strip_bom(std::string_view bytes) {
    if (bytes.size() >= 3 && bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);
    return bytes;
}

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (auto& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out.push_back(sep);
        out += parts[i];
    }
    return out;
}

} // namespace

IngestResult parse_corpus_csv(std::string_view bytes) {
    if (!is_valid_utf8(bytes)) throw Error("EncodingError", "input is not valid UTF-8");
    auto rows = csv::read(strip_bom(bytes));

    std::map<std::string, std::size_t> header;
    if (!rows.empty()) {
        for (std::size_t c = 0; c < rows.front().cells.size(); ++c) {
            header.emplace(lower_ascii(trim(rows.front().cells[c])), c);
        }
    }
    std::array<std::size_t, kRequiredColumns.size()> col{};
    for (std::size_t k = 0; k < kRequiredColumns.size(); ++k) {
        auto it = header.find(std::string(kRequiredColumns[k]));
        if (it == header.end()) {
            throw Error("MissingColumn", std::string(kRequiredColumns[k]));
        }
        col[k] = it->second;
    }
    const std::size_t width = rows.front().cells.size();

    IngestResult result;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const std::string locator = "line " + std::to_string(row.line);
        if (!row.error.empty()) {
            result.issues.push_back({locator, Severity::rejected, row.error});
            continue;
        }
        if (row.cells.size() != width) {
            result.issues.push_back({locator, Severity::rejected,
                                     "expected " + std::to_string(width) + " cells, found " +
                                         std::to_string(row.cells.size())});
            continue;
        }
        detail::RawRecord raw;
        raw.title = row.cells[col[0]];
        raw.authors = detail::split(row.cells[col[1]], ';');
        raw.abstract = row.cells[col[2]];
        raw.date = row.cells[col[3]];
        raw.citations = row.cells[col[4]];
        raw.venue = row.cells[col[5]];
        raw.fields = detail::split(row.cells[col[6]], ';');
        if (auto rec = detail::validate(std::move(raw), locator, result.issues)) {
            result.records.push_back(std::move(*rec));
        }
    }
    detail::assign_ids(result.records);
    return result;
}

std::string write_corpus_csv(std::span<const PaperRecord> records) {
    std::string out = "title,authors,abstract,date,citations,venue,fields\n";
    for (const auto& r : records) {
        out += csv::join_row({r.title, join(r.authors, ';'), r.abstract, format_date(r.pub_date),
                              std::to_string(r.citation_count), r.venue,
                              join(r.fields_of_study, ';')});
        out.push_back('\n');
    }
    return out;
}

std::optional<CorpusFormat> parse_corpus_format(std::string_view text) {
    if (text == "csv") return CorpusFormat::csv;
    if (text == "s2") return CorpusFormat::s2;
    return std::nullopt;
}

IngestResult parse_corpus(std::string_view bytes, CorpusFormat format) {
    return format == CorpusFormat::csv ? parse_corpus_csv(bytes) : parse_semantic_scholar(bytes);
}

Corpus load_corpus(const std::string& path, CorpusFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IoError", "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    auto result = parse_corpus(ss.str(), format);
    return Corpus(std::move(result.records), path, std::move(result.issues));
}

std::vector<PaperRecord> slice(std::span<const PaperRecord> records, const TimeRange& range) {
    std::vector<PaperRecord> out;
    for (const auto& r : records) {
        if (range.contains(r.pub_date)) out.push_back(r);
    }
    return out;
}

std::vector<PaperRecord> slice(const Corpus& corpus, const TimeRange& range) {
    return slice(std::span<const PaperRecord>(corpus.records()), range);
}

std::string derive_paper_id(const PaperRecord& r) {
    std::string key = r.title;
    key.push_back('\x1f');
    key += format_date(r.pub_date);
    for (const auto& a : r.authors) {
        key.push_back('\x1f');
        key += a;
    }
    return detail::hex64(detail::fnv1a(key));
}

} // namespace rtv
