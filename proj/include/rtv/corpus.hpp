#pragma once

#include "rtv/date.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rtv {

inline constexpr std::string_view kUnknownVenue = "Unknown";

struct PaperRecord {
    std::string id;
    std::string title;
    std::vector<std::string> authors;  // canonical names, no duplicates
    std::string abstract;
    Date pub_date;
    std::int64_t citation_count = 0;
    std::string venue;                 // never empty after ingestion
    std::vector<std::string> fields_of_study;

    bool operator==(const PaperRecord&) const = default;
};

enum class Severity { warning, rejected };

std::string_view to_string(Severity s);

struct IngestIssue {
    std::string locator;  // "line 7", "record 3", ...
    Severity severity = Severity::warning;
    std::string reason;

    bool operator==(const IngestIssue&) const = default;
};

struct IngestResult {
    std::vector<PaperRecord> records;
    std::vector<IngestIssue> issues;

    std::size_t rejected_count() const;
};

/// Immutable once built; all accessors are safe for concurrent readers.
class Corpus {
public:
    Corpus() = default;
    Corpus(std::vector<PaperRecord> records, std::string source_label,
           std::vector<IngestIssue> ingest_report = {});

    const std::vector<PaperRecord>& records() const noexcept { return records_; }
    const std::string& source_label() const noexcept { return source_label_; }
    const std::vector<IngestIssue>& ingest_report() const noexcept { return ingest_report_; }

    bool empty() const noexcept { return records_.empty(); }
    std::size_t size() const noexcept { return records_.size(); }

    /// Smallest range covering every record; nullopt for an empty corpus.
    std::optional<TimeRange> date_bounds() const;

    /// 16 hex digits derived from the canonical CSV serialization.
    const std::string& fingerprint() const noexcept { return fingerprint_; }

private:
    std::vector<PaperRecord> records_;
    std::string source_label_;
    std::vector<IngestIssue> ingest_report_;
    std::string fingerprint_;
};

/// Trims, collapses internal whitespace runs to a single space, keeps case.
/// Throws Error("EmptyAuthor") when nothing is left.
std::string normalize_author(std::string_view raw);

/// Canonical CSV ingestion. Header names are matched case-insensitively after
/// trimming; required: title, authors, abstract, date, citations, venue, fields.
/// Throws Error("MissingColumn") / Error("EncodingError") for whole-file failures.
IngestResult parse_corpus_csv(std::string_view bytes);

/// Semantic Scholar export (JSON array or JSON lines).
/// Throws Error("FormatError") / Error("EncodingError") for whole-file failures.
IngestResult parse_semantic_scholar(std::string_view bytes);

/// Writes the canonical CSV form (header + one row per record).
std::string write_corpus_csv(std::span<const PaperRecord> records);

enum class CorpusFormat { csv, s2 };

std::optional<CorpusFormat> parse_corpus_format(std::string_view text);

IngestResult parse_corpus(std::string_view bytes, CorpusFormat format);

/// Reads and parses a file. Throws Error("IoError") if it cannot be read.
Corpus load_corpus(const std::string& path, CorpusFormat format);

/// Records with from <= pub_date <= to, original order kept.
std::vector<PaperRecord> slice(std::span<const PaperRecord> records, const TimeRange& range);
std::vector<PaperRecord> slice(const Corpus& corpus, const TimeRange& range);

/// Content-derived identifier shared by both parsers.
std::string derive_paper_id(const PaperRecord& r);

bool is_valid_utf8(std::string_view bytes);

} // namespace rtv
