#include "ingest.hpp"
#include "rtv/corpus.hpp"
#include "rtv/error.hpp"

#include <json.hpp>

#include <cstdio>

namespace rtv {

namespace {

using nlohmann::json;

std::string string_or_empty(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) return {};
    return it->get<std::string>();
}

std::optional<PaperRecord> map_record(const json& obj, const std::string& locator,
                                      std::vector<IngestIssue>& issues) {
    if (!obj.is_object()) {
        issues.push_back({locator, Severity::rejected, "not a JSON object"});
        return std::nullopt;
    }
    detail::RawRecord raw;
    raw.title = string_or_empty(obj, "title");

    if (auto it = obj.find("authors"); it != obj.end() && it->is_array()) {
        for (const auto& a : *it) {
            if (a.is_object() && a.contains("name") && a["name"].is_string()) {
                raw.authors.push_back(a["name"].get<std::string>());
            } else if (a.is_string()) {
                raw.authors.push_back(a.get<std::string>());
            } else {
                raw.authors.emplace_back();
            }
        }
    }

    raw.abstract = string_or_empty(obj, "abstract");

    raw.date = string_or_empty(obj, "publicationDate");
    if (detail::trim(raw.date).empty()) {
        if (auto it = obj.find("year"); it != obj.end() && it->is_number_integer()) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%04lld", static_cast<long long>(it->get<std::int64_t>()));
            raw.date = buf;
            raw.date_is_year_only = true;
        }
    }

    if (auto it = obj.find("citationCount"); it != obj.end() && !it->is_null()) {
        raw.citations = it->dump();
    }

    raw.venue = string_or_empty(obj, "venue");

    if (auto it = obj.find("fieldsOfStudy"); it != obj.end() && it->is_array()) {
        for (const auto& f : *it) {
            if (f.is_string()) raw.fields.push_back(f.get<std::string>());
        }
    }
    return detail::validate(std::move(raw), locator, issues);
}

} // namespace

IngestResult parse_semantic_scholar(std::string_view bytes) {
    if (!is_valid_utf8(bytes)) throw Error("EncodingError", "input is not valid UTF-8");
    if (bytes.size() >= 3 && bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);

    IngestResult result;
    auto body = detail::trim(bytes);
    if (body.empty()) return result;

    if (body.front() == '[') {
        json doc = json::parse(body, nullptr, false);
        if (doc.is_discarded() || !doc.is_array()) {
            throw Error("FormatError", "input is not a valid JSON array");
        }
        for (std::size_t i = 0; i < doc.size(); ++i) {
            if (auto rec = map_record(doc[i], "record " + std::to_string(i + 1), result.issues)) {
                result.records.push_back(std::move(*rec));
            }
        }
    } else if (body.front() == '{') {
        json whole = json::parse(body, nullptr, false);
        if (!whole.is_discarded()) {
            if (auto rec = map_record(whole, "record 1", result.issues)) {
                result.records.push_back(std::move(*rec));
            }
        } else {
            std::size_t parsed = 0;
            std::size_t line_no = 0;
            std::size_t start = 0;
            while (start <= bytes.size()) {
                auto end = bytes.find('\n', start);
                if (end == std::string_view::npos) end = bytes.size();
                auto line = detail::trim(bytes.substr(start, end - start));
                ++line_no;
                start = end + 1;
                if (line.empty()) continue;
                const std::string locator = "line " + std::to_string(line_no);
                json obj = json::parse(line, nullptr, false);
                if (obj.is_discarded()) {
                    result.issues.push_back({locator, Severity::rejected, "malformed JSON"});
                    continue;
                }
                ++parsed;
                if (auto rec = map_record(obj, locator, result.issues)) {
                    result.records.push_back(std::move(*rec));
                }
            }
            if (parsed == 0) throw Error("FormatError", "no parseable JSON objects found");
        }
    } else {
        throw Error("FormatError", "expected a JSON array or one JSON object per line");
    }
    detail::assign_ids(result.records);
    return result;
}

} // namespace rtv
