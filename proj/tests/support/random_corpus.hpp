#pragma once

// Small random corpora for property and brute-force equivalence tests.

#include "rtv/corpus.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace rtv::test {

struct RandomCorpusLimits {
    int max_papers = 12;
    int max_authors = 6;
    int max_venues = 4;
    int max_fields = 3;
    int first_year = 2017;
    int last_year = 2021;
};

inline const std::vector<std::string>& author_pool() {
    static const std::vector<std::string> pool{"Ann Lee", "Bo Chen", "Carla Diaz", "Dev Patel",
                                               "Eve", "Farid Haddad", "Gu Wei", "Hana Sato"};
    return pool;
}

inline const std::vector<std::string>& word_pool() {
    static const std::vector<std::string> pool{
        "deep", "learning", "speech", "model", "of", "the", "data", "neural", "graph",
        "2021", "a", "x1", "analysis", "and", "recognition", "clinical", "in", "GPU", "Model"};
    return pool;
}

class RandomCorpus {
public:
    explicit RandomCorpus(std::uint32_t seed, RandomCorpusLimits limits = {})
        : rng_(seed), limits_(limits) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    /// Canonical records (already in the form the parsers produce), ids included.
    std::vector<PaperRecord> records() {
        const int n_authors = uniform(1, limits_.max_authors);
        const int n_venues = uniform(1, limits_.max_venues);
        const int n_fields = uniform(1, limits_.max_fields);
        const int n_papers = uniform(0, limits_.max_papers);

        std::vector<PaperRecord> out;
        for (int p = 0; p < n_papers; ++p) {
            PaperRecord r;
            r.title = "Paper " + std::to_string(p) + title_suffix();
            std::vector<int> idx(static_cast<std::size_t>(n_authors));
            for (int i = 0; i < n_authors; ++i) idx[static_cast<std::size_t>(i)] = i;
            std::shuffle(idx.begin(), idx.end(), rng_);
            const int k = uniform(1, std::min(n_authors, 4));
            for (int i = 0; i < k; ++i) r.authors.push_back(author_pool()[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);

            const int words = uniform(0, 8);
            for (int w = 0; w < words; ++w) {
                if (w) r.abstract += uniform(0, 4) == 0 ? ", " : " ";
                r.abstract += word_pool()[static_cast<std::size_t>(uniform(0, static_cast<int>(word_pool().size()) - 1))];
            }

            const int year = uniform(limits_.first_year, limits_.last_year);
            const unsigned month = static_cast<unsigned>(uniform(1, 12));
            const unsigned day = static_cast<unsigned>(uniform(1, 28));
            r.pub_date = Date{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
            r.citation_count = uniform(0, 3) == 0 ? 0 : uniform(0, 60);
            r.venue = "Venue " + std::string(1, static_cast<char>('A' + uniform(0, n_venues - 1)));
            for (int f = 0; f < n_fields; ++f) {
                if (uniform(0, 2) == 0) r.fields_of_study.push_back("Field " + std::to_string(f));
            }
            r.id = derive_paper_id(r);
            out.push_back(std::move(r));
        }
        return out;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::string title_suffix() {
        switch (uniform(0, 3)) {
        case 0: return ": a \"quoted\" study";
        case 1: return ", with commas";
        default: return "";
        }
    }

    std::mt19937 rng_;
    RandomCorpusLimits limits_;
};

/// Semantic Scholar export shape for the same records.
inline std::string to_semantic_scholar(const std::vector<PaperRecord>& records, bool lines = false) {
    nlohmann::json arr = nlohmann::json::array();
    std::string jsonl;
    for (const auto& r : records) {
        nlohmann::json authors = nlohmann::json::array();
        for (const auto& a : r.authors) authors.push_back({{"name", a}});
        nlohmann::json obj = {{"title", r.title},
                              {"authors", authors},
                              {"abstract", r.abstract},
                              {"publicationDate", format_date(r.pub_date)},
                              {"citationCount", r.citation_count},
                              {"venue", r.venue},
                              {"fieldsOfStudy", r.fields_of_study}};
        jsonl += obj.dump() + "\n";
        arr.push_back(std::move(obj));
    }
    return lines ? jsonl : arr.dump(2);
}

} // namespace rtv::test
