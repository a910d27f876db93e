#pragma once

#include "rtv/corpus.hpp"
#include "rtv/error.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace rtv::test {

inline std::string data_path(const std::string& rel) {
    return std::string(RTV_TEST_DATA_DIR) + "/" + rel;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IoError", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Corpus fixture_a() {
    auto r = parse_corpus_csv(read_file(data_path("fixtures/fixture_a.csv")));
    return Corpus(std::move(r.records), "fixture_a", std::move(r.issues));
}

inline const PaperRecord& by_title(const Corpus& c, const std::string& title) {
    for (const auto& r : c.records()) {
        if (r.title == title) return r;
    }
    throw Error("NotFound", title);
}

inline Date ymd(int y, unsigned m, unsigned d) {
    return Date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
}

} // namespace rtv::test
