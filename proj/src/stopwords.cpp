#include "rtv/error.hpp"
#include "rtv/text.hpp"

#include <fstream>
#include <sstream>

namespace rtv {

namespace {
#include "stopwords_en.inc"

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (auto& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}
} // namespace

StopwordSet::StopwordSet(std::initializer_list<std::string_view> words) {
    for (auto w : words) words_.insert(lower_ascii(w));
}

StopwordSet StopwordSet::parse(std::string_view text, std::string source_path) {
    StopwordSet set;
    set.source_path_ = std::move(source_path);
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        start = end + 1;
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string_view::npos) continue;
        auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (line.front() == '#') continue;
        set.words_.insert(lower_ascii(line));
    }
    return set;
}

StopwordSet StopwordSet::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IoError", "cannot read stopword file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

StopwordSet StopwordSet::english() {
    return parse(kEnglishStopwords, "<builtin:english>");
}

bool StopwordSet::contains(std::string_view token) const {
    return words_.find(std::string(token)) != words_.end();
}

} // namespace rtv
