#include "rtv/config.hpp"

#include "ingest.hpp"
#include "rtv/error.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace rtv {

namespace fs = std::filesystem;

namespace {

std::string resolve(std::string_view value, const std::string& base_dir) {
    fs::path p{std::string(value)};
    if (p.is_relative() && !base_dir.empty()) p = fs::path(base_dir) / p;
    return p.lexically_normal().string();
}

template <typename Int>
Int parse_int(std::string_view text, std::string_view key) {
    Int v{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error("ConfigError", "'" + std::string(key) + "' must be an integer, got '" + std::string(text) + "'");
    }
    return v;
}

} // namespace

ServiceConfig parse_config(std::string_view text, const std::string& base_dir) {
    ServiceConfig cfg;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = detail::trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') continue;

        auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error("ConfigError", "line " + std::to_string(line_no) + ": expected key = value");
        }
        auto key = detail::trim(line.substr(0, eq));
        auto value = detail::trim(line.substr(eq + 1));

        if (key == "corpus_path") {
            cfg.corpus_path = resolve(value, base_dir);
        } else if (key == "corpus_format") {
            auto f = parse_corpus_format(value);
            if (!f) throw Error("ConfigError", "corpus_format must be csv or s2");
            cfg.corpus_format = *f;
        } else if (key == "stopwords_path") {
            cfg.stopwords_path = value.empty() ? std::string{} : resolve(value, base_dir);
        } else if (key == "port") {
            cfg.port = parse_int<int>(value, key);
        } else if (key == "cache_capacity") {
            auto cap = parse_int<long long>(value, key);
            if (cap < 1) throw Error("ConfigError", "cache_capacity must be positive");
            cfg.cache_capacity = static_cast<std::size_t>(cap);
        } else if (key == "static_dir") {
            cfg.static_dir = value.empty() ? std::string{} : resolve(value, base_dir);
        } else if (key == "bind_address") {
            cfg.bind_address = std::string(value);
        } else {
            throw Error("ConfigError", "unknown key '" + std::string(key) + "'");
        }
    }
    return cfg;
}

void validate_config(const ServiceConfig& cfg) {
    if (cfg.port <= 0 || cfg.port >= 65536) {
        throw Error("ConfigError", "port must be in 1..65535, got " + std::to_string(cfg.port));
    }
    if (cfg.cache_capacity < 1) throw Error("ConfigError", "cache_capacity must be positive");
    if (cfg.corpus_path.empty()) throw Error("ConfigError", "corpus_path is required");
    if (!fs::exists(cfg.corpus_path)) throw Error("ConfigError", "corpus_path does not exist: " + cfg.corpus_path);
    if (!cfg.stopwords_path.empty() && !fs::exists(cfg.stopwords_path)) {
        throw Error("ConfigError", "stopwords_path does not exist: " + cfg.stopwords_path);
    }
    if (!cfg.static_dir.empty() && !fs::is_directory(cfg.static_dir)) {
        throw Error("ConfigError", "static_dir is not a directory: " + cfg.static_dir);
    }
}

ServiceConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("ConfigError", "cannot read config '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    auto cfg = parse_config(ss.str(), fs::path(path).parent_path().string());
    if (const char* env = std::getenv("RTV_PORT"); env && *env) {
        cfg.port = parse_int<int>(env, "RTV_PORT");
    }
    validate_config(cfg);
    return cfg;
}

} // namespace rtv
