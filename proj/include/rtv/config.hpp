#pragma once

#include "rtv/corpus.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace rtv {

struct ServiceConfig {
    std::string corpus_path;
    CorpusFormat corpus_format = CorpusFormat::csv;
    std::string stopwords_path;    // empty: built-in English list
    int port = 8080;
    std::size_t cache_capacity = 256;
    std::string static_dir;        // empty: no UI bundle served
    std::string bind_address = "0.0.0.0";
};

/// `key = value` lines, '#' comments. Relative paths resolve against
/// `base_dir`. Throws Error("ConfigError") for unknown keys or bad values.
ServiceConfig parse_config(std::string_view text, const std::string& base_dir = {});

/// Reads the file, applies the RTV_PORT environment override, and checks that
/// referenced paths exist.
ServiceConfig load_config(const std::string& path);

void validate_config(const ServiceConfig& cfg);

} // namespace rtv
