#include "rtv/cli.hpp"

#include "rtv/config.hpp"
#include "rtv/error.hpp"
#include "rtv/json_io.hpp"
#include "rtv/server.hpp"
#include "rtv/service.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

namespace rtv {

namespace {

CorpusFormat infer_format(const std::string& path, const std::string& explicit_format) {
    if (!explicit_format.empty()) return *parse_corpus_format(explicit_format);
    auto ext = std::filesystem::path(path).extension().string();
    return (ext == ".json" || ext == ".jsonl") ? CorpusFormat::s2 : CorpusFormat::csv;
}

void print_report(std::ostream& out, const Corpus& corpus) {
    out << corpus.size() << " records, " << corpus.ingest_report().size() << " issues\n";
    for (const auto& issue : corpus.ingest_report()) {
        out << "  [" << to_string(issue.severity) << "] " << issue.locator << ": " << issue.reason << "\n";
    }
}

std::size_t rejected(const Corpus& corpus) {
    std::size_t n = 0;
    for (const auto& i : corpus.ingest_report()) n += i.severity == Severity::rejected;
    return n;
}

struct ExportArgs {
    std::string view;
    std::string config_path;
    std::string corpus_path;
    std::string format;
    std::string stopwords_path;
    std::optional<std::string> from, to, granularity, mode;
    std::optional<int> n, k;
    std::string out_path;
};

int run_validate(const std::string& path, const std::string& format, std::ostream& out) {
    auto corpus = load_corpus(path, infer_format(path, format));
    print_report(out, corpus);
    return rejected(corpus) == 0 ? 0 : 1;
}

int run_export(const ExportArgs& a, std::ostream& out) {
    std::string corpus_path = a.corpus_path;
    CorpusFormat format = CorpusFormat::csv;
    std::string stopwords_path = a.stopwords_path;
    if (!a.config_path.empty()) {
        auto cfg = load_config(a.config_path);
        if (corpus_path.empty()) {
            corpus_path = cfg.corpus_path;
            format = cfg.corpus_format;
        }
        if (stopwords_path.empty()) stopwords_path = cfg.stopwords_path;
    }
    if (corpus_path.empty()) throw CLI::RequiredError("--corpus or --config");
    if (!a.corpus_path.empty()) format = infer_format(corpus_path, a.format);

    auto corpus = load_corpus(corpus_path, format);
    auto stop = stopwords_path.empty() ? StopwordSet::english() : StopwordSet::load(stopwords_path);

    QueryParams params;
    if (a.from) params["from"] = *a.from;
    if (a.to) params["to"] = *a.to;
    if (a.granularity) params["granularity"] = *a.granularity;
    if (a.mode) params["mode"] = *a.mode;
    if (a.n) params["n"] = std::to_string(*a.n);
    if (a.k) params["k"] = std::to_string(*a.k);

    auto req = resolve_request(*parse_view(a.view), params, corpus);
    const std::string body = compute_view_data(corpus, req, stop).dump(2) + "\n";
    if (a.out_path.empty()) {
        out << body;
    } else {
        std::ofstream f(a.out_path, std::ios::binary);
        if (!f) throw Error("IoError", "cannot write '" + a.out_path + "'");
        f << body;
    }
    return 0;
}

int run_serve(const std::string& config_path, std::ostream& out) {
    auto cfg = load_config(config_path);
    auto corpus = std::make_shared<const Corpus>(load_corpus(cfg.corpus_path, cfg.corpus_format));
    out << "loaded " << cfg.corpus_path << ": ";
    print_report(out, *corpus);

    AnalyticsService::Options opts;
    opts.cache_capacity = cfg.cache_capacity;
    if (!cfg.stopwords_path.empty()) opts.stopwords = StopwordSet::load(cfg.stopwords_path);
    AnalyticsService service(std::move(opts));
    service.load(corpus);

    HttpServer server(service, cfg.static_dir);
    int port = server.bind(cfg.bind_address, cfg.port);
    if (port < 0) throw Error("IoError", "cannot bind " + cfg.bind_address + ":" + std::to_string(cfg.port));
    out << "listening on http://" << cfg.bind_address << ":" << port << std::endl;
    return server.listen_after_bind() ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Research trend analytics: ingest paper corpora and serve trend views", "rtv"};
    app.require_subcommand(1);

    std::string validate_path, validate_format;
    auto* validate = app.add_subcommand("validate", "Parse a corpus file and print its ingest report");
    validate->add_option("path", validate_path, "Corpus file")->required();
    validate->add_option("--format", validate_format, "csv or s2 (default: from extension)")
        ->check(CLI::IsMember({"csv", "s2"}));

    std::string serve_config;
    auto* serve = app.add_subcommand("serve", "Start the HTTP service");
    serve->add_option("--config", serve_config, "Config file (key = value lines)")->required();

    ExportArgs ex;
    auto* exp = app.add_subcommand("export", "Compute one view and write its data as JSON");
    exp->add_option("view", ex.view, "themeriver, coauthors, venues or words")
        ->required()
        ->check(CLI::IsMember({"themeriver", "coauthors", "venues", "words"}));
    exp->add_option("--config", ex.config_path, "Config file supplying corpus and stopwords");
    exp->add_option("--corpus", ex.corpus_path, "Corpus file (overrides the config's)");
    exp->add_option("--format", ex.format, "csv or s2 (default: from extension)")
        ->check(CLI::IsMember({"csv", "s2"}));
    exp->add_option("--stopwords", ex.stopwords_path, "Stopword file");
    exp->add_option("--from", ex.from, "Range start, YYYY-MM-DD");
    exp->add_option("--to", ex.to, "Range end, YYYY-MM-DD");
    exp->add_option("--n", ex.n, "Number of authors/venues (or words)");
    exp->add_option("--k", ex.k, "Number of words per race frame");
    exp->add_option("--granularity", ex.granularity, "year or month");
    exp->add_option("--mode", ex.mode, "cumulative or per_bucket");
    exp->add_option("--out", ex.out_path, "Output path (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (*validate) return run_validate(validate_path, validate_format, out);
        if (*exp) return run_export(ex, out);
        if (*serve) return run_serve(serve_config, out);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace rtv
