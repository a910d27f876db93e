#include "rtv/server.hpp"

#include <httplib.h>

namespace rtv {

namespace {

QueryParams first_values(const httplib::Params& params) {
    QueryParams out;
    for (const auto& [k, v] : params) out.emplace(k, v);  // first occurrence wins
    return out;
}

} // namespace

HttpServer::HttpServer(AnalyticsService& service, std::string static_dir)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
    auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
        auto out = service_.handle(req.path, first_values(req.params));
        res.status = out.status;
        res.set_content(out.body, out.content_type);
    };
    server_->Get("/healthz", dispatch);
    server_->Get(R"(/api/.*)", dispatch);

    if (!static_dir.empty()) {
        server_->set_mount_point("/", static_dir);
    } else {
        server_->Get("/", [](const httplib::Request&, httplib::Response& res) {
            res.set_content("rtv analytics service: UI bundle not configured (see /api/corpus/stats)\n",
                            "text/plain");
        });
    }
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    if (port == 0) return server_->bind_to_any_port(host);
    return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen_after_bind() { return server_->listen_after_bind(); }

void HttpServer::stop() {
    if (server_->is_running()) server_->stop();
}

void HttpServer::wait_until_ready() const { server_->wait_until_ready(); }

} // namespace rtv
