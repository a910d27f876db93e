#pragma once

#include "rtv/config.hpp"
#include "rtv/service.hpp"

#include <memory>
#include <string>

namespace httplib { class Server; }

namespace rtv {

/// HTTP front end over an AnalyticsService (cpp-httplib, thread pool).
class HttpServer {
public:
    HttpServer(AnalyticsService& service, std::string static_dir = {});
    ~HttpServer();

    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds; port 0 picks a free port. Returns the bound port or -1.
    int bind(const std::string& host, int port);
    /// Blocks until stop().
    bool listen_after_bind();
    void stop();
    void wait_until_ready() const;

private:
    AnalyticsService& service_;
    std::unique_ptr<httplib::Server> server_;
};

} // namespace rtv
