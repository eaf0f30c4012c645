#pragma once

#include <memory>
#include <string>

namespace metricquad {

struct ServiceConfig {
    std::string host = "127.0.0.1";
    int port = 8080;  // 0 picks a free port
    int max_sessions = 16;
};

// "host:port" or ":port". Throws InvalidConfig.
ServiceConfig parse_bind(const std::string& addr);

// Session-scoped HTTP/JSON front end to the pipeline.
class Service {
public:
    explicit Service(ServiceConfig cfg);
    ~Service();

    // Throws BindError.
    int bind();
    void listen();  // blocks until stop()
    void stop();
    int port() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace metricquad
