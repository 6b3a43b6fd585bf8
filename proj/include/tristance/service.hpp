#pragma once

#include <map>
#include <memory>
#include <string>

namespace tristance {

using QueryParams = std::multimap<std::string, std::string>;

struct ApiResponse {
    int status = 200;
    std::string body;  // JSON
};

// Stateless dispatch of the /api endpoints; the HTTP server and tests share it.
ApiResponse handle_api(const std::string& path, const QueryParams& params);

struct ServeOptions {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string static_dir;  // optional UI bundle mounted at /
};

class ApiServer {
public:
    explicit ApiServer(ServeOptions opt);
    ~ApiServer();
    int bind();  // bound port (useful with port 0), or -1
    void run();  // blocks until stop()
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Blocks until the server stops. Returns false if the port could not be bound.
bool serve(const ServeOptions& opt);

}  // namespace tristance
