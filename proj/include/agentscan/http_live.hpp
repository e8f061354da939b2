#pragma once

// Real HTTPS transport on top of cpp-httplib. Only the CLI includes this
// header; the library and tests talk to HttpTransport implementations that
// never touch the network.

#include <httplib.h>

#include "agentscan/ghminer.hpp"

namespace agentscan {

class HttplibTransport : public HttpTransport {
  public:
    HttpResponse send(const HttpRequest& request) override {
        auto scheme_end = request.url.find("://");
        if (scheme_end == std::string::npos)
            throw MinerError("unsupported URL: " + request.url);
        auto path_start = request.url.find('/', scheme_end + 3);
        std::string origin =
            path_start == std::string::npos ? request.url : request.url.substr(0, path_start);
        std::string path = path_start == std::string::npos ? "/" : request.url.substr(path_start);

        httplib::Client client(origin);
        client.set_follow_location(true);
        client.set_connection_timeout(20);
        client.set_read_timeout(30);

        httplib::Headers headers;
        for (const auto& [k, v] : request.headers) headers.emplace(k, v);

        httplib::Result result = request.method == "GET"
                                     ? client.Get(path, headers)
                                     : httplib::Result{nullptr, httplib::Error::Unknown};
        if (!result)
            throw MinerError("transport failure for " + request.url + ": " +
                             httplib::to_string(result.error()));

        HttpResponse response;
        response.status = result->status;
        for (const auto& [k, v] : result->headers) response.headers.emplace_back(k, v);
        response.body = result->body;
        return response;
    }
};

}  // namespace agentscan
