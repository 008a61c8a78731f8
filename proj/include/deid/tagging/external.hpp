#pragma once

#include <mutex>
#include <string>

#include "deid/tagging/protocol.hpp"

namespace deid::tagging {

// Client for a tagger service speaking the wire protocol over HTTP
// (POST <base>/tag, GET <base>/health). Each call opens its own connection,
// so concurrent calls are safe.
class HttpTagger final : public Tagger {
public:
    // url: http://host[:port][/base-path]
    explicit HttpTagger(std::string url, double timeout_s = 60.0);

    std::vector<SentenceDistributions> distributions(const std::vector<Tokens>& sentences) override;
    std::vector<std::string> labels() override;

    HealthStatus health();

private:
    std::string host_port_;
    std::string base_path_;
    double timeout_s_;
};

// Runs `command` through /bin/sh and exchanges one JSON request line for one
// JSON response line over its stdin/stdout. Calls are serialized.
class SubprocessTagger final : public Tagger {
public:
    explicit SubprocessTagger(const std::string& command);
    ~SubprocessTagger() override;

    SubprocessTagger(const SubprocessTagger&) = delete;
    SubprocessTagger& operator=(const SubprocessTagger&) = delete;

    std::vector<SentenceDistributions> distributions(const std::vector<Tokens>& sentences) override;

    // Sends one raw line and returns the response line.
    std::string exchange(const std::string& line);

private:
    std::mutex mutex_;
    int fd_ = -1;
    int pid_ = -1;
    std::string buffer_;
};

} // namespace deid::tagging
