#include "deid/tagging/external.hpp"

#include <cerrno>
#include <cstring>

#include <httplib.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

namespace deid::tagging {

namespace {

void set_timeouts(httplib::Client& cli, double seconds) {
    const auto sec = static_cast<time_t>(seconds);
    const auto usec = static_cast<time_t>((seconds - static_cast<double>(sec)) * 1e6);
    cli.set_connection_timeout(sec, usec);
    cli.set_read_timeout(sec, usec);
    cli.set_write_timeout(sec, usec);
}

} // namespace

HttpTagger::HttpTagger(std::string url, double timeout_s) : timeout_s_(timeout_s) {
    constexpr std::string_view scheme = "http://";
    if (url.rfind("https://", 0) == 0) throw Error("https tagger endpoints are not supported: " + url);
    if (const auto sep = url.find("://"); sep != std::string::npos && url.rfind(scheme, 0) != 0) {
        throw Error("unsupported tagger URL scheme: " + url);
    }
    if (url.rfind(scheme, 0) != 0) url = std::string(scheme) + url;
    const std::size_t path = url.find('/', scheme.size());
    host_port_ = url.substr(0, path);
    base_path_ = path == std::string::npos ? "" : url.substr(path);
    while (!base_path_.empty() && base_path_.back() == '/') base_path_.pop_back();
    if (host_port_.size() == scheme.size()) throw Error("tagger URL has no host: " + url);
}

std::vector<SentenceDistributions> HttpTagger::distributions(const std::vector<Tokens>& sentences) {
    httplib::Client cli(host_port_);
    set_timeouts(cli, timeout_s_);
    const auto res = cli.Post(base_path_ + "/tag", encode_tag_request(sentences), "application/json");
    if (!res) {
        throw Error("tagger at " + host_port_ + " unreachable: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw ProtocolError("tagger returned HTTP " + std::to_string(res->status) + ": " + res->body);
    }
    return decode_tag_response(res->body, sentences);
}

HealthStatus HttpTagger::health() {
    httplib::Client cli(host_port_);
    set_timeouts(cli, timeout_s_);
    const auto res = cli.Get(base_path_ + "/health");
    if (!res) {
        throw Error("tagger at " + host_port_ + " unreachable: " + httplib::to_string(res.error()));
    }
    if (res->status != 200) throw ProtocolError("health check returned HTTP " + std::to_string(res->status));
    return decode_health(res->body);
}

std::vector<std::string> HttpTagger::labels() { return health().labels; }

SubprocessTagger::SubprocessTagger(const std::string& command) {
    int fds[2];
    if (::socketpair(AF_UNIX, SOCK_STREAM, 0, fds) != 0) {
        throw Error(std::string("socketpair failed: ") + std::strerror(errno));
    }
    const pid_t pid = ::fork();
    if (pid < 0) {
        ::close(fds[0]);
        ::close(fds[1]);
        throw Error(std::string("fork failed: ") + std::strerror(errno));
    }
    if (pid == 0) {
        ::dup2(fds[1], STDIN_FILENO);
        ::dup2(fds[1], STDOUT_FILENO);
        ::close(fds[0]);
        ::close(fds[1]);
        ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        ::_exit(127);
    }
    ::close(fds[1]);
    fd_ = fds[0];
    pid_ = pid;
}

SubprocessTagger::~SubprocessTagger() {
    if (fd_ >= 0) {
        ::shutdown(fd_, SHUT_RDWR);
        ::close(fd_);
    }
    if (pid_ > 0) {
        int status = 0;
        ::waitpid(pid_, &status, 0);
    }
}

std::string SubprocessTagger::exchange(const std::string& line) {
    std::lock_guard lock(mutex_);
    const std::string payload = line + "\n";
    std::size_t sent = 0;
    while (sent < payload.size()) {
        const ssize_t n = ::send(fd_, payload.data() + sent, payload.size() - sent, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw Error(std::string("tagger subprocess unreachable: ") + std::strerror(errno));
        }
        sent += static_cast<std::size_t>(n);
    }
    while (true) {
        if (const std::size_t nl = buffer_.find('\n'); nl != std::string::npos) {
            std::string out = buffer_.substr(0, nl);
            buffer_.erase(0, nl + 1);
            return out;
        }
        char chunk[4096];
        const ssize_t n = ::recv(fd_, chunk, sizeof chunk, 0);
        if (n < 0 && errno == EINTR) continue;
        if (n <= 0) throw Error("tagger subprocess closed its output without answering");
        buffer_.append(chunk, static_cast<std::size_t>(n));
    }
}

std::vector<SentenceDistributions> SubprocessTagger::distributions(const std::vector<Tokens>& sentences) {
    return decode_tag_response(exchange(encode_tag_request(sentences)), sentences);
}

} // namespace deid::tagging
