// SPDX-License-Identifier: Apache-2.0

#include "haptix/stream.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <stdexcept>
#include <thread>

namespace haptix {

namespace {

[[noreturn]] void throw_errno(const char* what) {
    throw std::runtime_error(std::string(what) + ": " + std::strerror(errno));
}

// Writes the whole buffer; returns bytes that reached the socket before
// any failure. Sets *failed on a client that went away.
std::size_t send_all(int fd, const std::string& data, bool* failed) {
    std::size_t sent = 0;
    while (sent < data.size()) {
        const ssize_t n = ::send(fd, data.data() + sent, data.size() - sent,
                                 MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) continue;
            *failed = true;
            break;
        }
        sent += static_cast<std::size_t>(n);
    }
    return sent;
}

} // namespace

StreamServer::StreamServer(const std::string& host, std::uint16_t port) {
    listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listen_fd_ < 0) throw_errno("socket");

    const int one = 1;
    ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);

    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
        ::close(listen_fd_);
        throw std::invalid_argument("bad listen address: " + host);
    }
    if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) < 0) {
        const int e = errno;
        ::close(listen_fd_);
        errno = e;
        throw_errno("bind");
    }
    if (::listen(listen_fd_, 4) < 0) {
        const int e = errno;
        ::close(listen_fd_);
        errno = e;
        throw_errno("listen");
    }

    sockaddr_in bound{};
    socklen_t len = sizeof bound;
    ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&bound), &len);
    port_ = ntohs(bound.sin_port);
}

StreamServer::~StreamServer() {
    if (listen_fd_ >= 0) ::close(listen_fd_);
}

SessionSummary StreamServer::serve_once(const Timeline& timeline,
                                        const RenderConfig& config, bool fast) {
    const int client = ::accept(listen_fd_, nullptr, nullptr);
    if (client < 0) throw_errno("accept");

    SessionSummary summary;
    bool failed = false;
    const auto period = std::chrono::duration<double, std::milli>(1000.0 / config.rate);

    summary.bytes_sent += send_all(client, stream_header(config), &failed);
    if (!failed) {
        const std::vector<Frame> frames = render(timeline, config);
        for (const Frame& frame : frames) {
            const std::string line = frame_line(frame, config.precision);
            const std::size_t sent = send_all(client, line, &failed);
            summary.bytes_sent += sent;
            if (failed) break;
            ++summary.frames_sent;
            if (!fast) std::this_thread::sleep_for(period);
        }
    }
    if (!failed) summary.bytes_sent += send_all(client, "END\n", &failed);

    summary.truncated = failed;
    ::close(client);
    return summary;
}

} // namespace haptix
