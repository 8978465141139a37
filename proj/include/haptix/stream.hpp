// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "haptix/sampler.hpp"
#include "haptix/timeline.hpp"

namespace haptix {

struct SessionSummary {
    std::uint64_t frames_sent = 0;
    std::uint64_t bytes_sent = 0;
    bool truncated = false; // client went away before the final frame
};

/// Bound, listening TCP endpoint. One client per connection; each
/// connection receives the header, every frame line in order, then END,
/// and is closed. The concatenated payload equals render_text of the
/// same timeline.
class StreamServer {
public:
    StreamServer(const std::string& host, std::uint16_t port);
    ~StreamServer();

    StreamServer(const StreamServer&) = delete;
    StreamServer& operator=(const StreamServer&) = delete;

    std::uint16_t port() const { return port_; }

    /// Blocks for one client and streams the timeline to it. With
    /// fast=false, frames are paced at one per sample period.
    SessionSummary serve_once(const Timeline& timeline,
                              const RenderConfig& config, bool fast);

private:
    int listen_fd_ = -1;
    std::uint16_t port_ = 0;
};

} // namespace haptix
