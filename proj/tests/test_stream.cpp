// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <future>
#include <string>

#include "capture_client.hpp"
#include "haptix/encoder.hpp"
#include "haptix/stream.hpp"

using namespace haptix;

namespace {

const TimingConstants kConstants;
const IntensityScale kScale = IntensityScale::build();

} // namespace

TEST_CASE("served bytes equal render_text output") {
    const Timeline tl = encode({Direction::Forward, Gradient::Up},
                               Scheme::RabbitSingle, kConstants, kScale);
    const RenderConfig config;

    StreamServer server("127.0.0.1", 0);
    auto session = std::async(std::launch::async, [&] {
        return server.serve_once(tl, config, /*fast=*/true);
    });
    const std::string received = test::capture_all(server.port());
    const SessionSummary summary = session.get();

    CHECK(received == render_text(tl, config));
    CHECK_FALSE(summary.truncated);
    CHECK(summary.frames_sent == render(tl, config).size());
    CHECK(summary.bytes_sent == received.size());
}

TEST_CASE("two sequential clients receive identical byte streams") {
    const Timeline tl = encode({Direction::RightToLeft, Gradient::Down},
                               Scheme::MotionIntensity, kConstants, kScale);
    const RenderConfig config;

    StreamServer server("127.0.0.1", 0);
    std::string first, second;
    auto sessions = std::async(std::launch::async, [&] {
        server.serve_once(tl, config, true);
        server.serve_once(tl, config, true);
    });
    first = test::capture_all(server.port());
    second = test::capture_all(server.port());
    sessions.get();

    CHECK(first == second);
    CHECK(first == render_text(tl, config));
}

TEST_CASE("client disconnect mid-stream marks the session truncated") {
    const Timeline tl = encode({Direction::Forward, Gradient::Flat},
                               Scheme::RabbitSingle, kConstants, kScale);
    // High rate inflates the stream well past the socket buffers, so the
    // disconnect is guaranteed to surface as a send failure.
    const RenderConfig config{20000, 6};
    const std::size_t total_frames = render(tl, config).size();

    StreamServer server("127.0.0.1", 0);
    auto session = std::async(std::launch::async, [&] {
        return server.serve_once(tl, config, true);
    });
    const std::string received =
        test::capture_then_disconnect(server.port(), 1024);
    const SessionSummary summary = session.get();

    CHECK(summary.truncated);
    CHECK(summary.frames_sent < total_frames);
    CHECK(received.size() <= summary.bytes_sent);
}

TEST_CASE("paced mode still delivers the exact bytes") {
    Timeline tl{Scheme::RabbitSingle,
                {Direction::Forward, Gradient::Flat},
                {{ActuatorId(1), 0.0, 5.0, 0.5}},
                5.0};
    const RenderConfig config;

    StreamServer server("127.0.0.1", 0);
    auto session = std::async(std::launch::async, [&] {
        return server.serve_once(tl, config, /*fast=*/false);
    });
    CHECK(test::capture_all(server.port()) == render_text(tl, config));
    CHECK(session.get().frames_sent == 5);
}

TEST_CASE("bad listen address is surfaced") {
    CHECK_THROWS_AS(StreamServer("not-an-ip", 0), std::invalid_argument);
}
