// SPDX-License-Identifier: Apache-2.0

#include "haptix/haptix.h"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>

#include "haptix/decoder.hpp"
#include "haptix/encoder.hpp"
#include "haptix/experiment.hpp"
#include "haptix/glove.hpp"
#include "haptix/intensity.hpp"
#include "haptix/sampler.hpp"
#include "haptix/stats.hpp"
#include "haptix/stream.hpp"
#include "haptix/timeline.hpp"

namespace {

thread_local std::string g_last_error;

struct ConfigImpl {
    haptix::TimingConstants timing;
    double scale_base = 0.22;
    double scale_jnd = 0.3;
    int scale_levels = 7;
    double elevation_threshold_deg = haptix::kDefaultElevationThresholdDeg;
    haptix::RenderConfig render;
    double intensity_tol = 1e-6;

    haptix::IntensityScale scale() const {
        return haptix::IntensityScale::build(scale_base, scale_jnd, scale_levels);
    }
};

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(int code, const std::exception& e) {
    g_last_error = e.what();
    return code;
}

template <typename Fn>
int guarded(int error_code, Fn&& fn) {
    try {
        fn();
        return HX_OK;
    } catch (const std::invalid_argument& e) {
        return fail(HX_EINVAL, e);
    } catch (const std::exception& e) {
        return fail(error_code, e);
    }
}

const ConfigImpl& cfg_or_default(const hx_config* cfg);

} // namespace

struct hx_config {
    ConfigImpl impl;
};

struct hx_timeline {
    haptix::Timeline timeline;
};

namespace {
const ConfigImpl& cfg_or_default(const hx_config* cfg) {
    static const ConfigImpl defaults;
    return cfg ? cfg->impl : defaults;
}
} // namespace

extern "C" {

const char* hx_last_error(void) { return g_last_error.c_str(); }

void hx_string_free(char* s) { std::free(s); }

hx_config* hx_config_new(void) { return new hx_config(); }

void hx_config_free(hx_config* cfg) { delete cfg; }

int hx_config_set_timing(hx_config* cfg, double bd_ms, double isi_ms,
                         double ibi_ms, double d_ms) {
    return guarded(HX_EINVAL, [&] {
        if (!cfg || bd_ms <= 0 || isi_ms <= 0 || ibi_ms <= 0 || d_ms <= 0)
            throw std::invalid_argument("timing constants must be positive");
        cfg->impl.timing.burst_ms = bd_ms;
        cfg->impl.timing.isi_ms = isi_ms;
        cfg->impl.timing.ibi_ms = ibi_ms;
        cfg->impl.timing.motion_period_ms = d_ms;
    });
}

int hx_config_set_scale(hx_config* cfg, double base, double jnd, int levels) {
    return guarded(HX_EINVAL, [&] {
        if (!cfg) throw std::invalid_argument("null config");
        haptix::IntensityScale::build(base, jnd, levels); // validates
        cfg->impl.scale_base = base;
        cfg->impl.scale_jnd = jnd;
        cfg->impl.scale_levels = levels;
    });
}

int hx_config_set_uniform_level(hx_config* cfg, int level) {
    return guarded(HX_EINVAL, [&] {
        if (!cfg || level < 1 || level > cfg->impl.scale_levels)
            throw std::invalid_argument("uniform level outside the scale");
        cfg->impl.timing.uniform_level = level;
    });
}

int hx_config_set_elevation_threshold(hx_config* cfg, double degrees) {
    return guarded(HX_EINVAL, [&] {
        if (!cfg || degrees <= 0 || degrees >= 90)
            throw std::invalid_argument("elevation threshold outside (0, 90)");
        cfg->impl.elevation_threshold_deg = degrees;
    });
}

int hx_config_set_render(hx_config* cfg, int rate, int precision) {
    return guarded(HX_EINVAL, [&] {
        if (!cfg || rate < 1 || precision < 1 || precision > 9)
            throw std::invalid_argument("bad render settings");
        cfg->impl.render.rate = rate;
        cfg->impl.render.precision = precision;
    });
}

int hx_config_set_intensity_tolerance(hx_config* cfg, double tol) {
    return guarded(HX_EINVAL, [&] {
        if (!cfg || tol <= 0) throw std::invalid_argument("tolerance must be positive");
        cfg->impl.intensity_tol = tol;
    });
}

int hx_encode(const hx_config* cfg, const char* scheme, const char* direction,
              const char* gradient, hx_timeline** out) {
    return guarded(HX_EINVAL, [&] {
        if (!scheme || !direction || !gradient || !out)
            throw std::invalid_argument("null argument");
        const ConfigImpl& c = cfg_or_default(cfg);
        const haptix::Cue cue{haptix::direction_from_token(direction),
                              haptix::gradient_from_token(gradient)};
        *out = new hx_timeline{haptix::encode(cue, haptix::scheme_from_token(scheme),
                                              c.timing, c.scale())};
    });
}

int hx_encode_vector(const hx_config* cfg, const char* scheme, double x,
                     double y, double z, hx_timeline** out) {
    return guarded(HX_EINVAL, [&] {
        if (!scheme || !out) throw std::invalid_argument("null argument");
        const ConfigImpl& c = cfg_or_default(cfg);
        const haptix::Cue cue =
            haptix::quantize_vector({x, y, z}, c.elevation_threshold_deg);
        *out = new hx_timeline{haptix::encode(cue, haptix::scheme_from_token(scheme),
                                              c.timing, c.scale())};
    });
}

int hx_quantize_vector(const hx_config* cfg, double x, double y, double z,
                       char** cue_tokens) {
    return guarded(HX_EINVAL, [&] {
        if (!cue_tokens) throw std::invalid_argument("null argument");
        const ConfigImpl& c = cfg_or_default(cfg);
        const haptix::Cue cue =
            haptix::quantize_vector({x, y, z}, c.elevation_threshold_deg);
        *cue_tokens = dup_string(std::string(haptix::to_token(cue.direction)) + ' ' +
                                 std::string(haptix::to_token(cue.gradient)));
    });
}

int hx_timeline_from_json(const char* json, hx_timeline** out) {
    return guarded(HX_EPARSE, [&] {
        if (!json || !out) throw std::invalid_argument("null argument");
        *out = new hx_timeline{haptix::timeline_from_json(json)};
    });
}

int hx_timeline_to_json(const hx_timeline* tl, char** out) {
    return guarded(HX_EINVAL, [&] {
        if (!tl || !out) throw std::invalid_argument("null argument");
        *out = dup_string(haptix::to_json(tl->timeline));
    });
}

double hx_timeline_total_ms(const hx_timeline* tl) {
    return tl ? tl->timeline.total_ms : 0.0;
}

size_t hx_timeline_event_count(const hx_timeline* tl) {
    return tl ? tl->timeline.events.size() : 0;
}

void hx_timeline_free(hx_timeline* tl) { delete tl; }

int hx_decode(const hx_config* cfg, const hx_timeline* tl, char** out) {
    return guarded(HX_EDECODE, [&] {
        if (!tl || !out) throw std::invalid_argument("null argument");
        const ConfigImpl& c = cfg_or_default(cfg);
        const haptix::Decoded d =
            haptix::decode(tl->timeline.events, c.timing, c.scale(),
                           {c.intensity_tol});
        *out = dup_string(std::string(haptix::to_token(d.scheme)) + ' ' +
                          std::string(haptix::to_token(d.cue.direction)) + ' ' +
                          std::string(haptix::to_token(d.cue.gradient)));
    });
}

int hx_render_text(const hx_config* cfg, const hx_timeline* tl, char** out) {
    return guarded(HX_EINVAL, [&] {
        if (!tl || !out) throw std::invalid_argument("null argument");
        *out = dup_string(haptix::render_text(tl->timeline, cfg_or_default(cfg).render));
    });
}

int hx_serve(const hx_config* cfg, const hx_timeline* tl, const char* host,
             int port, int fast, int clients, int* bound_port,
             hx_session_summary* summary) {
    return guarded(HX_EIO, [&] {
        if (!tl || !host || !summary || clients < 1 || port < 0 || port > 65535)
            throw std::invalid_argument("bad serve arguments");
        const ConfigImpl& c = cfg_or_default(cfg);
        haptix::StreamServer server(host, static_cast<std::uint16_t>(port));
        if (bound_port) *bound_port = server.port();
        hx_session_summary total{0, 0, 0};
        for (int i = 0; i < clients; ++i) {
            const haptix::SessionSummary s =
                server.serve_once(tl->timeline, c.render, fast != 0);
            total.frames_sent += s.frames_sent;
            total.bytes_sent += s.bytes_sent;
            total.truncated = total.truncated || s.truncated;
        }
        *summary = total;
    });
}

int hx_scale_text(const hx_config* cfg, char** out) {
    return guarded(HX_EINVAL, [&] {
        if (!out) throw std::invalid_argument("null argument");
        *out = dup_string(haptix::scale_text(cfg_or_default(cfg).scale()));
    });
}

int hx_layout_text(char** out) {
    return guarded(HX_EINVAL, [&] {
        if (!out) throw std::invalid_argument("null argument");
        *out = dup_string(haptix::layout_text());
    });
}

int hx_trials_csv(int participants, uint64_t seed, char** out) {
    return guarded(HX_EINVAL, [&] {
        if (!out || participants < 1)
            throw std::invalid_argument("need at least one participant");
        *out = dup_string(haptix::trials_csv(participants, seed));
    });
}

int hx_score_csv(const char* plan_csv, const char* responses_csv, char** out) {
    return guarded(HX_EPARSE, [&] {
        if (!plan_csv || !responses_csv || !out)
            throw std::invalid_argument("null argument");
        *out = dup_string(haptix::score_csv(plan_csv, responses_csv));
    });
}

int hx_stats_report(const char* summaries_csv, const char* column, char** out) {
    return guarded(HX_EPARSE, [&] {
        if (!summaries_csv || !out) throw std::invalid_argument("null argument");
        *out = dup_string(haptix::stats::stats_report(
            summaries_csv, column && *column ? column : "value"));
    });
}

int hx_rtlx(const double subscales[6], double* score) {
    return guarded(HX_EINVAL, [&] {
        if (!subscales || !score) throw std::invalid_argument("null argument");
        std::array<double, 6> s;
        std::copy(subscales, subscales + 6, s.begin());
        *score = haptix::rtlx(s).score;
    });
}

int hx_selfcheck(const hx_config* cfg, char** report) {
    return guarded(HX_ECHECK, [&] {
        if (!report) throw std::invalid_argument("null argument");
        const ConfigImpl& c = cfg_or_default(cfg);
        const haptix::IntensityScale scale = c.scale();

        int passed = 0;
        std::string log;
        for (haptix::Scheme scheme : haptix::kAllSchemes)
            for (haptix::Direction d : haptix::kAllDirections)
                for (haptix::Gradient g : haptix::kAllGradients) {
                    const haptix::Cue cue{d, g};
                    bool ok = false;
                    try {
                        const haptix::Timeline tl =
                            haptix::encode(cue, scheme, c.timing, scale);
                        const haptix::Decoded dec = haptix::decode(
                            tl.events, c.timing, scale, {c.intensity_tol});
                        ok = dec.scheme == scheme && dec.cue == cue;
                    } catch (const std::exception&) {
                        ok = false;
                    }
                    if (ok) {
                        ++passed;
                    } else {
                        log += std::string("mismatch: ") +
                               std::string(haptix::to_token(scheme)) + ' ' +
                               std::string(haptix::to_token(d)) + ' ' +
                               std::string(haptix::to_token(g)) + '\n';
                    }
                }
        log += std::to_string(passed) + "/45" + (passed == 45 ? " ok" : " FAILED");
        log += '\n';
        *report = dup_string(log);
        if (passed != 45) throw std::runtime_error("selfcheck failed");
    });
}

} // extern "C"
