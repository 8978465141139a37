/* SPDX-License-Identifier: Apache-2.0 */

/* C API of the haptix shared library. All functions return HX_OK (0) on
 * success or a nonzero error code; hx_last_error() holds a thread-local
 * message for the most recent failure. Strings returned through char**
 * are heap-allocated and must be released with hx_string_free. */

#ifndef HAPTIX_H
#define HAPTIX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hx_config hx_config;     /* timing + scale + render settings */
typedef struct hx_timeline hx_timeline; /* immutable event timeline */

enum {
    HX_OK = 0,
    HX_EINVAL = 1, /* bad argument or precondition violation */
    HX_EPARSE = 2, /* malformed document */
    HX_EDECODE = 3, /* timeline matches no (scheme, cue) */
    HX_EIO = 4,    /* socket or stream failure */
    HX_ECHECK = 5  /* selfcheck found a failing round trip */
};

const char* hx_last_error(void);
void hx_string_free(char* s);

/* Configuration. Defaults: BD 125 / ISI 50 / IBI 100 / d 450 ms, scale
 * 0.22 / 0.3 / 7 levels, uniform level 4, elevation threshold 22.5 deg,
 * render 1000 Hz with 4-digit intensities, intensity tolerance 1e-6. */
hx_config* hx_config_new(void);
void hx_config_free(hx_config* cfg);
int hx_config_set_timing(hx_config* cfg, double bd_ms, double isi_ms,
                         double ibi_ms, double d_ms);
int hx_config_set_scale(hx_config* cfg, double base, double jnd, int levels);
int hx_config_set_uniform_level(hx_config* cfg, int level);
int hx_config_set_elevation_threshold(hx_config* cfg, double degrees);
int hx_config_set_render(hx_config* cfg, int rate, int precision);
int hx_config_set_intensity_tolerance(hx_config* cfg, double tol);

/* Encoding. Tokens are kebab-case: schemes rabbit-single, rabbit-dual,
 * motion-intensity; directions left-to-right, right-to-left,
 * rear-right-to-front-left, forward, rear-left-to-front-right;
 * gradients up, flat, down. */
int hx_encode(const hx_config* cfg, const char* scheme, const char* direction,
              const char* gradient, hx_timeline** out);
int hx_encode_vector(const hx_config* cfg, const char* scheme, double x,
                     double y, double z, hx_timeline** out);
int hx_quantize_vector(const hx_config* cfg, double x, double y, double z,
                       char** cue_tokens /* "direction gradient" */);

int hx_timeline_from_json(const char* json, hx_timeline** out);
int hx_timeline_to_json(const hx_timeline* tl, char** out);
double hx_timeline_total_ms(const hx_timeline* tl);
size_t hx_timeline_event_count(const hx_timeline* tl);
void hx_timeline_free(hx_timeline* tl);

/* Decoding oracle; writes "scheme direction gradient". */
int hx_decode(const hx_config* cfg, const hx_timeline* tl, char** out);

/* Fixed-rate frame stream as text (header, frame lines, END). */
int hx_render_text(const hx_config* cfg, const hx_timeline* tl, char** out);

typedef struct hx_session_summary {
    uint64_t frames_sent;
    uint64_t bytes_sent;
    int truncated;
} hx_session_summary;

/* Serves `clients` sequential connections on host:port, streaming the
 * timeline to each; pass port 0 for an ephemeral port (reported via
 * bound_port). The summary aggregates all sessions. */
int hx_serve(const hx_config* cfg, const hx_timeline* tl, const char* host,
             int port, int fast, int clients, int* bound_port,
             hx_session_summary* summary);

/* Reference tables and experiment tooling. */
int hx_scale_text(const hx_config* cfg, char** out);
int hx_layout_text(char** out);
int hx_trials_csv(int participants, uint64_t seed, char** out);
int hx_score_csv(const char* plan_csv, const char* responses_csv, char** out);
int hx_stats_report(const char* summaries_csv, const char* column, char** out);
int hx_rtlx(const double subscales[6], double* score);

/* Runs the 45-combination encode/decode round trip; report ends with
 * "45/45 ok" on success. Returns HX_ECHECK if any combination fails. */
int hx_selfcheck(const hx_config* cfg, char** report);

#ifdef __cplusplus
}
#endif

#endif /* HAPTIX_H */
