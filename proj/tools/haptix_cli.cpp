// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the core exclusively through the
// extern-C shared-library API in haptix/haptix.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "haptix/haptix.h"

namespace {

struct StringOut {
    char* ptr = nullptr;
    ~StringOut() { hx_string_free(ptr); }
    char** slot() { return &ptr; }
    std::string str() const { return ptr ? ptr : ""; }
};

struct ConfigHolder {
    hx_config* cfg = hx_config_new();
    ~ConfigHolder() { hx_config_free(cfg); }
};

[[noreturn]] void die(const std::string& context) {
    std::cerr << context << ": " << hx_last_error() << "\n";
    std::exit(1);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot read " << path << "\n";
        std::exit(1);
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        std::exit(1);
    }
    out << content;
}

bool split_endpoint(const std::string& endpoint, std::string& host, int& port) {
    const auto colon = endpoint.rfind(':');
    if (colon == std::string::npos) return false;
    host = endpoint.substr(0, colon);
    try {
        port = std::stoi(endpoint.substr(colon + 1));
    } catch (...) {
        return false;
    }
    return port >= 0 && port <= 65535;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"haptix: vibrotactile 3D-direction cue toolkit"};
    app.require_subcommand(1);

    ConfigHolder config;

    // Shared overrides; defaults live in the library.
    double bd = 125, isi = 50, ibi = 100, d = 450;
    double base = 0.22, jnd = 0.3;
    int levels = 7, uniform_level = 4;
    app.add_option("--bd", bd, "burst duration [ms]");
    app.add_option("--isi", isi, "inter-stimulus interval [ms]");
    app.add_option("--ibi", ibi, "inter-burst interval [ms]");
    app.add_option("--period", d, "motion vibration period d [ms]");
    app.add_option("--base", base, "intensity ladder base (S1)");
    app.add_option("--jnd", jnd, "relative intensity step");
    app.add_option("--levels", levels, "number of intensity levels");
    app.add_option("--uniform-level", uniform_level,
                   "rabbit-single intensity level index");

    // encode
    auto* encode = app.add_subcommand(
        "encode", "encode a cue into a timeline JSON document");
    std::string scheme, direction, gradient, vector_arg, out_path;
    encode->add_option("--scheme", scheme,
                       "rabbit-single | rabbit-dual | motion-intensity")
        ->required();
    encode->add_option("--direction", direction,
                       "left-to-right | right-to-left | rear-right-to-front-left"
                       " | forward | rear-left-to-front-right");
    encode->add_option("--gradient", gradient, "up | flat | down");
    encode->add_option("--vector", vector_arg,
                       "x,y,z vector quantized to the nearest cue");
    encode->add_option("--out", out_path, "output file (default stdout)");

    // decode
    auto* decode = app.add_subcommand(
        "decode", "recover 'scheme direction gradient' from a timeline");
    std::string in_path;
    decode->add_option("--in", in_path, "timeline JSON file")->required();

    // render
    auto* render = app.add_subcommand(
        "render", "sample a timeline into fixed-rate intensity frames");
    int rate = 1000, precision = 4;
    std::string render_in, render_out;
    render->add_option("--in", render_in, "timeline JSON file")->required();
    render->add_option("--rate", rate, "samples per second");
    render->add_option("--precision", precision, "intensity digits");
    render->add_option("--out", render_out, "output file (default stdout)");

    // serve
    auto* serve = app.add_subcommand(
        "serve",
        "stream frames to TCP clients; format: header line"
        " \"HAPTIX/1 rate=<int> actuators=10\", then \"<t_ms>;<v1>;...;<v10>\""
        " per frame, then \"END\", each line \\n-terminated");
    std::string serve_in, listen = "127.0.0.1:7410";
    bool fast = false;
    int clients = 1;
    serve->add_option("--in", serve_in, "timeline JSON file")->required();
    serve->add_option("--listen", listen, "host:port (port 0 = ephemeral)");
    serve->add_flag("--fast", fast, "send without real-time pacing");
    serve->add_option("--clients", clients, "connections to serve before exit");
    serve->add_option("--rate", rate, "samples per second");
    serve->add_option("--precision", precision, "intensity digits");

    // scale
    auto* scale_cmd = app.add_subcommand(
        "scale", "print the intensity ladder as \"k value\" (6 decimals)");

    // layout
    auto* layout_cmd = app.add_subcommand(
        "layout", "print the actuator layout as \"id x y\"");

    // trials
    auto* trials = app.add_subcommand(
        "trials",
        "generate a trial plan CSV:"
        " participant,condition,block,trial,direction,gradient");
    int participants = 14;
    std::uint64_t seed = 0;
    std::string trials_out;
    trials->add_option("--participants", participants, "number of participants");
    trials->add_option("--seed", seed, "shuffle seed");
    trials->add_option("--out", trials_out, "output file (default stdout)");

    // score
    auto* score = app.add_subcommand(
        "score", "score a responses CSV against a trial plan CSV");
    std::string plan_path, responses_path;
    score->add_option("--plan", plan_path, "trial plan CSV")->required();
    score->add_option("--responses", responses_path,
                      "responses CSV: participant,condition,block,trial,"
                      "chosen_direction,chosen_gradient")
        ->required();

    // stats
    auto* stats = app.add_subcommand(
        "stats", "medians, Friedman, and Wilcoxon/Bonferroni post-hoc table");
    std::string summaries_path, column = "value";
    stats->add_option("--summaries", summaries_path,
                      "long-format CSV: participant,condition,<column>")
        ->required();
    stats->add_option("--column", column, "value column name");

    // selfcheck
    auto* selfcheck = app.add_subcommand(
        "selfcheck", "run the 45-combination encode/decode round trip");

    CLI11_PARSE(app, argc, argv);

    if (hx_config_set_timing(config.cfg, bd, isi, ibi, d) != HX_OK ||
        hx_config_set_scale(config.cfg, base, jnd, levels) != HX_OK ||
        hx_config_set_uniform_level(config.cfg, uniform_level) != HX_OK)
        die("config");

    if (*encode) {
        StringOut json;
        hx_timeline* tl = nullptr;
        if (!vector_arg.empty()) {
            double x, y, z;
            if (std::sscanf(vector_arg.c_str(), "%lf,%lf,%lf", &x, &y, &z) != 3) {
                std::cerr << "--vector expects x,y,z\n";
                return 1;
            }
            if (hx_encode_vector(config.cfg, scheme.c_str(), x, y, z, &tl) != HX_OK)
                die("encode");
        } else {
            if (direction.empty() || gradient.empty()) {
                std::cerr << "encode needs --direction and --gradient"
                             " (or --vector)\n";
                return 1;
            }
            if (hx_encode(config.cfg, scheme.c_str(), direction.c_str(),
                          gradient.c_str(), &tl) != HX_OK)
                die("encode");
        }
        if (hx_timeline_to_json(tl, json.slot()) != HX_OK) die("serialize");
        hx_timeline_free(tl);
        write_output(out_path, json.str());
        return 0;
    }

    if (*decode) {
        const std::string doc = read_file(in_path);
        hx_timeline* tl = nullptr;
        if (hx_timeline_from_json(doc.c_str(), &tl) != HX_OK) die("parse");
        // File intensities carry four digits; widen the match tolerance.
        hx_config_set_intensity_tolerance(config.cfg, 1e-4);
        StringOut result;
        const int rc = hx_decode(config.cfg, tl, result.slot());
        hx_timeline_free(tl);
        if (rc != HX_OK) die("decode");
        std::cout << result.str() << "\n";
        return 0;
    }

    if (*render) {
        const std::string doc = read_file(render_in);
        hx_timeline* tl = nullptr;
        if (hx_timeline_from_json(doc.c_str(), &tl) != HX_OK) die("parse");
        if (hx_config_set_render(config.cfg, rate, precision) != HX_OK)
            die("config");
        StringOut text;
        const int rc = hx_render_text(config.cfg, tl, text.slot());
        hx_timeline_free(tl);
        if (rc != HX_OK) die("render");
        write_output(render_out, text.str());
        return 0;
    }

    if (*serve) {
        const std::string doc = read_file(serve_in);
        hx_timeline* tl = nullptr;
        if (hx_timeline_from_json(doc.c_str(), &tl) != HX_OK) die("parse");
        if (hx_config_set_render(config.cfg, rate, precision) != HX_OK)
            die("config");
        std::string host;
        int port = 0;
        if (!split_endpoint(listen, host, port)) {
            std::cerr << "--listen expects host:port\n";
            return 1;
        }
        hx_session_summary summary;
        int bound = 0;
        const int rc = hx_serve(config.cfg, tl, host.c_str(), port, fast ? 1 : 0,
                                clients, &bound, &summary);
        hx_timeline_free(tl);
        if (rc != HX_OK) die("serve");
        std::cout << "listened on " << host << ":" << bound
                  << " frames_sent=" << summary.frames_sent
                  << " bytes_sent=" << summary.bytes_sent
                  << " truncated=" << (summary.truncated ? "true" : "false")
                  << "\n";
        return 0;
    }

    if (*scale_cmd) {
        StringOut text;
        if (hx_scale_text(config.cfg, text.slot()) != HX_OK) die("scale");
        std::cout << text.str();
        return 0;
    }

    if (*layout_cmd) {
        StringOut text;
        if (hx_layout_text(text.slot()) != HX_OK) die("layout");
        std::cout << text.str();
        return 0;
    }

    if (*trials) {
        StringOut csv;
        if (hx_trials_csv(participants, seed, csv.slot()) != HX_OK) die("trials");
        write_output(trials_out, csv.str());
        return 0;
    }

    if (*score) {
        const std::string plan = read_file(plan_path);
        const std::string responses = read_file(responses_path);
        StringOut csv;
        if (hx_score_csv(plan.c_str(), responses.c_str(), csv.slot()) != HX_OK)
            die("score");
        std::cout << csv.str();
        return 0;
    }

    if (*stats) {
        const std::string summaries = read_file(summaries_path);
        StringOut report;
        if (hx_stats_report(summaries.c_str(), column.c_str(), report.slot()) !=
            HX_OK)
            die("stats");
        std::cout << report.str();
        return 0;
    }

    if (*selfcheck) {
        StringOut report;
        const int rc = hx_selfcheck(config.cfg, report.slot());
        std::cout << report.str();
        return rc == HX_OK ? 0 : 1;
    }

    return 1;
}
