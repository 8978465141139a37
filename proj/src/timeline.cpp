// SPDX-License-Identifier: Apache-2.0

#include "haptix/timeline.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace haptix {

namespace {

// Times carry one fractional digit end to end; intensities at most four.
std::string format_ms(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

std::string format_intensity(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s = buf;
    while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.')
        s.pop_back();
    return s;
}

} // namespace

std::string to_json(const Timeline& timeline) {
    std::string out = "{\n";
    out += "  \"scheme\": \"" + std::string(to_token(timeline.scheme)) + "\",\n";
    out += "  \"direction\": \"" + std::string(to_token(timeline.cue.direction)) + "\",\n";
    out += "  \"gradient\": \"" + std::string(to_token(timeline.cue.gradient)) + "\",\n";
    out += "  \"total_ms\": " + format_ms(timeline.total_ms) + ",\n";
    out += "  \"events\": [\n";
    for (size_t i = 0; i < timeline.events.size(); ++i) {
        const VibrationEvent& e = timeline.events[i];
        out += "    {\"actuator\": " + std::to_string(e.actuator.index()) +
               ", \"start_ms\": " + format_ms(e.start_ms) +
               ", \"duration_ms\": " + format_ms(e.duration_ms) +
               ", \"intensity\": " + format_intensity(e.intensity) + "}";
        out += i + 1 < timeline.events.size() ? ",\n" : "\n";
    }
    out += "  ]\n}\n";
    return out;
}

Timeline timeline_from_json(std::string_view json) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed timeline document: ") + e.what());
    }

    try {
        Timeline timeline{
            scheme_from_token(doc.at("scheme").get<std::string>()),
            {direction_from_token(doc.at("direction").get<std::string>()),
             gradient_from_token(doc.at("gradient").get<std::string>())},
            {},
            doc.at("total_ms").get<double>()};
        for (const auto& ev : doc.at("events")) {
            timeline.events.push_back({ActuatorId(ev.at("actuator").get<int>()),
                                       ev.at("start_ms").get<double>(),
                                       ev.at("duration_ms").get<double>(),
                                       ev.at("intensity").get<double>()});
        }
        return timeline;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed timeline document: ") + e.what());
    }
}

} // namespace haptix
