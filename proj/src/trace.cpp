#include "pulveriser/trace.hpp"

#include <json.hpp>

namespace pulveriser::trace {

using ordered_json = nlohmann::ordered_json;

std::string serialize(const TraceEvent& event) {
    ordered_json j;
    j["algorithm"] = event.algorithm;
    j["step"] = event.step;
    ordered_json state = ordered_json::object();
    for (const auto& [name, value] : event.state) state[name] = value;
    j["state"] = state;
    if (!event.note.empty()) j["note"] = event.note;
    return j.dump();
}

TraceEvent parse(const std::string& line) {
    ordered_json j = ordered_json::parse(line);
    TraceEvent e;
    e.algorithm = j.at("algorithm").get<std::string>();
    e.step = j.at("step").get<long>();
    for (const auto& [name, value] : j.at("state").items())
        e.state.emplace_back(name, value.get<std::string>());
    if (j.contains("note")) e.note = j["note"].get<std::string>();
    return e;
}

JsonLinesSink::JsonLinesSink(std::ostream& out, std::string prefix)
    : out_(&out), prefix_(std::move(prefix)) {}

void JsonLinesSink::emit(const TraceEvent& event) {
    if (closed_) throw SinkClosed();
    if (!header_written_) {
        *out_ << prefix_ << "{\"v\":1}\n";
        header_written_ = true;
    }
    *out_ << prefix_ << serialize(event) << "\n";
}

void JsonLinesSink::close() {
    if (!closed_ && out_) out_->flush();
    closed_ = true;
}

} // namespace pulveriser::trace
