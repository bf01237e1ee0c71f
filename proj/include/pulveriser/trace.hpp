#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pulveriser/errors.hpp"

namespace pulveriser::trace {

// One named step of an algorithm. State values are exact decimal strings
// (integers, or "p/q" for rationals) so arbitrary precision survives
// serialization; field order within `state` is the emission order.
struct TraceEvent {
    std::string algorithm;
    long step = 0; // 1-based, consecutive within one trace
    std::vector<std::pair<std::string, std::string>> state;
    std::string note; // empty = omitted from the serialized form
};

// One JSON object per line; field order algorithm, step, state, note.
std::string serialize(const TraceEvent& event);

// Inverse of serialize, used by golden round-trip tests.
TraceEvent parse(const std::string& line);

class Sink {
public:
    virtual ~Sink() = default;
    virtual void emit(const TraceEvent& event) = 0;
};

// Writes a versioned JSON-lines stream: {"v":1} header, then one event per
// line. Single-writer; emit after close throws SinkClosed.
class JsonLinesSink : public Sink {
public:
    // `prefix` is prepended to every line ("TRACE " for stdout interleaving).
    explicit JsonLinesSink(std::ostream& out, std::string prefix = "");

    void emit(const TraceEvent& event) override;
    void close();

private:
    std::ostream* out_;
    std::string prefix_;
    bool header_written_ = false;
    bool closed_ = false;
};

// Keeps events in memory; what invariant tests inspect.
class CollectingSink : public Sink {
public:
    void emit(const TraceEvent& event) override { events_.push_back(event); }
    const std::vector<TraceEvent>& events() const noexcept { return events_; }

private:
    std::vector<TraceEvent> events_;
};

// Counts events without storing them (deep recursions, big sweeps).
class CountingSink : public Sink {
public:
    void emit(const TraceEvent&) override { ++count_; }
    long count() const noexcept { return count_; }

private:
    long count_ = 0;
};

} // namespace pulveriser::trace
