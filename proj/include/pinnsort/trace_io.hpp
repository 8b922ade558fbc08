#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pinnsort/sorter.hpp"

namespace pinnsort {

// One parsed line of a trace file. Type and phase tags are optional on
// input; the writer always emits them.
struct TraceFileRow {
    Reversal rev;
    std::optional<BalancedType> type;
    std::optional<Phase> phase;
};

struct TraceFile {
    int n = 0;
    std::vector<Value> pinnacles;
    std::vector<TraceFileRow> rows;
};

// Text form: a header line "n=<n> S=<comma-list>", then one step per line
// "R <w1> <w2> <type> <phase>".
std::string format_trace(const Trace& t);
TraceFile parse_trace(std::istream& in);
TraceFile parse_trace_file(const std::string& path);

// The same content as a JSON record.
std::string format_trace_json(const Trace& t);

// Permutation text form: one line of whitespace-separated integers.
Permutation parse_permutation(std::istream& in, bool with_sentinels);
Permutation load_permutation_file(const std::string& path, bool with_sentinels);
std::string format_interior(const Permutation& p);

}  // namespace pinnsort
