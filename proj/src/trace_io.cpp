#include "pinnsort/trace_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pinnsort {

namespace {

std::string join_values(const std::vector<Value>& xs, const char* sep) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

[[noreturn]] void parse_fail(int line, const std::string& why) {
    throw domain_error("trace line " + std::to_string(line) + ": " + why);
}

}  // namespace

std::string format_trace(const Trace& t) {
    std::string out = "n=" + std::to_string(t.start.n()) + " S=" +
                      join_values(pinnacle_set(t.start).values, ",") + "\n";
    for (const TraceStep& s : t.steps) {
        out += "R " + std::to_string(s.rev.w1) + " " + std::to_string(s.rev.w2) + " " +
               to_string(s.type) + " " + to_string(s.phase) + "\n";
    }
    return out;
}

TraceFile parse_trace(std::istream& in) {
    TraceFile tf;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        if (!have_header) {
            if (tok.rfind("n=", 0) != 0) parse_fail(lineno, "expected header n=<n> S=<list>");
            try {
                tf.n = std::stoi(tok.substr(2));
            } catch (const std::exception&) {
                parse_fail(lineno, "bad n in header");
            }
            std::string stok;
            if (!(ls >> stok) || stok.rfind("S=", 0) != 0) {
                parse_fail(lineno, "expected S=<comma-list> in header");
            }
            std::string list = stok.substr(2);
            std::istringstream ss(list);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty()) continue;
                try {
                    tf.pinnacles.push_back(std::stoi(item));
                } catch (const std::exception&) {
                    parse_fail(lineno, "bad pinnacle value '" + item + "' in header");
                }
            }
            have_header = true;
            continue;
        }
        if (tok != "R") parse_fail(lineno, "expected step line starting with R");
        TraceFileRow row{};
        if (!(ls >> row.rev.w1 >> row.rev.w2)) parse_fail(lineno, "expected two endpoint values");
        std::string tag;
        if (ls >> tag) {
            row.type = balanced_type_from_string(tag);
            if (!row.type) parse_fail(lineno, "unknown reversal type '" + tag + "'");
            if (ls >> tag) {
                row.phase = phase_from_string(tag);
                if (!row.phase) parse_fail(lineno, "unknown phase '" + tag + "'");
                if (ls >> tag) parse_fail(lineno, "trailing content '" + tag + "'");
            }
        }
        tf.rows.push_back(row);
    }
    if (!have_header) throw domain_error("trace file has no header line");
    return tf;
}

TraceFile parse_trace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open trace file '" + path + "'");
    return parse_trace(in);
}

std::string format_trace_json(const Trace& t) {
    nlohmann::ordered_json j;
    j["n"] = t.start.n();
    j["S"] = pinnacle_set(t.start).values;
    j["steps"] = nlohmann::ordered_json::array();
    for (const TraceStep& s : t.steps) {
        j["steps"].push_back({{"w1", s.rev.w1},
                              {"w2", s.rev.w2},
                              {"type", to_string(s.type)},
                              {"phase", to_string(s.phase)}});
    }
    return j.dump(2) + "\n";
}

Permutation parse_permutation(std::istream& in, bool with_sentinels) {
    std::vector<Value> values;
    Value x;
    while (in >> x) values.push_back(x);
    if (!in.eof()) throw domain_error("permutation input holds a non-integer token");
    if (with_sentinels) return Permutation::from_sentinel_form(values);
    return Permutation::from_interior(values);
}

Permutation load_permutation_file(const std::string& path, bool with_sentinels) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open permutation file '" + path + "'");
    return parse_permutation(in, with_sentinels);
}

std::string format_interior(const Permutation& p) {
    return join_values(p.interior(), " ");
}

}  // namespace pinnsort
