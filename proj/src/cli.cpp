#include "pinnsort/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pinnsort/trace_io.hpp"

namespace pinnsort::cli {

namespace {

struct CommonOpts {
    bool with_sentinels = false;
    bool json = false;
    std::string backend = "auto";
};

BackendKind backend_kind(const std::string& name) {
    if (name == "auto") return BackendKind::Auto;
    if (name == "naive") return BackendKind::Naive;
    if (name == "fast") return BackendKind::Fast;
    throw domain_error("unknown backend '" + name + "'");
}

PinnacleSet parse_pinnacle_list(const std::string& list) {
    PinnacleSet s;
    std::istringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            s.values.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw domain_error("bad pinnacle value '" + item + "'");
        }
    }
    std::sort(s.values.begin(), s.values.end());
    return s;
}

std::string join_values(const std::vector<Value>& xs, const char* sep) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw domain_error("cannot write '" + path + "'");
    f << content;
}

void cmd_analyze(std::ostream& out, const std::string& file, const CommonOpts& opts) {
    const Permutation perm = load_permutation_file(file, opts.with_sentinels);
    const Shape sh = shape(perm);
    const auto rs = runs(perm);
    if (opts.json) {
        nlohmann::ordered_json j;
        j["n"] = perm.n();
        j["p"] = sh.p();
        j["S"] = pinnacle_set(perm).values;
        j["shape"] = sh.interleaved();
        j["runs"] = nlohmann::ordered_json::array();
        for (const Run& r : rs) {
            j["runs"].push_back({{"kind", r.kind == RunKind::Ascending ? "A" : "D"},
                                 {"left", r.left},
                                 {"right", r.right},
                                 {"members", r.members}});
        }
        out << j.dump(2) << "\n";
        return;
    }
    out << "n = " << perm.n() << "\n";
    out << "p = " << sh.p() << "\n";
    out << "S = " << join_values(pinnacle_set(perm).values, ",") << "\n";
    out << "shape = " << join_values(sh.interleaved(), " ") << "\n";
    for (const Run& r : rs) {
        out << "run " << (r.kind == RunKind::Ascending ? "A" : "D") << "(" << r.left << ","
            << r.right << ") =";
        for (const Value m : r.members) out << ' ' << m;
        out << "\n";
    }
}

void cmd_canonical(std::ostream& out, int n, const std::string& list) {
    const PinnacleSet s = parse_pinnacle_list(list);
    if (!is_admissible(s, n)) {
        throw domain_error("pinnacle set {" + join_values(s.values, ",") +
                           "} is not admissible for n=" + std::to_string(n));
    }
    out << format_interior(canonical(s, n)) << "\n";
}

void cmd_sort(std::ostream& out, const std::string& file, const std::string& trace_path,
              const std::string& trace_json_path, const CommonOpts& opts) {
    const Permutation perm = load_permutation_file(file, opts.with_sentinels);
    const Trace tr = balanced_sort(perm, backend_kind(opts.backend));
    out << format_interior(tr.end) << "\n";
    if (!trace_path.empty()) write_file(trace_path, format_trace(tr));
    if (!trace_json_path.empty()) write_file(trace_json_path, format_trace_json(tr));
}

void cmd_transform(std::ostream& out, const std::string& file1, const std::string& file2,
                   const std::string& trace_path, const std::string& trace_json_path,
                   const CommonOpts& opts) {
    const Permutation p = load_permutation_file(file1, opts.with_sentinels);
    const Permutation q = load_permutation_file(file2, opts.with_sentinels);
    const Trace tr = balanced_transform(p, q, backend_kind(opts.backend));
    out << format_interior(tr.end) << "\n";
    if (!trace_path.empty()) write_file(trace_path, format_trace(tr));
    if (!trace_json_path.empty()) write_file(trace_json_path, format_trace_json(tr));
}

void cmd_classify(std::ostream& out, const std::string& file, Value w1, Value w2,
                  const CommonOpts& opts) {
    const Permutation perm = load_permutation_file(file, opts.with_sentinels);
    const auto type = classify(perm, Reversal{w1, w2});
    out << (type ? to_string(*type) : "NOT-BALANCED") << "\n";
}

int cmd_verify(std::ostream& out, const std::string& file, const std::string& trace_path,
               const std::string& target_path, const CommonOpts& opts) {
    const Permutation start = load_permutation_file(file, opts.with_sentinels);
    const TraceFile tf = parse_trace_file(trace_path);
    if (tf.n != start.n()) {
        throw domain_error("trace header n=" + std::to_string(tf.n) +
                           " does not match the permutation (n=" + std::to_string(start.n()) +
                           ")");
    }
    std::optional<Permutation> target;
    if (!target_path.empty()) {
        target = load_permutation_file(target_path, opts.with_sentinels);
    }
    std::vector<Reversal> revs;
    std::vector<std::string> phases;
    for (const TraceFileRow& row : tf.rows) {
        revs.push_back(row.rev);
        phases.push_back(row.phase ? to_string(*row.phase) : "unphased");
    }
    const VerifyReport rep = verify_trace(start, revs, target, &phases);
    for (std::size_t i = 0; i < rep.steps_checked; ++i) {
        out << "step " << (i + 1) << ": R " << revs[i].w1 << " " << revs[i].w2 << " "
            << (rep.step_types[i] ? to_string(*rep.step_types[i]) : "?") << " " << phases[i]
            << " ok\n";
    }
    for (const auto& [name, count] : rep.phase_counts) {
        out << "phase " << name << ": " << count << "\n";
    }
    if (rep.target_checked) {
        out << "target: " << (rep.target_matched ? "matched" : "differs") << "\n";
    }
    if (rep.accepted) {
        out << "result: ACCEPT\n";
        return 0;
    }
    if (rep.failed_step) {
        out << "result: REJECT at step " << *rep.failed_step << ": " << rep.reason << "\n";
    } else {
        out << "result: REJECT: " << rep.reason << "\n";
    }
    return 1;
}

void cmd_bench(std::ostream& out, int n, int reps, unsigned seed, const CommonOpts& opts) {
    if (n < 1) throw domain_error("bench: need n >= 1");
    out << "bench n=" << n << " reps=" << reps << " backend=" << opts.backend
        << " seed=" << seed << "\n";
    out << "rep p steps time_ms reversals queries node_touches max_rev_touches\n";
    for (int rep = 0; rep < reps; ++rep) {
        std::vector<Value> interior(n);
        std::iota(interior.begin(), interior.end(), 1);
        std::mt19937 rng(seed + static_cast<unsigned>(rep));
        std::shuffle(interior.begin(), interior.end(), rng);
        const Permutation perm = Permutation::from_interior(interior);

        auto backend = make_backend(backend_kind(opts.backend), perm);
        const auto t0 = std::chrono::steady_clock::now();
        const Trace tr = balanced_sort_on(*backend);
        const auto t1 = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

        const BackendCounters& c = backend->counters();
        out << rep << " " << pinnacle_set(perm).values.size() << " " << tr.steps.size() << " "
            << std::fixed << std::setprecision(3) << ms << " " << c.reversals << " " << c.queries
            << " " << c.node_touches << " " << c.max_reversal_touches << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sort permutations to canonical form with pinnacle-preserving reversals"};
    app.require_subcommand(1);

    CommonOpts opts;

    std::string file, file2, trace_path, trace_json_path, target_path, pinnacle_list;
    int n = 0, reps = 3;
    unsigned seed = 1;
    Value w1 = 0, w2 = 0;

    auto add_backend = [&](CLI::App* cmd) {
        cmd->add_option("--backend", opts.backend, "Sequence backend")
            ->check(CLI::IsMember({"auto", "naive", "fast"}));
    };
    auto add_sentinels = [&](CLI::App* cmd) {
        cmd->add_flag("--with-sentinels", opts.with_sentinels,
                      "Input files carry the frame elements n+1 and n+2");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Print n, pinnacle set, shape and runs");
    analyze->add_option("file", file, "Permutation file")->required();
    add_sentinels(analyze);
    analyze->add_flag("--json", opts.json, "JSON output");

    CLI::App* canon = app.add_subcommand("canonical", "Print the canonical permutation Id_S");
    canon->add_option("-n", n, "Permutation size")->required();
    canon->add_option("-S", pinnacle_list, "Comma-separated pinnacle set (may be empty)");

    CLI::App* sort = app.add_subcommand("sort", "Sort to canonical form by balanced reversals");
    sort->add_option("file", file, "Permutation file")->required();
    sort->add_option("--trace", trace_path, "Write the reversal trace here");
    sort->add_option("--trace-json", trace_json_path, "Write the trace as JSON here");
    add_backend(sort);
    add_sentinels(sort);

    CLI::App* transform =
        app.add_subcommand("transform", "Transform one permutation into another, same pinnacle set");
    transform->add_option("file", file, "Start permutation file")->required();
    transform->add_option("file2", file2, "Target permutation file")->required();
    transform->add_option("--trace", trace_path, "Write the reversal trace here");
    transform->add_option("--trace-json", trace_json_path, "Write the trace as JSON here");
    add_backend(transform);
    add_sentinels(transform);

    CLI::App* classify_cmd = app.add_subcommand("classify", "Classify a single reversal");
    classify_cmd->add_option("file", file, "Permutation file")->required();
    classify_cmd->add_option("w1", w1, "Left endpoint value")->required();
    classify_cmd->add_option("w2", w2, "Right endpoint value")->required();
    add_sentinels(classify_cmd);

    CLI::App* verify = app.add_subcommand("verify", "Replay and check a trace file");
    verify->add_option("file", file, "Start permutation file")->required();
    verify->add_option("trace", trace_path, "Trace file")->required();
    verify->add_option("--target", target_path, "Expected final permutation file");
    add_sentinels(verify);

    CLI::App* bench = app.add_subcommand("bench", "Time sorts of random permutations");
    bench->add_option("-n", n, "Permutation size")->required();
    bench->add_option("--reps", reps, "Repetitions");
    bench->add_option("--seed", seed, "Random seed");
    add_backend(bench);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(analyze)) {
            cmd_analyze(out, file, opts);
        } else if (app.got_subcommand(canon)) {
            cmd_canonical(out, n, pinnacle_list);
        } else if (app.got_subcommand(sort)) {
            cmd_sort(out, file, trace_path, trace_json_path, opts);
        } else if (app.got_subcommand(transform)) {
            cmd_transform(out, file, file2, trace_path, trace_json_path, opts);
        } else if (app.got_subcommand(classify_cmd)) {
            cmd_classify(out, file, w1, w2, opts);
        } else if (app.got_subcommand(verify)) {
            return cmd_verify(out, file, trace_path, target_path, opts);
        } else if (app.got_subcommand(bench)) {
            cmd_bench(out, n, reps, seed, opts);
        }
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace pinnsort::cli
