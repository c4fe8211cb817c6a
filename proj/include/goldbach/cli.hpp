#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it in-process with their own streams and environment.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "goldbach/caps.hpp"
#include "goldbach/diophantine.hpp"
#include "goldbach/error.hpp"
#include "goldbach/io.hpp"
#include "goldbach/oracle.hpp"
#include "goldbach/partition.hpp"
#include "goldbach/sequences.hpp"
#include "goldbach/wilson.hpp"

namespace goldbach::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_domain = 2,
    exit_cap = 3,
    exit_disagreement = 4,
};

inline int exit_code_for(ErrorKind kind) {
    return kind == ErrorKind::cap_exceeded ? exit_cap : exit_domain;
}

using EnvLookup = std::function<std::optional<std::string>(const char*)>;

inline std::optional<std::string> process_env(const char* name) {
    if (const char* v = std::getenv(name)) return std::string(v);
    return std::nullopt;
}

struct RunConfig {
    Caps caps;
    io::Format format = io::Format::table;
    unsigned parallelism = 1;

    void validate() const {
        if (caps.sweep_cap < 6) throw DomainError("sweep cap must be >= 6");
        if (caps.factorial_cap < 6) throw DomainError("factorial cap must be >= 6");
        if (caps.matrix_side_cap < 1) throw DomainError("matrix cap must be >= 1");
        if (parallelism < 1) throw DomainError("jobs must be >= 1");
    }
};

inline std::uint64_t parse_natural(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw DomainError(std::string(what) + ": '" + std::string(text) + "' is not a natural number");
    }
    return value;
}

/// Defaults overridden by GOLDBACH_* environment variables. CLI flags are
/// applied on top of this by `run`.
inline RunConfig config_from_env(const EnvLookup& env) {
    RunConfig config;
    config.parallelism = std::max(1u, std::thread::hardware_concurrency());
    if (auto v = env("GOLDBACH_SWEEP_CAP")) config.caps.sweep_cap = parse_natural(*v, "GOLDBACH_SWEEP_CAP");
    if (auto v = env("GOLDBACH_FACTORIAL_CAP")) {
        config.caps.factorial_cap = parse_natural(*v, "GOLDBACH_FACTORIAL_CAP");
    }
    if (auto v = env("GOLDBACH_JOBS")) {
        config.parallelism = static_cast<unsigned>(parse_natural(*v, "GOLDBACH_JOBS"));
    }
    return config;
}

enum class BackendChoice { wilson, sieve, bitset, brute };

inline BackendChoice parse_backend(std::string_view name) {
    if (name == "wilson") return BackendChoice::wilson;
    if (name == "sieve") return BackendChoice::sieve;
    if (name == "bitset") return BackendChoice::bitset;
    if (name == "brute") return BackendChoice::brute;
    throw DomainError("unknown backend '" + std::string(name) + "' (expected wilson, sieve, bitset or brute)");
}

/// Counts for every even number in [lo, hi] with the chosen backend.
inline std::vector<PartitionCount> range_counts(std::uint64_t lo, std::uint64_t hi, BackendChoice backend,
                                                const RunConfig& config) {
    goldbach::detail::require_sweep_range(lo, hi, config.caps);
    std::vector<PartitionCount> out;
    switch (backend) {
    case BackendChoice::bitset:
        return sweep_counts(lo, hi, config.caps, config.parallelism);
    case BackendChoice::sieve: {
        const SieveIndex index(hi, config.caps);
        for (auto t = lo; t <= hi; t += 2) out.push_back(index.count(t));
        break;
    }
    case BackendChoice::wilson: {
        goldbach::detail::require_wilson_cap(hi, config.caps);
        const WilsonTable table(hi);
        for (auto t = lo; t <= hi; t += 2) out.push_back(count_wilson(t / 2, table));
        break;
    }
    case BackendChoice::brute:
        for (auto t = lo; t <= hi; t += 2) out.push_back({t, oracle::count_bruteforce(t), Backend::brute_force});
        break;
    }
    return out;
}

namespace detail {

struct Output {
    std::unique_ptr<std::ofstream> file;
    std::ostream* rows;
    std::ostream* summary;
};

/// Rows go to --out (or stdout); the summary goes to stdout when rows are in a
/// file and to stderr otherwise, so stdout stays parseable CSV/JSON.
inline Output open_output(const std::string& path, std::ostream& out, std::ostream& err) {
    Output o{nullptr, &out, &err};
    if (!path.empty()) {
        o.file = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*o.file) throw std::runtime_error("cannot open output file " + path);
        o.rows = o.file.get();
        o.summary = &out;
    }
    return o;
}

inline std::string join(const std::vector<std::uint64_t>& values) {
    if (values.empty()) return "none";
    std::string s;
    for (std::size_t k = 0; k < values.size(); ++k) s += (k ? ", " : "") + std::to_string(values[k]);
    return s;
}

inline std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');)
        if (!part.empty()) parts.push_back(part);
    return parts;
}

} // namespace detail

inline void cmd_count(std::uint64_t two_n, const std::string& backend_name, const RunConfig& config,
                      std::ostream& out, std::ostream& err) {
    const auto backend = parse_backend(backend_name);
    if (two_n == 4) {
        const char* note = "pair (2,2), outside the odd-pair index space";
        switch (config.format) {
        case io::Format::json:
            out << nlohmann::json{{"two_n", 4}, {"count", 1}, {"backend", "special_case"}, {"note", note}}.dump(2)
                << '\n';
            break;
        case io::Format::csv:
            out << "two_n,count,backend\n4,1,special_case\n";
            err << "note: " << note << '\n';
            break;
        case io::Format::table:
            out << "4 = 2 + 2: count 1 (" << note << ")\n";
            break;
        }
        return;
    }
    goldbach::detail::require_even_target(two_n);
    PartitionCount result;
    switch (backend) {
    case BackendChoice::wilson: result = count_wilson(two_n / 2, config.caps); break;
    case BackendChoice::sieve:
        if (two_n > config.caps.sweep_cap) throw CapExceeded("2n exceeds the sweep cap");
        result = count_sieve(two_n, config.caps);
        break;
    case BackendChoice::bitset: result = sweep_counts(two_n, two_n, config.caps, config.parallelism).front(); break;
    case BackendChoice::brute:
        if (two_n > config.caps.sweep_cap) throw CapExceeded("2n exceeds the sweep cap");
        result = {two_n, oracle::count_bruteforce(two_n), Backend::brute_force};
        break;
    }
    if (config.format == io::Format::json) {
        out << nlohmann::json{{"two_n", result.two_n}, {"count", result.count}, {"backend", to_string(result.backend)}}
                   .dump(2)
            << '\n';
    } else {
        io::write_counts(out, std::span(&result, 1), config.format);
    }
}

struct SweepSummary {
    std::uint64_t targets = 0;
    std::uint64_t min_count = 0;
    std::uint64_t argmin = 0;
    std::vector<std::uint64_t> violations;
};

inline SweepSummary summarize(std::span<const PartitionCount> rows) {
    SweepSummary s;
    s.targets = rows.size();
    if (rows.empty()) return s;
    s.min_count = rows.front().count;
    s.argmin = rows.front().two_n;
    for (const auto& r : rows) {
        if (r.count < s.min_count) {
            s.min_count = r.count;
            s.argmin = r.two_n;
        }
        if (r.count == 0) s.violations.push_back(r.two_n);
    }
    return s;
}

inline void cmd_sweep(std::uint64_t lo, std::uint64_t hi, const std::string& backend_name, const std::string& out_path,
                      const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto rows = range_counts(lo, hi, parse_backend(backend_name), config);
    auto sink = detail::open_output(out_path, out, err);
    io::write_counts(*sink.rows, rows, config.format);
    const auto s = summarize(rows);
    *sink.summary << "targets: " << s.targets << ", min count: " << s.min_count << " (2n = " << s.argmin
                  << "), violations: " << s.violations.size();
    if (!s.violations.empty()) *sink.summary << " [first " << s.violations.front() << "]";
    *sink.summary << '\n';
}

inline void cmd_matrix(std::uint64_t two_n, const std::string& kind_name, const std::string& out_path,
                       const RunConfig& config, std::ostream& out, std::ostream& err) {
    goldbach::detail::require_even_target(two_n);
    MatrixKind kind;
    if (kind_name == "distribution") kind = MatrixKind::distribution;
    else if (kind_name == "boolean") kind = MatrixKind::boolean;
    else throw DomainError("unknown matrix kind '" + kind_name + "' (expected distribution or boolean)");
    const auto m = export_matrix(two_n / 2, kind, config.caps);
    auto sink = detail::open_output(out_path, out, err);
    io::write(*sink.rows, io::matrix_table(m), io::matrix_json(m), config.format);
}

inline void cmd_witness(std::uint64_t two_n, std::optional<std::uint64_t> index, const std::string& out_path,
                        const RunConfig& config, std::ostream& out, std::ostream& err) {
    goldbach::detail::require_even_target(two_n);
    if (two_n > config.caps.factorial_cap) {
        throw CapExceeded("2n = " + std::to_string(two_n) + " exceeds factorial cap " +
                          std::to_string(config.caps.factorial_cap));
    }
    const auto n = two_n / 2;
    std::vector<DiophantineWitness> records;
    if (index) {
        records.push_back(witness(n, *index, config.caps));
    } else {
        for (std::uint64_t i = 1; i <= pair_count(n); ++i) {
            if (classify_pair(n, i).pair_case == PairCase::A) records.push_back(witness(n, i, config.caps));
        }
    }
    auto sink = detail::open_output(out_path, out, err);
    if (config.format == io::Format::table) {
        for (const auto& w : records) {
            *sink.rows << "2n=" << two_n << " i=" << w.i << " pair=(" << w.lower() << ", " << w.upper()
                       << ") a=" << w.a.get_str() << " b=" << w.b.get_str()
                       << " master=" << (w.master_holds ? "ok" : "FAIL") << '\n';
        }
    } else {
        io::write(*sink.rows, io::witness_table(records), io::witness_json(records), config.format);
    }
}

inline void cmd_audit(std::uint64_t n_lo, std::uint64_t n_hi, const std::string& out_path, const RunConfig& config,
                      std::ostream& out, std::ostream& err) {
    if (n_lo < 3 || n_hi < n_lo) {
        throw DomainError("audit range must satisfy 3 <= n_lo <= n_hi, got [" + std::to_string(n_lo) + ", " +
                          std::to_string(n_hi) + "]");
    }
    std::vector<SyncAuditRow> rows;
    std::vector<std::uint64_t> with_counterexamples, without_A, half_prime_failures;
    std::vector<std::string> per_n;
    for (auto n = n_lo; n <= n_hi; ++n) {
        auto audit = sync_audit(n);
        const bool half = half_prime_claim(n);
        if (!audit.counterexamples.empty()) with_counterexamples.push_back(n);
        if (!audit.exists_A) without_A.push_back(n);
        if (!half) half_prime_failures.push_back(n);
        if (n_lo == n_hi) {
            per_n.push_back("n=" + std::to_string(n) + " (2n=" + std::to_string(2 * n) +
                            "): rows=" + std::to_string(audit.rows.size()) +
                            " exists_A=" + (audit.exists_A ? "true" : "false") +
                            " counterexamples=" + std::to_string(audit.counterexamples.size()) +
                            " half_prime_claim=" + (half ? "pass" : "fail"));
        }
        rows.insert(rows.end(), audit.rows.begin(), audit.rows.end());
    }
    auto sink = detail::open_output(out_path, out, err);
    io::write(*sink.rows, io::audit_table(rows), io::audit_json(rows), config.format);
    for (const auto& line : per_n) *sink.summary << line << '\n';
    *sink.summary << "n without an A-class pair: " << detail::join(without_A) << '\n';
    *sink.summary << "n with counterexample rows: " << detail::join(with_counterexamples) << '\n';
    *sink.summary << "n failing half_prime_claim: " << detail::join(half_prime_failures) << '\n';
}

/// Returns exit_disagreement when the backends do not produce identical counts.
inline int cmd_bench(std::uint64_t lo, std::uint64_t hi, const std::string& backends_text, unsigned repetitions,
                     const std::string& out_path, const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (repetitions < 1) throw DomainError("repetitions must be >= 1");
    std::vector<std::string> names = detail::split_commas(backends_text);
    if (names.empty()) throw DomainError("no backends given");
    std::vector<BackendChoice> backends;
    for (const auto& name : names) backends.push_back(parse_backend(name));
    goldbach::detail::require_sweep_range(lo, hi, config.caps);
    for (auto b : backends)
        if (b == BackendChoice::wilson) goldbach::detail::require_wilson_cap(hi, config.caps);

    auto counts_only = [](const std::vector<PartitionCount>& rows) {
        std::vector<std::uint64_t> c;
        c.reserve(rows.size());
        for (const auto& r : rows) c.push_back(r.count);
        return c;
    };

    // Correctness gate before any timing.
    const auto reference = counts_only(range_counts(lo, hi, backends.front(), config));
    for (std::size_t k = 1; k < backends.size(); ++k) {
        const auto other = counts_only(range_counts(lo, hi, backends[k], config));
        if (other != reference) {
            std::uint64_t at = lo;
            for (std::size_t idx = 0; idx < other.size(); ++idx) {
                if (other[idx] != reference[idx]) {
                    at = lo + 2 * idx;
                    break;
                }
            }
            err << "backend disagreement: " << names.front() << " vs " << names[k] << " at 2n = " << at << '\n';
            return exit_disagreement;
        }
    }

    auto sink = detail::open_output(out_path, out, err);
    *sink.summary << "agreement: " << backends.size() << " backend(s) agree on " << reference.size()
                  << " target(s) in [" << lo << ", " << hi << "]\n";

    io::Table table{{"backend", "lo", "hi", "repetitions", "min_seconds", "median_seconds", "targets_per_second"}, {}};
    auto json = nlohmann::json::array();
    for (std::size_t k = 0; k < backends.size(); ++k) {
        std::vector<double> seconds;
        for (unsigned r = 0; r < repetitions; ++r) {
            const auto start = std::chrono::steady_clock::now();
            const auto rows = range_counts(lo, hi, backends[k], config);
            seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        }
        std::sort(seconds.begin(), seconds.end());
        const auto mid = seconds.size() / 2;
        const double median = seconds.size() % 2 ? seconds[mid] : 0.5 * (seconds[mid - 1] + seconds[mid]);
        const double throughput = seconds.front() > 0 ? static_cast<double>(reference.size()) / seconds.front() : 0;
        auto fmt = [](double v) {
            std::ostringstream os;
            os.precision(6);
            os << v;
            return os.str();
        };
        table.rows.push_back({names[k], std::to_string(lo), std::to_string(hi), std::to_string(repetitions),
                              fmt(seconds.front()), fmt(median), fmt(throughput)});
        json.push_back({{"backend", names[k]}, {"lo", lo}, {"hi", hi}, {"repetitions", repetitions},
                        {"min_seconds", seconds.front()}, {"median_seconds", median},
                        {"targets_per_second", throughput}});
    }
    io::write(*sink.rows, table, json, config.format);
    return exit_ok;
}

/// Entry point. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const EnvLookup& env = process_env) {
    RunConfig config;
    try {
        config = config_from_env(env);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }

    CLI::App app{"Goldbach partition toolkit: Wilson indicator, pair counts, witnesses and claim audits"};
    app.require_subcommand(1);
    std::string format = "table";
    std::string out_path;
    std::uint64_t matrix_cap = config.caps.matrix_side_cap;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "table"}));
    app.add_option("--out", out_path, "Write rows to this file");
    app.add_option("--jobs", config.parallelism, "Worker threads for sweeps");
    app.add_option("--sweep-cap", config.caps.sweep_cap, "Largest even number a sweep may reach");
    app.add_option("--factorial-cap", config.caps.factorial_cap, "Largest 2n for factorial identities");
    app.add_option("--matrix-cap", matrix_cap, "Largest matrix side");

    std::uint64_t two_n = 0, lo = 0, hi = 0, n_lo = 0, n_hi = 0;
    std::string backend = "sieve", sweep_backend = "bitset", kind = "distribution", backends = "sieve,bitset";
    std::optional<std::uint64_t> index;
    unsigned repetitions = 3;

    auto* count = app.add_subcommand("count", "Goldbach partition count of one even number");
    count->add_option("two_n", two_n, "Even number")->required();
    count->add_option("--backend", backend, "wilson|sieve|bitset|brute");

    auto* sweep = app.add_subcommand("sweep", "Counts for every even number in [lo, hi]");
    sweep->add_option("lo", lo)->required();
    sweep->add_option("hi", hi)->required();
    sweep->add_option("--backend", sweep_backend, "wilson|sieve|bitset|brute");

    auto* matrix = app.add_subcommand("matrix", "Distribution or boolean matrix for 2n");
    matrix->add_option("two_n", two_n)->required();
    matrix->add_option("--kind", kind, "distribution|boolean");

    auto* wit = app.add_subcommand("witness", "Exact witness pairs (a, b) for 2n");
    wit->add_option("two_n", two_n)->required();
    wit->add_option("--i", index, "Pair index; default: every pair of primes");

    auto* audit = app.add_subcommand("audit", "Synchronization audit for n or a range of n");
    audit->add_option("n", n_lo, "n (so 2n is the even number), or the low end of a range")->required();
    audit->add_option("n_hi", n_hi, "High end of the range");

    auto* bench = app.add_subcommand("bench", "Agreement gate, then timings per backend");
    bench->add_option("lo", lo)->required();
    bench->add_option("hi", hi)->required();
    bench->add_option("--backends", backends, "Comma-separated backend list");
    bench->add_option("--repetitions", repetitions, "Timed runs per backend");

    for (auto* sub : {count, sweep, matrix, wit, audit, bench}) sub->fallthrough();

    std::vector<std::string> argv_storage{"goldbach"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }

    try {
        config.format = io::parse_format(format);
        config.caps.matrix_side_cap = matrix_cap;
        config.caps.phase_cap = config.caps.factorial_cap + 1;
        config.caps.sieve_cap = std::max(config.caps.sweep_cap + 1, config.caps.sieve_cap);
        config.validate();

        if (count->parsed()) cmd_count(two_n, backend, config, out, err);
        else if (sweep->parsed()) cmd_sweep(lo, hi, sweep_backend, out_path, config, out, err);
        else if (matrix->parsed()) cmd_matrix(two_n, kind, out_path, config, out, err);
        else if (wit->parsed()) cmd_witness(two_n, index, out_path, config, out, err);
        else if (audit->parsed()) cmd_audit(n_lo, audit->count("n_hi") ? n_hi : n_lo, out_path, config, out, err);
        else if (bench->parsed()) return cmd_bench(lo, hi, backends, repetitions, out_path, config, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_ok;
}

} // namespace goldbach::cli
