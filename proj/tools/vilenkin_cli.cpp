// vilenkin: experiment runner for Vilenkin-Fourier summability.
//
//   vilenkin verify      --base 2,3,2 [--weights ...] [--corpus ...]
//   vilenkin converge    --base 2,3,2,2 --weights constant --corpus smooth2 --n 4,24 --p 1,inf
//   vilenkin bench       --base 2 --depth 12
//   vilenkin kernel-dump --base 2,3 --kernel norlund --weights cesaro:0.5 --n 5
//
// Exit codes: 0 ok, 1 tolerance failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "vilenkin/config.hpp"
#include "vilenkin/csv.hpp"
#include "vilenkin/experiments.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_tolerance = 1;
constexpr int exit_usage = 2;

struct Overrides {
    std::optional<std::string> config_file;
    std::map<std::string, std::string> values;
};

void add_common_flags(CLI::App& cmd, Overrides& ov) {
    cmd.add_option_function<std::string>("--config", [&](const std::string& v) { ov.config_file = v; },
                                         "key=value config file (flags override it)");
    for (const char* key : {"base", "depth", "weights", "corpus", "n", "p", "points", "seed", "out", "cap"}) {
        const std::string k = key;
        cmd.add_option_function<std::string>("--" + k, [&ov, k](const std::string& v) { ov.values[k] = v; });
    }
}

vilenkin::ExperimentConfig resolve(const Overrides& ov) {
    vilenkin::ExperimentConfig config;
    if (ov.config_file) {
        std::ifstream in(*ov.config_file);
        if (!in) throw std::invalid_argument("cannot open config file '" + *ov.config_file + "'");
        config.load(in);
    }
    for (const auto& [k, v] : ov.values) config.set(k, v);
    return config;
}

/// Writes to --out when given, stdout otherwise.
void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + path + "'");
    out << text;
}

int cmd_verify(const vilenkin::ExperimentConfig& config) {
    const auto report = vilenkin::run_verify(config);
    nlohmann::ordered_json doc;
    doc["base"] = report.base;
    doc["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks) {
        std::printf("%s %-32s residual=%s tol=%s\n", c.passed() ? "PASS" : "FAIL", c.name.c_str(),
                    vilenkin::csv::format_double(c.residual).c_str(), vilenkin::csv::format_double(c.tolerance).c_str());
        doc["checks"].push_back({{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance},
                                 {"passed", c.passed()}});
    }
    doc["ok"] = report.ok();
    if (!config.out.empty()) emit(config.out, doc.dump(2) + "\n");
    if (!report.ok()) {
        for (const auto& c : report.checks)
            if (!c.passed()) std::fprintf(stderr, "tolerance failure: %s\n", c.name.c_str());
        return exit_tolerance;
    }
    return exit_ok;
}

int cmd_converge(const vilenkin::ExperimentConfig& config) {
    const auto records = vilenkin::run_converge(config);
    std::ostringstream os;
    vilenkin::csv::write(os, records);
    emit(config.out, os.str());
    return exit_ok;
}

int cmd_bench(const vilenkin::ExperimentConfig& config, double min_time) {
    const auto r = vilenkin::run_bench(config, min_time);
    nlohmann::ordered_json doc = {{"size", r.size},
                                  {"fast_seconds", r.fast_seconds},
                                  {"naive_seconds", r.naive_seconds},
                                  {"speedup", r.speedup},
                                  {"max_deviation", r.max_deviation},
                                  {"fast_repeats", r.fast_repeats},
                                  {"naive_repeats", r.naive_repeats}};
    std::printf("M_N=%zu fast=%.3es naive=%.3es speedup=%.1fx max_dev=%.3e\n", r.size, r.fast_seconds,
                r.naive_seconds, r.speedup, r.max_deviation);
    if (!config.out.empty()) emit(config.out, doc.dump(2) + "\n");
    return r.max_deviation <= vilenkin::exact_tolerance ? exit_ok : exit_tolerance;
}

int cmd_kernel_dump(const vilenkin::ExperimentConfig& config, const std::string& kind) {
    if (!config.n_list || config.n_list->size() != 1) throw std::invalid_argument("kernel-dump needs a single --n");
    if (config.weights.size() != 1 && (kind == "norlund" || kind == "tmean"))
        throw std::invalid_argument("kernel-dump needs a single --weights for " + kind);
    const auto base = config.make_base();
    const auto table = vilenkin::kernel_dump(base, vilenkin::parse_kernel_kind(kind), config.n_list->front(),
                                             config.weights.front());
    std::ostringstream os;
    vilenkin::csv::write(os, table.values);
    emit(config.out, os.str());
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vilenkin-Fourier summability experiments"};
    app.require_subcommand(1);

    Overrides verify_ov, converge_ov, bench_ov, dump_ov;
    auto* verify = app.add_subcommand("verify", "run the identity and bound checks");
    add_common_flags(*verify, verify_ov);
    auto* converge = app.add_subcommand("converge", "emit convergence records as CSV");
    add_common_flags(*converge, converge_ov);
    auto* bench = app.add_subcommand("bench", "time the fast transform against the naive sum");
    add_common_flags(*bench, bench_ov);
    double min_time = 0.05;
    bench->add_option("--min-time", min_time, "minimum seconds per timing loop");
    auto* dump = app.add_subcommand("kernel-dump", "write a kernel table as CSV (rank,re,im)");
    add_common_flags(*dump, dump_ov);
    std::string kernel = "dirichlet";
    dump->add_option("--kernel", kernel, "dirichlet | fejer | norlund | tmean");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (verify->parsed()) return cmd_verify(resolve(verify_ov));
        if (converge->parsed()) return cmd_converge(resolve(converge_ov));
        if (bench->parsed()) return cmd_bench(resolve(bench_ov), min_time);
        if (dump->parsed()) return cmd_kernel_dump(resolve(dump_ov), kernel);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage;
    }
    return exit_usage;
}
