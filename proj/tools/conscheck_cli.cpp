#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conscheck/io.hpp"
#include "conscheck/model.hpp"
#include "conscheck/oracle.hpp"
#include "conscheck/pacsim.hpp"
#include "conscheck/reductions.hpp"
#include "conscheck/solve.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
}

std::vector<int> parse_set_spec(const std::string& spec) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const std::size_t comma = spec.find(',', start);
        const std::string tok =
            spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (tok.empty()) throw std::runtime_error("bad set spec \"" + spec + "\"");
        out.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

conscheck::Pair parse_edge_spec(const std::string& spec) {
    const std::size_t dash = spec.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= spec.size())
        throw std::runtime_error("bad edge spec \"" + spec + "\" (want u-v)");
    return conscheck::Pair(std::stoi(spec.substr(0, dash)), std::stoi(spec.substr(dash + 1)));
}

int emit_verdict(const conscheck::Verdict& verdict) {
    std::cout << conscheck::serialize_verdict(verdict);
    return verdict.is_found() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"consistency checking for labeled graph samples"};
    app.require_subcommand(1);

    std::string instance_path;
    std::string mode = "random";
    std::string exec_mode = "parallel";
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> trials;

    CLI::App* solve_cmd = app.add_subcommand("solve", "run the dedicated solver on an instance");
    solve_cmd->add_option("file", instance_path, "instance file")->required();
    solve_cmd->add_option("--mode", mode, "coloring mode (random|exhaustive)")
        ->check(CLI::IsMember({"random", "exhaustive"}));
    solve_cmd->add_option("--seed", seed, "random-mode seed");
    solve_cmd->add_option("--trials", trials, "random-mode trial count override");
    solve_cmd->add_option("--exec", exec_mode, "candidate scan (serial|parallel)")
        ->check(CLI::IsMember({"serial", "parallel"}));

    std::uint64_t budget = conscheck::kDefaultOracleBudget;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "run the brute-force reference solver on an instance");
    oracle_cmd->add_option("file", instance_path, "instance file")->required();
    oracle_cmd->add_option("--budget", budget, "candidate enumeration budget");
    oracle_cmd->add_option("--exec", exec_mode, "candidate scan (serial|parallel)")
        ->check(CLI::IsMember({"serial", "parallel"}));

    CLI::App* gen_cmd = app.add_subcommand("gen", "emit a reduction-generated instance");
    gen_cmd->require_subcommand(1);
    std::string out_path;
    std::string dimacs_path;
    int universe = 0;
    std::vector<std::string> set_specs;
    int budget_k = 1;
    CLI::App* sat2col = gen_cmd->add_subcommand("sat2col", "CNF formula -> two-coloring");
    sat2col->add_option("--dimacs", dimacs_path, "DIMACS CNF file")->required();
    sat2col->add_option("-o,--output", out_path, "output file (default stdout)");
    for (const char* name : {"sc2match", "sc2path", "sc2is"}) {
        CLI::App* cmd = gen_cmd->add_subcommand(
            name, std::string("set cover -> ") +
                      (name == std::string("sc2match") ? "matching"
                       : name == std::string("sc2path") ? "path"
                                                        : "independent set"));
        cmd->add_option("--universe", universe, "universe size (elements 1..N)")->required();
        cmd->add_option("--set", set_specs, "one set per flag, e.g. --set 1,3")->required();
        cmd->add_option("-k,--budget", budget_k, "cover budget")->required();
        cmd->add_option("-o,--output", out_path, "output file (default stdout)");
    }
    int graph_n = 0;
    std::vector<std::string> edge_specs;
    CLI::App* is2is = gen_cmd->add_subcommand("is2is", "independent set -> consistency form");
    is2is->add_option("--n", graph_n, "vertex count")->required();
    is2is->add_option("--edge", edge_specs, "one edge per flag, e.g. --edge 0-1");
    is2is->add_option("-k,--size", budget_k, "independent-set size")->required();
    is2is->add_option("-o,--output", out_path, "output file (default stdout)");

    std::string scenario_path;
    double eps = 0.1;
    double delta = 0.1;
    int runs = 200;
    CLI::App* pac_cmd = app.add_subcommand("pac", "measure PAC generalization of the solver");
    pac_cmd->add_option("file", scenario_path, "scenario file")->required();
    pac_cmd->add_option("--eps", eps, "accuracy target")->required();
    pac_cmd->add_option("--delta", delta, "confidence target")->required();
    pac_cmd->add_option("--runs", runs, "number of independent runs");
    pac_cmd->add_option("--seed", seed, "base seed");

    std::string bench_dir;
    std::string csv_path;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "time serial vs parallel solving over a directory of .cc files");
    bench_cmd->add_option("dir", bench_dir, "directory of instance files")->required();
    bench_cmd->add_option("--csv", csv_path, "output CSV path")->required();
    bench_cmd->add_option("--seed", seed, "random-mode seed");

    std::string solution_path;
    CLI::App* check_cmd =
        app.add_subcommand("check", "verify a serialized solution against an instance");
    check_cmd->add_option("instance", instance_path, "instance file")->required();
    check_cmd->add_option("solution", solution_path, "solution file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        conscheck::SolveOptions options;
        options.mode = mode == "exhaustive" ? conscheck::ColoringMode::Exhaustive
                                            : conscheck::ColoringMode::Random;
        options.seed = seed;
        options.trials = trials;
        options.exec_mode =
            exec_mode == "serial" ? conscheck::exec::Mode::Serial : conscheck::exec::Mode::Parallel;

        if (solve_cmd->parsed()) {
            const conscheck::Instance inst = conscheck::parse_instance(read_file(instance_path));
            return emit_verdict(conscheck::solve(inst, options));
        }

        if (oracle_cmd->parsed()) {
            const conscheck::Instance inst = conscheck::parse_instance(read_file(instance_path));
            return emit_verdict(conscheck::oracle_solve(inst, budget, options.exec_mode));
        }

        if (gen_cmd->parsed()) {
            conscheck::Instance inst;
            if (sat2col->parsed()) {
                std::ifstream in(dimacs_path);
                if (!in) throw std::runtime_error("cannot open " + dimacs_path);
                inst = conscheck::reduce_sat_to_two_coloring(conscheck::parse_dimacs(in));
            } else if (is2is->parsed()) {
                conscheck::GraphInstance g;
                g.n = graph_n;
                g.k = budget_k;
                for (const std::string& spec : edge_specs) g.edges.push_back(parse_edge_spec(spec));
                inst = conscheck::reduce_independent_set(g);
            } else {
                conscheck::SetCoverInstance sc;
                sc.universe = universe;
                sc.k = budget_k;
                for (const std::string& spec : set_specs) sc.sets.push_back(parse_set_spec(spec));
                if (gen_cmd->get_subcommand("sc2match")->parsed())
                    inst = conscheck::reduce_set_cover_to_matching(sc);
                else if (gen_cmd->get_subcommand("sc2path")->parsed())
                    inst = conscheck::reduce_set_cover_to_path(sc);
                else
                    inst = conscheck::reduce_set_cover_to_independent_set(sc);
            }
            write_output(out_path, conscheck::serialize_instance(inst));
            return 0;
        }

        if (pac_cmd->parsed()) {
            const conscheck::Scenario scenario =
                conscheck::parse_scenario(read_file(scenario_path));
            const conscheck::PacReport report =
                conscheck::pac_learn(scenario, eps, delta, runs, seed, options);
            std::ostringstream out;
            out << "# problem=" << conscheck::problem_name(scenario.problem)
                << " n=" << scenario.n;
            if (scenario.k) out << " k=" << *scenario.k;
            if (scenario.d) out << " d=" << *scenario.d;
            char head[128];
            std::snprintf(head, sizeof head, " log2H=%.6g m=%lld eps=%g delta=%g seed=%llu",
                          report.log2_h, static_cast<long long>(report.bound_m), eps, delta,
                          static_cast<unsigned long long>(seed));
            out << head << "\nrun,m,err\n";
            char row[96];
            for (std::size_t i = 0; i < report.runs.size(); ++i) {
                std::snprintf(row, sizeof row, "%zu,%lld,%.17g\n", i,
                              static_cast<long long>(report.runs[i].samples_drawn),
                              report.runs[i].err);
                out << row;
            }
            char tail[96];
            std::snprintf(tail, sizeof tail, "SUMMARY fraction_err_le_eps=%.6g runs=%zu\n",
                          report.fraction_within(eps), report.runs.size());
            out << tail;
            std::cout << out.str();
            return 0;
        }

        if (bench_cmd->parsed()) {
            std::vector<std::filesystem::path> files;
            for (const auto& entry : std::filesystem::directory_iterator(bench_dir))
                if (entry.is_regular_file() && entry.path().extension() == ".cc")
                    files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            std::ostringstream csv;
            csv << "problem,n,t,tneg,k,d,solver,us,verdict\n";
            for (const auto& path : files) {
                const conscheck::Instance inst = conscheck::parse_instance(read_file(path));
                for (const char* label : {"serial", "parallel"}) {
                    conscheck::SolveOptions run = options;
                    run.exec_mode = label == std::string("serial")
                                        ? conscheck::exec::Mode::Serial
                                        : conscheck::exec::Mode::Parallel;
                    const auto start = std::chrono::steady_clock::now();
                    const conscheck::Verdict verdict = conscheck::solve(inst, run);
                    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                                        std::chrono::steady_clock::now() - start)
                                        .count();
                    csv << conscheck::problem_name(inst.problem) << ',' << inst.n << ','
                        << inst.samples.size() << ',' << inst.num_negative() << ',';
                    if (inst.k) csv << *inst.k;
                    csv << ',';
                    if (inst.d) csv << *inst.d;
                    csv << ',' << label << ',' << us << ','
                        << (verdict.is_found() ? "found" : "no-solution") << '\n';
                }
                std::cerr << path.filename().string() << " done\n";
            }
            write_output(csv_path, csv.str());
            std::cerr << "bench seed=" << seed << " files=" << files.size() << "\n";
            return 0;
        }

        if (check_cmd->parsed()) {
            const conscheck::Instance inst = conscheck::parse_instance(read_file(instance_path));
            const conscheck::Verdict verdict = conscheck::parse_verdict(read_file(solution_path));
            if (!verdict.is_found())
                throw std::runtime_error("solution file holds NO-SOLUTION; nothing to check");
            if (conscheck::is_consistent(inst, *verdict.solution)) {
                std::cout << "CONSISTENT\n";
                return 0;
            }
            std::cout << "INCONSISTENT\n";
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
