#include "psic/bounds.hpp"
#include "psic/coloring.hpp"
#include "psic/oracle.hpp"
#include "psic/runner.hpp"
#include "psic/solution_io.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

namespace {

// Exit codes: 0 success / valid solution, 1 invalid solution,
// 2 usage error, 3 I/O error.
constexpr int kExitOk = 0;
constexpr int kExitInvalidSolution = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void print_report(std::ostream& out, const psic::EdgeColoring& coloring,
                  const psic::VerificationReport& report) {
    out << "n: " << coloring.n << "\npalette_size: " << coloring.palette_size
        << "\ncolors_used: " << report.used_colors.size() << "\n";
    out << "class sizes:";
    for (const auto& [color, size] : report.class_sizes)
        out << ' ' << color << ':' << size;
    out << "\nclass components:";
    for (const auto& [color, parts] : report.class_components)
        out << ' ' << color << ':' << parts;
    out << "\nuncovered pairs:";
    if (report.uncovered_pairs.empty())
        out << " none";
    for (const auto& [a, b] : report.uncovered_pairs)
        out << " (" << a << ',' << b << ')';
    out << "\ncomplete: " << (report.is_complete ? "yes" : "no")
        << "\nconnected: " << (report.is_connected ? "yes" : "no") << '\n';
}

int cmd_solve(const std::string& config_path) {
    psic::RunConfig config;
    try {
        config = psic::load_run_config(config_path);
    } catch (const psic::IoError& e) {
        std::cerr << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
    try {
        const auto summary = psic::solve(config);
        {
            std::ofstream out(config.output_dir / "summary.csv");
            if (!out)
                throw psic::IoError("solve: cannot write " +
                                    (config.output_dir / "summary.csv").string());
            psic::write_summary_csv(out, summary);
        }
        psic::print_summary(std::cout, summary);
        return kExitOk;
    } catch (const psic::IoError& e) {
        std::cerr << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_verify(const std::string& path) {
    psic::Solution solution;
    try {
        solution = psic::load_solution(path);
    } catch (const psic::IoError& e) {
        std::cerr << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitInvalidSolution;
    }
    try {
        const auto report = psic::verify(solution.coloring);
        print_report(std::cout, solution.coloring, report);
        return report.is_complete && report.is_connected ? kExitOk : kExitInvalidSolution;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitInvalidSolution;
    }
}

int cmd_bounds(int n_min, int n_max, const std::string& out_path) {
    try {
        std::ostringstream csv;
        psic::write_bounds_csv(csv, n_min, n_max);
        if (out_path.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream out(out_path);
            if (!out || !(out << csv.str())) {
                std::cerr << "bounds: cannot write " << out_path << '\n';
                return kExitIo;
            }
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_oracle(int n, std::uint64_t budget, bool budget_given, const std::string& witness_path) {
    if (n == 6 && !budget_given) {
        std::cerr << "oracle: n = 6 explores a very large space; pass an explicit --budget\n";
        return kExitUsage;
    }
    try {
        psic::OracleOptions options;
        if (budget_given)
            options.node_budget = budget;
        const auto result = psic::exact_psi_c(n, options);
        nlohmann::json j;
        j["n"] = result.n;
        j["psi_c"] = result.psi_c;
        j["status"] = result.status == psic::OracleStatus::exact ? "exact" : "incomplete";
        j["explored"] = result.explored;
        j["nodes"] = result.nodes;
        j["witness"] = {{"n", result.witness.n},
                        {"palette_size", result.witness.palette_size},
                        {"colors", result.witness.colors}};
        std::cout << j.dump(2) << '\n';
        if (!witness_path.empty())
            psic::save_solution(std::filesystem::path(witness_path),
                                psic::Solution{result.witness, nullptr});
        return kExitOk;
    } catch (const psic::IoError& e) {
        std::cerr << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }
}

int cmd_export(const std::string& path, const std::string& format, const std::string& out_path) {
    psic::Solution solution;
    try {
        solution = psic::load_solution(path);
    } catch (const psic::IoError& e) {
        std::cerr << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitInvalidSolution;
    }
    try {
        std::ostringstream body;
        if (format == "dot")
            psic::write_dot(body, solution.coloring);
        else
            psic::write_classes(body, solution.coloring);
        if (out_path.empty()) {
            std::cout << body.str();
        } else {
            std::ofstream out(out_path);
            if (!out || !(out << body.str())) {
                std::cerr << "export: cannot write " << out_path << '\n';
                return kExitIo;
            }
        }
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitInvalidSolution;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"search, verification and bounds for complete connected edge colorings of K_n"};
    app.require_subcommand(1);

    std::string config_path;
    auto* solve_cmd = app.add_subcommand("solve", "run the genetic search from a config file");
    solve_cmd->add_option("config", config_path, "key = value run configuration")->required();

    std::string verify_path;
    auto* verify_cmd =
        app.add_subcommand("verify", "verify a solution file; exit 0 iff complete and connected");
    verify_cmd->add_option("file", verify_path, "solution JSON")->required();

    int n_min = 2, n_max = 31;
    std::string bounds_out;
    auto* bounds_cmd = app.add_subcommand("bounds", "emit the bounds table as CSV");
    bounds_cmd->add_option("n_min", n_min, "first order")->required();
    bounds_cmd->add_option("n_max", n_max, "last order")->required();
    bounds_cmd->add_option("--out", bounds_out, "write to a file instead of stdout");

    int oracle_n = 4;
    std::uint64_t budget = 0;
    std::string witness_out;
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive maximum for small orders");
    oracle_cmd->add_option("n", oracle_n, "graph order (2..6)")->required();
    auto* budget_opt = oracle_cmd->add_option("--budget", budget, "search-state limit");
    oracle_cmd->add_option("--witness-out", witness_out, "also save the witness as a solution file");

    std::string export_path, export_format, export_out;
    auto* export_cmd = app.add_subcommand("export", "render a solution file");
    export_cmd->add_option("file", export_path, "solution JSON")->required();
    export_cmd->add_option("--format", export_format, "dot or classes")
        ->required()
        ->check(CLI::IsMember({"dot", "classes"}));
    export_cmd->add_option("--out", export_out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (solve_cmd->parsed())
        return cmd_solve(config_path);
    if (verify_cmd->parsed())
        return cmd_verify(verify_path);
    if (bounds_cmd->parsed())
        return cmd_bounds(n_min, n_max, bounds_out);
    if (oracle_cmd->parsed())
        return cmd_oracle(oracle_n, budget, budget_opt->count() > 0, witness_out);
    if (export_cmd->parsed())
        return cmd_export(export_path, export_format, export_out);
    return kExitUsage;
}
