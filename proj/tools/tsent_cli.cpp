#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tsent/sweeps.hpp"
#include "tsent/verify.hpp"

// CSV front end for the two-qubit time-system entanglement curves.
// Exit codes: 0 success, 1 validation error, 2 verification failure.

namespace {

constexpr double kPi = std::numbers::pi;

void write_output(const std::string& path, const std::string& payload) {
    if (path == "-") {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << payload;
}

std::vector<int> default_n_grid() {
    std::vector<int> grid;
    for (int n = 2; n <= (1 << 20); n *= 2) grid.push_back(n);
    return grid;
}

std::string trim(const std::string& s) {
    const size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

template <typename T>
std::vector<T> parse_list(const std::string& value) {
    std::vector<T> out;
    std::stringstream stream(value);
    std::string item;
    while (std::getline(stream, item, ',')) {
        item = trim(item);
        if (item.empty()) throw std::invalid_argument("config: empty list element");
        size_t used = 0;
        if constexpr (std::is_same_v<T, int>) {
            out.push_back(std::stoi(item, &used));
        } else {
            out.push_back(std::stod(item, &used));
        }
        if (used != item.size()) throw std::invalid_argument("config: bad number '" + item + "'");
    }
    if (out.empty()) throw std::invalid_argument("config: empty list");
    return out;
}

using Setter = std::function<void(const std::string&)>;
using KeyTable = std::map<std::string, Setter>;

// Config files are plain key=value lines (# starts a comment). A key is
// applied only when the matching flag was not given on the command line.
void apply_config_file(const CLI::App& sub, const std::string& path, const KeyTable& keys) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: malformed line " + std::to_string(lineno) +
                                        " in " + path);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto setter = keys.find(key);
        if (setter == keys.end())
            throw std::invalid_argument("config: unknown key '" + key + "' in " + path);
        if (sub.count("--" + key) > 0) continue;  // flags take precedence
        setter->second(value);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Page-Wootters time-system entanglement datasets for two qubits"};
    app.require_subcommand(1);

    std::string out_path = "-";
    std::string config_path;
    int grid_points = 201;
    std::vector<double> distances = {0.9, 0.7, 0.5, 0.3, 0.1};
    std::vector<double> times = {0.2, 0.5, 1.0, kPi / 2.0};
    std::vector<double> alpha_sqs = {0.2, 1.0 / 3.0, 0.5};
    bool include_interacting = true;
    std::string scenario_name = "interacting";
    double phi = kPi / 2.0;
    double theta = kPi;
    double converge_alpha_sq = 0.5;
    std::vector<int> n_grid = default_n_grid();
    std::uint64_t seed = 12345;

    std::map<const CLI::App*, KeyTable> config_keys;

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "Output path, or - for stdout")->capture_default_str();
        sub->add_option("--config", config_path,
                        "Key-value file with the same keys as the flags; flags take precedence");
        config_keys[sub]["out"] = [&](const std::string& v) { out_path = v; };
    };
    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("--grid-points", grid_points, "Points per sweep axis (>= 2)")
            ->capture_default_str();
        config_keys[sub]["grid-points"] = [&](const std::string& v) {
            grid_points = std::stoi(v);
        };
    };

    CLI::App* speed = app.add_subcommand(
        "speed", "Evolution time tau vs internal entanglement, per travel distance");
    speed->add_option("--distance", distances, "Fidelity targets in [0, 1]")
        ->delimiter(',')
        ->capture_default_str();
    add_output(speed);
    add_grid(speed);
    config_keys[speed]["distance"] = [&](const std::string& v) { distances = parse_list<double>(v); };

    CLI::App* qubit_clock = app.add_subcommand(
        "qubit-clock", "E(T,S) vs S(A) for the two-tick clock, per time value");
    CLI::App* continuous = app.add_subcommand(
        "continuous", "E(T,S) vs S(A) in the continuous-clock limit, per time value");
    for (CLI::App* sub : {qubit_clock, continuous}) {
        sub->add_option("--time", times, "Times in units hbar/eps")
            ->delimiter(',')
            ->capture_default_str();
        add_output(sub);
        add_grid(sub);
        config_keys[sub]["time"] = [&](const std::string& v) { times = parse_list<double>(v); };
    }

    CLI::App* fidelity = app.add_subcommand(
        "fidelity-sweep", "E(T,S) vs fidelity: interacting curve plus per-|alpha|^2 curves");
    fidelity->add_option("--alpha-sq", alpha_sqs, "|alpha|^2 values for non-interacting curves")
        ->delimiter(',')
        ->capture_default_str();
    fidelity->add_flag("--interacting,!--no-interacting", include_interacting,
                       "Include the interacting curve");
    add_output(fidelity);
    add_grid(fidelity);
    config_keys[fidelity]["alpha-sq"] = [&](const std::string& v) {
        alpha_sqs = parse_list<double>(v);
    };
    config_keys[fidelity]["interacting"] = [&](const std::string& v) {
        include_interacting = v == "true" || v == "1";
    };

    CLI::App* converge = app.add_subcommand(
        "converge", "Discrete-N eigenvalue vs its continuous limit over an N grid");
    converge->add_option("--scenario", scenario_name, "noninteracting or interacting")
        ->check(CLI::IsMember({"noninteracting", "interacting"}))
        ->capture_default_str();
    converge->add_option("--phi", phi, "Target angle phi (interacting)")->capture_default_str();
    converge->add_option("--theta", theta, "Target angle theta (noninteracting)")
        ->capture_default_str();
    converge->add_option("--alpha-sq", converge_alpha_sq, "|alpha|^2 (noninteracting)")
        ->capture_default_str();
    converge->add_option("--n-grid", n_grid, "Ascending clock sizes")->delimiter(',');
    add_output(converge);
    config_keys[converge]["scenario"] = [&](const std::string& v) { scenario_name = v; };
    config_keys[converge]["phi"] = [&](const std::string& v) { phi = std::stod(v); };
    config_keys[converge]["theta"] = [&](const std::string& v) { theta = std::stod(v); };
    config_keys[converge]["alpha-sq"] = [&](const std::string& v) {
        converge_alpha_sq = std::stod(v);
    };
    config_keys[converge]["n-grid"] = [&](const std::string& v) { n_grid = parse_list<int>(v); };

    CLI::App* verify = app.add_subcommand(
        "verify", "Cross-check every closed form against the brute-force oracle");
    verify->add_option("--seed", seed, "Sampling seed")->capture_default_str();
    add_output(verify);
    config_keys[verify]["seed"] = [&](const std::string& v) { seed = std::stoull(v); };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (!config_path.empty()) apply_config_file(*sub, config_path, config_keys.at(sub));

        std::ostringstream buf;
        if (sub == speed) {
            const tsent::sweeps::SpeedResult result =
                tsent::sweeps::compute_speed(distances, grid_points);
            if (result.omitted > 0)
                std::cerr << "speed: omitted " << result.omitted
                          << " unreachable (distance, S_A) pairs\n";
            tsent::sweeps::write_speed_csv(result, buf);
        } else if (sub == qubit_clock) {
            tsent::sweeps::write_clock_csv(tsent::sweeps::compute_qubit_clock(times, grid_points),
                                           buf);
        } else if (sub == continuous) {
            tsent::sweeps::write_clock_csv(tsent::sweeps::compute_continuous(times, grid_points),
                                           buf);
        } else if (sub == fidelity) {
            tsent::sweeps::write_fidelity_csv(
                tsent::sweeps::compute_fidelity_sweep(alpha_sqs, include_interacting, grid_points),
                buf);
        } else if (sub == converge) {
            const bool interacting = scenario_name == "interacting";
            const tsent::pawclock::Scenario scenario =
                interacting ? tsent::pawclock::Scenario::interacting()
                            : tsent::pawclock::Scenario::non_interacting(converge_alpha_sq);
            const double angle = interacting ? phi : theta;
            tsent::sweeps::write_convergence_csv(
                tsent::pawclock::convergence_report(scenario, angle, n_grid), buf);
        } else if (sub == verify) {
            const std::vector<tsent::verify::CheckResult> results = tsent::verify::run_all(seed);
            tsent::verify::write_report(results, seed, buf);
            write_output(out_path, buf.str());
            return tsent::verify::all_passed(results) ? 0 : 2;
        }
        write_output(out_path, buf.str());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
