#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "isectlab/bench.hpp"
#include "isectlab/isect_index.hpp"
#include "isectlab/oracles.hpp"
#include "isectlab/reduction.hpp"
#include "isectlab/set_family.hpp"

namespace {

constexpr int kExitNoIntersection = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

isectlab::SetFamily load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw isectlab::ParseError("cannot open input file \"" + path + "\"");
    }
    return isectlab::parse_family(in);
}

isectlab::OracleParams make_params(const std::string& eps_text, std::int64_t c) {
    isectlab::OracleParams params{isectlab::parse_rational(eps_text), c};
    isectlab::validate_params(params);
    return params;
}

std::string format_estimate(double value) {
    if (std::isinf(value)) return "inf";
    std::ostringstream out;
    out << value;
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"set-intersection index and distance-oracle reduction lab"};
    app.require_subcommand(1);

    std::string input;
    std::string eps_text = "1";
    std::int64_t additive = 0;
    std::string oracle_spec = "exact";
    std::uint64_t seed = 0;
    std::int64_t threshold = -1;
    std::vector<std::int64_t> pair;
    std::vector<std::int64_t> vertices;
    std::string sweep_text;
    std::size_t samples = 1000;
    std::string format = "edge-list";
    double mult = 2.0;

    auto* build_check = app.add_subcommand("build-check", "build the index and print its space report");
    build_check->add_option("--input", input)->required();
    build_check->add_option("--t", threshold);

    auto* query = app.add_subcommand("query", "answer one intersection query through the index");
    query->add_option("--input", input)->required();
    query->add_option("--t", threshold);
    query->add_option("--pair", pair)->expected(2)->required();

    auto* reduce = app.add_subcommand("reduce", "answer one intersection query through a distance oracle");
    reduce->add_option("--input", input)->required();
    reduce->add_option("--eps", eps_text)->required();
    reduce->add_option("--c", additive)->required();
    reduce->add_option("--oracle", oracle_spec)->required();
    reduce->add_option("--pair", pair)->expected(2)->required();
    reduce->add_option("--seed", seed);

    auto* oracle_query = app.add_subcommand("oracle-query", "print one raw distance estimate");
    oracle_query->add_option("--input", input)->required();
    oracle_query->add_option("--eps", eps_text)->required();
    oracle_query->add_option("--c", additive)->required();
    oracle_query->add_option("--oracle", oracle_spec)->required();
    oracle_query->add_option("--vertices", vertices)->expected(2)->required();
    oracle_query->add_option("--seed", seed);

    auto* bench = app.add_subcommand("bench", "sweep thresholds and print TSV tradeoff rows");
    bench->add_option("--input", input)->required();
    bench->add_option("--sweep", sweep_text)->required();
    bench->add_option("--samples", samples);
    bench->add_option("--seed", seed);

    auto* export_cmd = app.add_subcommand("export", "print the reduction graph as text");
    export_cmd->add_option("--input", input)->required();
    export_cmd->add_option("--format", format)->check(CLI::IsMember({"edge-list", "dimacs"}));
    export_cmd->add_option("--eps", eps_text)->required();
    export_cmd->add_option("--c", additive)->required();

    auto* demo = app.add_subcommand("demo-failure", "show a stretch >= 2 oracle defeating the reduction");
    demo->add_option("--input", input)->required();
    demo->add_option("--mult", mult)->required();
    demo->add_option("--eps", eps_text)->required();
    demo->add_option("--c", additive)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const isectlab::SetFamily family = load_family(input);

        if (build_check->parsed()) {
            const auto index = isectlab::build_index(
                family, threshold >= 0 ? std::optional<std::size_t>(threshold) : std::nullopt);
            const auto report = index.space_report();
            std::cout << "num_large=" << report.num_large << " matrix_bits=" << report.matrix_bits
                      << " membership_entries=" << report.membership_entries << '\n';
            return 0;
        }

        if (query->parsed()) {
            const auto index = isectlab::build_index(
                family, threshold >= 0 ? std::optional<std::size_t>(threshold) : std::nullopt);
            const auto result = index.query(static_cast<std::size_t>(pair[0]),
                                            static_cast<std::size_t>(pair[1]));
            std::cout << (result.intersects ? "1" : "0");
            if (result.witness) std::cout << " witness=" << *result.witness;
            std::cout << " probes=" << result.probes << '\n';
            return result.intersects ? 0 : kExitNoIntersection;
        }

        if (reduce->parsed()) {
            const auto params = make_params(eps_text, additive);
            const auto graph = isectlab::build_subdivided(family, params);
            const auto oracle = isectlab::make_oracle(oracle_spec, graph, seed);
            const bool intersects =
                isectlab::decide_intersection(graph, *oracle, params,
                                              static_cast<std::size_t>(pair[0]),
                                              static_cast<std::size_t>(pair[1]));
            std::cout << (intersects ? "1" : "0") << '\n';
            return intersects ? 0 : kExitNoIntersection;
        }

        if (oracle_query->parsed()) {
            const auto params = make_params(eps_text, additive);
            const auto graph = isectlab::build_subdivided(family, params);
            const auto oracle = isectlab::make_oracle(oracle_spec, graph, seed);
            const double estimate =
                oracle->estimate(static_cast<isectlab::VertexId>(vertices[0]),
                                 static_cast<isectlab::VertexId>(vertices[1]));
            std::cout << format_estimate(estimate) << '\n';
            return 0;
        }

        if (bench->parsed()) {
            std::vector<std::size_t> t_values;
            std::istringstream ss(sweep_text);
            std::string token;
            while (std::getline(ss, token, ',')) {
                const long long t = std::stoll(token);
                if (t < 1) throw std::invalid_argument("sweep thresholds must be >= 1");
                t_values.push_back(static_cast<std::size_t>(t));
            }
            const auto rows = isectlab::sweep_threshold(family, t_values, samples, seed);
            std::cout << isectlab::rows_to_tsv(rows);
            return 0;
        }

        if (export_cmd->parsed()) {
            const auto params = make_params(eps_text, additive);
            const auto graph = isectlab::build_subdivided(family, params);
            std::cout << isectlab::export_graph(graph, format == "dimacs"
                                                           ? isectlab::ExportFormat::Dimacs
                                                           : isectlab::ExportFormat::EdgeList);
            return 0;
        }

        if (demo->parsed()) {
            const auto params = make_params(eps_text, additive);
            const auto result = isectlab::adversarial_failure_demo(family, mult, params);
            if (result.found) {
                std::cout << "found=1 pair=" << result.i << ',' << result.j
                          << " estimate=" << format_estimate(result.estimate)
                          << " truth=" << (result.truth ? "1" : "0") << '\n';
            } else {
                std::cout << "found=0\n";
            }
            return 0;
        }
    } catch (const isectlab::ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
