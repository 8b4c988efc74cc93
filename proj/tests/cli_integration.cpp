// End-to-end CLI checks: exit codes and agreement with brute force.
// argv[1] is the path to the CLI binary.

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "isectlab/set_family.hpp"

using namespace isectlab;

namespace {

std::string run_command(const std::string& command, int& exit_code) {
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        exit_code = -1;
        return output;
    }
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return output;
}

int g_failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FAIL: " << what << '\n';
        ++g_failures;
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_integration <path-to-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string sets_path = "cli_integration.sets";

    {
        std::ofstream out(sets_path);
        out << "3 4\n0 1\n1 2\n3\n";
    }
    int code = 0;

    std::string line = run_command(cli + " query --input " + sets_path + " --pair 0 1", code);
    expect(line == "1 witness=1 probes=2\n" && code == 0, "query 0 1 snapshot: got [" + line + "]");

    line = run_command(cli + " query --input " + sets_path + " --pair 0 2", code);
    expect(line == "0 probes=1\n" && code == 1, "query 0 2 snapshot");

    line = run_command(cli + " build-check --input " + sets_path + " --t 1", code);
    expect(line == "num_large=2 matrix_bits=4 membership_entries=5\n" && code == 0, "build-check t=1");

    line = run_command(
        cli + " reduce --input " + sets_path + " --eps 1/2 --c 2 --oracle exact --pair 0 2", code);
    expect(line == "0\n" && code == 1, "reduce non-intersecting pair");

    line = run_command(
        cli + " oracle-query --input " + sets_path +
            " --eps 1/2 --c 2 --oracle mock:always-max:1.5:2 --vertices 0 1", code);
    expect(line == "14\n" && code == 0, "oracle-query always-max");

    line = run_command(cli + " export --input " + sets_path + " --format edge-list --eps 1 --c 0",
                       code);
    expect(line == "7 5\n0 3\n0 4\n1 4\n1 5\n2 6\n" && code == 0, "export edge-list snapshot");

    // usage and input-format exit codes
    run_command(cli + " query --input " + sets_path + " 2>/dev/null", code);
    expect(code == 2, "missing --pair is a usage error");
    run_command(cli + " query --input no_such_file.sets --pair 0 1 2>/dev/null", code);
    expect(code == 3, "unreadable input file");
    {
        std::ofstream out(sets_path);
        out << "2 3\n0 7\n1\n";
    }
    run_command(cli + " query --input " + sets_path + " --pair 0 1 2>/dev/null", code);
    expect(code == 3, "malformed input file");

    // end-to-end equivalence with brute force on random families
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto family = random_family(6, 14, 0.3, 0xC11 + seed);
        {
            std::ofstream out(sets_path);
            out << render_family(family);
        }
        for (std::size_t i = 0; i < family.num_sets(); ++i) {
            for (std::size_t j = 0; j < family.num_sets(); ++j) {
                const bool truth = brute_force_intersect(family, i, j).intersects;
                const std::string pair =
                    " --pair " + std::to_string(i) + " " + std::to_string(j);
                run_command(cli + " query --input " + sets_path + pair, code);
                expect(code == (truth ? 0 : 1), "query equivalence");
                if (i != j) {
                    run_command(cli + " reduce --input " + sets_path +
                                    " --eps 1/2 --c 1 --oracle exact" + pair, code);
                    expect(code == (truth ? 0 : 1), "reduce equivalence");
                }
            }
        }
    }

    std::remove(sets_path.c_str());
    if (g_failures > 0) {
        std::cerr << g_failures << " CLI check(s) failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
